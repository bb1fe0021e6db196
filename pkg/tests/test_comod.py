import numpy as np
import pytest

from catsharp.comod import (
    BicomoduleMap,
    Comonoid,
    FiniteBicomodule,
    CopresheafBicomodule,
    IdentityBicomodule,
    bicomodule_as_copresheaf,
    category_from_comonoid,
    check_bicomodule,
    check_cofunctor,
    check_comonoid,
    check_square,
    cofunctor,
    comonoid_from_category,
    comonoid_y,
    compose_bicomodules,
    compose_bicomodules_equalizer_oracle,
    enumerate_bicomodule_maps,
    find_bicomodule_isomorphism,
    identity_bicomodule,
    identity_cofunctor,
    identity_map_of,
    random_bicomodule,
    whisker_left,
    whisker_right,
)
from catsharp.fincat import (
    FinCategory,
    G,
    chain_category,
    commutative_square,
    count_maps,
    discrete_category,
    find_isomorphism,
    free_category,
    monoid_category,
    monotone_map_category,
    poset_category,
    random_category,
    representable,
    set_copresheaf,
    terminal,
    terminal_category,
    vec,
)
from catsharp.monad import monad_path
from catsharp.poly import PolyMorphism, y
from catsharp.utils import FrameMismatch, FrozenMap, LawViolation, NonEmptyDirections

CATEGORIES = [
    terminal_category,
    lambda: chain_category(0),
    lambda: chain_category(1),
    lambda: chain_category(2),
    lambda: chain_category(3),
    lambda: discrete_category(["a", "b", "c"]),
    lambda: G,
    commutative_square,
    lambda: monotone_map_category(2),
    lambda: poset_category(["a", "b", "c"], [("a", "b"), ("a", "c")]),
    lambda: monoid_category(["e", "a"], "e", {"e": {"e": "e", "a": "a"}, "a": {"e": "a", "a": "a"}}),
    lambda: free_category(["x", "y"], {"f": ("x", "y"), "g": ("x", "y")}),
]


@pytest.mark.parametrize("build", CATEGORIES)
def test_comonoid_round_trip(build):
    C = build()
    c = comonoid_from_category(C)
    assert check_comonoid(c).ok
    decoded = category_from_comonoid(c)
    assert find_isomorphism(C, decoded) is not None


@pytest.mark.parametrize("seed", range(4))
def test_random_comonoid_round_trip(seed):
    C = random_category(np.random.default_rng(seed), n_objects=3)
    assert find_isomorphism(C, category_from_comonoid(comonoid_from_category(C))) is not None


def test_counit_off_the_identity_breaks_the_comonoid():
    C = chain_category(1)
    good = comonoid_from_category(C)
    counit = PolyMorphism(good.carrier, y(), lambda a: "*",
                          lambda a, d: (0, 1) if a == 0 else C.identity(a), name="ε'")
    bad = Comonoid(good.carrier, counit, good.comult, name="bad")
    report = check_comonoid(bad)
    assert not report.ok
    assert {"counit-left", "counit-right"} & set(report.laws_violated())


def test_cofunctor_to_y():
    C = commutative_square()
    c = comonoid_from_category(C)
    phi = cofunctor(c, comonoid_y(), lambda a: "*", lambda a, g: C.identity(a))
    assert check_cofunctor(phi, c, comonoid_y()).ok


def test_cofunctor_lifting_a_non_identity_fails():
    C = chain_category(1)
    c = comonoid_from_category(C)
    phi = cofunctor(c, comonoid_y(), lambda a: "*",
                    lambda a, g: (0, 1) if a == 0 else C.identity(a))
    assert "counit" in check_cofunctor(phi, c, comonoid_y()).laws_violated()


@pytest.mark.parametrize("build", [lambda: G, commutative_square, lambda: chain_category(2)])
def test_identity_bicomodule_laws(build):
    assert check_bicomodule(IdentityBicomodule(build())).ok


def test_path_carrier_laws():
    assert check_bicomodule(monad_path().carrier, bound=3).ok


def test_copresheaf_bicomodule_round_trip():
    X = vec(2)
    p = CopresheafBicomodule(X)
    assert check_bicomodule(p).ok
    assert bicomodule_as_copresheaf(p) is X


def test_non_empty_arities_are_not_copresheaves():
    with pytest.raises(NonEmptyDirections):
        bicomodule_as_copresheaf(IdentityBicomodule(G))


def test_identity_is_a_left_unit_for_copresheaves():
    r = compose_bicomodules(IdentityBicomodule(G), CopresheafBicomodule(vec(2)))
    X = bicomodule_as_copresheaf(r)
    assert X.sizes() == {"v": 3, "e": 2}
    assert find_isomorphism(X, vec(2)) is not None


def test_composite_arity_is_a_colimit():
    path = monad_path().carrier
    r = compose_bicomodules(path, path, bound=5)
    J = FrozenMap({("v", 0): "v", ("v", 1): "v", ("v", 2): "v", ("e", 1): ("e", 1), ("e", 2): ("e", 2)})
    I = (("e", 2), J)
    assert I in r.operations(5)
    assert r.degree(I) == 5
    assert r.arity(I).sizes() == {"v": 4, "e": 3}


@pytest.mark.parametrize("bound", [2, 3])
def test_composite_matches_equalizer_oracle(bound):
    path = monad_path().carrier
    composite = compose_bicomodules(path, path, bound=bound)
    oracle = compose_bicomodules_equalizer_oracle(path, path, bound=bound)
    assert len(composite.operations(bound)) == len(oracle.operations(bound))
    assert find_bicomodule_isomorphism(composite, oracle, bound=bound) is not None


@pytest.mark.parametrize("build", [lambda: chain_category(1), commutative_square])
def test_identity_composites_match_oracle(build):
    p = IdentityBicomodule(build())
    q = IdentityBicomodule(p.left)
    composite = compose_bicomodules(p, q)
    oracle = compose_bicomodules_equalizer_oracle(p, q)
    assert find_bicomodule_isomorphism(composite, oracle) is not None


def test_frames_must_meet():
    with pytest.raises(FrameMismatch):
        compose_bicomodules(IdentityBicomodule(commutative_square()), IdentityBicomodule(G))


@pytest.mark.parametrize("n, m", [(1, 1), (1, 2), (2, 1), (0, 2)])
def test_maps_of_copresheaf_bicomodules_are_copresheaf_maps(n, m):
    X, Y = vec(n), vec(m)
    maps = list(enumerate_bicomodule_maps(CopresheafBicomodule(X), CopresheafBicomodule(Y)))
    assert len(maps) == count_maps(X, Y)


def test_identity_map_is_a_square():
    p = IdentityBicomodule(commutative_square())
    assert check_square(identity_map_of(p)).ok
    assert find_bicomodule_isomorphism(p, p) is not None


def test_whiskered_identity_is_a_square():
    gamma = whisker_right(identity_map_of(IdentityBicomodule(G)), CopresheafBicomodule(vec(1)))
    assert check_square(gamma).ok


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("kind", ["identity", "representable"])
def test_random_composites_match_oracle(seed, kind):
    C = random_category(np.random.default_rng(seed), n_objects=3)
    p = IdentityBicomodule(C)
    q = IdentityBicomodule(C) if kind == "identity" else CopresheafBicomodule(representable(C, C.objects[0]))
    composite = compose_bicomodules(p, q)
    oracle = compose_bicomodules_equalizer_oracle(p, q)
    assert find_bicomodule_isomorphism(composite, oracle) is not None


FRAMES = {"y": terminal, "g": lambda: G}


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("frames", ["ygy", "ggy", "ygg", "gyg"])
def test_random_bicomodule_composites_match_oracle(seed, frames):
    rng = np.random.default_rng(seed)
    c, d, e = (FRAMES[x]() for x in frames)
    p = random_bicomodule(rng, c, d, max_size=1, name="p")
    q = random_bicomodule(rng, d, e, max_size=1, name="q")
    assert check_bicomodule(p).ok
    assert check_bicomodule(q).ok
    composite = compose_bicomodules(p, q)
    oracle = compose_bicomodules_equalizer_oracle(p, q)
    assert len(composite.operations()) == len(oracle.operations())
    assert find_bicomodule_isomorphism(composite, oracle) is not None


def test_random_bicomodules_need_shallow_frames():
    with pytest.raises(ValueError):
        random_bicomodule(np.random.default_rng(0), chain_category(2), G)


def test_identity_cofunctor(square):
    c = comonoid_from_category(square)
    assert check_cofunctor(identity_cofunctor(c), c, c).ok
    assert identity_bicomodule(square).operations() == IdentityBicomodule(square).operations()


def test_left_whiskered_identity_is_a_square():
    gamma = whisker_left(IdentityBicomodule(G), identity_map_of(CopresheafBicomodule(vec(1))))
    assert check_square(gamma).ok


MAGMA = {("x", "x"): "y", ("x", "y"): "y", ("y", "x"): "x", ("y", "y"): "id"}


def test_non_associative_comultiplication_is_rejected():
    C = FinCategory(["*"], {"id": ("*", "*"), "x": ("*", "*"), "y": ("*", "*")}, {"*": "id"}, MAGMA, name="magma")
    c = comonoid_from_category(C)
    assert "coassociativity" in check_comonoid(c).laws_violated()
    with pytest.raises(LawViolation):
        category_from_comonoid(c)


def _arrow_bicomodule(act=None, restrict=None):
    """``[1] ↛ y`` with ``a`` over 0 acting to ``b`` over 1."""
    operations = {"a": (0, set_copresheaf([0, 1], name="2")), "b": (1, set_copresheaf([0], name="1"))}
    act = act or {((0, 1), "a"): "b"}
    restrict = restrict or {((0, 1), "a"): {("*", 0): 0}}
    return FiniteBicomodule(chain_category(1), terminal(), operations, act, restrict, name="arrow")


def test_arrow_bicomodule_laws():
    assert check_bicomodule(_arrow_bicomodule()).ok


def test_act_to_the_wrong_object_is_reported():
    p = _arrow_bicomodule(act={((0, 1), "a"): "a"})
    assert "act-typing" in check_bicomodule(p).laws_violated()


def test_restriction_outside_the_arity_is_reported():
    p = _arrow_bicomodule(restrict={((0, 1), "a"): {("*", 0): 5}})
    assert check_bicomodule(p).laws_violated() == ["restrict-typing"]


def test_square_with_a_swapped_arity_fails():
    p = _arrow_bicomodule()
    swap = {"a": {("*", 0): 1, ("*", 1): 0}, "b": {("*", 0): 0}}
    gamma = BicomoduleMap(p, p, lambda I: I, swap, name="swap")
    assert check_square(identity_map_of(p)).ok
    assert "left-square" in check_square(gamma).laws_violated()
