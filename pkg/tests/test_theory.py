from math import comb

import numpy as np
import pytest

from catsharp.fincat import (
    Copresheaf,
    chain_category,
    find_isomorphism,
    monotone_map_category,
    random_category,
    set_copresheaf,
)
from catsharp.monad import Algebra, category_as_path_algebra, monad_list, monad_maybe, monoid_as_list_algebra
from catsharp.theory import (
    NervePresheaf,
    check_products,
    compare_with_oracle,
    inert_category,
    inert_embedding,
    inert_nerve,
    kleisli_oracle,
    lawvere_model,
    lawvere_theory,
    nerve_map,
    nerve,
    nerve_oracle,
    segal_check,
    theory_category,
    unit_restriction,
)
from catsharp.utils import BoundExhausted, LawViolation

EDGES = [("e", n) for n in range(4)]
LONG_EDGES = [("e", n) for n in range(5)]


def _chain_algebra(path, n, bound=4):
    return category_as_path_algebra(chain_category(n), path, bound=bound)


@pytest.fixture(scope="module")
def theta_path_long(path):
    """``Θ_path`` on the vertex operation and edge operations ``0..4``."""
    return theory_category(path, ["v"] + LONG_EDGES, bound=5)


def test_theta_objects_are_sorted(theta_path):
    assert theta_path.objects == ("v",) + tuple(EDGES)
    assert theta_path.is_exact
    assert not theta_path.is_partial


@pytest.mark.parametrize("k", range(4))
@pytest.mark.parametrize("l", range(4))
def test_theta_homs_are_monotone_maps(theta_path, k, l):
    assert len(theta_path.hom(("e", k), ("e", l))) == comb(k + l + 1, k + 1)


@pytest.mark.slow
def test_theta_homs_up_to_four_edges(theta_path_long):
    assert theta_path_long.is_exact
    for k in range(5):
        for l in range(5):
            assert len(theta_path_long.hom(("e", k), ("e", l))) == comb(k + l + 1, k + 1), (k, l)
    assert np.array_equal(theta_path_long.hom_counts(LONG_EDGES), monotone_map_category(4).hom_counts())


def test_theta_small_homs(theta_path):
    assert len(theta_path.hom(("e", 1), ("e", 1))) == 3
    assert len(theta_path.hom(("e", 2), ("e", 1))) == 4
    assert len(theta_path.hom(("e", 1), ("e", 2))) == 6
    assert len(theta_path.hom("v", ("e", 2))) == 3
    assert len(theta_path.hom(("e", 2), "v")) == 1


def test_theta_matches_monotone_category(theta_path):
    counts = theta_path.hom_counts(EDGES)
    assert np.array_equal(counts, monotone_map_category(3).hom_counts())
    theta = theta_path.category()
    assert np.array_equal(theta.hom_counts(theta_path.objects), theta_path.hom_counts())


def test_theta_matches_kleisli_oracle(path, theta_path):
    oracle = kleisli_oracle(path, theta_path.objects, bound=4)
    assert compare_with_oracle(theta_path, oracle).ok


def test_truncated_theta_is_partial(path):
    with pytest.raises(BoundExhausted) as excinfo:
        theory_category(path, ["v"] + EDGES, bound=2)
    partial = excinfo.value.partial
    assert partial.is_partial
    with pytest.raises(BoundExhausted):
        partial.category()


def test_nerve_of_a_chain_counts_paths(path, theta_path):
    N = nerve(path, _chain_algebra(path, 1), bound=4, theory=theta_path)
    assert N.sizes() == {"v": 2, ("e", 0): 2, ("e", 1): 3, ("e", 2): 4, ("e", 3): 5}


def test_nerve_of_a_longer_chain(path, theta_path):
    N = nerve(path, _chain_algebra(path, 2), bound=4, theory=theta_path)
    assert len(N.cells(("e", 1))) == 6


def test_nerve_matches_oracle(path, theta_path):
    A = _chain_algebra(path, 2)
    N = nerve(path, A, bound=4, theory=theta_path)
    oracle = nerve_oracle(path, A, bound=4, theory=theta_path)
    assert oracle.sizes() == N.sizes()
    assert find_isomorphism(N.data, oracle.data) is not None


def test_nerve_rejects_non_algebras(path, theta_path):
    C = chain_category(1)
    A = category_as_path_algebra(C, path, bound=4)
    broken = Algebra(path, A.carrier, lambda elem: A.action(elem) if elem[0] == "v" else C.identity(0),
                     bound=4, name="broken")
    with pytest.raises(LawViolation):
        nerve(path, broken, bound=4, theory=theta_path)


def test_nerves_are_segal(path, theta_path):
    N = nerve(path, _chain_algebra(path, 2), bound=4, theory=theta_path)
    report = segal_check(N, bound=4)
    assert report.ok, report.summary()


def test_unit_restriction_is_the_graph(path, theta_path):
    N = nerve(path, _chain_algebra(path, 2), bound=4, theory=theta_path)
    X = unit_restriction(N)
    assert X.sizes() == {"v": 3, "e": 6}


def _without_long_edge(N):
    """The subpresheaf of ``N`` whose cells never reach the edge ``0 -> 2``."""
    pres = N.data.base
    bad = {x for x in N.cells(("e", 1)) if x[1][1](("e", 1)) == (0, 2)}

    def good(I, x):
        return all(N.act(f, x) not in bad for f in pres.out(I) if pres.tgt(f) == ("e", 1))

    sets = {I: [x for x in N.cells(I) if good(I, x)] for I in pres.objects}
    action = {f: {x: N.act(f, x) for x in sets[pres.src(f)]} for f in pres.morphisms
              if not pres.is_identity(f)}
    return Copresheaf(pres, sets, action, name="spine")


def test_missing_composite_breaks_segal(path, theta_path):
    N = nerve(path, _chain_algebra(path, 2), bound=4, theory=theta_path)
    P = NervePresheaf(theta_path, N.algebra, data=_without_long_edge(N), name="spine")
    assert len(P.cells(("e", 2))) < len(N.cells(("e", 2)))
    report = segal_check(P, bound=4, forms=("limit",))
    assert not report.ok
    assert "segal-surjective" in report.laws_violated()


def test_inert_homs(path):
    inert = inert_category(path.carrier, operations=["v"] + EDGES[:3])
    assert len(inert.hom(("e", 1), ("e", 2))) == 0
    assert len(inert.hom(("e", 2), ("e", 1))) == 2


def test_inert_embedding_is_faithful(path, theta_path):
    j, report = inert_embedding(path, theory=theta_path)
    assert report.ok
    assert j.source.size()[0] == len(theta_path.objects)


def test_inert_nerve_cells(path, theta_path):
    N = nerve(path, _chain_algebra(path, 1), bound=4, theory=theta_path)
    R = inert_nerve(N)
    assert R.sizes() == N.data.sizes()


def test_lawvere_theory_of_lists_is_partial():
    theory = lawvere_theory(monad_list(), [0, 1, 2], bound=2)
    assert theory.is_partial
    assert len(theory.hom(1, 1)) == 3
    assert all(len(theory.hom(N, 0)) == 1 for N in (0, 1, 2))
    with pytest.raises(BoundExhausted):
        lawvere_theory(monad_list(), [0, 1, 2], bound=2, strict=True)


def _pointed_set():
    m = monad_maybe()

    def action(elem):
        op, h = m.carrier.split(elem)
        return h(("*", 0)) if op == "just" else "0"

    return m, Algebra(m, set_copresheaf(["0", "1"], name="2"), action, name="pointed 2")


def test_lawvere_theory_of_maybe():
    m, _ = _pointed_set()
    theory = lawvere_theory(m, [0, 1, 2])
    assert theory.is_exact
    assert theory.hom_counts().tolist() == [[1, 1, 1], [1, 2, 3], [1, 4, 9]]


def test_lawvere_models_preserve_products():
    m, A = _pointed_set()
    model = lawvere_model(m, A, [0, 1, 2])
    assert model.sizes() == {0: 1, 1: 2, 2: 4}
    assert check_products(model).ok


Z2 = {"e": {"e": "e", "a": "a"}, "a": {"e": "a", "a": "e"}}


def test_lawvere_model_of_a_two_element_monoid():
    lists = monad_list()
    A = monoid_as_list_algebra(["e", "a"], "e", Z2, lists, bound=3, name="Z2")
    model = lawvere_model(lists, A, [0, 1, 2], bound=2)
    assert model.theory.is_partial
    assert model.sizes() == {0: 1, 1: 2, 2: 4}
    assert check_products(model).ok


@pytest.mark.parametrize("seed", range(5))
def test_nerves_of_random_categories(path, theta_path, seed):
    C = random_category(np.random.default_rng(seed), n_objects=3)
    A = category_as_path_algebra(C, path, bound=4)
    N = nerve(path, A, bound=4, theory=theta_path)
    oracle = nerve_oracle(path, A, bound=4, theory=theta_path)
    assert N.sizes() == oracle.sizes()
    assert find_isomorphism(N.data, oracle.data) is not None
    assert segal_check(N, bound=4).ok


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(3))
def test_nerves_of_random_categories_up_to_four_edges(path, theta_path_long, seed):
    C = random_category(np.random.default_rng(seed), n_objects=3)
    A = category_as_path_algebra(C, path, bound=5)
    N = nerve(path, A, bound=5, theory=theta_path_long)
    oracle = nerve_oracle(path, A, bound=5, theory=theta_path_long)
    assert N.sizes() == oracle.sizes()
    assert find_isomorphism(N.data, oracle.data) is not None


def test_nerve_map_of_a_collapse(path, theta_path):
    source = nerve(path, _chain_algebra(path, 1), bound=4, theory=theta_path)
    target = nerve(path, _chain_algebra(path, 0), bound=4, theory=theta_path)
    h = nerve_map(lambda z: 0 if z[0] == "v" else (0, 0), source, target)
    assert len(h) == sum(source.sizes().values())
    for (I, _), cell in h.items():
        assert cell in target.cells(I)


def test_identity_nerve_map(path, theta_path):
    N = nerve(path, _chain_algebra(path, 1), bound=4, theory=theta_path)
    h = nerve_map(lambda z: z[1], N, N)
    assert all(cell == key[1] for key, cell in h.items())
