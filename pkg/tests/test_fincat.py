import numpy as np
import pytest

from catsharp.fincat import (
    Copresheaf,
    ElementsDiagram,
    FinCategory,
    FinFunctor,
    G,
    category_of_elements,
    chain_category,
    check_category,
    check_copresheaf,
    check_functor,
    colimit_over_elements,
    commutative_square,
    compose_maps,
    count_maps,
    disjoint_edges,
    disjoint_paths,
    empty_copresheaf,
    enumerate_copresheaf_maps,
    find_isomorphism,
    graph,
    identity_map,
    is_isomorphism,
    iter_copresheaf_maps,
    limit_over_elements,
    longest_path_length,
    monoid_category,
    monotone_map_category,
    opposite,
    poset_category,
    random_category,
    representable,
    restrict_along,
    terminal,
    terminal_copresheaf,
    ul,
    underlying_graph,
    vec,
)
from catsharp.utils import LawViolation, SizeMismatch


def _chain_one_with_bad_unit():
    morphisms = {"id0": (0, 0), "id1": (1, 1), "f": (0, 1)}
    return FinCategory([0, 1], morphisms, {0: "id0", 1: "id1"}, {("f", "id1"): "id0"}, name="bad")


def test_terminal_category_is_valid(terminal_cat):
    assert check_category(terminal_cat).ok
    assert terminal_cat.size() == (1, 1)


def test_chains_are_valid(chain):
    n = len(chain.objects) - 1
    assert check_category(chain).ok
    assert len(chain.morphisms) == (n + 1) * (n + 2) // 2


@pytest.mark.parametrize("build", [
    commutative_square,
    lambda: monotone_map_category(2),
    lambda: monoid_category(["e", "a"], "e", {"e": {"e": "e", "a": "a"}, "a": {"e": "a", "a": "a"}}),
    lambda: poset_category(["a", "b", "c"], [("a", "b"), ("b", "c")]),
], ids=["square", "monotone2", "monoid", "poset"])
def test_builders_give_valid_categories(build):
    assert check_category(build()).ok


def test_graph_indexing_category(g):
    assert g.objects == ("e", "v")
    assert set(g.non_identity_out("e")) == {"s", "t"}
    assert g.non_identity_out("v") == ()


def test_unit_law_violation_is_reported():
    report = check_category(_chain_one_with_bad_unit())
    assert not report.ok
    assert "right-unit" in report.laws_violated()
    assert "typing" in report.laws_violated()


def test_missing_and_ill_typed_composites_are_reported():
    morphisms = {"ida": ("a", "a"), "idb": ("b", "b"), "idc": ("c", "c"), "f": ("a", "b"), "g": ("b", "c")}
    C = FinCategory(["a", "b", "c"], morphisms, {"a": "ida", "b": "idb", "c": "idc"}, {("f", "g"): "f"})
    report = check_category(C, progress=False)
    assert report.laws_violated() == ["typing"]
    D = FinCategory(["a", "b", "c"], morphisms, {"a": "ida", "b": "idb", "c": "idc"}, {})
    assert "typing" in check_category(D, progress=False).laws_violated()


def test_associativity_violation_is_reported():
    morphisms = {"id": ("*", "*"), "x": ("*", "*"), "y": ("*", "*")}
    composition = {("x", "x"): "y", ("x", "y"): "y", ("y", "x"): "x", ("y", "y"): "id"}
    report = check_category(FinCategory(["*"], morphisms, {"*": "id"}, composition), progress=False)
    assert report.laws_violated() == ["associativity"]
    assert ("x", "x", "x") in [v.where for v in report.all_violations()]


def test_opposite_is_valid_and_involutive(square):
    op = opposite(square)
    assert check_category(op).ok
    back = opposite(op)
    assert all(back.ends(f) == square.ends(f) for f in square.morphisms)


@pytest.mark.parametrize("seed", range(6))
def test_random_categories_are_valid(seed):
    C = random_category(np.random.default_rng(seed), n_objects=4)
    assert check_category(C, progress=False).ok


def test_monotone_map_hom_counts():
    C = monotone_map_category(1)
    assert C.hom_counts().tolist() == [[1, 2], [1, 3]]


def test_find_isomorphism_between_chains():
    other = poset_category(["a", "b", "c"], [("a", "b"), ("b", "c")])
    F = find_isomorphism(chain_category(2), other)
    assert F is not None
    assert check_functor(F).ok


def test_find_isomorphism_size_mismatch(square):
    assert find_isomorphism(chain_category(2), square) is None
    with pytest.raises(SizeMismatch):
        find_isomorphism(chain_category(2), square, strict=True)


def test_copresheaf_requires_total_action():
    with pytest.raises(LawViolation):
        Copresheaf(G, {"v": [0], "e": ["a"]}, {"s": {"a": 0}})


def test_functoriality_violation_is_reported():
    C = chain_category(2)
    X = Copresheaf(C, {0: ["x"], 1: ["y", "y2"], 2: ["z", "z2"]},
                   {(0, 1): {"x": "y"}, (1, 2): {"y": "z", "y2": "z"}, (0, 2): {"x": "z2"}})
    report = check_copresheaf(X)
    assert report.laws_violated() == ["functoriality"]


@pytest.mark.parametrize("n", [0, 1, 3])
def test_vec_sizes(n):
    X = vec(n)
    assert X.sizes() == {"e": n, "v": n + 1}
    assert check_copresheaf(X).ok
    assert longest_path_length(X) == n


def test_disjoint_shapes():
    assert disjoint_paths([1, 2]).sizes() == {"e": 3, "v": 5}
    assert disjoint_edges(2).sizes() == {"e": 2, "v": 4}
    assert ul(3).sizes() == {"e": 0, "v": 3}


def test_representables_on_g(g):
    assert representable(g, "v").sizes() == {"e": 0, "v": 1}
    assert representable(g, "e").sizes() == {"e": 1, "v": 2}


def test_category_of_elements_of_terminal():
    el, _ = category_of_elements(terminal_copresheaf(terminal()))
    assert el.size() == (1, 1)


def test_category_of_elements_of_representable(g):
    el, projection = category_of_elements(representable(g, "e"))
    assert len(el.objects) == 3
    assert len(el.morphisms) - len(el.objects) == 2
    assert check_functor(projection).ok


def test_category_of_elements_of_an_edge():
    X = graph([0, 1], {"a": (0, 1)})
    el, _ = category_of_elements(X)
    assert len(el.objects) == 3
    assert sorted(el.ends(f) for f in el.morphisms if not el.is_identity(f)) == [
        (("e", "a"), ("v", 0)), (("e", "a"), ("v", 1))]


def test_map_counts():
    assert count_maps(vec(1), vec(2)) == 2
    assert count_maps(ul(2), vec(1)) == 4
    assert count_maps(vec(2), vec(1)) == 0


def test_enumerated_maps_are_certified():
    into_chain = enumerate_copresheaf_maps(vec(1), underlying_graph(chain_category(1)))
    assert len(into_chain) == 3
    assert into_chain.exactness.exact
    assert len(enumerate_copresheaf_maps(empty_copresheaf(G), vec(1))) == 1
    assert len(enumerate_copresheaf_maps(vec(2), vec(1))) == 0


def test_restrict_along_a_functor(g):
    F = FinFunctor(terminal(), g, {"*": "v"}, {"id": "id_v"}, name="pick_v")
    assert check_functor(F).ok
    assert len(restrict_along(F, vec(2)).elements("*")) == 3


def test_underlying_graph_counts_every_morphism(square):
    X = underlying_graph(square)
    assert X.sizes() == {"e": len(square.morphisms), "v": 4}


def _span_diagram(edge_values):
    shape = graph([0, 1], {"a": (0, 1)})
    values = {("v", 0): [0, 1], ("v", 1): [0, 1], ("e", "a"): edge_values}

    def transition(f, a, x):
        return {("*", w): min(w, max(edge_values)) for w in (0, 1)}

    return ElementsDiagram(shape, lambda a, x: values[(a, x)], transition)


@pytest.mark.parametrize("edge_values, size", [([0, 1], 2), ([0], 1)])
def test_colimit_over_elements(edge_values, size):
    colim = colimit_over_elements(_span_diagram(edge_values))
    assert colim.size() == size


@pytest.mark.parametrize("edge_values, families", [([0, 1], 2), ([0], 4)])
def test_limit_over_elements(edge_values, families):
    assert len(limit_over_elements(_span_diagram(edge_values))) == families


def test_composed_maps_and_isomorphisms():
    X, Y = vec(1), vec(2)
    for h in iter_copresheaf_maps(X, Y):
        assert compose_maps(identity_map(X), h) == h
        assert compose_maps(h, identity_map(Y)) == h
        assert not is_isomorphism(h, X, Y)
    assert is_isomorphism(identity_map(Y), Y, Y)
