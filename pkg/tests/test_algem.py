import pytest

from catsharp.algem import (
    TwoCell,
    builtin_el,
    builtin_sm,
    check_2cell,
    check_monad_morphism,
    check_smc_decomposition,
    check_wreath,
    compose_morphisms,
    identity_2cell,
    identity_morphism,
    induced_algebra_functor,
    sm_morphism,
    trivial_wreath,
    vertical_compose,
    wreath_composite,
)
from catsharp.algem.sm import sm_unit
from catsharp.fincat import (
    G,
    category_of_elements,
    chain_category,
    coproduct,
    find_isomorphism,
    representable,
    underlying_graph,
    vec,
)
from catsharp.monad import category_as_path_algebra, check_algebra, check_monad, identity_algebra
from catsharp.utils import FrameMismatch, FrozenMap


@pytest.fixture(scope="module")
def sm(path):
    return builtin_sm(path)


def test_identity_morphism_of_path(path):
    assert check_monad_morphism(identity_morphism(path), 2).ok


def test_identity_morphism_of_lists(lists):
    assert check_monad_morphism(identity_morphism(lists), 3).ok


def test_sm_is_a_monad_morphism(sm):
    report = check_monad_morphism(sm.morphism, 2)
    assert report.ok, report.summary()


@pytest.mark.slow
def test_sm_is_a_monad_morphism_at_three(sm):
    assert check_monad_morphism(sm.morphism, 3).ok


def test_constant_cocomposition_breaks_multiplication(path):
    report = check_monad_morphism(sm_morphism(path, constant=True), 3)
    assert not report.ok
    assert "multiplication" in report.laws_violated()


def test_el_of_g_on_an_edge(path):
    phi = builtin_el(G, path)
    assert phi.carrier.apply(vec(1)).sizes() == {"v": 3, "e": 5}


def test_el_matches_category_of_elements(path, square):
    X = coproduct(representable(square, "a"), representable(square, "b"))
    phi = builtin_el(square, path)
    assert check_monad_morphism(phi, 2).ok
    graph = phi.carrier.apply(X)
    el, _ = category_of_elements(X)
    assert find_isomorphism(graph, underlying_graph(el)) is not None


def test_el_induces_the_category_of_elements(path, square):
    X = representable(square, "a")
    phi = builtin_el(square, path)
    A = induced_algebra_functor(phi, identity_algebra(phi.source, X), bound=2)
    assert check_algebra(A, 2).ok


def test_sm_on_a_chain_algebra(path, sm):
    A = category_as_path_algebra(chain_category(1), path, bound=2)
    induced = induced_algebra_functor(sm.morphism, A, bound=2)
    assert induced.carrier.sizes()["v"] == 1 + 2 + 4


@pytest.mark.slow
def test_sm_induces_an_algebra(path, sm):
    A = category_as_path_algebra(chain_category(1), path, bound=2)
    assert check_algebra(induced_algebra_functor(sm.morphism, A, bound=2), 2).ok


def test_identity_2cells(path, sm):
    assert check_2cell(identity_2cell(identity_morphism(path)), 2).ok
    rho = identity_2cell(sm.morphism)
    assert check_2cell(vertical_compose(rho, rho), 2).ok


def test_sm_unit_and_multiplication_cells(sm):
    assert check_2cell(sm.unit, 2).ok
    assert check_2cell(sm.mult, 2).ok


def _swapped_unit(elem):
    C, h = elem
    if C == "v":
        return sm_unit(elem)
    swapped = {("v", "s"): h(("v", "t")), ("v", "t"): h(("v", "s")), ("e", "id_e"): h(("e", "id_e"))}
    return sm_unit((C, FrozenMap(swapped)))


def test_swapped_unit_is_not_a_2cell(path, sm):
    bad = TwoCell(sm.unit.source, sm.morphism, _swapped_unit, name="η~")
    assert not check_2cell(bad, 2).ok


def test_2cells_need_parallel_morphisms(path, lists):
    with pytest.raises(FrameMismatch):
        TwoCell(identity_morphism(path), identity_morphism(lists), lambda elem: elem)


def test_composite_morphisms_need_matching_monads(path, lists):
    with pytest.raises(FrameMismatch):
        compose_morphisms(identity_morphism(path), identity_morphism(lists))


def test_trivial_wreath(lists):
    w = trivial_wreath(lists)
    assert check_wreath(w, 2).ok
    assert check_monad(wreath_composite(w), 2, progress=False).ok


def test_sm_composite_has_smc_operations(sm, smc):
    T = wreath_composite(sm)
    assert len(T.carrier.operations(2)) == len(smc.carrier.operations(2))


@pytest.mark.slow
def test_smc_decomposes_as_sm_over_path(sm):
    report = check_smc_decomposition(3, wreath=sm)
    assert report.ok, report.summary()
    assert report.find("composites").checked >= 20


@pytest.mark.slow
def test_sm_wreath_laws(sm):
    report = check_wreath(sm, 3)
    assert report.ok, report.summary()
    assert report.find("associativity").checked >= 20
