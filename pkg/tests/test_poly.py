import pytest

from catsharp.poly import (
    CompositePolynomial,
    GradedPolynomial,
    associator,
    classify_morphism,
    compare_morphisms,
    compose_poly,
    evaluate,
    find_polynomial_isomorphism,
    from_counts,
    identity_morphism,
    left_unitor_inverse,
    materialize,
    monomial,
    poly_sum,
    right_unitor_inverse,
    tri_morphisms,
    y,
    zero,
)
from catsharp.utils import EXACT, BoundExhausted, Exactness, Report


def _lists():
    """``Σ_N y^N`` with ``N`` as degree."""
    return GradedPolynomial(lambda d: [(d, range(d))], name="List")


def test_composite_of_monomials():
    r = compose_poly(monomial(2), monomial(3))
    assert len(r.positions()) == 1
    assert len(r.directions(r.positions()[0])) == 6


def test_composite_position_count():
    r = compose_poly(from_counts([0, 1, 2]), from_counts([1, 2]))
    assert len(r.positions()) == 1 + 2 + 4


def test_composite_with_zero_keeps_constant_positions():
    r = compose_poly(from_counts([0, 1]), zero())
    assert len(r.positions()) == 1


def test_evaluate_on_a_set():
    assert len(evaluate(from_counts([0, 2]), ["a", "b"])) == 1 + 4


def test_graded_polynomial_needs_a_bound():
    p = _lists()
    with pytest.raises(BoundExhausted):
        p.positions()
    assert p.positions(2) == (0, 1, 2)
    assert p.enumerate(2).exactness == Exactness.truncated(2)


def test_graded_composite_respects_total_degree():
    p = _lists()
    r = CompositePolynomial(p, p)
    positions = r.positions(2)
    assert all(r.degree(P) <= 2 for P in positions)
    # 0; 1 of (0|1); 2 of (0,0)
    assert len(positions) == 1 + 2 + 1
    assert r.exactness_at(2) == Exactness.truncated(2)


def test_sum_is_finite():
    s = poly_sum(y(), monomial(2))
    assert len(s.positions()) == 2
    assert s.exactness_at(None) == EXACT


def test_unitors_are_isomorphisms():
    p = from_counts([0, 2, 1])
    for phi in (left_unitor_inverse(p), right_unitor_inverse(p)):
        kind = classify_morphism(phi)
        assert kind["cartesian"] and kind["vertical"]


def test_associator_is_an_isomorphism():
    p, q, r = from_counts([1, 2]), from_counts([0, 1]), monomial(2)
    kind = classify_morphism(associator(p, q, r))
    assert kind["cartesian"] and kind["vertical"]


def test_whiskered_identities_are_the_identity():
    p, q = from_counts([1, 2]), from_counts([0, 2])
    pq = CompositePolynomial(p, q)
    whiskered = tri_morphisms(identity_morphism(p), identity_morphism(q), dom=pq, cod=pq)
    report = compare_morphisms(Report("id ◁ id"), "identity", whiskered, identity_morphism(pq), pq.positions())
    assert report.ok


def test_then_with_identity_is_neutral():
    p = from_counts([2])
    ident = identity_morphism(p)
    twice = ident.then(ident)
    assert twice(0) == 0
    assert twice.sharp_map(0) == ident.sharp_map(0)


@pytest.mark.parametrize("a, b, iso", [([1, 2], [2, 1], True), ([1, 1], [2, 0], False), ([1], [1, 1], False)])
def test_find_polynomial_isomorphism(a, b, iso):
    assert (find_polynomial_isomorphism(from_counts(a), from_counts(b)) is not None) == iso


def test_materialize_keeps_degrees():
    m = materialize(_lists(), 3)
    assert m.is_finite
    assert [m.degree(P) for P in m.positions()] == [0, 1, 2, 3]
