from .polynomial import (
    Polynomial,
    FinitePolynomial,
    GradedPolynomial,
    CompositePolynomial,
    y,
    zero,
    monomial,
    from_counts,
    poly_sum,
    compose_poly,
    evaluate,
)
from .morphism import (
    PolyMorphism,
    identity_morphism,
    compose_morphisms,
    tri_morphisms,
    associator,
    left_unitor_inverse,
    right_unitor_inverse,
    compare_morphisms,
    classify_morphism,
    find_polynomial_isomorphism,
    materialize,
)

__all__ = [
    "Polynomial",
    "FinitePolynomial",
    "GradedPolynomial",
    "CompositePolynomial",
    "y",
    "zero",
    "monomial",
    "from_counts",
    "poly_sum",
    "compose_poly",
    "evaluate",
    "PolyMorphism",
    "identity_morphism",
    "compose_morphisms",
    "tri_morphisms",
    "associator",
    "left_unitor_inverse",
    "right_unitor_inverse",
    "compare_morphisms",
    "classify_morphism",
    "find_polynomial_isomorphism",
    "materialize",
]
