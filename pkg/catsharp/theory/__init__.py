from .theory_category import (
    TheoryCategory,
    theory_category,
    kleisli_oracle,
    compare_with_oracle,
    inert_category,
    inert_embedding,
)
from .nerve import (
    NervePresheaf,
    nerve,
    nerve_oracle,
    generalized_nerve,
    nerve_comodule,
    nerve_map,
    inert_nerve,
)
from .segal import segal_check, segal_images, unit_point, unit_restriction
from .lawvere import lawvere_theory, lawvere_model, check_products, projection

__all__ = [
    "TheoryCategory",
    "theory_category",
    "kleisli_oracle",
    "compare_with_oracle",
    "inert_category",
    "inert_embedding",
    "NervePresheaf",
    "nerve",
    "nerve_oracle",
    "generalized_nerve",
    "nerve_comodule",
    "nerve_map",
    "inert_nerve",
    "segal_check",
    "segal_images",
    "unit_point",
    "unit_restriction",
    "lawvere_theory",
    "lawvere_model",
    "check_products",
    "projection",
]
