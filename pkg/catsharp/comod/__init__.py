from .comonoid import (
    Comonoid,
    as_comonoid,
    comonoid_from_category,
    category_from_comonoid,
    check_comonoid,
    check_cofunctor,
    cofunctor,
    identity_cofunctor,
    comonoid_y,
    empty_comonoid,
)
from .base_bicomodule import Bicomodule, BicomoduleCarrier, PositionsCopresheaf, check_bicomodule
from .bicomodule import (
    FiniteBicomodule,
    IdentityBicomodule,
    CopresheafBicomodule,
    identity_bicomodule,
    copresheaf_as_bicomodule,
    bicomodule_as_copresheaf,
    random_bicomodule,
)
from .compose import CompositeBicomodule, compose_bicomodules, compose_bicomodules_equalizer_oracle
from .maps import (
    BicomoduleMap,
    identity_map_of,
    check_square,
    maps_equal,
    whisker_left,
    whisker_right,
    enumerate_bicomodule_maps,
)
from .iso import find_bicomodule_isomorphism

__all__ = [
    "Comonoid",
    "as_comonoid",
    "comonoid_from_category",
    "category_from_comonoid",
    "check_comonoid",
    "check_cofunctor",
    "cofunctor",
    "identity_cofunctor",
    "comonoid_y",
    "empty_comonoid",
    "Bicomodule",
    "BicomoduleCarrier",
    "PositionsCopresheaf",
    "check_bicomodule",
    "FiniteBicomodule",
    "IdentityBicomodule",
    "CopresheafBicomodule",
    "identity_bicomodule",
    "copresheaf_as_bicomodule",
    "bicomodule_as_copresheaf",
    "random_bicomodule",
    "CompositeBicomodule",
    "compose_bicomodules",
    "compose_bicomodules_equalizer_oracle",
    "BicomoduleMap",
    "identity_map_of",
    "check_square",
    "maps_equal",
    "whisker_left",
    "whisker_right",
    "enumerate_bicomodule_maps",
    "find_bicomodule_isomorphism",
]
