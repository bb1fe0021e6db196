from .coclosure import (
    Coclosure,
    coclosure,
    coclosure_unit,
    coclosure_counit,
    coclosure_map,
    transpose,
    untranspose,
    check_triangles,
    check_adjunction,
)
from .comonad import (
    ComonadOnObject,
    identity_comonad,
    endo_comonad,
    coclosure_comonad,
    check_comonad,
    comonad_to_comonoid,
    LeftComodule,
    check_comodule,
    TransferredBicomodule,
    RestrictedBicomodule,
    comodule_transfer,
    comodule_untransfer,
)

__all__ = [
    "Coclosure",
    "coclosure",
    "coclosure_unit",
    "coclosure_counit",
    "coclosure_map",
    "transpose",
    "untranspose",
    "check_triangles",
    "check_adjunction",
    "ComonadOnObject",
    "identity_comonad",
    "endo_comonad",
    "coclosure_comonad",
    "check_comonad",
    "comonad_to_comonoid",
    "LeftComodule",
    "check_comodule",
    "TransferredBicomodule",
    "RestrictedBicomodule",
    "comodule_transfer",
    "comodule_untransfer",
]
