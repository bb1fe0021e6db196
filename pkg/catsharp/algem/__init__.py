from .base_morphism import (
    MonadMorphism,
    TwoCell,
    identity_morphism,
    compose_morphisms,
    identity_2cell,
    vertical_compose,
    induced_algebra_functor,
    check_monad_morphism,
    check_2cell,
    generic_element,
)
from .wreath import Wreath, WreathComposite, wreath_composite, trivial_wreath, check_wreath
from .el import ElBicomodule, builtin_el
from .sm import SmBicomodule, builtin_sm, sm_morphism, smc_comparison, check_smc_decomposition

__all__ = [
    "MonadMorphism",
    "TwoCell",
    "identity_morphism",
    "compose_morphisms",
    "identity_2cell",
    "vertical_compose",
    "induced_algebra_functor",
    "check_monad_morphism",
    "check_2cell",
    "generic_element",
    "Wreath",
    "WreathComposite",
    "wreath_composite",
    "trivial_wreath",
    "check_wreath",
    "ElBicomodule",
    "builtin_el",
    "SmBicomodule",
    "builtin_sm",
    "sm_morphism",
    "smc_comparison",
    "check_smc_decomposition",
]
