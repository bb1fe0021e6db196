from .base_monad import FamilialMonad, check_monad
from .builtins import (
    PathBicomodule,
    PathMonad,
    ListBicomodule,
    ListMonad,
    IdentityMonad,
    monad_path,
    monad_list,
    monad_identity,
)
from .explicit import ExplicitMonad, monad_maybe
from .smc import SmcBicomodule, SmcMonad, monad_smc
from .operad import (
    SymmetricOperad,
    OperadBicomodule,
    OperadMonad,
    check_operad,
    associative_operad,
    commutative_operad,
    monad_from_operad,
)
from .algebra import (
    Algebra,
    free_algebra,
    check_algebra,
    check_algebra_map,
    category_as_path_algebra,
    monoid_as_list_algebra,
    algebra_from_table,
    identity_algebra,
    terminal_algebra,
)
from .compare import compare_monads, monad_iso_report

__all__ = [
    "FamilialMonad",
    "check_monad",
    "PathBicomodule",
    "PathMonad",
    "ListBicomodule",
    "ListMonad",
    "IdentityMonad",
    "monad_path",
    "monad_list",
    "monad_identity",
    "ExplicitMonad",
    "monad_maybe",
    "SmcBicomodule",
    "SmcMonad",
    "monad_smc",
    "SymmetricOperad",
    "OperadBicomodule",
    "OperadMonad",
    "check_operad",
    "associative_operad",
    "commutative_operad",
    "monad_from_operad",
    "Algebra",
    "free_algebra",
    "check_algebra",
    "check_algebra_map",
    "category_as_path_algebra",
    "monoid_as_list_algebra",
    "algebra_from_table",
    "identity_algebra",
    "terminal_algebra",
    "compare_monads",
    "monad_iso_report",
]
