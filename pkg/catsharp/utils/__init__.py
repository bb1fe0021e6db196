from .errors import (
    CatsharpError,
    LawViolation,
    ComoduleLawViolation,
    InducedActionIllDefined,
    BoundExhausted,
    SizeMismatch,
    NonEmptyDirections,
    FrameMismatch,
    NotSigmaFree,
    SpecError,
)
from .labels import FrozenMap, label, least, sort_ids, sort_key
from .report import EXACT, EnumResult, Exactness, Report, Violation, meet_all
from .encoder import JSONEncoder, save_run_report
from .config import LazyInitializationMixin, RunConfig
from .cache import memoize_method

__all__ = [
    "CatsharpError",
    "LawViolation",
    "ComoduleLawViolation",
    "InducedActionIllDefined",
    "BoundExhausted",
    "SizeMismatch",
    "NonEmptyDirections",
    "FrameMismatch",
    "NotSigmaFree",
    "SpecError",
    "FrozenMap",
    "label",
    "least",
    "sort_ids",
    "sort_key",
    "EXACT",
    "EnumResult",
    "Exactness",
    "Report",
    "Violation",
    "meet_all",
    "JSONEncoder",
    "save_run_report",
    "LazyInitializationMixin",
    "RunConfig",
    "memoize_method",
]
