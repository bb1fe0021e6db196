class CatsharpError(Exception):
    """Base class of every error raised by catsharp."""


class LawViolation(CatsharpError):
    """A structure failed one of its laws.

    Args:
        message (str): human readable summary
        report (Report, optional): the full report of the failed check
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ComoduleLawViolation(LawViolation):
    pass


class InducedActionIllDefined(LawViolation):
    """The action on a quotient does not respect the quotient."""


class BoundExhausted(CatsharpError):
    """A graded enumeration needed data above the degree bound.

    Args:
        message (str): human readable summary
        bound (int, optional): the bound that was exhausted
        partial (object, optional): whatever was computed below the bound
    """

    def __init__(self, message, bound=None, partial=None):
        super().__init__(message)
        self.bound = bound
        self.partial = partial


class SizeMismatch(CatsharpError):
    pass


class NonEmptyDirections(CatsharpError):
    pass


class FrameMismatch(CatsharpError):
    """Comonoids or bicomodules were combined over different frames."""


class NotSigmaFree(CatsharpError):
    """A symmetric operad has an operation with a nontrivial stabiliser."""

    def __init__(self, message, operation=None, permutation=None):
        super().__init__(message)
        self.operation = operation
        self.permutation = permutation


class SpecError(CatsharpError):
    """Malformed or unresolved input in a spec file."""
