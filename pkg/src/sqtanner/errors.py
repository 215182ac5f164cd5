"""Exception hierarchy with stable machine-readable error codes.

Every error raised by the library carries a short ``code`` string that the
CLI prints in its single-line error output, so scripts can branch on it
without parsing prose.
"""

from __future__ import annotations


class SqTannerError(Exception):
    """Base class for all library errors."""

    code = "error"


class DimensionError(SqTannerError):
    """Matrix/vector dimensions do not conform."""

    code = "dimension-mismatch"


class InvalidSpecError(SqTannerError):
    """A graph/group/code specification violates its invariants."""

    code = "invalid-spec"


class SizeMismatchError(SqTannerError):
    """Two objects that must share a vertex set (or length) do not."""

    code = "size-mismatch"


class NonCommutingError(SqTannerError):
    code = "non-commuting"


class OverlappingEdgesError(SqTannerError):
    code = "overlapping-edges"


class NotBipartiteError(SqTannerError):
    code = "not-bipartite"


class DegreeMismatchError(SqTannerError):
    code = "degree-mismatch"


class PairingIncompatibleError(SqTannerError):
    code = "pairing-incompatible"


class SelfLoopError(SqTannerError):
    code = "self-loop"


class DomainError(SqTannerError):
    """Input outside the mathematical domain of the operation."""

    code = "domain"


class BudgetError(SqTannerError):
    """An exact computation would exceed its configured budget."""

    code = "budget"


class UnsupportedError(SqTannerError):
    code = "unsupported"


class ConditionIIError(SqTannerError):
    """The row/column overlap condition fails (with a witness attached)."""

    code = "condition-ii"

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SwappingConditionError(SqTannerError):
    code = "swapping-condition"

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class CssViolationError(SqTannerError):
    code = "css-violation"


class FormatError(SqTannerError):
    """Malformed input file (JSON graph spec, alist, ...)."""

    code = "format"
