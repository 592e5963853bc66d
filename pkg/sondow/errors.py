"""
Sondow error types

Every error raised by the package is a ValueError, so callers that only
care about "bad input" can keep catching ValueError.
"""

from typing import List, Optional, Tuple


class SondowError(ValueError):
    """Base class for all domain errors"""


class BudgetError(SondowError):
    """An effort budget or oracle bound ran out before an answer was reached"""


# ==================== core arithmetic ====================

class InvalidModulusError(SondowError):
    pass


class InvalidExponentError(SondowError):
    pass


class OutOfRangeError(SondowError):
    pass


class SegmentSizeError(SondowError):
    pass


class FactorHintError(SondowError):
    """A claimed factorization failed validation"""


class PartialFactorizationError(BudgetError):
    """Factoring stopped with an unfactored composite cofactor left over"""

    def __init__(self, n: int, partial: List[Tuple[int, int]], cofactor: int):
        self.n = n
        self.partial = partial
        self.cofactor = cofactor
        super().__init__(
            f"Factorization budget exceeded for {n}: "
            f"unfactored cofactor {cofactor} ({len(str(cofactor))} digits)"
        )


# ==================== predicates ====================

class OracleBoundExceeded(BudgetError):
    pass


class UnsupportedMuError(SondowError):
    pass


class DomainError(SondowError):
    pass


# ==================== constructions ====================

class PreconditionFailed(SondowError):
    pass


class NotApplicable(SondowError):
    pass


class RadicalConditionFailed(SondowError):
    pass


class MembershipFailed(SondowError):
    pass


class NotAMultiple(SondowError):
    pass


class NotASondowNumber(SondowError):
    pass


# ==================== search ====================

class SearchRangeError(SondowError):
    pass


class SieveConsistencyError(SondowError):
    """The vectorized scan and the per-prime-power check disagree on a hit"""

    def __init__(self, n: int, mu: int, detail: Optional[str] = None):
        self.n = n
        self.mu = mu
        message = f"Sieve hit {n} for mu={mu} failed re-verification"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class CheckpointError(SondowError):
    pass


# ==================== corpus ====================

class BFileParseError(SondowError):
    def __init__(self, line_number: int, line: str, reason: str = "expected 'index value'"):
        self.line_number = line_number
        self.line = line
        super().__init__(f"b-file line {line_number}: {reason}: {line!r}")


class BFileFormatError(SondowError):
    pass
