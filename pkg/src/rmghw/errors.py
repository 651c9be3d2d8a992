"""Exception hierarchy.

Every error carries an ``exit_code`` so the CLI can map it without a lookup
table: 3 for guard violations, 4 for bad arguments.
"""

from __future__ import annotations


class RmghwError(Exception):
    exit_code = 4


class GuardViolation(RmghwError):
    """A request exceeds a hard computational guard."""

    exit_code = 3


class NotPrime(RmghwError, ValueError):
    pass


class DegreeTooLarge(RmghwError, ValueError):
    pass


class FieldMismatch(RmghwError, ValueError):
    pass


class DivisionByZero(RmghwError, ZeroDivisionError):
    pass


class LengthMismatch(RmghwError, ValueError):
    pass


class ArityTooSmall(RmghwError, ValueError):
    pass


class ArityMismatch(RmghwError, ValueError):
    pass


class FactorTooSmall(RmghwError, ValueError):
    pass


class FieldTooSmall(RmghwError, ValueError):
    pass


class DegreeZero(RmghwError, ValueError):
    pass


class ZeroScale(RmghwError, ValueError):
    def __init__(self, index: int):
        super().__init__(f"scale vector has a zero entry at position {index}")
        self.index = index


class DependentRows(RmghwError, ValueError):
    pass


class RankOutOfRange(RmghwError, ValueError):
    pass


class RankOutOfTheoremRange(RmghwError, ValueError):
    pass


class DegreeOutOfRange(RmghwError, ValueError):
    pass


class LengthTooLargeForOracle(GuardViolation):
    pass


class DimensionTooLargeForOracle(GuardViolation):
    pass


class DegreeCapExceeded(GuardViolation):
    pass
