"""Exception hierarchy for rooklab."""

from __future__ import annotations


class RookError(ValueError):
    """Base class for every error raised by rooklab."""


class RejectsNonMonotone(RookError):
    pass


class RejectsNegative(RookError):
    pass


class NotSingleton(RookError):
    pass


class EmptyIntersection(RookError):
    pass


class NotPermissible(RookError):
    """Raised by the local l-operator; ``failed`` names the broken inequality."""

    def __init__(self, message: str, failed: tuple[str, ...]):
        super().__init__(message)
        self.failed = failed


class DoesNotFit(RookError):
    pass


class InternalNonTermination(RuntimeError):
    """A normal-form search overran its safety cap. Always a defect."""


class InvalidPlacement(RookError):
    pass


class OffBoard(InvalidPlacement):
    def __init__(self, cell):
        super().__init__(f"cell {tuple(cell)} is not on the board")
        self.cell = tuple(cell)


class ColumnClash(InvalidPlacement):
    def __init__(self, column: int):
        super().__init__(f"two rooks in column {column}")
        self.column = column


class LevelClash(InvalidPlacement):
    def __init__(self, level: int):
        super().__init__(f"two rooks in level {level}")
        self.level = level


class NotEquivalent(RookError):
    def __init__(self, message: str, representatives=None):
        super().__init__(message)
        self.representatives = representatives


class BudgetTooLarge(RookError):
    pass


class BudgetTooSmall(RookError):
    pass


class DegreeTooLarge(RookError):
    pass


class NotFixedPoint(RookError):
    pass


class NotInHitSet(RookError):
    pass


class IterationCapExceeded(RuntimeError):
    pass


class InvolutionViolation(RuntimeError):
    pass


class SignViolation(RuntimeError):
    pass
