"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class MorseError(Exception):
    """Base class for every error raised by this package."""


# ring


class MixedRings(MorseError, TypeError):
    def __init__(self, left, right):
        super().__init__(f"cannot combine elements of {left} and {right}")
        self.left = left
        self.right = right


class NotInvertible(MorseError, ArithmeticError):
    def __init__(self, element):
        super().__init__(f"{element} is not a unit in {element.ring}")
        self.element = element


class RingParseError(MorseError, ValueError):
    pass


# complex


class ValidationError(MorseError):
    pass


class NotSquareZero(ValidationError):
    def __init__(self, cell: str, residue=None):
        super().__init__(f"boundary of boundary of {cell!r} is nonzero: {residue}")
        self.cell = cell
        self.residue = residue


class DimensionMismatch(ValidationError):
    pass


class DuplicateId(ValidationError):
    def __init__(self, cell: str):
        super().__init__(f"duplicate cell id {cell!r}")
        self.cell = cell


class UnknownCell(ValidationError):
    def __init__(self, cell: str):
        super().__init__(f"unknown cell id {cell!r}")
        self.cell = cell


# matching


class MatchingError(MorseError):
    pass


class NotACoveringPair(MatchingError):
    def __init__(self, down: str, up: str, reason: str = "zero covering weight"):
        super().__init__(f"({down!r}, {up!r}) is not a covering pair: {reason}")
        self.down = down
        self.up = up


class ElementMatchedTwice(MatchingError):
    def __init__(self, cell: str):
        super().__init__(f"cell {cell!r} occurs in more than one matched pair")
        self.cell = cell


class NonInvertibleWeight(MatchingError):
    def __init__(self, down: str, up: str, weight):
        super().__init__(f"weight of {up!r} > {down!r} is {weight}, not a unit")
        self.down = down
        self.up = up
        self.weight = weight


class NotAcyclic(MatchingError):
    def __init__(self, cycle=None):
        msg = "matching is not acyclic"
        if cycle:
            msg += ": cycle through " + " -> ".join(cycle)
        super().__init__(msg)
        self.cycle = cycle


# morse


class PathBudgetExceeded(MorseError):
    def __init__(self, budget: int):
        super().__init__(f"alternating path enumeration exceeded budget of {budget} paths")
        self.budget = budget


class NotNormalized(MorseError):
    def __init__(self, down: str, up: str, weight):
        super().__init__(f"matched weight {up!r} > {down!r} is {weight}, expected 1")
        self.down = down
        self.up = up
        self.weight = weight


class OrderViolation(MorseError):
    pass


class DecompositionError(MorseError):
    pass


class NotABasis(DecompositionError):
    pass


class CrossTermsRemain(DecompositionError):
    def __init__(self, upper: str, lower: str, weight):
        super().__init__(f"off-block entry {upper!r} > {lower!r} = {weight}")
        self.upper = upper
        self.lower = lower
        self.weight = weight


class MorseBlockMismatch(DecompositionError):
    pass


# homology


class UnsupportedRing(MorseError):
    pass


class EmptyInput(MorseError, ValueError):
    pass
