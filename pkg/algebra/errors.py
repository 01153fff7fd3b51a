"""Exception hierarchy shared by every package of the library."""
from typing import Dict, List, Optional


class QuantumGroupError(Exception):
    """Base class for all library errors."""


class InvalidRootError(QuantumGroupError, ValueError):
    """Raised for an order N that is not an odd integer >= 3."""

    def __init__(self, N):
        super().__init__(f"N must be an odd integer >= 3, got {N!r}")
        self.N = N


class FieldMismatchError(QuantumGroupError, TypeError):
    """Operands live over different roots of unity or in different algebras."""


class ScalarDivisionError(QuantumGroupError, ZeroDivisionError):
    """Division by zero or inversion of a non-invertible element."""


class ExpressionError(QuantumGroupError, ValueError):
    """Syntax or typing error in a textual expression."""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position


class NotProjectiveError(QuantumGroupError):
    """The module given is not a 2N-dimensional projective indecomposable."""


class UnmatchedSummandError(QuantumGroupError):
    """An indecomposable summand matched no catalog entry."""

    def __init__(self, dimension: int, spectrum: Dict[int, int]):
        weights = ", ".join(f"q^{w}: {m}" for w, m in sorted(spectrum.items()))
        super().__init__(f"no catalog module matches a summand of dimension {dimension} (K-spectrum {{{weights}}})")
        self.dimension = dimension
        self.spectrum = spectrum


class SolutionSpaceError(QuantumGroupError):
    """A linear system expected to have a unique solution line did not."""

    def __init__(self, message: str, dimension: int):
        super().__init__(f"{message} (solution space dimension {dimension})")
        self.dimension = dimension


class CalculusError(QuantumGroupError):
    """The differential structure is not well defined for the chosen conventions."""


__all__: List[str] = [
    "QuantumGroupError",
    "InvalidRootError",
    "FieldMismatchError",
    "ScalarDivisionError",
    "ExpressionError",
    "NotProjectiveError",
    "UnmatchedSummandError",
    "SolutionSpaceError",
    "CalculusError",
]
