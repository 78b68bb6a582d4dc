"""Exception types raised by bellcoh."""


class BellcohError(Exception):
    """Base class for all library errors."""


class NonPhysicalState(BellcohError, ValueError):
    """Correlation coefficients lie outside the tetrahedron of valid states."""


class NotBellDiagonal(BellcohError, ValueError):
    """A density matrix is not of Bell-diagonal form.

    Parameters
    ----------
    residual : float
        Max entrywise distance to the nearest Bell-diagonal reconstruction.
    """

    def __init__(self, residual, message=None):
        self.residual = float(residual)
        super().__init__(message or f"matrix is not Bell-diagonal (residual {self.residual:.3e})")


class InvalidDensityMatrix(BellcohError, ValueError):
    """Matrix fails the Hermitian / unit-trace / PSD checks."""


class InvalidDistribution(BellcohError, ValueError):
    """Probability vector does not sum to one or has negative entries."""


class NoConvergence(BellcohError, ArithmeticError):
    """Jacobi eigensolver ran out of sweeps."""


class InfiniteDivergence(BellcohError, ArithmeticError):
    """Relative entropy is infinite because of a support mismatch."""


class DomainError(BellcohError, ValueError):
    """Argument outside its mathematical domain."""


class NegativeTime(DomainError):
    pass


class InvalidBasis(BellcohError, ValueError):
    """Basis vectors are not orthonormal."""


class MissingTransition(BellcohError, LookupError):
    """No finite transition time exists for the requested trajectory."""
