"""Custom exceptions for sge-elliptic."""


class SgeEllipticException(Exception):
    """Base exception for sge-elliptic errors."""

    def __init__(self, message: str, error_code: str = "GENERAL_ERROR"):
        self.message = message
        self.error_code = error_code
        super().__init__(self.message)


class ComplementarityError(SgeEllipticException):
    """Raised when a modulus pair violates k² + k′² = 1."""

    def __init__(self, message: str):
        super().__init__(message, error_code="COMPLEMENTARITY_ERROR")


class ModulusSingular(SgeEllipticException):
    """Raised when K is requested at k = ±1."""

    def __init__(self, message: str):
        super().__init__(message, error_code="MODULUS_SINGULAR")


class NonConvergence(SgeEllipticException):
    """Raised when a series, product or quadrature misses its tolerance."""

    def __init__(self, message: str):
        super().__init__(message, error_code="NON_CONVERGENCE")


class PhaseJump(SgeEllipticException):
    """Raised when consecutive samples turn by π or more."""

    def __init__(self, message: str):
        super().__init__(message, error_code="PHASE_JUMP")


class BranchJump(SgeEllipticException):
    """Raised when a solution grid is too coarse to follow the log branch."""

    def __init__(self, message: str):
        super().__init__(message, error_code="BRANCH_JUMP")


class PoleProximity(SgeEllipticException):
    """Raised when an elliptic function is evaluated on top of a pole."""

    def __init__(self, message: str):
        super().__init__(message, error_code="POLE_PROXIMITY")


class StripViolation(SgeEllipticException):
    """Raised when a series is evaluated outside its strip of convergence."""

    def __init__(self, message: str):
        super().__init__(message, error_code="STRIP_VIOLATION")


class BadCase(SgeEllipticException):
    """Raised for an unknown modular case id."""

    def __init__(self, message: str):
        super().__init__(message, error_code="BAD_CASE")


class Degenerate(SgeEllipticException):
    """Raised when a transformation divides by zero."""

    def __init__(self, message: str):
        super().__init__(message, error_code="DEGENERATE")


class EnergyRange(SgeEllipticException):
    """Raised when H lies outside the regime of the requested solution."""

    def __init__(self, message: str):
        super().__init__(message, error_code="ENERGY_RANGE")


class SuperluminalVelocity(SgeEllipticException):
    """Raised when a traveling wave is given |v| ≥ 1."""

    def __init__(self, message: str):
        super().__init__(message, error_code="SUPERLUMINAL_VELOCITY")


class BranchInconsistent(SgeEllipticException):
    """Raised when no square-root branch satisfies a bridge relation."""

    def __init__(self, message: str):
        super().__init__(message, error_code="BRANCH_INCONSISTENT")


class DomainError(SgeEllipticException):
    """Raised when spectral input lies outside its stated range."""

    def __init__(self, message: str):
        super().__init__(message, error_code="DOMAIN_ERROR")


class GridError(SgeEllipticException):
    """Raised for a malformed min:max:step grid."""

    def __init__(self, message: str):
        super().__init__(message, error_code="GRID_ERROR")
