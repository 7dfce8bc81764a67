"""Exception types raised across the package."""


class CapacityError(ValueError):
    """Word longer than the configured length cap."""


class FamilyMixError(ValueError):
    """Word mixes the theta and q generator families."""


class DomainError(ValueError):
    """Argument outside the domain an operation accepts."""


class BackendMismatchError(TypeError):
    """Exact and float matrices combined in one operation."""


class SingularMatrixError(ArithmeticError):
    pass


class CheckFailure(AssertionError):
    """A verified identity did not hold within tolerance."""
