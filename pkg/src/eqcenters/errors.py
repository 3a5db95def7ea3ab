"""Exception hierarchy. ``exit_code`` is what the CLI returns for each class."""


class GeometryError(Exception):
    exit_code = 3


class DimensionMismatch(GeometryError, ValueError):
    pass


class NotOrthogonal(GeometryError, ValueError):
    pass


class AffinelyDependent(GeometryError, ValueError):
    """Raised where a finite stabilizer is required."""


class AnchorNotFixed(GeometryError):
    def __init__(self, message, element=None, residual=None):
        super().__init__(message)
        self.element = element
        self.residual = residual


class OutOfDomain(GeometryError):
    exit_code = 4


class Collinear(OutOfDomain):
    pass


class NoAffineCenter(OutOfDomain):
    pass


class NotEquifacetal(GeometryError):
    pass


class EquifacetalInput(GeometryError):
    pass


class InvariantViolation(GeometryError):
    """A mathematical invariant failed numerically. Never swallowed."""

    exit_code = 5
