"""Exception types shared across the package."""


class StructuralError(ValueError):
    """Shapes, dimensions or tags do not fit together."""


class NotInvertible(ArithmeticError):
    """An element or matrix has no inverse."""


class InconsistentSystem(ArithmeticError):
    """A linear system has no solution.

    ``certificate`` maps equation index to coefficient; the combination
    annihilates the matrix but not the right-hand side.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class Underdetermined(ArithmeticError):
    """A linear system has more than one solution."""

    def __init__(self, message, particular=None, kernel=None):
        super().__init__(message)
        self.particular = particular
        self.kernel = kernel


class VerificationError(AssertionError):
    """An identity that a construction depends on does not hold.

    Carries the failing report so callers can print the witness.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
