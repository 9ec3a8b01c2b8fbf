"""Exception hierarchy shared by all stages of the pipeline."""


class AfposetError(Exception):
    """Base class for all library errors."""


class ParseError(AfposetError):
    """Input file could not be parsed."""


class DomainError(AfposetError):
    """Input parsed but violates a mathematical precondition."""


class NotT0Error(DomainError):
    """Two points cannot be separated by the given basis."""

    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(
            f"points {a!r} and {b!r} lie in exactly the same basis sets; "
            "the space is not T0"
        )


class UncoveredPointError(DomainError):
    """A point belongs to no cover set."""

    def __init__(self, point):
        self.point = point
        super().__init__(f"point {point!r} is covered by no set of the covering")


class UnknownPointError(DomainError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"unknown point {point!r}")


class NotStableError(DomainError):
    """The Bratteli diagram has not reached its repeating regime."""


class NotUnimodularError(DomainError):
    """det(T) is not +-1, so K0 is not plainly Z^k."""

    def __init__(self, determinant):
        self.determinant = determinant
        super().__init__(
            f"incidence matrix has determinant {determinant}; "
            "only |det| = 1 is supported"
        )


class NotUnipotentError(DomainError):
    """(T - I) is not nilpotent; use the spectral or iterative route."""


class NotPrimitiveMatrixError(DomainError):
    """No power of T is entrywise positive."""
