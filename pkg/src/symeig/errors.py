"""Exception hierarchy shared by all modules."""


class SymEigError(Exception):
    pass


class ZeroPolynomial(SymEigError, ValueError):
    pass


class NotMonic(SymEigError, ValueError):
    pass


class DivisorNotMonic(SymEigError, ValueError):
    pass


class DegreeTooHigh(SymEigError, ValueError):
    pass


class DimensionMismatch(SymEigError, ValueError):
    pass


class NotSquare(DimensionMismatch):
    pass


class NotSymmetric(SymEigError, ValueError):
    pass


class NegativeInput(SymEigError, ValueError):
    pass


class NotPositiveDefinite(SymEigError, ValueError):
    pass


class NotPositiveSemidefinite(SymEigError, ValueError):
    pass


class NotRealZero(SymEigError, ValueError):
    pass


class NotStrictRealZero(NotRealZero):
    pass


class InternalCertificateFailure(SymEigError, RuntimeError):
    """An identity that holds by construction failed to check; always a bug."""


class BoundsTooLarge(SymEigError, ValueError):
    pass


class ParseError(SymEigError, ValueError):
    pass
