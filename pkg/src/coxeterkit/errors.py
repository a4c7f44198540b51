"""Exception hierarchy shared by every coxeterkit module."""


class CoxeterKitError(Exception):
    """Base class for all errors raised by coxeterkit."""


class InvalidWeights(CoxeterKitError, ValueError):
    pass


# exactpoly

class DivByZero(CoxeterKitError, ZeroDivisionError):
    pass


class NotDivisible(CoxeterKitError, ArithmeticError):
    pass


class ZeroPolynomial(CoxeterKitError, ValueError):
    pass


class NotAPolynomial(CoxeterKitError, ArithmeticError):
    """A factored rational form does not expand to a polynomial."""


# coxeter_core

class SubsetOverflow(CoxeterKitError):
    """The number of weights exceeds the subset enumeration bound."""


class InternalInconsistency(CoxeterKitError, AssertionError):
    """An internal consistency check failed; this is a bug, not bad input."""


# recovery

class OutOfFamily(CoxeterKitError):
    """Input is not the Coxeter polynomial of a tensor product of type A factors."""


class NotCyclotomicProduct(OutOfFamily):
    pass


class InconsistentPolynomial(OutOfFamily):
    pass


class EmptyTable(CoxeterKitError, ValueError):
    pass


# spectral

class TooManyTwos(CoxeterKitError, ValueError):
    pass


class ContainsTwo(CoxeterKitError, ValueError):
    pass


# oracle

class CapExceeded(CoxeterKitError):
    pass


class DimCap(CapExceeded):
    pass


class FiberCap(CapExceeded):
    pass
