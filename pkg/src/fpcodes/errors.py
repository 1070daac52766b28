"""Exception hierarchy shared by all modules."""


class FPCodesError(Exception):
    """Base class for every error raised by fpcodes."""


class InputError(FPCodesError, ValueError):
    """Malformed or out-of-contract input."""


# finite fields
class NotPrime(InputError):
    pass


class ReducibleModulus(InputError):
    pass


class UnsupportedOrder(InputError):
    pass


class DivisionByZero(FPCodesError, ZeroDivisionError):
    pass


# monomial ideals
class UnitIdeal(InputError):
    pass


class InIdeal(InputError):
    """The monomial lies in the ideal although the operation needs a standard monomial."""


class DimensionTooHigh(FPCodesError):
    """Hilbert function did not stabilize: dim(S/L) >= 2."""


# complete intersections
class NotCompleteIntersection(InputError):
    pass


class NotDimOne(InputError):
    pass


class PreconditionViolated(InputError):
    pass


class NotInIdealViolated(PreconditionViolated):
    """Raised by the case II degree formula when t^a lies in L."""


# point sets and codes
class ZeroVector(InputError):
    pass


class EmptyFactor(InputError):
    pass


class FieldTooSmall(InputError):
    pass


class ZeroPolynomial(InputError):
    pass


class TooManyCodewords(FPCodesError):
    def __init__(self, required: int, cap: int):
        super().__init__(f"enumeration needs {required} candidates, cap is {cap} (use force)")
        self.required = required
        self.cap = cap


class TrivialSet(InputError):
    pass


class PointNotInSet(InputError):
    pass


class MissingInitialIdeal(InputError):
    pass
