"""Exception hierarchy.

Every domain failure raised by the library derives from :class:`SuperWeylError`;
the CLI prints the class name as a stable error tag and exits with status 1.
"""


class SuperWeylError(Exception):
    """Base class of all domain errors."""

    @property
    def tag(self):
        return type(self).__name__


class RankMismatch(SuperWeylError, ValueError):
    pass


class NotDivisible(SuperWeylError, ArithmeticError):
    pass


class DivisionByZero(SuperWeylError, ZeroDivisionError):
    pass


class InvalidGroupSpec(SuperWeylError, ValueError):
    pass


class GammaVanishesOnRoot(SuperWeylError, ValueError):
    def __init__(self, root):
        super().__init__(f"gamma vanishes on root {root}")
        self.root = root


class InvalidCharacteristic(SuperWeylError, ValueError):
    pass


class GroupTooLarge(SuperWeylError, RuntimeError):
    pass


class NotIntegral(SuperWeylError, ValueError):
    pass


class NotDominant(SuperWeylError, ValueError):
    pass


class NoParabolic(SuperWeylError, ValueError):
    pass


class RhoOddNotInvariant(SuperWeylError, ValueError):
    pass


class NotPartition(SuperWeylError, ValueError):
    pass


class LambdaNotInSupport(SuperWeylError, ValueError):
    pass


class InvalidField(SuperWeylError, ValueError):
    pass


class SquareRootUnavailable(SuperWeylError, ValueError):
    def __init__(self, value):
        super().__init__(f"no square root of {value} in this field")
        self.value = value


class InstanceTooLarge(SuperWeylError, ValueError):
    pass
