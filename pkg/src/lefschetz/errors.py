"""Exception types raised across the package."""


class LefschetzError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPermutation(LefschetzError, ValueError):
    pass


class GroupTooLarge(LefschetzError):
    """An enumeration exceeded its configured element or subgroup bound."""


class NotNormal(LefschetzError, ValueError):
    pass


class UnknownFamily(LefschetzError, ValueError):
    pass


class NotBorelSmith(LefschetzError, ValueError):
    pass


class ExtensionError(LefschetzError, ValueError):
    """Values on cyclic classes do not extend to a Borel-Smith function."""


class NoLift(LefschetzError, ValueError):
    pass


class ParseError(LefschetzError, ValueError):
    pass
