"""Exception types raised across the package."""


class TabtypeError(ValueError):
    """Base class for invalid input or violated preconditions."""


class BoxNotInShape(TabtypeError, KeyError):
    pass


class NotErasable(TabtypeError):
    pass


class EmptyShape(TabtypeError):
    pass


class LimitExceeded(TabtypeError):
    """An enumeration would exceed its configured budget."""


class StateLimitExceeded(Exception):
    """The layered subset table grew past the configured size."""


class NotAnInversionSet(TabtypeError):
    pass


class NotDominant(TabtypeError):
    pass


class NotVexillary(TabtypeError):
    pass


class FallingStuck(RuntimeError):
    """The falling construction stopped making progress."""


class InvalidWord(TabtypeError):
    pass


class InvalidTableau(TabtypeError):
    pass
