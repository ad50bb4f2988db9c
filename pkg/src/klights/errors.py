"""Exception types shared across the package."""


class InputError(ValueError):
    """Arguments violate a documented precondition."""


class CapacityError(RuntimeError):
    """Instance exceeds an operation's enumeration budget."""


class ParseError(ValueError):
    """A graph file is malformed; the message names the offending line."""
