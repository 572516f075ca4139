class SignvarError(Exception):
    """Base class for library errors."""


class ZeroPolynomialError(SignvarError, ValueError):
    pass


class InvalidIntervalError(SignvarError, ValueError):
    pass


class EndpointRootError(SignvarError, ValueError):
    """A finite endpoint is a root; the caller has to split the interval there."""

    def __init__(self, message, root=None):
        super().__init__(message)
        self.root = root


class NotIsolatingError(SignvarError, ValueError):
    pass


class IsolationBudgetError(SignvarError, RuntimeError):
    """Bisection exceeded its step budget on one square-free factor."""


class InvariantViolation(SignvarError, AssertionError):
    """A bound that a theorem guarantees came out wrong."""


class ParseError(SignvarError, ValueError):
    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
