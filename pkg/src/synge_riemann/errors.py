"""Exception types shared across the library."""


class SyngeError(Exception):
    """Base class for library errors."""


class DomainError(SyngeError, ValueError):
    """Argument outside the mathematical domain (e.g. gamma <= 0, |v| >= c)."""


class WindowError(SyngeError):
    """Relativistic coldness gamma outside the supported accuracy window."""

    def __init__(self, gamma, window, context=""):
        self.gamma = gamma
        self.window = window
        msg = f"gamma={gamma!r} outside accuracy window [{window[0]!r}, {window[1]!r}]"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class BracketError(SyngeError):
    """A bracketed root search exhausted its search range.

    Carries the attempted bracket so callers can report it.
    """

    def __init__(self, message, bracket=None):
        self.bracket = bracket
        if bracket is not None:
            message += f"; attempted bracket {bracket!r}"
        super().__init__(message)


class ConvergenceError(SyngeError):
    """An adaptive scheme (quadrature, ODE step, iteration) missed its tolerance."""


class AccuracyWindowWarning(UserWarning):
    """Evaluation outside the documented accuracy window; result not certified."""
