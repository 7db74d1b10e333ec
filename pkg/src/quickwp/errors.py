"""Exception hierarchy shared by all quickwp modules."""


class WPError(Exception):
    """Base class for every error raised by quickwp."""


class DimensionMismatch(WPError, ValueError):
    pass


class ModulusMismatch(WPError, ValueError):
    pass


class NotUnimodular(WPError, ValueError):
    """A matrix that should lie in GL_d(Z) has determinant other than +1 or -1."""


class FormatError(WPError, ValueError):
    """Malformed generator file or matrix literal."""


class ConventionViolation(WPError, ValueError):
    """Generator set contains Id, a duplicate, or a matrix together with its inverse."""


class ParseError(WPError, ValueError):
    """Bad token in a textual word."""


class PreconditionViolation(WPError, ValueError):
    """Modulus too small for the Cayley-graph chain to be well defined."""


class BudgetExceeded(WPError, RuntimeError):
    """A state, spectrum or enumeration budget was exhausted."""


class InvariantViolation(WPError, AssertionError):
    """A proven bound failed numerically; indicates a bug, not bad input."""
