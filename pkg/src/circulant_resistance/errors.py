"""Exception hierarchy shared by every module."""


class CirculantError(Exception):
    """Base class for all errors raised by this package."""


class InvalidJump(CirculantError, ValueError):
    """A jump offset is out of range or repeated."""


class TooSmall(CirculantError, ValueError):
    """Vertex count below 3."""


class TooLarge(CirculantError, ValueError):
    """Graph too large for dense storage."""


class Disconnected(CirculantError):
    """The graph has more than one connected component."""


class Singular(CirculantError):
    """Factorization of the grounded Laplacian failed."""


class UnsupportedN(CirculantError, ValueError):
    """Closed form requested outside its domain of validity."""


class BadPower(CirculantError, ValueError):
    """Trigonometric power sum requested with a non-positive exponent."""


class StepCapExceeded(CirculantError, RuntimeError):
    """A simulated walk ran past the per-walk step cap."""
