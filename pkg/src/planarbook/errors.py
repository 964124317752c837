class PlanarBookError(Exception):
    """Base class for all errors raised by planarbook."""


class InvalidArgument(PlanarBookError, ValueError):
    """A parameter is out of range or malformed."""


class InvalidCurve(PlanarBookError, ValueError):
    """A word does not describe an embedded essential curve or arc."""
