"""Exception types shared across the package."""


class SimpdegError(Exception):
    """Base class for every error raised by this package."""


class InvalidSimplex(SimpdegError):
    """A vertex list does not describe a valid simplex (duplicates, empty, ...)."""


class DimensionError(SimpdegError):
    """A dimension or index parameter is outside its admissible range."""


class NotInComplex(SimpdegError):
    """The queried simplex is not stored in the complex."""


class ModeError(SimpdegError):
    """The operation requires the other storage mode (closed vs explicit)."""


class ParamError(SimpdegError):
    """Degree parameters violate their ordering constraints."""


class FormatError(SimpdegError):
    """A dataset file is malformed; the message carries the offending line."""


class EmptyDataset(SimpdegError):
    """An aggregate was requested over an empty population."""


class IoError(SimpdegError):
    """An output path could not be written."""
