"""Exception types raised across the package."""


class TilezError(Exception):
    """Base class for every error raised by tilez."""


class EmptyTile(TilezError):
    pass


class NotFiniteIndex(TilezError):
    """Generators do not span a rank-2 subgroup."""


class ZeroVector(TilezError):
    pass


class ProportionalVectors(TilezError):
    pass


class TooFewVectors(TilezError):
    pass


class InvalidInstance(TilezError):
    """Malformed exact-cover instance."""


class BudgetExceeded(TilezError):
    """A desk-scale cap on an exponential search was exceeded."""


class NotVerifiable(TilezError):
    """Only definitive verdicts carry something to check."""


class OracleError(TilezError):
    """Base class for problems with a set oracle used by the periodizer."""


class OracleInconsistent(OracleError):
    pass


class WindowOutOfRange(OracleError):
    pass


class PromiseViolated(OracleError):
    """The oracle's set was not the tiling it claimed to be."""


class NotAPartition(OracleError):
    pass


class DocumentError(TilezError):
    """A tile, certificate or window-table document failed to parse."""
