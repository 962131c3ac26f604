"""Exception types shared across the toolkit."""


class MorphographError(Exception):
    """Base class for all errors raised by this package."""


class MissingWeights(MorphographError):
    """An operation needed node or edge weights that the graph lacks."""


class CarrierMismatch(MorphographError):
    """A field or operator chain was applied to the wrong carrier."""


class InvalidFloodingGraph(MorphographError):
    """Node and edge weights do not satisfy the flooding identities."""


class ZeroNonMinimum(MorphographError):
    """A node outside every regional minimum already carries weight 0."""


class DimensionMismatch(MorphographError):
    """Matrix shapes do not agree."""


class NoRoots(MorphographError):
    """A rooted distance computation received an empty root set."""


class DisconnectedInput(MorphographError):
    """The operation requires a connected input graph."""


class IncompleteHierarchy(MorphographError):
    """The hierarchy did not terminate in a single region."""


class MalformedImage(MorphographError):
    """PGM input could not be parsed."""


class MalformedInput(MorphographError):
    """Text graph input could not be parsed."""
