"""
Errors module for the Small World toolkit.
Every domain error derives from SmallWorldError and from the matching builtin.
"""


class SmallWorldError(Exception):
    """Base class for all Small World errors"""


class GraphSizeError(SmallWorldError, ValueError):
    """A graph needs at least one node"""


class LoopInsertError(SmallWorldError, ValueError):
    """Self-loops are implicit and cannot be inserted"""


class DuplicateEdgeError(SmallWorldError, ValueError):
    """The undirected edge is already present"""


class NodeIndexError(SmallWorldError, IndexError):
    """A node id outside 0..n-1"""


class NotConnectedError(SmallWorldError, ValueError):
    """The operation is only defined on connected graphs"""


class WalkLengthError(SmallWorldError, ValueError):
    """Walk lengths start at 1"""


class PairError(SmallWorldError, ValueError):
    """Nodes of a pair (or of an experiment) must be distinct"""


class DimensionError(SmallWorldError, ValueError):
    """A probability vector does not match the graph"""


class ParameterError(SmallWorldError, ValueError):
    """An arc count or another parameter is out of range"""


class ParityError(ParameterError):
    """Arc count minus node count must be even"""


class OverfullError(ParameterError):
    """More undirected edges requested than node pairs exist"""


class InsufficientDataError(SmallWorldError, ValueError):
    """Not enough degree bins to fit a line"""


class DegenerateDensityError(SmallWorldError, ValueError):
    """The graph has no non-loop edges to compare against"""


class DomainError(SmallWorldError, ValueError):
    """An argument outside the domain of a formula"""


class EdgeListFormatError(SmallWorldError, ValueError):
    """Malformed edge-list file"""
