"""Exception types raised across the package.

Every error derives from MrbcastError so callers can catch the whole
family; the CLI maps them onto exit codes.
"""


class MrbcastError(Exception):
    """Base class for all mrbcast errors."""


class BadInterval(MrbcastError):
    """Edge interval with lo > hi, a negative bound, or a non-integer."""


class CycleDetected(MrbcastError):
    """Edge list contains a cycle (includes self-loops)."""


class Disconnected(MrbcastError):
    """Edge list does not connect all n vertices."""


class DuplicateEdge(MrbcastError):
    """The same vertex pair appears twice in the edge list."""


class UnknownVertex(MrbcastError):
    """Vertex id outside 0..n-1."""


class SameVertex(MrbcastError):
    """Two distinct vertices were required but the same one was given."""


class NotNeighbor(MrbcastError):
    """The excluded vertex is not adjacent to the query vertex."""


class ZeroRho(MrbcastError):
    """Bucket arrays need rho > 0; use the sort-based path when rho = 0."""


class IndexOutOfRange(MrbcastError):
    """Scenario index j outside 1..h_i."""


class StaleTables(MrbcastError):
    """Preprocessed tables do not match the tree/rho they are used with."""


class TooLarge(MrbcastError):
    """Brute-force oracle called above its hard size guard."""


class OutOfUniverse(MrbcastError):
    """OrderedIndex key outside 1..U."""


class BadRange(MrbcastError):
    """Malformed numeric range in generator/CLI arguments."""


class InvariantViolation(MrbcastError):
    """A structural guarantee failed at runtime (names the invariant)."""
