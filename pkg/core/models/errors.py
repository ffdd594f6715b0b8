"""Exception hierarchy for the planar graph toolkit."""


class PlanarGraphError(Exception):
    """Base class for every domain error raised by the toolkit."""


class ConfigurationError(PlanarGraphError):
    """Invalid or missing configuration."""


# Construction and validation

class InconsistentRotation(PlanarGraphError):
    """Neighbor lists disagree (u lists v but v does not list u)."""


class NotTriangulation(PlanarGraphError):
    """A traced face has length other than 3 or m != 3n - 6."""


class Disconnected(PlanarGraphError):
    """The graph is not connected."""


class NotPlanar(PlanarGraphError):
    """The edge list admits no planar embedding."""


class NotMaximal(PlanarGraphError):
    """The planar graph is not a triangulation."""


class BadFormat(PlanarGraphError):
    """Malformed graph6 (or other codec) input."""


# Surgery

class UnknownVertex(PlanarGraphError):
    """Vertex id is not present in the graph."""


class UnknownFace(PlanarGraphError):
    """The given vertex triple is not a traced face."""


class NonTriangularFace(PlanarGraphError):
    """The given face is not a triangle."""


class OrderTooSmall(PlanarGraphError):
    """The operation needs a larger graph."""


class AdjacentPair(PlanarGraphError):
    """Identification requested for two adjacent vertices."""


class NoCommonFace(PlanarGraphError):
    """Identification requested for two vertices that share no face."""


# Coloring

class BudgetBelowChromatic(PlanarGraphError):
    """Color budget smaller than the chromatic number."""


class StartNotBichromatic(PlanarGraphError):
    """Kempe chain start vertex is not colored with one of the chain colors."""


class AnchorsNotCoordinated(PlanarGraphError):
    """Some partition merges two anchors or uses fewer than k classes."""


class NotFourColorable(PlanarGraphError):
    """The graph has no 4-coloring."""


class NotProper(PlanarGraphError):
    """The coloring assigns equal colors to adjacent vertices."""


# Chromatic polynomials

class OrderTooLarge(PlanarGraphError):
    """Graph exceeds the configured polynomial order cap."""


class WrongDegree(PlanarGraphError):
    """The selected vertex has the wrong degree for the operation."""


class NotEmptyQuad(PlanarGraphError):
    """The quadrilateral is not two faces sharing its diagonal."""


class NoDiagonal(PlanarGraphError):
    """The quadrilateral diagonal is not an edge."""


# Wheel operations

class NoValidPair(PlanarGraphError):
    """No link pair contracts to a simple triangulation."""


class BadSite(PlanarGraphError):
    """Extension site is not a face, path or funnel of the graph."""


class CannotReachMaximal(PlanarGraphError):
    """Colored contraction cannot reach a triangulation by any merge order."""


class TraceMismatch(PlanarGraphError):
    """Recover-extension applied to a graph the step was not recorded on."""


class ReductionStalled(AssertionError):
    """Internal invariant broken: a triangulation larger than K3 has no contractible vertex.

    Not a domain error; kept outside the PlanarGraphError hierarchy.
    """


# Recursive graphs

class BadPrefix(PlanarGraphError):
    """Color sequence does not start with the fixed prefix."""


class NoLegalFace(PlanarGraphError):
    """A color sequence symbol admits no insertion face."""


class NotTwoTwoFwf(PlanarGraphError):
    """The graph is not a (2,2)-FWF graph."""


class NoAlternative(PlanarGraphError):
    """No second 4-coloring partition was found."""


# Corpus

class CapExceeded(PlanarGraphError):
    """Requested order exceeds the configured cap."""


class CorpusIncomplete(PlanarGraphError):
    """The corpus does not cover the orders a check needs."""
