"""Exception types raised by the counting pipeline."""


class GeometryError(Exception):
    """Base class for numeric or structural failures while counting."""


class NumericalDegeneracy(GeometryError):
    """A split produced a fragment shorter than the point tolerance."""


class AmbiguousClustering(GeometryError):
    """Vertex clusters are not cleanly separated from the fuzz radius."""


class SymmetryViolation(GeometryError):
    """A count does not decompose into whole rotational orbits."""


class TraversalIncomplete(GeometryError):
    """Face traversal could not consume every half-edge exactly once."""


class OrbitMismatch(GeometryError):
    """A rotated face centroid does not land on exactly one face."""


class MissingGraph(ValueError):
    """A render option that needs face data was used without a graph."""
