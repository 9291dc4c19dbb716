"""Dissections of the regular 2n-gon by its side-parallel diagonals."""

from .errors import (
    AmbiguousClustering,
    GeometryError,
    MissingGraph,
    NumericalDegeneracy,
    OrbitMismatch,
    SymmetryViolation,
    TraversalIncomplete,
)
from .geom import (
    DEFAULT_FUZZ,
    DEFAULT_TOL,
    ParamClass,
    Params,
    Point2,
    Segment,
    Tolerance,
    classify_param,
    intersect,
    point_at,
    split_at_params,
)
from .polygon import DiagonalCensus, PolygonSpec, base_segments, corners, diagonal_census
from .arrangement import (
    CountSummary,
    cluster_endpoints,
    count_vertices,
    counts,
    split_all,
    split_all_fast,
)
from .planar import (
    FaceRecord,
    OrbitCensus,
    PlanarGraph,
    build_graph,
    enumerate_faces,
    face_vertices,
    orbit_census,
)
from .render import RenderOptions, render_svg

__version__ = "0.1.0"

__all__ = [
    "AmbiguousClustering",
    "GeometryError",
    "MissingGraph",
    "NumericalDegeneracy",
    "OrbitMismatch",
    "SymmetryViolation",
    "TraversalIncomplete",
    "DEFAULT_FUZZ",
    "DEFAULT_TOL",
    "ParamClass",
    "Params",
    "Point2",
    "Segment",
    "Tolerance",
    "classify_param",
    "intersect",
    "point_at",
    "split_at_params",
    "DiagonalCensus",
    "PolygonSpec",
    "base_segments",
    "corners",
    "diagonal_census",
    "CountSummary",
    "cluster_endpoints",
    "count_vertices",
    "counts",
    "split_all",
    "split_all_fast",
    "FaceRecord",
    "OrbitCensus",
    "PlanarGraph",
    "build_graph",
    "enumerate_faces",
    "face_vertices",
    "orbit_census",
    "RenderOptions",
    "render_svg",
]
