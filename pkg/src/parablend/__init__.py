"""parablend: smooth space curves and surfaces by blended parabolic arcs."""

from .errors import (
    DegenerateChord,
    DimensionMismatch,
    FormatError,
    GeometryError,
    IllConditionedTriple,
    InsufficientPoints,
    NetTooNarrow,
    ParameterOutOfRange,
    ParseError,
)
from .parabola import (
    DEFAULT_COLLINEAR_TOL,
    ChordMap,
    ParabolicArc,
    build_arc,
    chord_map_backward,
    chord_map_forward,
    foot_fraction,
)
from .curve import BlendedCurve, BlendSource, CurveSegment, build_curve
from .surface import (
    Mesh,
    PatchScheme,
    SurfaceNet,
    col_point_at,
    eval_patch,
    iso_curve_l,
    iso_curve_m,
    patch_footprint,
    row_point_at,
    tessellate,
)
from .io import read_net, read_points, write_mesh_obj, write_net, write_polyline_csv
from .checks import (
    CheckReport,
    boundary_normal_angle,
    check_curve,
    check_net,
    patch_normal,
)

__version__ = "0.1.0"

__all__ = [
    "GeometryError",
    "DegenerateChord",
    "IllConditionedTriple",
    "InsufficientPoints",
    "ParameterOutOfRange",
    "NetTooNarrow",
    "FormatError",
    "ParseError",
    "DimensionMismatch",
    "DEFAULT_COLLINEAR_TOL",
    "ParabolicArc",
    "ChordMap",
    "foot_fraction",
    "build_arc",
    "chord_map_forward",
    "chord_map_backward",
    "BlendSource",
    "CurveSegment",
    "BlendedCurve",
    "build_curve",
    "SurfaceNet",
    "PatchScheme",
    "Mesh",
    "row_point_at",
    "col_point_at",
    "iso_curve_l",
    "iso_curve_m",
    "eval_patch",
    "patch_footprint",
    "tessellate",
    "read_points",
    "write_polyline_csv",
    "read_net",
    "write_net",
    "write_mesh_obj",
    "CheckReport",
    "check_curve",
    "check_net",
    "patch_normal",
    "boundary_normal_angle",
    "__version__",
]
