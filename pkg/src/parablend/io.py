"""File formats: point lists as CSV, nets as JSON, meshes as Wavefront OBJ.

All numeric output uses 17 significant digits, enough to round-trip a double
exactly, so writing and re-reading a geometry reproduces it bit for bit.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import DimensionMismatch, ParseError
from .parabola import DEFAULT_COLLINEAR_TOL
from .surface import Mesh, PatchScheme, SurfaceNet

__all__ = [
    "read_points",
    "write_polyline_csv",
    "read_net",
    "write_net",
    "write_mesh_obj",
]


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def read_points(path) -> np.ndarray:
    """Read an (n, 3) point sequence from a CSV file.

    One point per line as `x,y,z`.  Blank lines and lines starting with `#`
    are skipped.  Raises ParseError with the offending line number.
    """
    points = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(",")
            if len(parts) != 3:
                raise ParseError(
                    f"expected 3 comma-separated values, got {len(parts)}",
                    line=lineno,
                )
            try:
                xyz = [float(part) for part in parts]
            except ValueError:
                raise ParseError(f"not a number in {line!r}", line=lineno) from None
            if not all(math.isfinite(v) for v in xyz):
                raise ParseError("non-finite coordinate", line=lineno)
            points.append(xyz)
    return np.asarray(points, dtype=float).reshape(-1, 3)


def write_polyline_csv(points, path) -> None:
    """Write an (n, 3) point sequence as `x,y,z` lines."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise ValueError(f"expected an (n, 3) array, got shape {pts.shape}")
    with open(path, "w", encoding="utf-8") as handle:
        for p in pts:
            handle.write(f"{_fmt(p[0])},{_fmt(p[1])},{_fmt(p[2])}\n")


def read_net(path, tol_collinear: float = DEFAULT_COLLINEAR_TOL) -> SurfaceNet:
    """Read and validate a surface net from a JSON file.

    Layout: `{"rows": R, "cols": C, "points": [[x, y, z], ...]}` with the
    points flattened row-major, row 0 first.  Degenerate nets raise the
    geometry errors of SurfaceNet; malformed documents raise ParseError or
    DimensionMismatch.
    """
    with open(path, encoding="utf-8") as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    for key in ("rows", "cols", "points"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    rows, cols = doc["rows"], doc["cols"]
    for name, value in (("rows", rows), ("cols", cols)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise ParseError(f"{name} must be a positive integer")
    raw = doc["points"]
    if not isinstance(raw, list):
        raise ParseError("points must be an array")
    if len(raw) != rows * cols:
        raise DimensionMismatch(
            f"expected {rows} x {cols} = {rows * cols} points, got {len(raw)}"
        )
    pts = np.empty((rows * cols, 3))
    for k, entry in enumerate(raw):
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise DimensionMismatch(f"point {k} must have exactly 3 coordinates")
        try:
            pts[k] = [float(v) for v in entry]
        except (TypeError, ValueError):
            raise ParseError(f"point {k} has a non-numeric coordinate") from None
    if not np.all(np.isfinite(pts)):
        raise ParseError("net contains a non-finite coordinate")
    return SurfaceNet(pts.reshape(rows, cols, 3), tol_collinear)


def write_net(net, path) -> None:
    """Write a net (SurfaceNet or (rows, cols, 3) array) in the JSON layout
    read_net expects."""
    pts = net.points if isinstance(net, SurfaceNet) else np.asarray(net, dtype=float)
    if pts.ndim != 3 or pts.shape[2] != 3:
        raise ValueError(f"expected a (rows, cols, 3) array, got shape {pts.shape}")
    rows, cols = pts.shape[:2]
    flat = pts.reshape(-1, 3)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("{\n")
        handle.write(f'  "rows": {rows},\n')
        handle.write(f'  "cols": {cols},\n')
        handle.write('  "points": [\n')
        last = len(flat) - 1
        for k, p in enumerate(flat):
            sep = "," if k < last else ""
            handle.write(f"    [{_fmt(p[0])}, {_fmt(p[1])}, {_fmt(p[2])}]{sep}\n")
        handle.write("  ]\n}\n")


def write_mesh_obj(mesh: Mesh, path, scheme=PatchScheme.AVERAGE) -> None:
    """Write a quad mesh as Wavefront OBJ with 1-based face indices."""
    name = scheme.value if isinstance(scheme, PatchScheme) else str(scheme)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("# parablend quad mesh\n")
        handle.write(f"# scheme: {name}\n")
        for v in mesh.vertices:
            handle.write(f"v {_fmt(v[0])} {_fmt(v[1])} {_fmt(v[2])}\n")
        for face in mesh.faces:
            handle.write("f " + " ".join(str(int(i) + 1) for i in face) + "\n")
