"""Surface patches interpolating a rectangular net of points.

A net point sits at (row j, column i); x in [0, 1] crosses one column
interval of a patch and y crosses one row interval.  To evaluate inside a
patch, sample every neighbouring row curve at the patch's own span and
fraction x, run a blended curve through the sampled points and read it at
fraction y.  That is the constant-x route (scheme L).  Swapping the roles of
rows and columns gives the constant-y route (scheme M), and AVERAGE takes the
mean of the two.  All three routes agree on the net's own network lines and
reproduce the net points themselves; inside a patch L and M genuinely differ.

An interior patch is controlled by the 4 x 4 block of net points around it;
patches on a net edge see a 3 x 4 block and corner patches a 3 x 3 block.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .curve import BlendedCurve, CurveSegment, build_curve
from .errors import DegenerateChord, GeometryError, NetTooNarrow, ParameterOutOfRange
from .parabola import DEFAULT_COLLINEAR_TOL

__all__ = [
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
]


class PatchScheme(Enum):
    """How a patch point is produced."""

    L = "l"  # from the constant-x curve run across the rows
    M = "m"  # from the constant-y curve run across the columns
    AVERAGE = "average"  # mean of both routes

    @classmethod
    def from_string(cls, name: str) -> "PatchScheme":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown scheme {name!r}; expected l, m or average") from None


class SurfaceNet:
    """Immutable rectangular net of points with cached row and column curves.

    `points` has shape (rows, cols, 3); `points[j, i]` is the point on row j,
    column i.  Rows must be at least 2 in both directions and grid neighbours
    must be distinct.
    """

    def __init__(self, points, tol_collinear: float = DEFAULT_COLLINEAR_TOL):
        pts = np.asarray(points, dtype=float)
        if pts.ndim != 3 or pts.shape[2] != 3:
            raise ValueError(f"expected a (rows, cols, 3) array, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("net contains a non-finite coordinate")
        rows, cols = pts.shape[:2]
        if rows < 2 or cols < 2:
            raise NetTooNarrow(f"net must be at least 2 x 2, got {rows} x {cols}")
        gaps = np.linalg.norm(np.diff(pts, axis=1), axis=2)
        if not np.all(gaps > 0.0):
            j, i = np.argwhere(gaps == 0.0)[0]
            raise DegenerateChord(f"net points ({j},{i}) and ({j},{i + 1}) coincide")
        gaps = np.linalg.norm(np.diff(pts, axis=0), axis=2)
        if not np.all(gaps > 0.0):
            j, i = np.argwhere(gaps == 0.0)[0]
            raise DegenerateChord(f"net points ({j},{i}) and ({j + 1},{i}) coincide")
        self._points = pts.copy()
        self._points.setflags(write=False)
        self.tol_collinear = float(tol_collinear)
        self._row_curves: dict[int, BlendedCurve] = {}
        self._col_curves: dict[int, BlendedCurve] = {}

    @property
    def points(self) -> np.ndarray:
        return self._points

    @property
    def rows(self) -> int:
        return self._points.shape[0]

    @property
    def cols(self) -> int:
        return self._points.shape[1]

    def point(self, row: int, col: int) -> np.ndarray:
        return self._points[row, col]

    def row_curve(self, row: int) -> BlendedCurve:
        """Blended curve through row `row`, built once and cached."""
        curve = self._row_curves.get(row)
        if curve is None:
            try:
                curve = build_curve(self._points[row], self.tol_collinear)
            except GeometryError as exc:
                raise type(exc)(f"row {row}: {exc}") from exc
            self._row_curves[row] = curve
        return curve

    def col_curve(self, col: int) -> BlendedCurve:
        """Blended curve through column `col`, built once and cached."""
        curve = self._col_curves.get(col)
        if curve is None:
            try:
                curve = build_curve(self._points[:, col], self.tol_collinear)
            except GeometryError as exc:
                raise type(exc)(f"column {col}: {exc}") from exc
            self._col_curves[col] = curve
        return curve


def _check_patch(net: SurfaceNet, patch_i: int, patch_j: int) -> None:
    if not (0 <= patch_i < net.cols - 1 and 0 <= patch_j < net.rows - 1):
        raise IndexError(
            f"patch ({patch_i},{patch_j}) outside the "
            f"{net.cols - 1} x {net.rows - 1} patch grid"
        )


def _check_fraction(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ParameterOutOfRange(f"{name}={value!r} outside [0, 1]")


def _span_points(index: int, count: int) -> range:
    """Indices of the points one curve span depends on: its own two plus the
    immediate neighbour on each side, clipped at the ends."""
    return range(max(0, index - 1), min(count, index + 3))


def row_point_at(net: SurfaceNet, row: int, span: int, x: float) -> np.ndarray:
    """Point of row curve `row` at fraction x of span `span`."""
    _check_fraction("x", x)
    return net.row_curve(row).segments[span].point_at_fraction(x)


def col_point_at(net: SurfaceNet, col: int, span: int, y: float) -> np.ndarray:
    """Point of column curve `col` at fraction y of span `span`."""
    _check_fraction("y", y)
    return net.col_curve(col).segments[span].point_at_fraction(y)


def _cross_curve(points, label: str, tol_collinear: float) -> BlendedCurve:
    if len(points) < 2:
        raise NetTooNarrow(f"only {len(points)} line(s) cross the {label} direction")
    try:
        return build_curve(points, tol_collinear)
    except GeometryError as exc:
        raise type(exc)(f"{label} cross curve: {exc}") from exc


def iso_curve_l(net: SurfaceNet, patch_i: int, patch_j: int, x: float) -> CurveSegment:
    """Constant-x curve of the patch: one span running in the y direction.

    Samples the 3 or 4 nearest row curves at (span patch_i, fraction x) and
    returns the span of their blended curve that bridges the patch's own two
    rows.
    """
    _check_patch(net, patch_i, patch_j)
    gather = _span_points(patch_j, net.rows)
    sampled = [row_point_at(net, j, patch_i, x) for j in gather]
    curve = _cross_curve(sampled, "row", net.tol_collinear)
    return curve.segments[patch_j - gather.start]


def iso_curve_m(net: SurfaceNet, patch_i: int, patch_j: int, y: float) -> CurveSegment:
    """Constant-y curve of the patch: one span running in the x direction."""
    _check_patch(net, patch_i, patch_j)
    gather = _span_points(patch_i, net.cols)
    sampled = [col_point_at(net, i, patch_j, y) for i in gather]
    curve = _cross_curve(sampled, "column", net.tol_collinear)
    return curve.segments[patch_i - gather.start]


def eval_patch(
    net: SurfaceNet,
    patch_i: int,
    patch_j: int,
    x: float,
    y: float,
    scheme: PatchScheme = PatchScheme.AVERAGE,
) -> np.ndarray:
    """Surface point of patch (patch_i, patch_j) at local (x, y) in [0, 1]^2."""
    _check_patch(net, patch_i, patch_j)
    _check_fraction("x", x)
    _check_fraction("y", y)
    if scheme is PatchScheme.L:
        return iso_curve_l(net, patch_i, patch_j, x).point_at_fraction(y)
    if scheme is PatchScheme.M:
        return iso_curve_m(net, patch_i, patch_j, y).point_at_fraction(x)
    l_val = iso_curve_l(net, patch_i, patch_j, x).point_at_fraction(y)
    m_val = iso_curve_m(net, patch_i, patch_j, y).point_at_fraction(x)
    return 0.5 * l_val + 0.5 * m_val


def patch_footprint(net: SurfaceNet, patch_i: int, patch_j: int) -> frozenset:
    """Net indices (row, col) that can influence any point of the patch.

    16 points for an interior patch, 12 on a net edge, 9 in a corner.
    """
    _check_patch(net, patch_i, patch_j)
    return frozenset(
        (j, i)
        for j in _span_points(patch_j, net.rows)
        for i in _span_points(patch_i, net.cols)
    )


@dataclass(frozen=True, eq=False)
class Mesh:
    """Quad mesh: `vertices` (v, 3) floats, `faces` (f, 4) vertex indices,
    counter-clockwise when viewed along the patch normal."""

    vertices: np.ndarray
    faces: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "vertices", np.array(self.vertices, dtype=float))
        object.__setattr__(self, "faces", np.array(self.faces, dtype=np.int64))
        if self.faces.size and (
            self.faces.min() < 0 or self.faces.max() >= len(self.vertices)
        ):
            raise ValueError("face index out of range")
        self.vertices.setflags(write=False)
        self.faces.setflags(write=False)


def tessellate(
    net: SurfaceNet, resolution: int, scheme: PatchScheme = PatchScheme.AVERAGE
) -> Mesh:
    """Sample every patch on a (resolution+1)^2 grid into one shared-vertex
    quad mesh.

    Vertices on patch boundaries are computed once, so seams are exact by
    construction.  Uses whole-net cross curves, which agree with the
    per-patch evaluation bit for bit: a span of a blended curve only ever
    depends on its own two points and their immediate neighbours.
    """
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    patches_x, patches_y = net.cols - 1, net.rows - 1
    nx, ny = patches_x * resolution + 1, patches_y * resolution + 1

    def locate(g: int, patches: int) -> tuple[int, float]:
        p = min(g // resolution, patches - 1)
        return p, (g - p * resolution) / resolution

    x_lines: list[BlendedCurve] = []
    if scheme is not PatchScheme.M:
        for gx in range(nx):
            pi, x = locate(gx, patches_x)
            try:
                sampled = [row_point_at(net, j, pi, x) for j in range(net.rows)]
                x_lines.append(_cross_curve(sampled, "row", net.tol_collinear))
            except GeometryError as exc:
                raise type(exc)(f"patch column {pi}: {exc}") from exc
    y_lines: list[BlendedCurve] = []
    if scheme is not PatchScheme.L:
        for gy in range(ny):
            pj, y = locate(gy, patches_y)
            try:
                sampled = [col_point_at(net, i, pj, y) for i in range(net.cols)]
                y_lines.append(_cross_curve(sampled, "column", net.tol_collinear))
            except GeometryError as exc:
                raise type(exc)(f"patch row {pj}: {exc}") from exc

    vertices = np.empty((ny * nx, 3))
    for gy in range(ny):
        pj, y = locate(gy, patches_y)
        for gx in range(nx):
            pi, x = locate(gx, patches_x)
            if scheme is PatchScheme.L:
                v = x_lines[gx].segments[pj].point_at_fraction(y)
            elif scheme is PatchScheme.M:
                v = y_lines[gy].segments[pi].point_at_fraction(x)
            else:
                l_val = x_lines[gx].segments[pj].point_at_fraction(y)
                m_val = y_lines[gy].segments[pi].point_at_fraction(x)
                v = 0.5 * l_val + 0.5 * m_val
            vertices[gy * nx + gx] = v

    faces = np.empty(((ny - 1) * (nx - 1), 4), dtype=np.int64)
    f = 0
    for gy in range(ny - 1):
        base = gy * nx
        for gx in range(nx - 1):
            faces[f] = (base + gx, base + gx + 1, base + nx + gx + 1, base + nx + gx)
            f += 1
    return Mesh(vertices=vertices, faces=faces)
