"""Numerical certification of the continuity guarantees on user data.

check_curve measures what the construction promises for curves: control
points reproduced, tangent directions continuous across junctions, every
span exactly cubic.  check_net measures the surface promises: adjacent
patches meeting point-for-point, the two blend schemes coinciding on network
lines, and tangent planes continuous across patch boundaries.  Both return a
CheckReport whose entries render as text or as stable `key=value` lines.

Positions are judged relative to the geometry's bounding-box diagonal, so
the verdicts are scale-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curve import BlendedCurve
from .errors import GeometryError
from .surface import PatchScheme, SurfaceNet, eval_patch, patch_footprint

__all__ = [
    "CheckReport",
    "check_curve",
    "check_net",
    "patch_normal",
    "boundary_normal_angle",
    "JUNCTION_ANGLE_TOL",
    "NODE_ERROR_TOL",
    "CUBIC_RESIDUAL_TOL",
    "POSITION_GAP_TOL",
    "NORMAL_ANGLE_TOL",
]

JUNCTION_ANGLE_TOL = 1e-7  # radians between tangent directions at a junction
NODE_ERROR_TOL = 1e-9  # relative to 1 + |control point|
CUBIC_RESIDUAL_TOL = 1e-9  # degree-3 fit residual relative to chord length
POSITION_GAP_TOL = 1e-9  # boundary/network-line gaps relative to bbox diagonal
NORMAL_ANGLE_TOL = 1e-3  # radians between one-sided boundary normals

_FRACTIONS = (0.2, 0.4, 0.6, 0.8)  # fixed probe stations: reports are reproducible
_FD_STEP = 1e-4


def _angle(u, v) -> float:
    return math.atan2(float(np.linalg.norm(np.cross(u, v))), float(u @ v))


def _fmt_value(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one certification run: ordered entries plus a verdict."""

    kind: str
    entries: tuple
    passed: bool

    def to_kv(self) -> str:
        """One `key=value` per line; keys are stable identifiers."""
        lines = [f"kind={self.kind}"]
        lines += [f"{key}={_fmt_value(value)}" for key, value in self.entries]
        lines.append(f"result={'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        lines = [f"{self.kind} continuity check"]
        lines += [f"  {key} = {_fmt_value(value)}" for key, value in self.entries]
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "kv":
            return self.to_kv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown report format {fmt!r}")


def _bbox_diagonal(points) -> float:
    flat = np.asarray(points, dtype=float).reshape(-1, 3)
    return float(np.linalg.norm(flat.max(axis=0) - flat.min(axis=0)))


def check_curve(
    curve: BlendedCurve,
    junction_tol: float = JUNCTION_ANGLE_TOL,
    node_tol: float = NODE_ERROR_TOL,
    cubic_tol: float = CUBIC_RESIDUAL_TOL,
) -> CheckReport:
    """Certify a blended curve: node reproduction, junction tangent
    directions, cubic order of every span."""
    entries = [("points", len(curve.points)), ("segments", len(curve.segments))]

    node_err = 0.0
    for i, seg in enumerate(curve.segments):
        for u, node in ((0.0, curve.points[i]), (1.0, curve.points[i + 1])):
            gap = np.max(np.abs(seg.point_at_fraction(u) - node))
            node_err = max(node_err, gap / (1.0 + float(np.max(np.abs(node)))))

    max_angle = 0.0
    for i in range(len(curve.segments) - 1):
        outgoing = curve.segments[i].tangent_at_fraction(1.0)
        incoming = curve.segments[i + 1].tangent_at_fraction(0.0)
        angle = _angle(outgoing, incoming)
        entries.append((f"junction_{i}_angle_rad", angle))
        max_angle = max(max_angle, angle)

    u = np.linspace(0.0, 1.0, 12)
    worst_fit = 0.0
    for seg in curve.segments:
        samples = np.array([seg.point_at_fraction(v) for v in u])
        residual = 0.0
        for k in range(3):
            fit = np.polynomial.Polynomial.fit(u, samples[:, k], 3)
            residual = max(residual, float(np.abs(fit(u) - samples[:, k]).max()))
        worst_fit = max(worst_fit, residual / seg.chord_length)

    entries += [
        ("max_junction_angle_rad", max_angle),
        ("junction_angle_tol_rad", junction_tol),
        ("max_node_error_rel", node_err),
        ("node_error_tol_rel", node_tol),
        ("max_cubic_residual_rel", worst_fit),
        ("cubic_residual_tol_rel", cubic_tol),
    ]
    passed = max_angle <= junction_tol and node_err <= node_tol and worst_fit <= cubic_tol
    return CheckReport(kind="curve", entries=tuple(entries), passed=passed)


def patch_normal(
    net: SurfaceNet,
    patch_i: int,
    patch_j: int,
    x: float,
    y: float,
    scheme: PatchScheme = PatchScheme.AVERAGE,
    step: float = _FD_STEP,
) -> np.ndarray:
    """Unit surface normal by central differences, one-sided at patch edges."""
    x_lo, x_hi = max(x - step, 0.0), min(x + step, 1.0)
    y_lo, y_hi = max(y - step, 0.0), min(y + step, 1.0)
    du = eval_patch(net, patch_i, patch_j, x_hi, y, scheme) - eval_patch(
        net, patch_i, patch_j, x_lo, y, scheme
    )
    dv = eval_patch(net, patch_i, patch_j, x, y_hi, scheme) - eval_patch(
        net, patch_i, patch_j, x, y_lo, scheme
    )
    normal = np.cross(du, dv)
    length = np.linalg.norm(normal)
    if length == 0.0:
        raise GeometryError(
            f"surface normal undefined on patch ({patch_i},{patch_j}) at ({x},{y})"
        )
    return normal / length


def boundary_normal_angle(
    net: SurfaceNet,
    axis: str,
    line: int,
    across: int,
    fraction: float,
    scheme: PatchScheme = PatchScheme.AVERAGE,
    step: float = _FD_STEP,
) -> float:
    """Angle between the one-sided normals of the two patches meeting at an
    interior patch boundary.

    axis "x": boundary on the constant-x network line `line`, between patch
    columns line-1 and line, measured at patch row `across`, height
    `fraction`.  axis "y": the transposed arrangement.
    """
    if axis == "x":
        left = patch_normal(net, line - 1, across, 1.0 - step, fraction, scheme, step)
        right = patch_normal(net, line, across, step, fraction, scheme, step)
    elif axis == "y":
        left = patch_normal(net, across, line - 1, fraction, 1.0 - step, scheme, step)
        right = patch_normal(net, across, line, fraction, step, scheme, step)
    else:
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
    return _angle(left, right)


def check_net(
    net: SurfaceNet,
    scheme: PatchScheme = PatchScheme.AVERAGE,
    position_tol: float = POSITION_GAP_TOL,
    normal_tol: float = NORMAL_ANGLE_TOL,
    step: float = _FD_STEP,
) -> CheckReport:
    """Certify a surface net: seam agreement, scheme coincidence on network
    lines, tangent-plane continuity across interior patch boundaries.

    The position tolerance is relative to the net's bounding-box diagonal.
    Normal-angle maxima are reported for all three schemes; the verdict uses
    the selected one.
    """
    patches_x, patches_y = net.cols - 1, net.rows - 1
    scale = _bbox_diagonal(net.points)
    schemes = list(PatchScheme)
    entries = [
        ("rows", net.rows),
        ("cols", net.cols),
        ("scheme", scheme.value),
        ("scale", scale),
    ]

    sizes = sorted(
        {
            len(patch_footprint(net, pi, pj))
            for pi in range(patches_x)
            for pj in range(patches_y)
        }
    )
    entries.append(("footprint_sizes", ",".join(str(s) for s in sizes)))

    # L vs M wherever they must coincide: every patch edge is a network line
    coincidence = 0.0
    for pi in range(patches_x):
        for pj in range(patches_y):
            for frac in _FRACTIONS:
                for edge in (0.0, 1.0):
                    at = (
                        eval_patch(net, pi, pj, edge, frac, PatchScheme.L)
                        - eval_patch(net, pi, pj, edge, frac, PatchScheme.M),
                        eval_patch(net, pi, pj, frac, edge, PatchScheme.L)
                        - eval_patch(net, pi, pj, frac, edge, PatchScheme.M),
                    )
                    coincidence = max(coincidence, *(np.max(np.abs(d)) for d in at))
    entries.append(("scheme_coincidence_gap", coincidence))

    worst_gap = 0.0
    normal_max = dict.fromkeys(schemes, 0.0)

    def measure_boundary(axis, line, across):
        gap = angle_here = 0.0
        for frac in _FRACTIONS:
            for s in schemes:
                if axis == "x":
                    a = eval_patch(net, line - 1, across, 1.0, frac, s)
                    b = eval_patch(net, line, across, 0.0, frac, s)
                else:
                    a = eval_patch(net, across, line - 1, frac, 1.0, s)
                    b = eval_patch(net, across, line, frac, 0.0, s)
                gap = max(gap, float(np.max(np.abs(a - b))))
                angle = boundary_normal_angle(net, axis, line, across, frac, s, step)
                normal_max[s] = max(normal_max[s], angle)
                if s is scheme:
                    angle_here = max(angle_here, angle)
        return gap, angle_here

    for line in range(1, patches_x):
        for q in range(patches_y):
            gap, angle = measure_boundary("x", line, q)
            worst_gap = max(worst_gap, gap)
            entries.append((f"boundary_x{line}_row{q}_gap", gap))
            entries.append((f"boundary_x{line}_row{q}_normal_angle_rad", angle))
    for line in range(1, patches_y):
        for p in range(patches_x):
            gap, angle = measure_boundary("y", line, p)
            worst_gap = max(worst_gap, gap)
            entries.append((f"boundary_y{line}_col{p}_gap", gap))
            entries.append((f"boundary_y{line}_col{p}_normal_angle_rad", angle))

    entries += [
        ("max_boundary_gap", worst_gap),
        ("position_gap_tol", position_tol * scale),
        ("max_normal_angle_rad_l", normal_max[PatchScheme.L]),
        ("max_normal_angle_rad_m", normal_max[PatchScheme.M]),
        ("max_normal_angle_rad_average", normal_max[PatchScheme.AVERAGE]),
        ("max_normal_angle_rad", normal_max[scheme]),
        ("normal_angle_tol_rad", normal_tol),
    ]
    passed = (
        worst_gap <= position_tol * scale
        and coincidence <= position_tol * scale
        and normal_max[scheme] <= normal_tol
    )
    return CheckReport(kind="net", entries=tuple(entries), passed=passed)
