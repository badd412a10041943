"""Blended space curves through ordered point sequences.

Every consecutive pair of input points spans one segment.  An interior
segment evaluates the two parabolic arcs of its overlapping triples (the one
ending at the far point and the one starting at the near point) and mixes
them with weights that slide linearly from the first arc to the second as t
runs along the segment.  The first and last segment ride entirely on their
single nearest arc, and a two-point sequence degenerates to its chord.

Mixing this way makes the tangent directions of adjacent segments agree at
every junction, while each coordinate of an interior segment remains a cubic
polynomial in t.  Tangent magnitudes are not matched across junctions; the
smoothness is geometric, not parametric.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateChord,
    GeometryError,
    InsufficientPoints,
    ParameterOutOfRange,
)
from .parabola import (
    DEFAULT_COLLINEAR_TOL,
    ChordMap,
    ParabolicArc,
    build_arc,
    chord_map_backward,
    chord_map_forward,
)

__all__ = ["BlendSource", "CurveSegment", "BlendedCurve", "build_curve"]


@dataclass(frozen=True, eq=False)
class BlendSource:
    """One arc plus the map tying a segment's own parameter to its chord."""

    arc: ParabolicArc
    chord_map: ChordMap

    def point_at(self, t: float) -> np.ndarray:
        return self.arc.point_at(self.chord_map(t))

    def velocity_at(self, t: float) -> np.ndarray:
        """d point / d t; the chain rule scales the arc derivative by the
        map slope."""
        return self.arc.derivative_at(self.chord_map(t)) * self.chord_map.slope


@dataclass(frozen=True, eq=False)
class CurveSegment:
    """One span of a blended curve, from `start` to `end`.

    Interior segments carry both sources; the spans at either end of a curve
    carry exactly one and use it with constant weight.
    """

    start: np.ndarray
    end: np.ndarray
    chord_length: float
    left: BlendSource | None
    right: BlendSource | None

    def __post_init__(self):
        if self.left is None and self.right is None:
            raise ValueError("segment needs at least one blend source")

    def point_at(self, t: float) -> np.ndarray:
        """Point at parameter t, 0 <= t <= chord_length."""
        if not 0.0 <= t <= self.chord_length:
            raise ParameterOutOfRange(
                f"t={t!r} outside [0, {self.chord_length!r}]"
            )
        return self._point(t)

    def point_at_fraction(self, u: float) -> np.ndarray:
        """Point at normalized parameter u, 0 <= u <= 1."""
        if not 0.0 <= u <= 1.0:
            raise ParameterOutOfRange(f"u={u!r} outside [0, 1]")
        return self._point(u * self.chord_length)

    def tangent_at(self, t: float) -> np.ndarray:
        """d point / d t at parameter t.  Only the direction is continuous
        across a junction, not the magnitude."""
        if not 0.0 <= t <= self.chord_length:
            raise ParameterOutOfRange(
                f"t={t!r} outside [0, {self.chord_length!r}]"
            )
        return self._tangent(t)

    def tangent_at_fraction(self, u: float) -> np.ndarray:
        if not 0.0 <= u <= 1.0:
            raise ParameterOutOfRange(f"u={u!r} outside [0, 1]")
        return self._tangent(u * self.chord_length)

    def _point(self, t: float) -> np.ndarray:
        if self.left is None:
            return self.right.point_at(t)
        if self.right is None:
            return self.left.point_at(t)
        w = t / self.chord_length
        return (1.0 - w) * self.left.point_at(t) + w * self.right.point_at(t)

    def _tangent(self, t: float) -> np.ndarray:
        if self.left is None:
            return self.right.velocity_at(t)
        if self.right is None:
            return self.left.velocity_at(t)
        w = t / self.chord_length
        p = self.left.point_at(t)
        q = self.right.point_at(t)
        dp = self.left.velocity_at(t)
        dq = self.right.velocity_at(t)
        return dp + w * (dq - dp) + (q - p) / self.chord_length


@dataclass(frozen=True, eq=False)
class BlendedCurve:
    """An ordered point sequence plus the segments interpolating it."""

    points: np.ndarray
    segments: list[CurveSegment]

    def __len__(self) -> int:
        return len(self.segments)

    def sample(self, samples_per_segment: int) -> np.ndarray:
        """Evenly sample every segment at u = j/k, emitting each junction once.

        Returns (len(segments) * k + 1, 3); k=1 reproduces the input points.
        """
        if samples_per_segment < 1:
            raise ValueError("samples_per_segment must be >= 1")
        k = samples_per_segment
        out = [self.segments[0].point_at_fraction(0.0)]
        for seg in self.segments:
            for j in range(1, k + 1):
                out.append(seg.point_at_fraction(j / k))
        return np.vstack(out)


def build_curve(points, tol_collinear: float = DEFAULT_COLLINEAR_TOL) -> BlendedCurve:
    """Blended curve through `points`, an (n, 3) array-like with n >= 2.

    Consecutive points must be distinct.  Arc construction failures are
    re-raised with the index of the offending triple's middle point.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise ValueError(f"expected an (n, 3) array, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise ValueError("points contain a non-finite coordinate")
    n = len(pts)
    if n < 2:
        raise InsufficientPoints(f"need at least 2 points, got {n}")
    chords = np.linalg.norm(np.diff(pts, axis=0), axis=1)
    for i, c in enumerate(chords):
        if c == 0.0:
            raise DegenerateChord(f"points {i} and {i + 1} coincide")

    pts = pts.copy()
    pts.setflags(write=False)

    if n == 2:
        seg = CurveSegment(
            start=pts[0],
            end=pts[1],
            chord_length=float(chords[0]),
            left=None,
            right=BlendSource(ParabolicArc.line(pts[0], pts[1]), ChordMap(0.0, 1.0)),
        )
        return BlendedCurve(points=pts, segments=[seg])

    # One arc per interior point, shared by the two segments meeting there.
    arcs: dict[int, ParabolicArc] = {}
    for m in range(1, n - 1):
        try:
            arcs[m] = build_arc(pts[m - 1], pts[m], pts[m + 1], tol_collinear)
        except GeometryError as exc:
            raise type(exc)(f"triple centred at point {m}: {exc}") from exc

    segments: list[CurveSegment] = []
    for i in range(n - 1):
        left = None
        right = None
        if i >= 1:
            left = BlendSource(arcs[i], chord_map_forward(pts[i - 1], pts[i], pts[i + 1]))
        if i <= n - 3:
            right = BlendSource(arcs[i + 1], chord_map_backward(pts[i], pts[i + 1], pts[i + 2]))
        segments.append(
            CurveSegment(
                start=pts[i],
                end=pts[i + 1],
                chord_length=float(chords[i]),
                left=left,
                right=right,
            )
        )
    return BlendedCurve(points=pts, segments=segments)
