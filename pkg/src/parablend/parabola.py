"""Parabolic arcs through point triples and their chord parameter maps.

Three ordered points (a, b, c) define a plane parabola: its chord runs from
a to c and it passes through b.  Writing dist for the distance travelled
along the chord from a, the arc is

    point(dist) = a + (dist / chord_length) * (c - a)
                  + quad_coeff * dist * (chord_length - dist) * offset_dir

where offset_dir is the perpendicular from b's chord foot up to b, and
quad_coeff is fixed so the arc actually hits b at the foot's abscissa.  When
b sits on the chord the quadratic term vanishes and the arc degenerates to
the straight line through a and c.

A ChordMap is the affine change of variable that lets a neighbouring
segment, parameterised by arclength t along its own chord, address this
arc's abscissa.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateChord, IllConditionedTriple

__all__ = [
    "DEFAULT_COLLINEAR_TOL",
    "FOOT_FRACTION_GUARD",
    "ParabolicArc",
    "ChordMap",
    "as_point",
    "foot_fraction",
    "build_arc",
    "chord_map_forward",
    "chord_map_backward",
]

DEFAULT_COLLINEAR_TOL = 1e-9

# Feet closer to a chord end than this fraction give unusably large
# quadratic coefficients; treat the triple as an input error.
FOOT_FRACTION_GUARD = 1e-6


def as_point(p) -> np.ndarray:
    """Coerce to a float 3-vector, rejecting bad shapes and non-finite values."""
    a = np.asarray(p, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("point has a non-finite coordinate")
    return a


def foot_fraction(a, b, c) -> float:
    """Fraction along the chord a -> c at which the perpendicular from b lands.

    0 means the foot is at a, 1 at c; values outside [0, 1] are returned
    as-is.  Raises DegenerateChord when a and c coincide.
    """
    a, b, c = as_point(a), as_point(b), as_point(c)
    chord = c - a
    d2 = float(chord @ chord)
    if d2 == 0.0:
        raise DegenerateChord("chord endpoints coincide")
    return float((b - a) @ chord) / d2


@dataclass(frozen=True, eq=False)
class ParabolicArc:
    """Plane parabola in chord/offset form, or its straight-line degenerate.

    The three offset fields are None exactly when the arc is a line.
    """

    start: np.ndarray
    end: np.ndarray
    chord_length: float
    foot_fraction: float | None = None
    quad_coeff: float | None = None
    offset_dir: np.ndarray | None = None

    @classmethod
    def line(cls, start, end) -> "ParabolicArc":
        """Straight chord from start to end."""
        start, end = as_point(start), as_point(end)
        d = float(np.linalg.norm(end - start))
        if d == 0.0:
            raise DegenerateChord("chord endpoints coincide")
        return cls(start=start, end=end, chord_length=d)

    @property
    def is_line(self) -> bool:
        return self.offset_dir is None

    def point_at(self, dist: float) -> np.ndarray:
        """Point at chord abscissa `dist`.

        `dist` may lie outside [0, chord_length]; the arc extends smoothly.
        """
        p = self.start + (dist / self.chord_length) * (self.end - self.start)
        if self.offset_dir is not None:
            p = p + (self.quad_coeff * dist * (self.chord_length - dist)) * self.offset_dir
        return p

    def derivative_at(self, dist: float) -> np.ndarray:
        """d point / d dist at chord abscissa `dist`."""
        v = (self.end - self.start) / self.chord_length
        if self.offset_dir is not None:
            v = v + (self.quad_coeff * (self.chord_length - 2.0 * dist)) * self.offset_dir
        return v


def build_arc(a, b, c, tol_collinear: float = DEFAULT_COLLINEAR_TOL) -> ParabolicArc:
    """Arc through the ordered triple (a, b, c), chorded from a to c.

    Returns the straight-line degenerate when b sits on the chord within
    tol_collinear * chord_length.  Raises DegenerateChord for coincident
    points and IllConditionedTriple when b is off the chord but its foot
    falls on or beyond a chord end.
    """
    a, b, c = as_point(a), as_point(b), as_point(c)
    chord = c - a
    d2 = float(chord @ chord)
    if d2 == 0.0:
        raise DegenerateChord("chord endpoints coincide")
    if float((b - a) @ (b - a)) == 0.0 or float((c - b) @ (c - b)) == 0.0:
        raise DegenerateChord("middle point coincides with a chord endpoint")
    d = math.sqrt(d2)
    x = float((b - a) @ chord) / d2
    offset = b - (a + x * chord)
    if float(np.linalg.norm(offset)) <= tol_collinear * d:
        return ParabolicArc(start=a, end=c, chord_length=d)
    if x <= FOOT_FRACTION_GUARD or x >= 1.0 - FOOT_FRACTION_GUARD:
        raise IllConditionedTriple(
            f"middle point projects at fraction {x:.6g} of the chord"
        )
    quad = 1.0 / (d2 * x * (1.0 - x))
    return ParabolicArc(
        start=a,
        end=c,
        chord_length=d,
        foot_fraction=x,
        quad_coeff=quad,
        offset_dir=offset,
    )


@dataclass(frozen=True)
class ChordMap:
    """Affine map t -> intercept + slope * t from a segment parameter to a
    chord abscissa."""

    intercept: float
    slope: float

    def __call__(self, t: float) -> float:
        return self.intercept + self.slope * t


def _check_triple_distinct(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> None:
    for p, q in ((a, c), (a, b), (b, c)):
        dv = q - p
        if float(dv @ dv) == 0.0:
            raise DegenerateChord("triple contains coincident points")


def chord_map_forward(a, b, c) -> ChordMap:
    """Map for a segment running b -> c, addressing the arc chorded a -> c.

    t is arclength from b along the chord b -> c; t=0 lands on the foot of b
    and t=|c-b| lands on the far chord end.
    """
    a, b, c = as_point(a), as_point(b), as_point(c)
    _check_triple_distinct(a, b, c)
    d = float(np.linalg.norm(c - a))
    t0 = float(np.linalg.norm(c - b))
    slope = float((c - b) @ (c - a)) / (d * t0)
    intercept = foot_fraction(a, b, c) * d
    return ChordMap(intercept=intercept, slope=slope)


def chord_map_backward(a, b, c) -> ChordMap:
    """Map for a segment running a -> b, addressing the arc chorded a -> c.

    t is arclength from a along the chord a -> b; t=0 lands on the near
    chord end and t=|b-a| lands on the foot of b.
    """
    a, b, c = as_point(a), as_point(b), as_point(c)
    _check_triple_distinct(a, b, c)
    d = float(np.linalg.norm(c - a))
    t0 = float(np.linalg.norm(b - a))
    slope = float((b - a) @ (c - a)) / (d * t0)
    return ChordMap(intercept=0.0, slope=slope)
