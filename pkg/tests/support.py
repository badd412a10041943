"""Shared helpers for the test suite: seeded random geometry and small oracles."""

import math

import numpy as np

from parablend import DegenerateChord, foot_fraction


def angle_between(u, v) -> float:
    """Unsigned angle between two vectors, in radians."""
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    return math.atan2(float(np.linalg.norm(np.cross(u, v))), float(u @ v))


def random_rotation(rng) -> np.ndarray:
    """Haar-ish random proper rotation matrix."""
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0.0:
        q[:, 0] = -q[:, 0]
    return q


def random_nondegenerate_triples(rng, count, lo=-2.0, hi=2.0, margin=0.05):
    """Random triples whose chord foot fraction lies in (margin, 1 - margin)
    and whose middle point is well off the chord."""
    out = []
    while len(out) < count:
        a, b, c = rng.uniform(lo, hi, (3, 3))
        try:
            x = foot_fraction(a, b, c)
        except DegenerateChord:
            continue
        if not margin < x < 1.0 - margin:
            continue
        chord = c - a
        d = np.linalg.norm(chord)
        offset = b - (a + x * chord)
        if np.linalg.norm(offset) < 1e-3 * d:
            continue
        out.append((a, b, c))
    return out


def buildable_random_points(rng, n=10, box=1.0, min_spacing=0.1, foot_margin=0.02):
    """iid-uniform coordinates in [-box, box]^3 with consecutive spacing >=
    min_spacing.

    Points whose triple puts the chord foot within foot_margin of a chord end
    are redrawn: no parabola passes through such a triple, so the criterion
    quantifies over buildable sequences.
    """
    while True:
        pts = [rng.uniform(-box, box, 3)]
        ok = True
        for _ in range(n - 1):
            for _attempt in range(400):
                cand = rng.uniform(-box, box, 3)
                if np.linalg.norm(cand - pts[-1]) < min_spacing:
                    continue
                if len(pts) >= 2:
                    chord = cand - pts[-2]
                    d2 = float(chord @ chord)
                    if d2 == 0.0:
                        continue
                    x = float((pts[-1] - pts[-2]) @ chord) / d2
                    if not foot_margin < x < 1.0 - foot_margin:
                        continue
                pts.append(cand)
                break
            else:
                ok = False
                break
        if ok:
            return np.asarray(pts)


def random_smooth_net(rng, rows=5, cols=5, amplitude=0.1):
    """Uniform (x, y) grid carrying a random low-frequency height field,
    normalized so the peak height equals `amplitude`."""
    jj, ii = np.meshgrid(
        np.arange(rows, dtype=float), np.arange(cols, dtype=float), indexing="ij"
    )
    z = np.zeros((rows, cols))
    for _ in range(3):
        wx, wy = rng.uniform(0.2, 0.7, size=2)
        px, py = rng.uniform(0.0, 2.0 * np.pi, size=2)
        z += rng.uniform(0.3, 1.0) * np.sin(wx * ii + px) * np.sin(wy * jj + py)
    z *= amplitude / max(float(np.abs(z).max()), 1e-12)
    return np.stack([ii, jj, z], axis=-1)


def poly_fit_residual(u, values, degree) -> float:
    """Max abs residual of an independent least-squares polynomial fit,
    taken over all coordinates."""
    residual = 0.0
    for k in range(values.shape[1]):
        p = np.polynomial.Polynomial.fit(u, values[:, k], degree)
        residual = max(residual, float(np.abs(p(u) - values[:, k]).max()))
    return residual
