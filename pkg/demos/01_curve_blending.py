"""
Blending parabolas into a smooth space curve
============================================

Builds a curve through a handful of 3D points, shows the two overlapping
parabolic arcs that every interior span blends together, and verifies the
tangent-direction continuity at the junctions.

Writes curve_blending.png next to this script.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from parablend import build_curve

HERE = pathlib.Path(__file__).parent

# a gentle 3D zig-zag: no symmetry, nothing collinear
points = np.array(
    [
        [0.0, 0.0, 0.0],
        [1.0, 0.8, 0.3],
        [2.2, 0.1, 0.6],
        [3.0, 1.1, 0.4],
        [4.1, 0.9, 1.0],
        [5.0, 0.2, 0.8],
    ]
)

curve = build_curve(points)
samples = curve.sample(64)

# every interior span carries two arcs; pull out the pair of span 2 and
# evaluate each across the whole span to show what the blend averages
span = curve.segments[2]
u = np.linspace(0.0, 1.0, 64)
first_arc = np.array([span.left.point_at(v * span.chord_length) for v in u])
second_arc = np.array([span.right.point_at(v * span.chord_length) for v in u])

# junction tangent directions: outgoing and incoming must agree
# (atan2 of cross and dot resolves tiny angles that arccos cannot)
worst = 0.0
for i in range(len(curve.segments) - 1):
    out_t = curve.segments[i].tangent_at_fraction(1.0)
    in_t = curve.segments[i + 1].tangent_at_fraction(0.0)
    cross = np.linalg.norm(np.cross(out_t, in_t))
    worst = max(worst, np.arctan2(cross, out_t @ in_t))
print(f"max junction tangent angle: {worst:.2e} rad")

fig = plt.figure(figsize=(9, 4))

ax = fig.add_subplot(1, 2, 1, projection="3d")
ax.plot(*samples.T, lw=1.5, label="blended curve")
ax.scatter(*points.T, color="crimson", s=30, label="input points")
ax.legend()
ax.set_title("curve through all points")

ax = fig.add_subplot(1, 2, 2, projection="3d")
ax.plot(*first_arc.T, "--", lw=1.0, label="arc around point 2")
ax.plot(*second_arc.T, "--", lw=1.0, label="arc around point 3")
span_pts = np.array([span.point_at_fraction(v) for v in u])
ax.plot(*span_pts.T, lw=2.0, color="black", label="blend of the two")
ax.scatter(*points[1:5].T, color="crimson", s=30)
ax.legend()
ax.set_title("one interior span")

fig.tight_layout()
out = HERE / "curve_blending.png"
fig.savefig(out, dpi=110)
print(f"wrote {out}")
