"""
Certifying continuity numerically
=================================

The check module turns the construction's guarantees into measured
numbers: node interpolation error and junction tangent angles for curves,
boundary position gaps and tangent-plane angles for surfaces.

Gentle nets stay far inside the angular budget.  A nearly flat net with
one steep spike does not: the two directional schemes disagree about the
surface around the spike, and the report says FAIL rather than smoothing
it over.
"""

import numpy as np

from parablend import SurfaceNet, build_curve, check_curve, check_net

rng = np.random.default_rng(7)

# 1. a wandering but forward-moving polyline: nodes hit exactly,
# junction angles at rounding level
points = rng.uniform(-0.6, 0.6, size=(8, 3))
points[:, 0] += np.arange(8.0)
report = check_curve(build_curve(points))
print(report.render("text"))
print()

# 2. a gently waved net: tangent planes match to ~1e-5 radians
cols, rows = 6, 5
xs, ys = np.meshgrid(np.arange(cols, dtype=float), np.arange(rows, dtype=float))
zs = 0.08 * np.sin(1.3 * xs) * np.cos(1.1 * ys)
gentle = SurfaceNet(np.stack([xs, ys, zs], axis=-1))
report = check_net(gentle)
measured = dict(report.entries)
print(f"gentle net: max_normal_angle_rad = {measured['max_normal_angle_rad']:.3e}")
print(f"gentle net passes: {report.passed}")
print()

# 3. a unit-height spike on a 4 x 4 net: slopes comparable to the grid
# spacing break the small-angle assumption and the check catches it
zs = np.zeros((4, 4))
zs[2, 2] = 1.0
xs, ys = np.meshgrid(np.arange(4, dtype=float), np.arange(4, dtype=float))
spiky = SurfaceNet(np.stack([xs, ys, zs], axis=-1))
report = check_net(spiky)
print("spiky net, key=value form:")
for line in report.render("kv").splitlines():
    if line.startswith(("kind", "max_", "normal_angle_tol", "result")):
        print(f"  {line}")
