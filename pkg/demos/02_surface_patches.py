"""
Blended surface patches over a rectangular net
==============================================

Builds a dome-shaped net of control points, compares the three patch
schemes at one interior spot, tessellates the whole net into a quad mesh,
and exports it as a Wavefront OBJ file.

Writes surface_patches.png and dome.obj next to this script.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from parablend import PatchScheme, SurfaceNet, eval_patch, tessellate, write_mesh_obj

HERE = pathlib.Path(__file__).parent

# a 6 x 7 net: unit grid in x and y, a smooth dome in z
cols, rows = 7, 6
xs, ys = np.meshgrid(np.arange(cols, dtype=float), np.arange(rows, dtype=float))
r2 = (xs - 3.0) ** 2 + (ys - 2.5) ** 2
zs = 1.8 * np.exp(-r2 / 6.0)
net = SurfaceNet(np.stack([xs, ys, zs], axis=-1))

# the three schemes agree on patch boundaries and differ inside; sample
# the middle of an interior patch to see how far apart they sit
x, y = 0.5, 0.5
for scheme in PatchScheme:
    pt = eval_patch(net, 3, 2, x, y, scheme)
    print(f"patch (3,2) centre, scheme {scheme.value:>7}: z = {pt[2]:.6f}")

# tessellate: every patch sampled on a (resolution+1)^2 grid, boundary
# vertices shared, so the mesh has no seams to begin with
mesh = tessellate(net, resolution=6)
print(f"mesh: {len(mesh.vertices)} vertices, {len(mesh.faces)} quads")

obj_path = HERE / "dome.obj"
write_mesh_obj(mesh, obj_path)
print(f"wrote {obj_path}")

# the vertex array is a row-major grid, so it reshapes straight into the
# (ny, nx) layout that plot_surface wants
nx = (cols - 1) * 6 + 1
ny = (rows - 1) * 6 + 1
grid = mesh.vertices.reshape(ny, nx, 3)

fig = plt.figure(figsize=(9, 4))

ax = fig.add_subplot(1, 2, 1, projection="3d")
ax.plot_surface(grid[..., 0], grid[..., 1], grid[..., 2], cmap="viridis", lw=0)
ax.set_title("tessellated surface")

ax = fig.add_subplot(1, 2, 2, projection="3d")
ax.plot_wireframe(grid[..., 0], grid[..., 1], grid[..., 2], lw=0.4, color="steelblue")
ax.scatter(*net.points.reshape(-1, 3).T, color="crimson", s=18, label="net points")
ax.legend()
ax.set_title("quad mesh and net")

fig.tight_layout()
out = HERE / "surface_patches.png"
fig.savefig(out, dpi=110)
print(f"wrote {out}")
