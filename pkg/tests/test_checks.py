"""Certification reports: verdicts, report formats, normal estimation."""

import numpy as np
import pytest

from parablend import (
    PatchScheme,
    SurfaceNet,
    boundary_normal_angle,
    build_curve,
    check_curve,
    check_net,
    patch_normal,
)
from patch_oracle import bump_net
from support import buildable_random_points, random_smooth_net


def test_curve_check_passes_on_generic_data():
    curve = build_curve(buildable_random_points(np.random.default_rng(21), n=9))
    report = check_curve(curve)
    assert report.passed
    kv = dict(report.entries)
    assert kv["max_junction_angle_rad"] <= 1e-12
    assert kv["max_node_error_rel"] <= 1e-12
    assert kv["max_cubic_residual_rel"] <= 1e-12
    # one entry per interior junction
    per_junction = [k for k, _ in report.entries if k.endswith("_angle_rad") and k[9:10].isdigit()]
    assert len(per_junction) == 7


def test_curve_check_two_point_curve_has_no_junctions():
    report = check_curve(build_curve([[0, 0, 0], [1, 0, 0]]))
    assert report.passed
    assert dict(report.entries)["max_junction_angle_rad"] == 0.0


def test_net_check_planar_normals_exactly_zero():
    pts = random_smooth_net(np.random.default_rng(22), 4, 4, amplitude=0.0)
    report = check_net(SurfaceNet(pts))
    kv = dict(report.entries)
    assert report.passed
    assert kv["max_normal_angle_rad"] == 0.0
    assert kv["max_boundary_gap"] == 0.0
    assert kv["footprint_sizes"] == "9,12,16"


def test_net_check_smooth_net_passes():
    pts = random_smooth_net(np.random.default_rng(23), 5, 5, amplitude=0.1)
    report = check_net(SurfaceNet(pts))
    assert report.passed
    kv = dict(report.entries)
    assert kv["max_normal_angle_rad_average"] < 1e-4
    assert kv["scheme_coincidence_gap"] <= 1e-9 * kv["scale"]


def test_net_check_fails_on_steep_bump():
    report = check_net(SurfaceNet(bump_net()))
    assert not report.passed
    assert dict(report.entries)["max_normal_angle_rad"] > 1e-3
    assert report.to_kv().strip().endswith("result=FAIL")


def test_net_check_single_patch_net_has_no_boundaries():
    pts = np.array([[[0, 0, 0], [1, 0, 0]], [[0, 1, 0], [1, 1, 0.2]]])
    report = check_net(SurfaceNet(pts))
    assert report.passed
    kv = dict(report.entries)
    assert kv["max_boundary_gap"] == 0.0
    assert not any(k.startswith("boundary_") for k, _ in report.entries)


def test_report_formats():
    report = check_curve(build_curve([[0, 0, 0], [1, 1, 0], [2, 0, 0]]))
    kv = report.to_kv()
    lines = kv.strip().split("\n")
    assert lines[0] == "kind=curve"
    assert lines[-1] == "result=PASS"
    assert all("=" in line for line in lines)
    text = report.to_text()
    assert text.startswith("curve continuity check")
    assert text.strip().endswith("result: PASS")
    assert report.render("kv") == kv
    with pytest.raises(ValueError):
        report.render("yaml")


def test_patch_normal_on_planar_net_points_up():
    pts = random_smooth_net(np.random.default_rng(24), 4, 4, amplitude=0.0)
    net = SurfaceNet(pts)
    for (x, y) in [(0.5, 0.5), (0.0, 0.5), (1.0, 1.0)]:
        n = patch_normal(net, 1, 1, x, y)
        assert np.allclose(n, [0, 0, 1], atol=1e-12)


def test_boundary_normal_angle_axis_validation():
    net = SurfaceNet(bump_net())
    with pytest.raises(ValueError):
        boundary_normal_angle(net, "z", 1, 0, 0.5)
    # both axes measurable on the interior lines
    assert boundary_normal_angle(net, "x", 1, 1, 0.5) >= 0.0
    assert boundary_normal_angle(net, "y", 2, 0, 0.3, PatchScheme.M) >= 0.0
