"""CLI contract: flags, exit codes, output files, report formats."""

import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from parablend.cli import main
from patch_oracle import bump_net

FIXTURES = Path(__file__).parent / "fixtures"
POINTS10 = str(FIXTURES / "points10.csv")
NET4X4 = str(FIXTURES / "net4x4.json")


def read_obj_vertices(path):
    rows = []
    for line in Path(path).read_text().splitlines():
        if line.startswith("v "):
            rows.append([float(v) for v in line.split()[1:]])
    return np.asarray(rows)


# ---------------------------------------------------------------- curve


def test_curve_sample_count_and_summary(tmp_path, capsys):
    out = tmp_path / "out.csv"
    code = main(["curve", "--input", POINTS10, "--samples", "32", "--output", str(out)])
    assert code == 0
    lines = out.read_text().strip().split("\n")
    assert len(lines) == 9 * 32 + 1
    head = [float(v) for v in lines[0].split(",")]
    first_input = [float(v) for v in Path(POINTS10).read_text().split("\n")[0].split(",")]
    assert head == first_input
    assert "289 samples" in capsys.readouterr().out


def test_curve_default_sixteen_samples(tmp_path):
    out = tmp_path / "out.csv"
    assert main(["curve", "--input", POINTS10, "--output", str(out)]) == 0
    assert len(out.read_text().strip().split("\n")) == 9 * 16 + 1


def test_curve_single_point_is_geometry_error(tmp_path, capsys):
    src = tmp_path / "one.csv"
    src.write_text("0,0,0\n")
    code = main(["curve", "--input", str(src), "--output", str(tmp_path / "o.csv")])
    assert code == 3
    assert "InsufficientPoints" in capsys.readouterr().err


def test_curve_coincident_points_is_geometry_error(tmp_path, capsys):
    src = tmp_path / "dup.csv"
    src.write_text("0,0,0\n1,0,0\n1,0,0\n2,1,0\n")
    code = main(["curve", "--input", str(src), "--output", str(tmp_path / "o.csv")])
    assert code == 3
    err = capsys.readouterr().err
    assert "DegenerateChord" in err and "1" in err


def test_curve_malformed_input_is_parse_error(tmp_path, capsys):
    src = tmp_path / "bad.csv"
    src.write_text("0,0,0\n0,0\n")
    code = main(["curve", "--input", str(src), "--output", str(tmp_path / "o.csv")])
    assert code == 2
    assert "line 2" in capsys.readouterr().err


def test_curve_missing_input_is_io_error(tmp_path, capsys):
    code = main(
        ["curve", "--input", str(tmp_path / "nope.csv"), "--output", str(tmp_path / "o")]
    )
    assert code == 1
    assert capsys.readouterr().err


def test_curve_unwritable_output_is_io_error(tmp_path):
    out = tmp_path / "no" / "such" / "dir" / "o.csv"
    assert main(["curve", "--input", POINTS10, "--output", str(out)]) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["curve", "--input", "x", "--output", "y", "--samples", "0"],
        ["surface", "--input", "x", "--output", "y", "--resolution", "0"],
        ["curve", "--input", "x", "--output", "y", "--tol-collinear", "0"],
        ["curve", "--input", "x", "--output", "y", "--tol-collinear", "0.5"],
    ],
)
def test_config_validation_exits_2(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_argparse_failures_exit_2():
    assert main(["frobnicate"]) == 2
    assert main([]) == 2
    assert main(["surface", "--input", "x", "--output", "y", "--scheme", "q"]) == 2


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
    assert "curve" in capsys.readouterr().out


# ---------------------------------------------------------------- surface


def test_surface_obj_counts_and_header(tmp_path, capsys):
    out = tmp_path / "out.obj"
    code = main(["surface", "--input", NET4X4, "--resolution", "8", "--output", str(out)])
    assert code == 0
    text = out.read_text()
    lines = text.splitlines()
    assert lines[0] == "# parablend quad mesh"
    assert lines[1] == "# scheme: average"
    assert sum(1 for l in lines if l.startswith("v ")) == (3 * 8 + 1) ** 2
    assert sum(1 for l in lines if l.startswith("f ")) == 9 * 64
    assert "625 vertices" in capsys.readouterr().out


def test_surface_scheme_flag_reaches_header(tmp_path):
    out = tmp_path / "out.obj"
    assert main(
        ["surface", "--input", NET4X4, "--resolution", "2", "--scheme", "l",
         "--output", str(out)]
    ) == 0
    assert "# scheme: l" in out.read_text()


def test_surface_l_and_m_share_network_lines_only(tmp_path):
    src = tmp_path / "bump.json"
    src.write_text(
        json.dumps({"rows": 4, "cols": 4, "points": bump_net().reshape(-1, 3).tolist()})
    )
    res = 4
    outs = {}
    for scheme in ("l", "m"):
        out = tmp_path / f"{scheme}.obj"
        assert main(
            ["surface", "--input", str(src), "--resolution", str(res), "--scheme",
             scheme, "--output", str(out)]
        ) == 0
        outs[scheme] = read_obj_vertices(out)
    nx = 3 * res + 1
    gy, gx = np.divmod(np.arange(nx * nx), nx)
    on_line = (gx % res == 0) | (gy % res == 0)
    gap = np.abs(outs["l"] - outs["m"]).max(axis=1)
    assert gap[on_line].max() <= 1e-9
    assert gap[~on_line].max() > 1e-4


def test_surface_net_with_coincident_neighbours_exits_3(tmp_path, capsys):
    pts = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 1, 0]]
    src = tmp_path / "net.json"
    src.write_text(json.dumps({"rows": 2, "cols": 2, "points": pts}))
    code = main(["surface", "--input", str(src), "--output", str(tmp_path / "o.obj")])
    assert code == 3
    assert "DegenerateChord" in capsys.readouterr().err


# ---------------------------------------------------------------- check


def test_check_points_file_passes(capsys):
    assert main(["check", "--input", POINTS10]) == 0
    out = capsys.readouterr().out
    assert out.startswith("curve continuity check")
    assert out.strip().endswith("result: PASS")


def test_check_net_kv_report(capsys):
    assert main(["check", "--input", NET4X4, "--report", "kv"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "kind=net"
    assert lines[-1] == "result=PASS"
    assert all("=" in line for line in lines)
    keys = {line.split("=", 1)[0] for line in lines}
    assert {"max_boundary_gap", "max_normal_angle_rad", "footprint_sizes"} <= keys


def test_check_report_written_to_output_file(tmp_path, capsys):
    out = tmp_path / "report.txt"
    assert main(["check", "--input", POINTS10, "--output", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert out.read_text().strip().endswith("result: PASS")


def test_check_failing_net_exits_4(tmp_path, capsys):
    src = tmp_path / "bump.json"
    pts = bump_net()
    src.write_text(
        json.dumps(
            {"rows": 4, "cols": 4, "points": pts.reshape(-1, 3).tolist()}
        )
    )
    assert main(["check", "--input", str(src)]) == 4
    assert capsys.readouterr().out.strip().endswith("result: FAIL")


def test_check_unparseable_input_exits_2(tmp_path, capsys):
    src = tmp_path / "mystery.bin"
    src.write_text("garbage {{{ not a format\n")
    assert main(["check", "--input", str(src)]) == 2
    assert "neither" in capsys.readouterr().err


def test_check_degenerate_net_is_geometry_error(tmp_path):
    pts = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 1, 0]]
    src = tmp_path / "net.json"
    src.write_text(json.dumps({"rows": 2, "cols": 2, "points": pts}))
    assert main(["check", "--input", str(src)]) == 3


# ---------------------------------------------------------------- stability


def test_outputs_are_byte_identical_across_reruns(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (a, b):
        assert main(["curve", "--input", POINTS10, "--output", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()

    oa, ob = tmp_path / "a.obj", tmp_path / "b.obj"
    for out in (oa, ob):
        assert main(
            ["surface", "--input", NET4X4, "--resolution", "4", "--output", str(out)]
        ) == 0
    assert oa.read_bytes() == ob.read_bytes()

    ra, rb = tmp_path / "a.kv", tmp_path / "b.kv"
    for out in (ra, rb):
        assert main(
            ["check", "--input", NET4X4, "--report", "kv", "--output", str(out)]
        ) == 0
    assert ra.read_bytes() == rb.read_bytes()


def test_module_entry_point_runs(tmp_path):
    out = tmp_path / "out.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "parablend.cli", "curve", "--input", POINTS10,
         "--output", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert out.exists()
