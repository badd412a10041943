"""Command-line front end: sample curves, tessellate nets, certify both.

Exit codes are a stable contract: 0 success, 1 I/O failure, 2 parse or
configuration error, 3 geometry error, 4 certification failure.
"""

from __future__ import annotations

import argparse
import sys

from .checks import check_curve, check_net
from .curve import build_curve
from .errors import FormatError, GeometryError
from .io import read_net, read_points, write_mesh_obj, write_polyline_csv
from .parabola import DEFAULT_COLLINEAR_TOL
from .surface import PatchScheme, tessellate

__all__ = ["main"]

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONFIG = 2
EXIT_GEOMETRY = 3
EXIT_CHECK_FAILED = 4


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parablend",
        description="Interpolate smooth curves and surfaces by blended parabolas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, output_required):
        p.add_argument("--input", required=True, help="input file path")
        p.add_argument(
            "--output",
            required=output_required,
            help="output file path" + ("" if output_required else " (default: stdout)"),
        )
        p.add_argument(
            "--tol-collinear",
            type=float,
            default=DEFAULT_COLLINEAR_TOL,
            help="offset-to-chord ratio below which a triple counts as straight",
        )

    p_curve = sub.add_parser("curve", help="sample a blended curve through a points file")
    common(p_curve, output_required=True)
    p_curve.add_argument(
        "--samples",
        type=int,
        default=16,
        help="samples per curve segment (default 16)",
    )

    p_surface = sub.add_parser("surface", help="tessellate a net file into a quad mesh")
    common(p_surface, output_required=True)
    p_surface.add_argument(
        "--resolution",
        type=int,
        default=8,
        help="quads per patch side (default 8)",
    )
    p_surface.add_argument(
        "--scheme",
        choices=[s.value for s in PatchScheme],
        default=PatchScheme.AVERAGE.value,
        help="patch evaluation scheme (default average)",
    )

    p_check = sub.add_parser(
        "check", help="certify continuity guarantees on a points or net file"
    )
    common(p_check, output_required=False)
    p_check.add_argument(
        "--scheme",
        choices=[s.value for s in PatchScheme],
        default=PatchScheme.AVERAGE.value,
        help="scheme judged by the net verdict (default average)",
    )
    p_check.add_argument(
        "--report",
        choices=["text", "kv"],
        default="text",
        help="report format: human text or key=value lines (default text)",
    )
    return parser


def _validate(args) -> str | None:
    if getattr(args, "samples", 1) < 1:
        return "--samples must be >= 1"
    if getattr(args, "resolution", 1) < 1:
        return "--resolution must be >= 1"
    if not 0.0 < args.tol_collinear < 1e-2:
        return "--tol-collinear must be in (0, 0.01)"
    return None


def _cmd_curve(args) -> int:
    points = read_points(args.input)
    curve = build_curve(points, args.tol_collinear)
    samples = curve.sample(args.samples)
    write_polyline_csv(samples, args.output)
    print(
        f"curve: {len(points)} points, {len(curve.segments)} segments, "
        f"{len(samples)} samples -> {args.output}"
    )
    return EXIT_OK


def _cmd_surface(args) -> int:
    net = read_net(args.input, args.tol_collinear)
    scheme = PatchScheme.from_string(args.scheme)
    mesh = tessellate(net, args.resolution, scheme)
    write_mesh_obj(mesh, args.output, scheme)
    print(
        f"surface: {net.rows}x{net.cols} net, scheme {scheme.value}, "
        f"{len(mesh.vertices)} vertices, {len(mesh.faces)} quads -> {args.output}"
    )
    return EXIT_OK


def _cmd_check(args) -> int:
    try:
        subject = read_net(args.input, args.tol_collinear)
    except FormatError:
        try:
            subject = read_points(args.input)
        except FormatError:
            print(
                f"{args.input}: parses as neither a net file nor a points file",
                file=sys.stderr,
            )
            return EXIT_CONFIG
    if hasattr(subject, "rows"):
        report = check_net(subject, PatchScheme.from_string(args.scheme))
    else:
        report = check_curve(build_curve(subject, args.tol_collinear))
    rendered = report.render(args.report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(rendered)
    else:
        sys.stdout.write(rendered)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    problem = _validate(args)
    if problem is not None:
        print(problem, file=sys.stderr)
        return EXIT_CONFIG
    command = {"curve": _cmd_curve, "surface": _cmd_surface, "check": _cmd_check}[
        args.command
    ]
    try:
        return command(args)
    except FormatError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except GeometryError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
