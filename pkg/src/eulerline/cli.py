"""Command-line front end.

Subcommands: ``plambda``, ``verify``, ``tau``, ``centers``, ``figure``.
Exit codes: 0 success, 1 verification failure, 2 input or usage error.

Point sets are JSON documents::

    {"dimension": 2,
     "points": [[1, 0], ["3/5", "4/5"], [0, -1]],
     "sphere": {"center": [0, 0], "radius": 1}}

Numbers may be JSON numbers or strings holding decimals or ``p/q``
rationals; with ``--exact`` every number is read as an exact rational. The
optional ``sphere`` maps the points onto the unit sphere at the origin.
"""

import argparse
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .centers import ShinagawaPair, Triangle, tau
from .errors import GeometryError, InvalidPairError
from .figures import FigureKind, FigureSpec, render
from .kernel import DEFAULT_TOLERANCE, Point, format_scalar, tolerance
from .plambda import (
    Degeneracy,
    InscribedConfig,
    normalize_to_unit_sphere,
    p_lambda,
    random_config,
    verify_theorem,
)
from .tables import builtin_table, parse_center_table, table_report

OK, FAILED, USAGE = 0, 1, 2


class InputError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


# ---------------------------------------------------------------- parsing

def rational(text):
    """Parse an integer, decimal or p/q literal exactly."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _number(value, exact, where):
    if isinstance(value, bool) or not isinstance(value, (int, str, Fraction)):
        raise InputError(f"{where}: expected a number, got {value!r}")
    try:
        q = Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{where}: not a rational literal: {value!r}") from None
    return q if exact else float(q)


def load_point_set(path, exact):
    """Read a point-set document; returns (points, sphere-or-None)."""
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        # keep decimal literals as text so they can be read exactly
        doc = json.loads(text, parse_float=Fraction)
    except OSError as exc:
        raise InputError(f"--input: cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"--input: invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError("--input: top level must be an object")
    dim = doc.get("dimension")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError("--input: 'dimension' must be a positive integer")
    raw = doc.get("points")
    if not isinstance(raw, list) or not raw:
        raise InputError("--input: 'points' must be a non-empty list")
    points = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != dim:
            raise InputError(f"--input: points[{i}] must be a list of {dim} numbers")
        points.append(Point([_number(x, exact, f"points[{i}]") for x in row]))
    sphere = doc.get("sphere")
    if sphere is not None:
        if not isinstance(sphere, dict) or "center" not in sphere or "radius" not in sphere:
            raise InputError("--input: 'sphere' needs 'center' and 'radius'")
        center = sphere["center"]
        if not isinstance(center, list) or len(center) != dim:
            raise InputError(f"--input: sphere center must be a list of {dim} numbers")
        center = Point([_number(x, exact, "sphere.center") for x in center])
        radius = _number(sphere["radius"], exact, "sphere.radius")
        sphere = (center, radius)
    return points, sphere


def load_config(path, exact, validate=True):
    points, sphere = load_point_set(path, exact)
    if sphere is not None:
        cfg, sim = normalize_to_unit_sphere(points, *sphere)
        if not validate:
            cfg = InscribedConfig(cfg.points, validate=False)
        return cfg, sim
    return InscribedConfig(tuple(points), validate=validate), None


def _lambda_for(value, exact):
    return value if exact else float(value)


def _fmt_point(p):
    return "(" + ", ".join(format_scalar(c) for c in p) + ")"


# ---------------------------------------------------------------- commands

def cmd_plambda(args, out):
    cfg, sim = load_config(args.input, args.exact, validate=not args.no_validate)
    lam = _lambda_for(args.lam, args.exact)
    p = p_lambda(cfg, lam)
    out.write(f"dimension: {cfg.d}\n")
    out.write(f"points: {cfg.n}\n")
    out.write(f"lambda: {format_scalar(lam)}\n")
    out.write(f"P_lambda: {_fmt_point(p)}\n")
    if sim is not None:
        out.write(f"P_lambda (input frame): {_fmt_point(sim.inverse(p))}\n")
    return OK


def _trial(job):
    d, n, seed, trial, lam, exact, tol = job
    with tolerance(tol):
        cfg = random_config(d, n, (seed, trial), exact=exact)
        return _summarize(verify_theorem(cfg, lam))


def _summarize(report):
    return (report.parts, report.max_residual, tuple(sorted(f.value for f in report.degeneracy_flags)))


def cmd_verify(args, out):
    lam = _lambda_for(args.lam, args.exact)
    if args.input:
        cfg, _ = load_config(args.input, args.exact)
        if cfg.n <= 2:
            raise InputError(f"--input: verification needs more than two points, got {cfg.n}")
        results = [_summarize(verify_theorem(cfg, lam))]
        d, n = cfg.d, cfg.n
    else:
        if args.d is None or args.n is None:
            raise InputError("--d and --n are required unless --input is given")
        if args.d < 2:
            raise InputError(f"--d: dimension must be at least 2, got {args.d}")
        if args.n < 3:
            raise InputError(f"--n: need more than two points, got {args.n}")
        d, n = args.d, args.n
        jobs = [(d, n, args.seed, i, lam, args.exact, args.tol) for i in range(args.trials)]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_trial, jobs, chunksize=max(1, len(jobs) // (4 * args.jobs))))
        else:
            results = [_trial(job) for job in jobs]

    part_failures = [0, 0, 0, 0]
    passed = 0
    flags = Counter()
    max_residual = None
    for parts, residual, trial_flags in results:
        if all(parts):
            passed += 1
        for k, ok in enumerate(parts):
            if not ok:
                part_failures[k] += 1
        flags.update(trial_flags)
        max_residual = residual if max_residual is None else max(max_residual, residual)

    total = len(results)
    regime = "exact" if args.exact else "approx"
    tol = "exact" if args.exact else f"{args.tol:g}"
    out.write(f"d: {d}  n: {n}  lambda: {format_scalar(lam)}  regime: {regime}  tol: {tol}\n")
    out.write(f"passed: {passed}/{total}\n")
    for k, count in enumerate(part_failures, 1):
        out.write(f"part{k} failures: {count}\n")
    if args.exact:
        out.write(f"max residual: {format_scalar(max_residual)}\n")
    else:
        out.write(f"max residual: {float(max_residual):.3e}\n")
    tallies = " ".join(f"{d.value}={flags.get(d.value, 0)}" for d in sorted(Degeneracy, key=lambda f: f.value))
    out.write(f"degeneracies: {tallies}\n")
    out.write(f"result: {'PASS' if passed == total else 'FAIL'}\n")
    return OK if passed == total else FAILED


def cmd_tau(args, out):
    try:
        lam = tau(ShinagawaPair(args.u, args.v))
    except InvalidPairError:
        raise InputError("--u/--v: the pair (0, 0) has no lambda") from None
    out.write(f"{lam}\n")
    return OK


def cmd_centers(args, out):
    if args.table:
        try:
            with open(args.table, encoding="utf-8") as fh:
                table = parse_center_table(fh, source=args.table)
        except OSError as exc:
            raise InputError(f"--table: cannot read {args.table}: {exc.strerror}") from None
    else:
        table = builtin_table()
    points, sphere = load_point_set(args.input, args.exact)
    if len(points) != 3 or points[0].dim != 2:
        raise InputError("--input: a triangle needs exactly three planar points")
    report = table_report(table, Triangle(*points))
    out.write(report.format())
    return FAILED if report.all_collinear is False else OK


def cmd_figure(args, out):
    cfg, _ = load_config(args.input, exact=False)
    kind = FigureKind(args.kind)
    lam = args.lam
    if kind is FigureKind.THEOREM and lam is None:
        raise InputError("--lambda is required for --kind theorem")
    spec = FigureSpec(kind, cfg, None if lam is None else float(lam),
                      width=args.width, height=args.height, scale=args.scale)
    svg = render(spec)
    if args.out and args.out != "-":
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(svg)
        except OSError as exc:
            raise InputError(f"--out: cannot write {args.out}: {exc.strerror}") from None
    else:
        out.write(svg)
    return OK


# ---------------------------------------------------------------- wiring

def build_parser():
    parser = argparse.ArgumentParser(
        prog="eulerline", description="P_lambda points and Euler lines of inscribed point sets.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plambda", help="print the P_lambda point of a point set")
    p.add_argument("--input", required=True, help="point-set JSON file ('-' for stdin)")
    p.add_argument("--lambda", dest="lam", type=rational, required=True)
    p.add_argument("--exact", action="store_true", help="exact rational arithmetic")
    p.add_argument("--no-validate", action="store_true", help="skip the unit-sphere check")
    p.add_argument("--tol", type=positive_float, default=DEFAULT_TOLERANCE)
    p.set_defaults(func=cmd_plambda)

    p = sub.add_parser("verify", help="check the sub-polygon theorem on random or given configurations")
    p.add_argument("--d", type=positive_int)
    p.add_argument("--n", type=positive_int)
    p.add_argument("--trials", type=positive_int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lambda", dest="lam", type=rational, required=True)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--tol", type=positive_float, default=DEFAULT_TOLERANCE)
    p.add_argument("--input", help="verify a fixed configuration instead of random ones")
    p.add_argument("--jobs", type=positive_int, default=1, help="worker processes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tau", help="convert Shinagawa coefficients (u, v) to lambda")
    p.add_argument("--u", type=rational, required=True)
    p.add_argument("--v", type=rational, required=True)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("centers", help="place a table of centers on a triangle")
    p.add_argument("--table", help="CSV with header index,u,v (default: built-in table)")
    p.add_argument("--input", required=True, help="triangle JSON (three planar points)")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--tol", type=positive_float, default=DEFAULT_TOLERANCE)
    p.set_defaults(func=cmd_centers)

    p = sub.add_parser("figure", help="render an SVG figure")
    p.add_argument("--kind", choices=[k.value for k in FigureKind], required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--lambda", dest="lam", type=rational)
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--width", type=positive_int, default=480)
    p.add_argument("--height", type=positive_int, default=480)
    p.add_argument("--scale", type=positive_float, help="pixels per unit (default: fit)")
    p.add_argument("--tol", type=positive_float, default=DEFAULT_TOLERANCE)
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        with tolerance(args.tol if hasattr(args, "tol") else DEFAULT_TOLERANCE):
            return args.func(args, out)
    except (InputError, GeometryError) as exc:
        err.write(f"eulerline {args.command}: error: {exc}\n")
        return USAGE


run = main


if __name__ == "__main__":
    sys.exit(main())
