"""Command-line interface: ``semiflow {list-models,orbit,rates,harmonic,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical failure.
"""
import argparse
from dataclasses import dataclass
import math
import sys

from .errors import CapabilityError, DomainError, NoConvergence
from .harmonic import (
    BoundaryPrimitive, example51_domain, example52_rectangle, example52_t,
    hm_halfplane_halfline, hm_sector, hm_strip_top, wos_estimate,
)
from .models import MODEL_IDS, get_model, model_catalog
from .orbits import TimeGrid, orbit_trace, trace_to_csv, trace_to_json
from .rates import theorem_verdicts
from .serialize import dumps17
from .verify import SUITES, run_suite, suite_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


@dataclass
class CommandResult:
    exit_code: int
    report_path: str | None = None


class UsageError(Exception):
    pass


def _theta_str(theta):
    for s, v in (("0", 0.0), ("pi", math.pi), ("pi/2", math.pi / 2)):
        if theta == v:
            return s
    return f"{theta:.6g}"


def _point(text):
    try:
        re_, im_ = (float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM but got {text!r}")
    return complex(re_, im_)


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
        return None
    with open(path, "w", newline="") as fh:
        fh.write(text)
    return path


def _orbit_model(model_id):
    try:
        m = get_model(model_id)
    except KeyError as exc:
        raise UsageError(str(exc.args[0]))
    if not m.has_orbit:
        raise UsageError(f"model {model_id!r} is geometry-only; orbit workloads are not available")
    return m


def _trace(args):
    m = _orbit_model(args.model)
    z = m.base_point if args.z is None else args.z
    if not m.in_parameter_domain(z):
        raise UsageError(f"z = {z} is outside the {m.parameter_domain} of {m.id!r}")
    try:
        grid = TimeGrid(args.t0, args.t1, args.count)
    except ValueError as exc:
        raise UsageError(str(exc))
    return m, orbit_trace(m, z, grid)


# ---------------------------------------------------------------------------
# commands


def cmd_list_models(args):
    for m in model_catalog():
        print(f"{m.id}  {m.parameter_domain}  {m.shift_type}  Θ={_theta_str(m.inner_argument)}  {m.capabilities}")
    return CommandResult(EXIT_OK)


def cmd_orbit(args):
    m, tr = _trace(args)
    text = trace_to_csv(tr) if args.format == "csv" else trace_to_json(tr)
    return CommandResult(EXIT_OK, _write(text, args.out))


def cmd_rates(args):
    m, tr = _trace(args)
    reps = theorem_verdicts(m, tr, eps=args.eps)
    doc = {"model": m.id, "z0": tr.z0, "eps": args.eps, "reports": [r.to_dict() for r in reps]}
    path = _write(dumps17(doc), args.json)
    if args.json not in (None, "-"):
        for r in reps:
            print(f"{r.kind:16s} slope={r.slope:.6f} bracket={r.bracket} {r.verdict}")
    bad = any(r.verdict == "outside" for r in reps)
    return CommandResult(EXIT_FAIL if bad else EXIT_OK, path)


def _harmonic_setup(args):
    P = BoundaryPrimitive
    d = args.domain
    if d == "strip":
        prims = [P("horizontal-line", 0j, 0.0, "bottom"), P("horizontal-line", complex(0, args.height), 0.0, "top")]
        z, target = args.z if args.z is not None else complex(0, args.height / 2), args.target or "top"
        exact = lambda: hm_strip_top(z, 0.0, args.height) if target == "top" else None  # noqa: E731
    elif d == "halfplane":
        prims = [P("segment", 0j, math.inf, "right"), P("horizontal-ray-left", 0j, 0.0, "left")]
        z, target = args.z if args.z is not None else 1 + 1j, args.target or "left"
        exact = lambda: hm_halfplane_halfline(z, 0.0) if target == "left" else None  # noqa: E731
    elif d == "sector":
        prims = [P("segment", 0j, math.inf, "alpha"), P("vertical-segment", 0j, math.inf, "beta")]
        z, target = args.z if args.z is not None else 1 + 2j, args.target or "beta"
        exact = lambda: hm_sector(z, 0.0, math.pi / 2, target)  # noqa: E731
    elif d == "example51":
        prims = example51_domain()
        z, target = args.z if args.z is not None else 10 + 0j, args.target or "slit"
        exact = lambda: None  # noqa: E731
    else:
        try:
            prims = example52_rectangle(args.n)
            tn = example52_t(args.n)
        except OverflowError as exc:
            raise UsageError(str(exc))
        z, target = args.z if args.z is not None else complex(tn, 0), args.target or "U"
        exact = lambda: None  # noqa: E731
    labels = {p.label for p in prims}
    if target not in labels:
        raise UsageError(f"unknown target {target!r}; labels are {sorted(labels)}")
    return prims, z, target, exact


def cmd_harmonic(args):
    prims, z, target, exact = _harmonic_setup(args)
    if args.method == "exact":
        try:
            est = exact()
        except DomainError as exc:
            raise UsageError(str(exc))
        if est is None:
            raise UsageError(f"no closed form for domain {args.domain!r} / target {target!r}")
    else:
        try:
            est = wos_estimate(prims, z, {target}, args.paths, args.seed, workers=args.workers)
        except DomainError as exc:
            raise UsageError(str(exc))
    return CommandResult(EXIT_OK, _write(dumps17(est.to_dict()), args.json))


def cmd_verify(args):
    results = run_suite(args.suite, seed=args.seed, paths=args.paths, eps=args.eps, workers=args.workers)
    for r in results:
        print(f"[{'PASS' if r.passed else 'FAIL'}] {r.key}: {r.title}")
        for c in r.failed():
            print(f"    {c.name}: value={c.value!r} target {c.target}")
    doc = suite_report(args.suite, results, args.seed, args.paths, args.eps)
    path = None
    if args.json:
        path = _write(dumps17(doc), args.json)
    return CommandResult(EXIT_OK if doc["passed"] else EXIT_FAIL, path)


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="semiflow", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("list-models", help="print the model catalog").set_defaults(func=cmd_list_models)

    def orbit_flags(q):
        q.add_argument("--model", required=True, help=f"one of {', '.join(MODEL_IDS)}")
        q.add_argument("--z", type=_point, default=None, help="start point RE,IM (default: model base point)")
        q.add_argument("--t0", type=float, default=1.0)
        q.add_argument("--t1", type=float, default=1e6)
        q.add_argument("--count", type=int, default=200)

    q = sub.add_parser("orbit", help="trace an orbit to CSV or JSON")
    orbit_flags(q)
    q.add_argument("--out", default=None, help="output path (default stdout)")
    q.add_argument("--format", choices=("csv", "json"), default="csv")
    q.set_defaults(func=cmd_orbit)

    q = sub.add_parser("rates", help="fit rates on an orbit and judge them against the theorem brackets")
    orbit_flags(q)
    q.add_argument("--eps", type=float, default=0.05)
    q.add_argument("--json", default=None, help="report path (default stdout)")
    q.set_defaults(func=cmd_rates)

    q = sub.add_parser("harmonic", help="harmonic measure on a fixture domain")
    q.add_argument("--domain", choices=("strip", "halfplane", "sector", "example51", "example52"), required=True)
    q.add_argument("--z", type=_point, default=None)
    q.add_argument("--target", default=None, help="boundary label")
    q.add_argument("--height", type=float, default=2.0, help="strip height")
    q.add_argument("--n", type=int, default=1, help="Example 5.2 index")
    q.add_argument("--method", choices=("wos", "exact"), default="wos")
    q.add_argument("--paths", type=int, default=100_000)
    q.add_argument("--seed", type=int, default=42)
    q.add_argument("--workers", type=int, default=4)
    q.add_argument("--json", default=None)
    q.set_defaults(func=cmd_harmonic)

    q = sub.add_parser("verify", help="run an acceptance suite")
    q.add_argument("--suite", choices=tuple(SUITES), default="all")
    q.add_argument("--seed", type=int, default=42)
    q.add_argument("--paths", type=int, default=100_000)
    q.add_argument("--eps", type=float, default=0.05)
    q.add_argument("--workers", type=int, default=4)
    q.add_argument("--json", default=None, help="verdict report path")
    q.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args).exit_code
    except UsageError as exc:
        print(f"semiflow: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NoConvergence, FloatingPointError, ArithmeticError) as exc:
        print(f"semiflow: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (DomainError, CapabilityError) as exc:
        print(f"semiflow: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
