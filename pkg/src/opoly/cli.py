"""Command-line interface.

Exit codes: 0 pass, 1 usage or parse error, 2 parameter or contour error,
3 verification failure.  Suite commands print one JSON object per line.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .algebra import Poly, format_scalar, parse_scalar
from .errors import (
    ContourInvalid, DegenerateParameters, NoCounterpart, OpolyError, PoleHit, TailTooFat,
)
from .families import FAMILIES, Hahn, family_from_name, hypergeometric_build, ttrr_build
from . import identities, sobolev, zeros

EXIT_OK, EXIT_USAGE, EXIT_PARAM, EXIT_VERIFY = 0, 1, 2, 3

PARAM_NAMES = {
    "hahn": ("alpha", "beta", "N"),
    "continuous_hahn": ("a", "b", "c", "d"),
    "wilson": ("a", "b", "c", "d"),
    "racah": ("alpha", "beta", "gamma", "delta"),
    "dual_hahn": ("gamma", "delta", "N"),
    "continuous_dual_hahn": ("a", "b", "c"),
    "krawtchouk": ("p", "N"),
    "meixner": ("beta", "c"),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _scalar(text: str):
    try:
        return parse_scalar(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact scalar: {text!r}") from exc


def _ladder(text: str):
    try:
        return [parse_scalar(t) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad ladder {text!r}") from exc


def _family_args(p: argparse.ArgumentParser, required=True):
    p.add_argument("--family", required=required, help=", ".join(sorted(FAMILIES)))
    for name in ("alpha", "beta", "gamma", "delta", "a", "b", "c", "d", "p"):
        p.add_argument(f"--{name}", type=_scalar)
    p.add_argument("--N", type=int)
    p.add_argument("--branch", choices=["alpha", "beta_delta", "gamma"], default="alpha",
                   help="Racah truncation condition that holds")


def _quad_args(p):
    p.add_argument("--T", type=float, default=40.0)
    p.add_argument("--panels", type=int)
    p.add_argument("--order", type=int, default=64)
    p.add_argument("--rule", choices=["gauss_legendre", "trapezoid"], default="gauss_legendre")


def _quad(args) -> sobolev.QuadratureSpec:
    return sobolev.QuadratureSpec(T=args.T, panels=args.panels, order=args.order, rule=args.rule)


def _spec(args):
    key = args.family.lower().replace("-", "_")
    if key not in PARAM_NAMES:
        raise UsageError(f"unknown family {args.family!r}")
    params = {}
    for name in PARAM_NAMES[key]:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"--{name} is required for {key}")
        params[name] = value
    if key == "racah":
        params["branch"] = args.branch
    return family_from_name(key, **params)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("OPOLY_THREADS", "1")))
    except ValueError:
        return 1


def _ordered_map(fn, items):
    """Run ``fn`` over ``items`` on up to OPOLY_THREADS threads; results keep input order."""
    items = list(items)
    n = _threads()
    if n == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _emit(obj):
    print(json.dumps(obj), flush=True)


# -- commands -----------------------------------------------------------------

def cmd_coeffs(args) -> int:
    spec = _spec(args)
    build = ttrr_build if args.path == "ttrr" else hypergeometric_build
    poly = build(spec, args.n)
    coeffs = [format_scalar(c) for c in poly.coeffs] or ["0"]
    if args.format == "pretty":
        print(f"{spec.name} n={args.n} [{args.path}] in {poly.var}: {poly}")
    else:
        _emit({"coeffs": coeffs, "path": args.path, "family": spec.name, "n": args.n,
               "var": poly.var})
    return EXIT_OK


def cmd_gram(args) -> int:
    spec = _spec(args)
    opts = {}
    if spec.name in ("racah", "dual_hahn"):
        opts = {"branch": args.weight_branch, "argument": args.argument}
    report = sobolev.gram(spec, args.nmax, _quad(args), tolerance=args.tol, **opts)
    print(report.to_json())
    return EXIT_OK if report.certified else EXIT_VERIFY


def _random_hahn(rng: random.Random, N: int) -> Hahn:
    while True:
        a = Fraction(rng.randint(1, 40), rng.randint(1, 8))
        b = Fraction(rng.randint(1, 40), rng.randint(1, 8))
        if not sobolev.hahn_conditions(a, b, N):
            return Hahn(a, b, N)


def _check_items(args, spec):
    ident = args.id
    if ident in ("delta", "delta_relations"):
        ks = [args.k] if args.k is not None else range(args.n + 1)
        return [(identities.check_delta_relations, (spec, args.n, k), {}) for k in ks]
    if ident in ("difference", "difference_equation"):
        return [(identities.check_difference_equation, (spec, args.n), {})]
    if ident == "rodrigues":
        return [(identities.check_rodrigues, (spec, args.n), {})]
    if ident == "factorization":
        return [(identities.check_factorization, (spec, args.n), {"variant": args.variant})]
    if ident in ("gf", "generating_function"):
        return [(identities.check_generating_function, (spec, args.K),
                 {"form": args.form, "normalization": args.normalization})]
    raise UsageError(f"unknown identity {ident!r}")


def _run_checks(items) -> int:
    def run(item):
        fn, a, kw = item
        try:
            return fn(*a, **kw).to_dict()
        except DegenerateParameters as exc:
            return {"identity": fn.__name__, "verdict": "Error", "error": str(exc)}

    results = _ordered_map(run, items)
    status = EXIT_OK
    for r in results:
        _emit(r)
        if r["verdict"] == "Error":
            status = max(status, EXIT_PARAM)
        elif r["verdict"] == "Fail":
            status = EXIT_VERIFY
    return status


def cmd_check(args) -> int:
    if args.random:
        if args.id not in ("delta", "difference", "rodrigues", "factorization", "gf"):
            raise UsageError("--random supports delta, difference, rodrigues, factorization, gf")
        rng = random.Random(args.seed)
        N = args.N if args.N is not None else 3
        items = []
        for _ in range(args.random):
            spec = _random_hahn(rng, N)
            items.extend(_check_items(args, spec))
        return _run_checks(items)
    return _run_checks(_check_items(args, _spec(args)))


def cmd_gf(args) -> int:
    args.id = "gf"
    return cmd_check(args)


def cmd_limits(args) -> int:
    relation = identities.resolve_relation(args.relation)
    params = {}
    for name in ("alpha", "beta", "gamma", "delta", "p", "c"):
        v = getattr(args, name)
        if v is not None:
            params[name] = v
    if args.N is not None:
        params["N"] = args.N
    if args.as_printed:
        params["as_printed"] = True
    ns = range(args.n + 1) if args.all_degrees else [args.n]

    def run(n):
        return identities.limit_probe(relation, n, args.ladder, **params)

    status = EXIT_OK
    for rep in _ordered_map(run, ns):
        _emit(rep.to_dict())
        if not rep.strictly_decreasing:
            status = EXIT_VERIFY
    return status


def cmd_zeros(args) -> int:
    spec = _spec(args)
    zs = zeros.roots(spec, args.n)
    status = EXIT_OK
    if spec.finite and args.n > spec.N:
        rep = zeros.zero_structure_report(spec, args.n)
        if not rep.passed:
            status = EXIT_VERIFY
        summary = rep.to_dict()
    else:
        summary = {"family": spec.name, "n": args.n, "integer_roots": zs.integer_roots,
                   "residual_count": int(len(zs.residual_roots))}
    if args.format == "csv":
        sys.stdout.write(zeros.to_csv(zs))
    else:
        summary["roots"] = [[float(r.real), float(r.imag)] for r in zeros._sorted_residual(zs)]
        _emit(summary)
    return status


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="opoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("coeffs", help="exact coefficients of p_n, low to high degree")
    _family_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--path", choices=["hypergeometric", "ttrr"], default="hypergeometric")
    p.add_argument("--format", choices=["json", "pretty"], default="json")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("gram", help="Gram matrix under the Sobolev product")
    _family_args(p)
    _quad_args(p)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--tol", type=float, default=sobolev.CERTIFY_TOL)
    p.add_argument("--weight-branch", choices=["gamma_2iw", "gamma_2w"], default="gamma_2iw")
    p.add_argument("--argument", choices=["lattice", "square"], default="lattice")
    p.set_defaults(func=cmd_gram)

    for name, func in (("check", cmd_check), ("gf", cmd_gf)):
        p = sub.add_parser(name, help="exact identity checks (JSON lines)")
        _family_args(p, required=False)
        if name == "check":
            p.add_argument("--id", required=True,
                           choices=["delta", "difference", "rodrigues", "factorization", "gf"])
        p.add_argument("--n", type=int, default=0)
        p.add_argument("--k", type=int)
        p.add_argument("--K", type=int, default=8)
        p.add_argument("--form", choices=sorted(identities.GF_FORMS))
        p.add_argument("--normalization", choices=["monic", "printed"], default="monic")
        p.add_argument("--variant", choices=["corrected", "printed"], default="corrected")
        p.add_argument("--random", type=int, default=0, help="random Hahn draws")
        p.add_argument("--seed", type=int, default=0)
        p.set_defaults(func=func)

    p = sub.add_parser("limits", help="limit ladders (JSON lines)")
    p.add_argument("--relation", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ladder", type=_ladder, default=_ladder("1e2,1e3,1e4"))
    for name in ("alpha", "beta", "gamma", "delta", "p", "c"):
        p.add_argument(f"--{name}", type=_scalar)
    p.add_argument("--N", type=int)
    p.add_argument("--as-printed", action="store_true",
                   help="Hahn to Krawtchouk with the printed parameter order")
    p.add_argument("--all-degrees", action="store_true", help="run n = 0..n")
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("zeros", help="roots with exact deflation")
    _family_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_zeros)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"opoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyError as exc:
        print(f"opoly: error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (DegenerateParameters, ContourInvalid, TailTooFat, PoleHit, NoCounterpart) as exc:
        factor = getattr(exc, "factor", None)
        msg = {"error": type(exc).__name__, "message": str(exc)}
        if factor:
            msg["factor"] = factor
        print(json.dumps(msg))
        return EXIT_PARAM
    except OpolyError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
