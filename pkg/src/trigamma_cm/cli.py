"""Command-line front end: evaluate any registered function, run the
verification suites, and export scans/region maps as CSV.

Exit codes: 0 all passed, 1 at least one claim failed, 2 usage or
configuration error, 3 inconclusive results only.  Output formatting is fixed
(17 significant digits, '.' decimal separator, '\\n' line endings) so
identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import kernel, laplace, lemma_f, ratios
from .polygamma import phi, phi_deriv, polygamma
from .precision import (
    AccuracyError,
    DomainError,
    PrecisionPolicy,
    fmt17,
    log_grid,
)
from .quadrature import QuadratureConfig
from .suites import SUITE_NAMES, SuiteOptions, run_suite

SCHEMA_LINE = "# schema=1"
ENV_PREFIX = "TRIGAMMA_CM_"


def _env(name: str, cast, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError as exc:
        raise DomainError(f"bad value for {ENV_PREFIX}{name}: {raw!r}") from exc


# Registry: name -> (parameter flag names, abscissa arity, evaluator)
# The evaluator receives (args, point) where point is one abscissa (or a pair
# for the two-variable functions).


def _registry(policy: PrecisionPolicy, quad: QuadratureConfig):
    bits = policy.prec_bits
    return {
        "phi": ((), 1, lambda a, x: phi(x, policy)),
        "phi_deriv": (("k",), 1, lambda a, x: phi_deriv(a.k, x, policy)),
        "polygamma": (("k",), 1, lambda a, x: polygamma(a.k, x, policy)),
        "h": ((), 1, lambda a, t: kernel.h(t, bits)),
        "h_ratio": (("s",), 1, lambda a, t: kernel.h_ratio(a.s, t, bits)),
        "h_ratio_product": (("s",), 1, lambda a, t: kernel.h_ratio_product(a.s, t, bits)),
        "Y": (("m", "n"), 1, lambda a, x: ratios.Y(a.m, a.n, x, policy)),
        "calY": (("m", "n", "omega"), 1, lambda a, x: ratios.calY(a.m, a.n, a.omega, x, policy)),
        "H": (("beta",), 1, lambda a, x: ratios.H_beta(a.beta, x, policy)),
        "frakH": (("alpha",), 1, lambda a, x: ratios.frakH(a.alpha, x, policy)),
        "J": (("k", "mu"), 1, lambda a, x: ratios.J(a.k, a.mu, x, policy)),
        "frakJ": (("k", "lam"), 1, lambda a, x: ratios.frakJ(a.k, a.lam, x, policy)),
        "calJ": (("k", "m"), 1, lambda a, x: ratios.calJ(a.k, a.m, x, policy)),
        "remark_expression": (("m", "n"), 1, lambda a, x: ratios.remark_expression(a.m, a.n, x, policy)),
        "frak_y": (("m", "n"), 1, lambda a, t: laplace.frak_y(a.m, a.n, t, quad)),
        "frak_y_recip": (("m", "n"), 1, lambda a, t: laplace.frak_y_reciprocal_substituted(a.m, a.n, t, quad)),
        "convolution_kernel": (("m", "n"), 1, lambda a, t: laplace.convolution_kernel(a.m, a.n, t, quad)),
        "laplace_phi_deriv": (("k",), 1, lambda a, x: laplace.laplace_phi_deriv(a.k, x, quad, policy.max_order)),
        "beta_weight": (("m", "n"), 0, lambda a, _: laplace.beta_weight(a.m, a.n)),
        "sharp_constant": (("m", "n"), 0, lambda a, _: ratios.sharp_constant(a.m, a.n).value),
        "F": ((), 2, lambda a, p: lemma_f.F(p[0], p[1], bits)),
        "F_rearranged": ((), 2, lambda a, p: lemma_f.F_rearranged(p[0], p[1], bits)),
    }


def _require(args, names, func):
    for name in names:
        if getattr(args, name, None) is None:
            raise DomainError(f"{func} requires --{name.replace('_', '-')}")


def _policy_from(args) -> PrecisionPolicy:
    return PrecisionPolicy(
        target_rtol=args.tol,
        prec_bits=args.prec_bits,
        max_order=args.max_order,
    )


def _quad_from(args) -> QuadratureConfig:
    return QuadratureConfig(nodes=args.nodes)


def _emit(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _format_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    return fmt17(v)


def _points_from(args, arity):
    if args.log_grid:
        lo, hi, n = args.log_grid
        if arity != 1:
            raise DomainError("--log-grid applies to single-abscissa functions")
        return list(log_grid(float(lo), float(hi), int(n)))
    values = [float(v) for v in args.values]
    if getattr(args, "x", None):
        values.extend(args.x)
    if arity == 0:
        return [None] if not values else values
    if arity == 2:
        if not values or len(values) % 2:
            raise DomainError("two-variable functions take value pairs: x y [x y ...]")
        return [tuple(values[i : i + 2]) for i in range(0, len(values), 2)]
    if not values:
        raise DomainError("no evaluation points given (positional, --x, or --log-grid)")
    return values


def _cmd_eval(args) -> int:
    policy = _policy_from(args)
    quad = _quad_from(args)
    registry = _registry(policy, quad)
    if args.function not in registry:
        raise DomainError(
            f"unknown function {args.function!r}; known: {', '.join(sorted(registry))}"
        )
    flags, arity, evaluate = registry[args.function]
    _require(args, flags, args.function)
    points = _points_from(args, arity)
    lines = []
    if args.csv:
        lines.append(SCHEMA_LINE)
        lines.append("x,y,value" if arity == 2 else ("value" if arity == 0 else "x,value"))
    for p in points:
        v = evaluate(args, p)
        if args.csv:
            if arity == 2:
                lines.append(f"{fmt17(p[0])},{fmt17(p[1])},{_format_value(v)}")
            elif arity == 0:
                lines.append(_format_value(v))
            else:
                lines.append(f"{fmt17(p)},{_format_value(v)}")
        else:
            lines.append(_format_value(v))
    _emit(lines, args.out)
    return 0


def _cmd_scan(args) -> int:
    if not args.log_grid:
        raise DomainError("scan requires --log-grid LO HI N")
    args.csv = True
    return _cmd_eval(args)


def _cmd_region_map(args) -> int:
    if args.function != "F":
        raise DomainError("region-map supports the function F")
    rm = lemma_f.sign_region_map(
        (args.x_range[0], args.x_range[1]),
        (args.y_range[0], args.y_range[1]),
        args.res,
        args.prec_bits,
    )
    lines = [SCHEMA_LINE, "x,y,sign"]
    for x, y, s in rm.rows():
        lines.append(f"{fmt17(x)},{fmt17(y)},{s}")
    _emit(lines, args.out)
    return 0


def _cmd_verify(args) -> int:
    policy = _policy_from(args)
    pairs = None
    if args.m is not None and args.n is not None:
        pairs = ((args.m, args.n),)
    options = SuiteOptions(
        policy=policy,
        quadrature=_quad_from(args),
        pairs=pairs,
        grid_points=args.grid_points,
    )
    result = run_suite(args.suite, options)
    for c in result.claims:
        print(f"[{c.status.upper():>12}] {c.claim_id}: {c.anchor}")
    print(
        f"suite {result.suite}: {result.passes} passed, {result.fails} failed, "
        f"{result.inconclusives} inconclusive ({result.checked} claims, "
        f"{result.elapsed_s:.1f}s)"
    )
    if args.out:
        with open(args.out, "w", newline="") as fh:
            json.dump(result.to_dict(), fh, indent=2)
            fh.write("\n")
        print(f"report written to {args.out}")
    return result.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigamma-cm",
        description="evaluate the trigamma-based function family and verify "
        "its monotonicity/complete-monotonicity claims",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--k", type=int, default=None)
        p.add_argument("--omega", type=float, default=None)
        p.add_argument("--s", type=float, default=None)
        p.add_argument("--beta", type=float, default=None)
        p.add_argument("--mu", type=float, default=None)
        p.add_argument("--lam", type=float, default=None)
        p.add_argument("--alpha", type=float, default=None)
        p.add_argument(
            "--x", type=float, action="append", default=None,
            help="evaluation abscissa (repeatable)",
        )
        p.add_argument("--tol", type=float, default=_env("TOL", float, 1e-12))
        p.add_argument("--max-order", type=int, default=_env("MAX_ORDER", int, 12))
        p.add_argument("--prec-bits", type=int, default=_env("PREC_BITS", int, 192))
        p.add_argument("--nodes", type=int, default=_env("NODES", int, 48))
        p.add_argument("--out", type=str, default=None)

    p_eval = sub.add_parser("eval", help="evaluate a function at given points")
    p_eval.add_argument("function")
    p_eval.add_argument("values", nargs="*")
    p_eval.add_argument("--log-grid", nargs=3, metavar=("LO", "HI", "N"), default=None)
    p_eval.add_argument("--csv", action="store_true")
    add_common(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES)
    p_verify.add_argument(
        "--grid-points", type=int, default=_env("GRID_POINTS", int, 200)
    )
    add_common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_scan = sub.add_parser("scan", help="scan a function over a log grid to CSV")
    p_scan.add_argument("function")
    p_scan.add_argument("values", nargs="*")
    p_scan.add_argument("--log-grid", nargs=3, metavar=("LO", "HI", "N"), default=None)
    add_common(p_scan)
    p_scan.set_defaults(func=_cmd_scan)

    p_region = sub.add_parser("region-map", help="sign map of F over a rectangle")
    p_region.add_argument("function")
    p_region.add_argument("--x", dest="x_range", nargs=2, type=float, required=True, metavar=("LO", "HI"))
    p_region.add_argument("--y", dest="y_range", nargs=2, type=float, required=True, metavar=("LO", "HI"))
    p_region.add_argument("--res", type=int, default=50)
    p_region.add_argument("--prec-bits", type=int, default=_env("PREC_BITS", int, 192))
    p_region.add_argument("--out", type=str, default=None)
    p_region.set_defaults(func=_cmd_region_map)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (DomainError, AccuracyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
