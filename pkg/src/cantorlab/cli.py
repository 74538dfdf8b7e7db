"""Command-line surface.

Every command is a pure function of its arguments.  Rationals are accepted
as ``p/q``, integers, or finite decimals, and are printed both as decimal
strings with explicit precision and as exact ``p/q`` fields.  Exit codes:
0 success, 2 usage error, 3 tolerance/iteration failure, 4 undetermined
verdict under ``--strict``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from . import critical, figures, selfsimilar, uniqueness
from .admissible import min_admissible
from .expansion import DEFAULT_DEPTH_CAP, quasi_greedy
from .intervals import RatInterval, ToleranceError, decimal_str
from .sequences import Params, format_code, parse_code, pi_value

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_TOLERANCE = 3
EXIT_UNDETERMINED = 4

DEPTH_CAP_ENV = "CANTORLAB_DEPTH_CAP"
DECIMALS = 12


def fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational literal: {text!r}") from None


def _depth_cap(args) -> int:
    if getattr(args, "depth_cap", None):
        return args.depth_cap
    env = os.environ.get(DEPTH_CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(EXIT_USAGE)
    return DEFAULT_DEPTH_CAP


def _params(args) -> Params:
    try:
        return Params(args.N, args.beta)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from None


def _signed_code(args, params: Params):
    try:
        return parse_code(args.code, params.signed_alphabet)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from None


def _interval_json(iv: RatInterval) -> dict:
    return {
        "lo": decimal_str(iv.lo, DECIMALS, "floor"),
        "hi": decimal_str(iv.hi, DECIMALS, "ceil"),
        "lo_exact": str(iv.lo),
        "hi_exact": str(iv.hi),
    }


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        print(text, end="" if text.endswith("\n") else "\n")
        return
    directory = os.path.dirname(os.path.abspath(out_path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cantorlab-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, out_path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _rounded_5(iv: RatInterval, refine) -> tuple[str, RatInterval]:
    """Refine until both endpoints round to the same 5-decimal string."""
    for _ in range(8):
        lo5 = decimal_str(iv.lo, 5, "nearest")
        hi5 = decimal_str(iv.hi, 5, "nearest")
        if lo5 == hi5:
            return lo5, iv
        iv = refine(iv.width / 100)
    raise ToleranceError("enclosure would not settle on a 5-decimal rounding")


def cmd_critical_points(args) -> int:
    rows = []
    for n in range(args.n_from, args.n_to + 1):
        enc = critical.beta_c(n, args.tol)
        beta_str, beta_iv = _rounded_5(enc.interval, lambda tol, e=enc: e.refine(tol).interval)
        surd = critical.QuadraticSurd(n)
        alpha_iv = surd.enclosure(args.tol)
        alpha_str, alpha_iv = _rounded_5(alpha_iv, lambda tol, s=surd: s.enclosure(tol))
        rows.append((n, beta_str, beta_iv, alpha_str, alpha_iv))
    if args.format == "table":
        lines = ["N    beta_c     alpha_c"]
        for n, beta_str, _, alpha_str, _ in rows:
            lines.append(f"{n:<4} {beta_str:<10} {alpha_str}")
        _emit("\n".join(lines) + "\n", args.out)
    elif args.format == "csv":
        lines = ["N,beta_c,alpha_c,beta_c_lo,beta_c_hi,alpha_c_lo,alpha_c_hi"]
        for n, beta_str, beta_iv, alpha_str, alpha_iv in rows:
            lines.append(
                f"{n},{beta_str},{alpha_str},{beta_iv.lo},{beta_iv.hi},{alpha_iv.lo},{alpha_iv.hi}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        payload = [
            {"N": n, "beta_c": _interval_json(beta_iv), "alpha_c": _interval_json(alpha_iv)}
            for n, _, beta_iv, _, alpha_iv in rows
        ]
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_lambda(args) -> int:
    digits = min_admissible(args.m, args.count)
    _emit(" ".join(str(d) for d in digits) + "\n", args.out)
    return EXIT_OK


def cmd_expand(args) -> int:
    digits = quasi_greedy(args.x, args.beta, args.m, args.count)
    _emit(" ".join(str(d) for d in digits) + "\n", args.out)
    return EXIT_OK


def cmd_unique(args) -> int:
    params = _params(args)
    code = _signed_code(args, params)
    tc = uniqueness.TranslationCode(code, params)
    cap = _depth_cap(args)
    exact = uniqueness.unique_exact(tc)
    lex = uniqueness.unique_lex(tc, cap)
    report = uniqueness.enum_codes(tc.t, params, args.depth)
    payload = {
        "t": str(tc.t),
        "t_decimal": decimal_str(tc.t, DECIMALS, "nearest"),
        "code": format_code(code),
        "exact": exact,
        "lex": lex.kind,
        "enumDepthConsistent": report.consistent_depth(),
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    if args.strict and lex.is_undetermined:
        return EXIT_UNDETERMINED
    return EXIT_OK


def cmd_codes(args) -> int:
    params = _params(args)
    lines = []
    for prefix, _ in uniqueness.code_prefix_tree(args.t, params, args.depth):
        lines.append("  " * (len(prefix) - 1) + str(prefix[-1]))
    _emit("\n".join(lines) + ("\n" if lines else ""), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    params = _params(args)
    report = uniqueness.enum_codes(args.t, params, args.depth)
    payload = {
        "t": str(Fraction(args.t)),
        "counts": list(report.counts),
        "explodedAt": report.exploded_at,
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    params = _params(args)
    u, s = critical.classify(params)
    payload = {"N": params.N, "beta": str(params.beta), "U": u.verdict, "S": s.verdict}
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_selfsimilar(args) -> int:
    params = _params(args)
    code = _signed_code(args, params)
    tc = uniqueness.TranslationCode(code, params)
    if not uniqueness.unique_exact(tc):
        payload = {"member": False, "reason": "code is not unique", "t": str(tc.t)}
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
        return EXIT_OK
    witness = selfsimilar.in_selfsimilar_set(tc)
    if witness is None:
        payload = {"member": False, "t": str(tc.t), "unique": True}
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
        return EXIT_OK
    spec = selfsimilar.build_ifs(witness, params)
    result = selfsimilar.verify_ifs(spec, tc, args.depth)
    payload = {
        "member": True,
        "t": str(tc.t),
        "unique": True,
        "witness": {"q": witness.q, "head": list(witness.head), "block": list(witness.block)},
        "ifs": {"ratio": str(spec.ratio), "offsets": [str(s) for s in spec.offsets]},
        "verified": result.verified,
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_dims(args) -> int:
    params = _params(args)
    code = _signed_code(args, params)
    tc = uniqueness.TranslationCode(code, params)
    report = selfsimilar.dims(tc)
    payload = {
        "dimH": decimal_str(report.dim_h.mid, DECIMALS, "nearest"),
        "dimP": decimal_str(report.dim_p.mid, DECIMALS, "nearest"),
        "dimH_lo": decimal_str(report.dim_h.lo, DECIMALS, "floor"),
        "dimH_hi": decimal_str(report.dim_h.hi, DECIMALS, "ceil"),
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_figure(args) -> int:
    params = _params(args)
    svg = figures.svg_figure(params, args.t, args.levels)
    _emit(svg, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cantorlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_params=True, with_code=False, with_out=True):
        if with_params:
            p.add_argument("--N", type=int, required=True, help="number of parts N >= 2")
            p.add_argument("--beta", type=fraction_arg, required=True, help="exact rational base, e.g. 39/100")
        if with_code:
            p.add_argument("--code", required=True, help='code literal "pre|per", e.g. "-1,0|2,-2"')
        if with_out:
            p.add_argument("--out", default=None, help="write output to this path (atomic)")

    p = sub.add_parser("critical-points", help="certified critical-base table")
    p.add_argument("--n-from", type=int, default=2)
    p.add_argument("--n-to", type=int, default=9)
    p.add_argument("--tol", type=fraction_arg, default=Fraction(1, 10**6))
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    add_common(p, with_params=False)
    p.set_defaults(func=cmd_critical_points)

    p = sub.add_parser("lambda", help="smallest admissible word digits")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    add_common(p, with_params=False)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("expand", help="quasi-greedy expansion digits")
    p.add_argument("--x", type=fraction_arg, required=True)
    p.add_argument("--beta", type=fraction_arg, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    add_common(p, with_params=False)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("unique", help="uniqueness of a signed code")
    add_common(p, with_code=True)
    p.add_argument("--depth", type=int, default=40, help="enumeration depth")
    p.add_argument("--depth-cap", type=int, default=None, help="lexicographic comparison cap")
    p.add_argument("--strict", action="store_true", help="exit 4 on an undetermined verdict")
    p.set_defaults(func=cmd_unique)

    p = sub.add_parser("codes", help="print the code prefix tree of t")
    add_common(p)
    p.add_argument("--t", type=fraction_arg, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_codes)

    p = sub.add_parser("enumerate", help="count code prefixes of t per depth")
    add_common(p)
    p.add_argument("--t", type=fraction_arg, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="regimes of the unique and self-similar sets")
    add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("selfsimilar", help="self-similarity of the intersection")
    add_common(p, with_code=True)
    p.add_argument("--depth", type=int, default=6, help="verification depth")
    p.set_defaults(func=cmd_selfsimilar)

    p = sub.add_parser("dims", help="dimensions of the intersection")
    add_common(p, with_code=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("figure", help="SVG diagram of both component families")
    add_common(p)
    p.add_argument("--t", type=fraction_arg, required=True)
    p.add_argument("--levels", type=int, default=1)
    p.set_defaults(func=cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ToleranceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOLERANCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
