"""Command-line front end: ``qonsager normalize|pbw|verify|series|eval-q``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import pbw, render, verify
from .chebyshev import DEFAULT_ORDER, SERIES_IDS, check_series_identity
from .expr import ParseError, parse_element
from .normalform import normalize_pre, to_main_basis
from .qfield import ForbiddenSpecializationError, PoleError, specialize

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_element(src: str):
    """An expression, or ``@path`` naming a JSON element file."""
    if src.startswith("@"):
        with open(src[1:], encoding="utf-8") as fh:
            return render.from_json(fh.read())
    return parse_element(src)


def _normalize(u, basis):
    return normalize_pre(u, expand=True) if basis == "pre" else to_main_basis(u)


def _render(u, fmt, chebyshev=False):
    if fmt == "json":
        return render.to_json(u, indent=2)
    if fmt == "latex":
        return render.to_latex(u, chebyshev=chebyshev)
    return render.to_text(u)


def cmd_normalize(args) -> tuple[int, str]:
    u = _normalize(_read_element(args.expr), args.basis)
    return EXIT_OK, _render(u, args.format)


def _pbw_value(family, n, method):
    if family == "delta":
        return pbw.pbw_delta(n, method).value
    return pbw.pbw_real(family, n, method).value


def cmd_pbw(args) -> tuple[int, str]:
    family, n = args.family, args.n
    if n < 0 or (family == "delta" and n == 0):
        raise UsageError(f"index-out-of-range: {family} needs n >= {1 if family == 'delta' else 0}")
    methods = pbw.DELTA_METHODS if family == "delta" else pbw.REAL_METHODS
    cheb = family == "delta" and args.format == "latex"
    if args.method == "all":
        values = [_pbw_value(family, n, m) for m in methods]
        agree = all(v == values[0] for v in values)
        body = _render(values[0], args.format, cheb)
        if args.format == "json":
            obj = {"element": render.to_json_obj(values[0]), "methods": list(methods), "agree": agree}
            return (EXIT_OK if agree else EXIT_FAIL), json.dumps(obj, indent=2)
        return (EXIT_OK if agree else EXIT_FAIL), f"{body}\nmethods agree: {'yes' if agree else 'no'}"
    method = args.method or methods[0]
    if method not in methods:
        raise UsageError(f"method {method!r} does not apply to family {family}; choose from {', '.join(methods)}")
    return EXIT_OK, _render(_pbw_value(family, n, method), args.format, cheb)


def cmd_verify(args) -> tuple[int, str]:
    report = verify.run_suite(args.suite, args.max_n, args.order)
    out = verify.report_json(report) if args.format == "json" else report.to_text()
    return (EXIT_OK if report.passed else EXIT_FAIL), out


def cmd_series(args) -> tuple[int, str]:
    names = SERIES_IDS if args.which == "all" else (args.which,)
    results = {w: check_series_identity(w, args.order) for w in names}
    if args.format == "json":
        out = json.dumps({"order": args.order, "results": results}, indent=2)
    else:
        out = "\n".join(f"{'PASS' if ok else 'FAIL'}  {w}  order {args.order}" for w, ok in results.items())
    return (EXIT_OK if all(results.values()) else EXIT_FAIL), out


def cmd_eval_q(args) -> tuple[int, str]:
    try:
        q0 = Fraction(args.q0)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --q0 value {args.q0!r}") from exc
    u = _normalize(_read_element(args.expr), args.basis)
    values = [(key, specialize(c, q0)) for key, c in u.items()]
    if args.format == "json":
        rows = [{"word": w, "omega": cm.omega, "alpha": cm.alpha, "beta": cm.beta,
                 "gamma": cm.gamma, "value": str(v)} for (w, cm), v in values]
        return EXIT_OK, json.dumps({"q0": str(q0), "terms": rows}, indent=2)
    lines = [f"{render._monomial_text(w, cm) or '1'}\t{v}" for (w, cm), v in values]
    return EXIT_OK, "\n".join(lines) if lines else "0"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qonsager", description="Exact computations in the universal Askey-Wilson algebra.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json", "latex")):
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--output", help="write the result to this file")

    sp = sub.add_parser("normalize", help="normalize an expression (or @file.json)")
    sp.add_argument("expr")
    sp.add_argument("--basis", choices=("pre", "main"), default="main")
    common(sp)
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("pbw", help="image of a PBW element")
    sp.add_argument("family", choices=pbw.FAMILIES)
    sp.add_argument("n", type=int)
    sp.add_argument("--method", help="recursive, closed, alt, automorphism, recursive-a1, recursive-a0 or all")
    common(sp)
    sp.set_defaults(func=cmd_pbw)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", nargs="?", default="all", choices=("all",) + verify.SUITES)
    sp.add_argument("--max-n", type=int, default=None)
    sp.add_argument("--order", type=int, default=DEFAULT_ORDER)
    common(sp, ("text", "json"))
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("series", help="check a generating-function identity")
    sp.add_argument("which", nargs="?", default="all", choices=("all",) + SERIES_IDS)
    sp.add_argument("--order", type=int, default=DEFAULT_ORDER)
    common(sp, ("text", "json"))
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("eval-q", help="normalize, then specialize coefficients at q = q0")
    sp.add_argument("expr")
    sp.add_argument("--q0", required=True, help="rational value p/r")
    sp.add_argument("--basis", choices=("pre", "main"), default="main")
    common(sp, ("text", "json"))
    sp.set_defaults(func=cmd_eval_q)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_n", None) is not None and args.max_n < 1:
        parser.error("--max-n must be >= 1")
    if getattr(args, "order", 1) < 1:
        parser.error("--order must be >= 1")
    try:
        code, out = args.func(args)
    except (ParseError, UsageError, ForbiddenSpecializationError, PoleError, ValueError, OSError) as exc:
        kind = getattr(exc, "kind", "error")
        print(f"qonsager: {kind}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
