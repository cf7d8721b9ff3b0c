"""``hyperzero`` command line.

Exit status: 0 on success, 1 when a mathematical check fails, 2 on a parse
or usage error.  Reports go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from .camshaft import check_product, predict, product_remainder, verify_products
from .errors import ConstantPolynomial, HyperzeroError, ParseError
from .octonion import class_of
from .poly import normal, star_mul
from .series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    reconstruction_error,
    series_divide_linear,
    tail_bound_check,
)
from .textio import format_number, format_octonion, format_poly, format_real_poly, parse_octonion, parse_poly
from .tolerance import DEFAULT, Tolerances
from .zeros import factorize, remainder_at, summarize, zero_set

USAGE_ERROR, CHECK_FAILED = 2, 1


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser):
    p.add_argument("--tol-abs", type=float)
    p.add_argument("--tol-rel", type=float)
    p.add_argument("--tol-root", type=float)
    p.add_argument("--tol-class", type=float)
    p.add_argument("--tol-div", type=float)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="series truncation order")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="print a JSON report")
    p.add_argument("--quaternion", action="store_true", help="reject k, ik, jk, ijk")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperzero", description="Zeros of octonionic regular polynomials.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="command")

    def verb(name, help, inputs):
        p = sub.add_parser(name, help=help)
        for arg, h in inputs:
            p.add_argument(arg, nargs="?", help=h)
        _common(p)
        return p

    verb("zeros", "zero set with kinds and multiplicities", [("f", "polynomial (stdin if omitted)")])
    verb("factor", "factor into linear terms", [("f", "polynomial")])
    verb("product", "star product f*g", [("f", "polynomial"), ("g", "polynomial")])
    verb("normal", "normal polynomial N(f)", [("f", "polynomial")])
    verb("remainder", "remainder on the class of alpha", [("f", "polynomial"), ("alpha", "octonion")])
    verb("camshaft", "predicted and actual zeros of f*g", [("f", "polynomial"), ("g", "polynomial")])
    verb("fta", "check the zero count against the degree", [("f", "polynomial")])
    p = verb("series-divide", "divide a truncated series by w - alpha", [("f", "series"), ("alpha", "octonion")])
    p.add_argument("--radius", type=float, help="convergence radius of a polynomial-text series")
    p.add_argument("--geometric", type=float, metavar="Q", help="use sum w^n Q^n instead of F")
    p.add_argument("--value", help="exact f(alpha), if known")
    p.add_argument("--rho", type=float, action="append", help="radius for the tail-bound check")
    p = verb("verify", "random differential check of the product formulas", [])
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-degree", type=int, default=3)
    return parser


def tolerances(args) -> Tolerances:
    return DEFAULT.with_(abs=args.tol_abs, rel=args.tol_rel, root=args.tol_root, cls=args.tol_class, div=args.tol_div)


def _inputs(args, names):
    """Positional inputs; missing ones are read from stdin, one per line."""
    values = [getattr(args, n) for n in names]
    missing = [k for k, v in enumerate(values) if v is None]
    if missing:
        lines = [ln for ln in sys.stdin.read().splitlines() if ln.strip()]
        if len(lines) < len(missing):
            raise UsageError(f"expected {len(names)} input(s): {', '.join(names)}")
        for k, line in zip(missing, lines):
            values[k] = line
    return values


def _poly(text, args):
    return parse_poly(text, args.quaternion)


# verbs return (report, ok); the text form is built alongside


def cmd_zeros(args, tol):
    (text,) = _inputs(args, ["f"])
    f = _poly(text, args)
    records = zero_set(f, tol)
    summary = summarize(records, f.degree)
    lines = [f"f = {format_poly(f, tol)}"]
    for r in records:
        where = format_octonion(r.point, tol) if r.point is not None else "whole sphere"
        lines.append(f"{r.kind:9s} {_cls(r.cls, tol)}  {where}  (multiplicity {r.multiplicity})")
    lines.append(_fta_line(summary))
    report = {"f": f.to_json(), "zeros": [r.to_json() for r in records], "fta": summary.to_json()}
    return report, lines, True


def _cls(c, tol):
    return f"t={format_number(c.t, tol)} n={format_number(c.n, tol)}"


def _fta_line(s):
    return f"real {s.r}, isolated {s.i}, spherical {s.s}; total multiplicity {s.total_multiplicity} of degree {s.degree}"


def cmd_factor(args, tol):
    (text,) = _inputs(args, ["f"])
    f = _poly(text, args)
    fac = factorize(f, tol)
    factors = "*".join(f"(w - ({format_octonion(a, tol)}))" for a in fac.roots)
    err = (fac.expand() - f).scale()
    ok = tol.small(err, f.scale())
    lines = [f"{factors}*({format_octonion(fac.c, tol)})", f"reconstruction error {err:.3g}"]
    report = {"f": f.to_json(), "factorization": fac.to_json(), "reconstruction_error": err, "ok": ok}
    return report, lines, ok


def cmd_product(args, tol):
    a, b = _inputs(args, ["f", "g"])
    fg = star_mul(_poly(a, args), _poly(b, args), tol)
    return {"product": fg.to_json()}, [format_poly(fg, tol)], True


def cmd_normal(args, tol):
    (text,) = _inputs(args, ["f"])
    N = normal(_poly(text, args), tol)
    return {"normal": N.to_json()}, [format_real_poly(N, tol)], True


def cmd_remainder(args, tol):
    a, b = _inputs(args, ["f", "alpha"])
    f = _poly(a, args)
    c = class_of(parse_octonion(b, args.quaternion), tol)
    rem = remainder_at(f, c, tol)
    text = format_poly(rem.as_poly(), tol)
    return rem.to_json(), [f"class {_cls(c, tol)}: remainder {text}"], True


def cmd_camshaft(args, tol):
    a, b = _inputs(args, ["f", "g"])
    f, g = _poly(a, args), _poly(b, args)
    res = check_product(f, g, "given", tol, args.quaternion)
    lines = [f"f*g = {format_poly(star_mul(f, g, tol), tol)}"]
    preds = []
    if res.ok:
        zf = zero_set(f, tol) if f.degree >= 1 else []
        zg = zero_set(g, tol) if g.degree >= 1 else []
        seen = []
        for rec in zf + zg:
            if any(rec.cls.isclose(c, tol) for c in seen):
                continue
            seen.append(rec.cls)
            c = rec.cls
            rec_f = next((r for r in zf if r.cls.isclose(c, tol)), None)
            rec_g = next((r for r in zg if r.cls.isclose(c, tol)), None)
            rf, rg = remainder_at(f, c, tol), remainder_at(g, c, tol)
            pred = predict(c, rec_f, rec_g, rf, rg, tol)
            entry = pred.to_json()
            if not c.is_real(tol):
                entry["product_remainder"] = product_remainder(rf, rg, c).to_json()
            preds.append(entry)
            p = pred.predicted
            where = format_octonion(p.point, tol) if p.point is not None else "whole sphere"
            flag = " [borderline]" if pred.borderline else ""
            lines.append(f"{pred.case_tag:15s} {_cls(c, tol)}  {p.kind} {where} (multiplicity {p.multiplicity}){flag}")
        lines.append("predictions agree with the zeros of f*g")
    else:
        lines.append(f"mismatch: {res.message}")
    report = {"predictions": preds, "ok": res.ok, "borderline": res.borderline, "message": res.message}
    return report, lines, res.ok


def cmd_fta(args, tol):
    (text,) = _inputs(args, ["f"])
    f = _poly(text, args)
    s = summarize(zero_set(f, tol), f.degree)
    ok = s.total_multiplicity == s.degree and s.r + s.i + 2 * s.s <= s.degree
    return {**s.to_json(), "ok": ok}, [_fta_line(s)], ok


def _series(text, args):
    if args.geometric is not None:
        return TruncatedSeries.geometric(args.order, args.geometric)
    if text is None:
        raise UsageError("series-divide needs a series or --geometric")
    stripped = text.strip()
    if stripped.startswith("{") and "radius" in stripped:
        try:
            return TruncatedSeries.from_json(json.loads(stripped))
        except (ValueError, KeyError) as exc:
            raise ParseError(f"bad series JSON: {exc}", text, 0) from None
    radius = args.radius if args.radius is not None else float("inf")
    return TruncatedSeries.from_poly(_poly(text, args), args.order, radius)


def cmd_series_divide(args, tol):
    if args.geometric is not None:
        if args.f is not None and args.alpha is None:
            args.alpha, args.f = args.f, None
        (alpha_text,) = _inputs(args, ["alpha"])
        f_text = None
    else:
        f_text, alpha_text = _inputs(args, ["f", "alpha"])
    f = _series(f_text, args)
    alpha = parse_octonion(alpha_text, args.quaternion)
    value = None if args.value is None else parse_octonion(args.value, args.quaternion)
    g, r = series_divide_linear(f, alpha, args.order, value)
    err = reconstruction_error(f.truncate(min(args.order, f.order)), alpha, g, r, g.order - 1)
    bounds = tail_bound_check(f, alpha, alpha.norm(), args.rho, g=g) if g.order > 0 else []
    ok = all(b.ok for b in bounds)
    show = min(g.order, 8)
    lines = [f"r = {format_octonion(r, tol)}"]
    lines += [f"b_{n} = {format_octonion(g.coeff(n), tol)}" for n in range(show + 1)]
    if show < g.order:
        lines.append(f"... ({g.order + 1} coefficients)")
    lines.append(f"reconstruction error {err:.3g}")
    for b in bounds:
        lines.append(f"tail bound rho={b.rho:.6g}: n_rho={b.n_rho}, max ratio {b.max_ratio:.3g}, {len(b.violations)} violations")
    report = {
        "quotient": g.to_json(),
        "remainder": r.to_json(),
        "reconstruction_error": err,
        "tail_bounds": [b.to_json() for b in bounds],
        "ok": ok,
    }
    return report, lines, ok


def cmd_verify(args, tol):
    if args.trials < 1 or args.max_degree < 1:
        raise UsageError("--trials and --max-degree must be positive")
    rep = verify_products(args.trials, args.max_degree, args.seed, args.quaternion, tol=tol)
    lines = [
        f"{rep.passes}/{rep.trials} trials passed, {rep.borderline} borderline",
        f"worst N(f*g) residual {rep.worst_residual:.3g}",
        "cases: " + ", ".join(f"{k} {v}" for k, v in sorted(rep.case_counts.items())),
    ]
    lines += [f"FAIL [{w.scenario}] {w.message}" for w in rep.failures]
    return rep.to_json(), lines, rep.ok


COMMANDS = {
    "zeros": cmd_zeros,
    "factor": cmd_factor,
    "product": cmd_product,
    "normal": cmd_normal,
    "remainder": cmd_remainder,
    "camshaft": cmd_camshaft,
    "fta": cmd_fta,
    "series-divide": cmd_series_divide,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    try:
        tol = tolerances(args)
        report, lines, ok = COMMANDS[args.verb](args, tol)
    except ParseError as exc:
        print(f"hyperzero: {exc}\n{exc.pointer()}", file=sys.stderr)
        return USAGE_ERROR
    except (UsageError, ConstantPolynomial) as exc:
        print(f"hyperzero: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except HyperzeroError as exc:
        print(f"hyperzero: {type(exc).__name__}: {exc}", file=sys.stderr)
        return CHECK_FAILED
    except ValueError as exc:
        print(f"hyperzero: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(lines))
    return 0 if ok else CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
