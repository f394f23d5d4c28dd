"""Command-line interface.

Exit codes: 0 ok, 2 parse/domain error, 3 infinite rank, 4 self-test
failure, 5 symbol outside the differentiable class.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .constructor import check_diagonal_conditions, make_example, matrix_to_expr
from .criteria import classify_monomial_pair, classify_poly_pair, pde_verify, polynomial_product_expr
from .diamond import diamond
from .errors import DomainError, NotDifferentiableClass, ParamDomain, ParseError
from .parser import parse_operator, parse_symbol, print_operator, print_symbol
from .poly import Poly
from .report import envelope, scalar_json, symbol_json, vector_json, vector_text
from .scalars import frac_str
from .symbols import from_laurent, integrability_class, laurent_coeffs
from .toeplitz import compute_rank
from . import selftest

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INFINITE = 3
EXIT_SELFTEST = 4
EXIT_NOT_DIFFERENTIABLE = 5

_stdin_cache = None


def _text(arg: str) -> str:
    """``-`` reads the argument from stdin (once)."""
    global _stdin_cache
    if arg != "-":
        return arg
    if _stdin_cache is None:
        _stdin_cache = sys.stdin.read().strip()
    return _stdin_cache


def _holomorphic_poly(text: str) -> Poly:
    coeffs = laurent_coeffs(parse_symbol(text))
    if any(k < 0 for k in coeffs):
        raise DomainError("%r has negative powers; a polynomial is required" % text)
    return Poly(coeffs.get(k, 0) for k in range(max(coeffs, default=-1) + 1))


def _laurent(text: str):
    f = parse_symbol(text)
    try:
        laurent_coeffs(f)
    except ValueError as exc:
        raise DomainError(str(exc))
    return f


# -- commands -------------------------------------------------------------


def cmd_diamond(args):
    f, g = parse_symbol(_text(args.f)), parse_symbol(_text(args.g))
    h = diamond(f, g)
    cls = integrability_class(h)
    if args.format == "json":
        out = envelope(
            "diamond",
            {"f": print_symbol(f), "g": print_symbol(g)},
            {"diamond": symbol_json(h, args.decimal), "integrability_class": cls},
        )
    else:
        out = "%s\nclass: %s" % (print_symbol(h), cls)
    return EXIT_OK, out


def cmd_rank(args):
    E = parse_operator(_text(args.expr))
    res = compute_rank(E)
    cert = res.certificate
    if args.format == "json":
        result = {
            "certificate": "yes" if cert.certified else "no",
            "rank": "infinite" if res.infinite else res.rank,
            "K0": cert.K0,
            "image_basis": [vector_json(v, args.decimal) for v in res.image_basis],
        }
        if cert.certified:
            result["images"] = {
                str(k): vector_json(v, args.decimal) for k, v in res.images.items() if v
            }
        else:
            result["nonzero_shifts"] = cert.nonzero_shifts()
        out = envelope("rank", {"expr": print_operator(E)}, result)
    else:
        lines = [
            "expr: %s" % print_operator(E),
            "certificate: %s" % ("yes" if cert.certified else "no"),
            "K0: %d" % cert.K0,
            "rank: %s" % ("infinite" if res.infinite else res.rank),
        ]
        for v in res.image_basis:
            lines.append("  basis: %s" % vector_text(v))
        out = "\n".join(lines)
    return (EXIT_INFINITE if res.infinite else EXIT_OK), out


def _parse_pair(text):
    parts = [x.strip() for x in text.split(",")]
    if len(parts) != 4:
        raise DomainError("--pair needs p,m,q,n")
    p, m, q, n = parts
    return Fraction(p), int(m), Fraction(q), int(n)


def cmd_classify(args):
    if args.pair:
        p, m, q, n = _parse_pair(args.pair)
        res = classify_monomial_pair(p, m, q, n)
        inputs = {"p": frac_str(p), "m": m, "q": frac_str(q), "n": n}
        result = {
            "finite_rank_perturbation": res.finite_rank_perturbation,
            "matched_condition": res.matched_condition,
            "all_matched": res.all_matched,
            "H": symbol_json(res.perturbation, args.decimal) if res.perturbation is not None else None,
        }
        text = [
            "finite rank perturbation: %s" % res.finite_rank_perturbation,
            "condition: %s" % (res.matched_condition or "none"),
        ]
        if res.perturbation is not None:
            text.append("H = %s" % print_symbol(res.perturbation))
    else:
        if args.P is None or args.Q is None:
            raise DomainError("classify needs --pair or both --P and --Q")
        P, Q = _holomorphic_poly(_text(args.P)), _holomorphic_poly(_text(args.Q))
        res = classify_poly_pair(P, Q)
        inputs = {"P": args.P, "Q": args.Q}
        result = {
            "exists_H": res.exists_H,
            "case": res.case,
            "semantic_exists_H": res.semantic_exists_H,
            "H": symbol_json(res.H, args.decimal) if res.H is not None else None,
        }
        text = [
            "exists H: %s" % res.exists_H,
            "case: %s" % (res.case or "none"),
            "semantic check: %s" % res.semantic_exists_H,
        ]
        if res.H is not None:
            text.append("H = %s" % print_symbol(res.H))
    if args.format == "json":
        return EXIT_OK, envelope("classify", inputs, result)
    return EXIT_OK, "\n".join(text)


def _matrix_json(rows):
    return [[scalar_json(x)["re"] if x.is_real() else scalar_json(x) for x in row] for row in rows]


def cmd_construct(args):
    ex = make_example(args.family, args.d, alpha=args.alpha, beta=args.beta, gamma=args.gamma)
    ok, violated = check_diagonal_conditions(ex.C)
    if ex.Fs:
        E = polynomial_product_expr(ex.Fs, ex.Gs, ex.signs)
    else:
        E = matrix_to_expr(ex.C)
    res = compute_rank(E)
    computed = "infinite" if res.infinite else res.rank
    match = computed == ex.predicted_rank
    poly_text = lambda P: print_symbol(_poly_sym(P))  # noqa: E731
    if args.format == "json":
        result = {
            "C": _matrix_json(ex.C.entries),
            "diagonal_conditions": {"ok": ok, "violated": [list(v) for v in violated]},
            "predicted_rank": ex.predicted_rank,
            "computed_rank": computed,
            "match": match,
            "expr": print_operator(E),
            "notes": ex.notes,
        }
        if ex.F is not None:
            result["P"] = _matrix_json(ex.F.P)
            result["Q"] = _matrix_json(ex.F.Q)
            result["F"] = [poly_text(P) for P in ex.Fs]
            result["G"] = [poly_text(G) for G in ex.Gs]
            result["signs"] = ex.signs
            result["scale"] = frac_str(ex.scale)
        params = {k: (frac_str(v) if isinstance(v, Fraction) else v) for k, v in ex.params.items()}
        out = envelope("construct", {"family": ex.family, "params": params}, result)
    else:
        lines = ["family: %s %s" % (ex.family, ex.params)]
        for row in ex.C.entries:
            lines.append("  " + " ".join(str(x) for x in row))
        for j, (F, G) in enumerate(zip(ex.Fs, ex.Gs), 1):
            lines.append("F%d = %s    G%d = %s" % (j, poly_text(F), j, poly_text(G)))
        lines.append("diagonal conditions: %s" % ("ok" if ok else violated))
        lines.append("predicted rank: %d  computed rank: %s" % (ex.predicted_rank, computed))
        out = "\n".join(lines)
    return (EXIT_OK if match else EXIT_SELFTEST), out


def _poly_sym(P):
    return from_laurent({k: c for k, c in enumerate(P.coeffs) if c})


def cmd_verify_pde(args):
    Ps = [_laurent(_text(t)) for t in args.P]
    Qs = [_laurent(_text(t)) for t in args.Q]
    if len(Ps) != len(Qs):
        raise DomainError("need as many --P as --Q")
    H = parse_symbol(_text(args.H))
    rep = pde_verify(Ps, Qs, H)
    if args.format == "json":
        result = {
            "ok": rep.ok,
            "failures": [
                {"equation": f["equation"], "residual": symbol_json(f["residual"], args.decimal)}
                for f in rep.failures
            ],
        }
        out = envelope(
            "verify-pde",
            {"P": [print_symbol(p) for p in Ps], "Q": [print_symbol(q) for q in Qs], "H": print_symbol(H)},
            result,
        )
    else:
        lines = ["ok" if rep.ok else "FAILED"]
        for f in rep.failures:
            lines.append("  %s residual: %s" % (f["equation"], print_symbol(f["residual"])))
        out = "\n".join(lines)
    return EXIT_OK, out


def cmd_selftest(args):
    results = selftest.run()
    passed = all(ok for _, ok, _ in results)
    if args.format == "json":
        out = envelope(
            "selftest",
            {},
            {
                "passed": passed,
                "cases": [{"name": n, "ok": ok, "detail": d} for n, ok, d in results],
            },
        )
    else:
        out = "\n".join(
            "%s  %s%s" % ("PASS" if ok else "FAIL", n, ("  (" + d + ")") if d else "")
            for n, ok, d in results
        )
    return (EXIT_OK if passed else EXIT_SELFTEST), out


# -- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument(
        "--decimal", type=int, default=None, metavar="K",
        help="add a display-only K-digit decimal rendering to JSON numbers",
    )

    ap = argparse.ArgumentParser(
        prog="qhtoeplitz",
        description="Exact finite-rank calculus for Toeplitz products with quasihomogeneous symbols.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diamond", parents=[common], help="compute f <> g")
    p.add_argument("-f", required=True)
    p.add_argument("-g", required=True)
    p.set_defaults(func=cmd_diamond)

    p = sub.add_parser("rank", parents=[common], help="rank of an operator expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("classify", parents=[common], help="classify a monomial or polynomial pair")
    p.add_argument("--pair", help="p,m,q,n (use --pair=-1,0,... for leading minus)")
    p.add_argument("--P")
    p.add_argument("--Q")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", parents=[common], help="build a finite-rank example family")
    p.add_argument("family", choices=("sd", "dqz42", "revised43"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", type=Fraction)
    p.add_argument("--beta", type=Fraction)
    p.add_argument("--gamma", type=Fraction)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify-pde", parents=[common], help="check H against the first-order system")
    p.add_argument("--P", action="append", required=True)
    p.add_argument("--Q", action="append", required=True)
    p.add_argument("--H", required=True)
    p.set_defaults(func=cmd_verify_pde)

    p = sub.add_parser("selftest", parents=[common], help="run the worked-example corpus")
    p.set_defaults(func=cmd_selftest)
    return ap


def _error(kind, exc, **extra):
    payload = {"error": kind, "message": str(exc)}
    payload.update(extra)
    sys.stderr.write(json.dumps(payload) + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, out = args.func(args)
    except ParseError as exc:
        _error("ParseError", exc, offset=exc.offset, expected=list(exc.expected))
        return EXIT_USAGE
    except (DomainError, ParamDomain) as exc:
        _error(type(exc).__name__, exc)
        return EXIT_USAGE
    except NotDifferentiableClass as exc:
        _error("NotDifferentiableClass", exc)
        return EXIT_NOT_DIFFERENTIABLE
    sys.stdout.write(out + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
