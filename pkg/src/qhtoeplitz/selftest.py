"""Worked-example corpus run by ``qhtoeplitz selftest``."""

from __future__ import annotations

from fractions import Fraction

from .constructor import check_diagonal_conditions, make_example, matrix_to_expr, sd_matrix
from .criteria import classify_monomial_pair, classify_poly_pair, pde_verify, polynomial_product_expr
from .diamond import diamond
from .parser import parse_operator, parse_symbol, print_symbol
from .poly import Poly
from .toeplitz import MonomialVector, compute_rank, expr_apply


def _check_rank(text, rank):
    return compute_rank(parse_operator(text)).rank == rank


def _zero_perturbation():
    E = parse_operator("T[z]*T[zb^2*z] - T[2*zb*z - 1]")
    res = compute_rank(E)
    return res.rank == 0 and all(not expr_apply(E, k) for k in range(res.K0 + 17))


def _rank_one_a():
    E = parse_operator("T[z^2]*T[zb^3] - T[3*zb - 2*z^-1]")
    half = MonomialVector({0: Fraction(1, 2)})
    return compute_rank(E).rank == 1 and all(
        expr_apply(E, k) == (half if k == 1 else MonomialVector()) for k in range(12)
    )


def _rank_one_b():
    E = parse_operator("T[z^2]*T[zb^3*z] - T[3*zb*z - 2]")
    half = MonomialVector({0: Fraction(1, 2)})
    return compute_rank(E).rank == 1 and all(
        expr_apply(E, k) == (half if k == 0 else MonomialVector()) for k in range(12)
    )


def _diamonds():
    cases = [
        ("z", "zb^2*z", "2*zb*z - 1"),
        ("z^2", "zb^3", "3*zb - 2*z^-1"),
        ("z^2", "zb^3*z", "3*zb*z - 2"),
        ("z^3", "zb^3", "1 + 6*log"),
    ]
    return all(print_symbol(diamond(parse_symbol(f), parse_symbol(g))) == h for f, g, h in cases)


def _sd_family():
    for d in range(2, 9):
        E = matrix_to_expr(sd_matrix(d))
        if compute_rank(E).rank != d - 1:
            return False
        for j in range(d + 3):
            want = Fraction(d - 1 - j, j + 1) if j <= d - 2 else 0
            if expr_apply(E, j) != MonomialVector({j: want}):
                return False
    return True


def _families():
    for d in range(2, 7):
        for fam, kw in (("dqz42", dict(alpha=1, beta=2, gamma=3)), ("revised43", dict(beta=2))):
            ex = make_example(fam, d, **kw)
            if ex.C != sd_matrix(d).scale(ex.scale):
                return False
            E = polynomial_product_expr(ex.Fs, ex.Gs, ex.signs)
            if compute_rank(E).rank != d - 1:
                return False
    return True


def _classify():
    a = classify_monomial_pair(2, 2, 3, -3)
    b = classify_monomial_pair(2, 2, 4, -2)
    c = classify_poly_pair(Poly([0, 1]), Poly([0, 0, 1]))
    return a.matched_condition == 1 and b.matched_condition == 1 and c.case == 4 and c.semantic_exists_H


def _pde():
    ok = pde_verify([Poly([0, 0, 1])], [Poly([0, 0, 0, 1])], parse_symbol("3*zb - 2*z^-1")).ok
    bad = pde_verify([Poly([0, 1])], [Poly([0, 1])], parse_symbol("1")).ok
    return ok and not bad


CORPUS = [
    ("T_z T_(zb^2 z) = T_(2|z|^2-1) exactly", _zero_perturbation),
    ("T_z^2 T_zb^3 - T_(3zb-2/z) = 1 (x) z", _rank_one_a),
    ("T_z^2 T_zb^3z - T_(3|z|^2-2) = 1/2 (x) 1", _rank_one_b),
    ("T_zb^-1 T_zb - T_1 has rank 1", lambda: _check_rank("T[zb^-1]*T[zb] - T[1]", 1)),
    ("semicommutator T_z T_zb - T_|z|^2 has infinite rank", lambda: _check_rank("T[z]*T[zb] - T[zb*z]", None)),
    ("diamond closed forms", _diamonds),
    ("S_d rank and action, d = 2..8", _sd_family),
    ("S_d diagonal conditions", lambda: check_diagonal_conditions(sd_matrix(4))[0]),
    ("factor families reproduce S_d with rank d-1", _families),
    ("monomial and polynomial classification", _classify),
    ("first-order system", _pde),
]


def run():
    out = []
    for name, fn in CORPUS:
        try:
            ok = bool(fn())
            detail = ""
        except Exception as exc:  # reported, not raised: this is a harness
            ok = False
            detail = "%s: %s" % (type(exc).__name__, exc)
        out.append((name, ok, detail))
    return out
