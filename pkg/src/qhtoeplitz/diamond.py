"""The diamond convolution of symbols.

For ``f = phi(r) e^{im theta}`` and ``g = psi(r) e^{in theta}`` the product
``f <> g = omega(r) e^{i(m+n) theta}`` where

    M[omega](x) = (x - m + n) * M[phi](x + n) * M[psi](x - m).

The Mellin-domain route is authoritative; the log-free monomial closed
form is a fast path that is checked against it in the test suite.
"""

from __future__ import annotations

from .mellin import mellin_eval_shift, mellin_forward, mellin_inverse
from .poly import Poly
from .ratfunc import MellinRF
from .scalars import GaussQ, to_fraction
from .symbols import QHTerm, Symbol, make_term


def _mellin_of(t: QHTerm) -> MellinRF:
    return mellin_forward([(1, t.p, t.s)])


def diamond_pair(f: QHTerm, g: QHTerm) -> Symbol:
    m, n = f.m, g.m
    factor = MellinRF(Poly([n - m, 1]))
    prod = factor * mellin_eval_shift(_mellin_of(f), n) * mellin_eval_shift(_mellin_of(g), -m)
    coeff = f.coeff * g.coeff
    return Symbol(make_term(c * coeff, p, s, m + n) for c, p, s in mellin_inverse(prod))


def diamond(f: Symbol, g: Symbol) -> Symbol:
    """Bilinear extension of :func:`diamond_pair`.

    Log-free pairs go through :func:`diamond_monomial_closed_form`.
    """
    pieces = []
    for a in f.terms:
        for b in g.terms:
            if a.s == 0 and b.s == 0:
                part = diamond_monomial_closed_form(a.p, a.m, b.p, b.m)
            else:
                pieces.extend(diamond_pair(a, b).terms)
                continue
            c = a.coeff * b.coeff
            pieces.extend(QHTerm(t.coeff * c, t.p, t.s, t.m) for t in part.terms)
    return Symbol(pieces)


def diamond_monomial_closed_form(p, m: int, q, n: int) -> Symbol:
    """``r^p e^{im theta} <> r^q e^{in theta}`` by the explicit formula."""
    p, q = to_fraction(p), to_fraction(q)
    ell = p + n - q + m
    k = m + n
    if ell != 0:
        return Symbol(
            [
                make_term((n - q) / ell, q - m, 0, k),
                make_term((m + p) / ell, p + n, 0, k),
            ]
        )
    return Symbol(
        [
            make_term(1, q - m, 0, k),
            make_term(GaussQ(-(n - q)), q - m, 1, k),
        ]
    )
