"""Symbols: finite sums of quasihomogeneous terms ``c * r^p * (log r)^s * e^{i m theta}``.

``z^a zb^b`` is the term with ``p = a + b`` and ``m = a - b``; ``log|z|^2``
is stored as ``2 * log r``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import NotDifferentiableClass
from .scalars import GaussQ, gq, to_fraction

L1_DISK = "L1_disk"
NEARLY_INTEGRABLE_ONLY = "nearly_integrable_only"


class QHTerm(NamedTuple):
    coeff: GaussQ
    p: Fraction
    s: int
    m: int

    @property
    def key(self):
        return (self.p, self.s, self.m)

    def zzbar_exponents(self):
        """``(a, b)`` with ``r^p e^{im theta} = z^a zb^b``, or None."""
        twice_a = self.p + self.m
        twice_b = self.p - self.m
        if twice_a.denominator != 1 or twice_a.numerator % 2:
            return None
        return int(twice_a) // 2, int(twice_b) // 2


def make_term(coeff, p, s: int = 0, m: int = 0) -> QHTerm:
    if int(s) != s or s < 0:
        raise ValueError("log power must be a nonnegative integer")
    if int(m) != m:
        raise ValueError("frequency must be an integer")
    return QHTerm(gq(coeff), to_fraction(p), int(s), int(m))


class Symbol:
    """Canonical sum of :class:`QHTerm`; keys ``(p, s, m)`` are unique and
    coefficients nonzero.  Terms are ordered by ``(m, p, s)``."""

    __slots__ = ("terms", "_map")

    def __init__(self, terms: Iterable = ()):
        acc: dict = {}
        for t in terms:
            if not isinstance(t, QHTerm):
                t = make_term(*t)
            k = (t.p, t.s, t.m)
            acc[k] = acc.get(k, GaussQ(0)) + t.coeff
        acc = {k: c for k, c in acc.items() if c}
        order = sorted(acc, key=lambda k: (k[2], k[0], k[1]))
        object.__setattr__(self, "_map", acc)
        object.__setattr__(self, "terms", tuple(QHTerm(acc[k], *k) for k in order))

    def __setattr__(self, name, value):
        raise AttributeError("Symbol is immutable")

    @classmethod
    def constant(cls, c) -> "Symbol":
        return cls([make_term(c, 0, 0, 0)])

    @classmethod
    def term(cls, coeff, p, s=0, m=0) -> "Symbol":
        return cls([make_term(coeff, p, s, m)])

    def coeff_of(self, p, s=0, m=0) -> GaussQ:
        return self._map.get((to_fraction(p), s, m), GaussQ(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def frequencies(self) -> list:
        return sorted({t.m for t in self.terms})

    def __eq__(self, other):
        if isinstance(other, Symbol):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussQ)):
            return self == Symbol.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        from .parser import print_symbol

        return "Symbol(%r)" % print_symbol(self)

    # -- algebra --------------------------------------------------------

    def __add__(self, other):
        other = as_symbol(other)
        return Symbol(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-as_symbol(other))

    def __rsub__(self, other):
        return as_symbol(other) - self

    def scale(self, c) -> "Symbol":
        c = gq(c)
        return Symbol(QHTerm(t.coeff * c, t.p, t.s, t.m) for t in self.terms)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussQ)):
            return self.scale(other)
        other = as_symbol(other)
        return Symbol(
            QHTerm(a.coeff * b.coeff, a.p + b.p, a.s + b.s, a.m + b.m)
            for a in self.terms
            for b in other.terms
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Symbol.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def conjugate(self) -> "Symbol":
        return Symbol(QHTerm(t.coeff.conjugate(), t.p, t.s, -t.m) for t in self.terms)

    def reflect(self) -> "Symbol":
        """Substitute ``z -> 1/zb``: ``z^a zb^b -> z^-b zb^-a`` and ``log r -> -log r``."""
        return Symbol(
            QHTerm(t.coeff if t.s % 2 == 0 else -t.coeff, -t.p, t.s, t.m) for t in self.terms
        )


def as_symbol(x) -> Symbol:
    if isinstance(x, Symbol):
        return x
    if isinstance(x, QHTerm):
        return Symbol([x])
    return Symbol.constant(x)


def from_monomial(a: int, b: int) -> Symbol:
    """``z^a * zb^b`` (negative exponents allowed)."""
    return Symbol([make_term(1, a + b, 0, a - b)])


def from_laurent(coeffs: dict) -> Symbol:
    """Holomorphic Laurent polynomial ``sum c_k z^k`` from ``{k: c_k}``."""
    return Symbol(make_term(c, k, 0, k) for k, c in coeffs.items())


def laurent_coeffs(f: Symbol) -> dict:
    """Inverse of :func:`from_laurent`; raises ValueError if ``f`` is not holomorphic Laurent."""
    out = {}
    for t in f.terms:
        if t.s or t.p != t.m:
            raise ValueError("not a holomorphic Laurent polynomial: %r" % (f,))
        out[t.m] = t.coeff
    return out


def symbol_arith(f: Symbol, g, op: str) -> Symbol:
    """Dispatch ``add | sub | mul | scale | conjugate`` (``g`` ignored for conjugate)."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * as_symbol(g)
    if op == "scale":
        return f.scale(g)
    if op == "conjugate":
        return f.conjugate()
    raise ValueError("unknown op %r" % op)


def integrability_class(f: Symbol) -> str:
    # r^p (log r)^s is in L^1(r dr) iff p > -2, whatever s is
    if all(t.p > -2 for t in f.terms):
        return L1_DISK
    return NEARLY_INTEGRABLE_ONLY


def eval_at_one(f: Symbol) -> GaussQ:
    """Value at ``z = 1`` (``r = 1``, ``theta = 0``): log terms vanish."""
    acc = GaussQ(0)
    for t in f.terms:
        if t.s == 0:
            acc = acc + t.coeff
    return acc


def wirtinger(f: Symbol, which: str) -> Symbol:
    """``d/dz`` (``which="d_dz"``) or ``d/dzb`` (``"d_dzbar"``) on the integer-power class.

    With ``log r = L/2`` and ``dL/dz = 1/z``:
    ``d/dz [z^a zb^b (log r)^s] = a z^(a-1) zb^b (log r)^s + (s/2) z^(a-1) zb^b (log r)^(s-1)``.
    """
    if which not in ("d_dz", "d_dzbar"):
        raise ValueError("which must be 'd_dz' or 'd_dzbar'")
    out = []
    for t in f.terms:
        ab = t.zzbar_exponents()
        if ab is None:
            raise NotDifferentiableClass(
                "term r^%s e^(%d i theta) is not z^a zb^b with integer a, b" % (t.p, t.m)
            )
        a, b = ab
        e = a if which == "d_dz" else b
        # dropping one power of z (resp. zb): p -> p-1, m -> m-1 (resp. m+1)
        dm = -1 if which == "d_dz" else 1
        if e:
            out.append(QHTerm(t.coeff * e, t.p - 1, t.s, t.m + dm))
        if t.s:
            out.append(QHTerm(t.coeff * Fraction(t.s, 2), t.p - 1, t.s - 1, t.m + dm))
    return Symbol(out)
