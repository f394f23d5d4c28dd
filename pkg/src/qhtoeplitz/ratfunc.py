"""Rational functions of the Mellin variable in partial-fraction normal form.

Denominators are never expanded and factored again: every constructor
takes the denominator as a multiset of roots ``{a: multiplicity}``, so the
decomposition is exact without root finding.  A dense denominator
polynomial is accepted by :func:`rf_normalize` only if it splits into
linear factors that can be read off directly (degree <= 1, or rational
roots of a real polynomial).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .errors import NonLinearFactor, PoleEvaluation
from .poly import Poly
from .scalars import GaussQ, gq


class MellinRF:
    """``poly(x) + sum_a sum_j coeffs_a[j-1] / (x - a)**j``.

    ``poles`` is a tuple of ``(a, (c_1, ..., c_k))`` sorted by ``a``; each
    ``c_k`` is nonzero, so ``k`` is the true multiplicity of the pole.
    """

    __slots__ = ("poly", "poles")

    def __init__(self, poly: Poly = None, poles: Iterable = ()):
        merged: dict = {}
        for a, cs in poles:
            a = gq(a)
            cs = [gq(c) for c in cs]
            old = merged.get(a, [])
            n = max(len(old), len(cs))
            merged[a] = [
                (old[i] if i < len(old) else GaussQ(0)) + (cs[i] if i < len(cs) else GaussQ(0))
                for i in range(n)
            ]
        clean = []
        for a in sorted(merged, key=GaussQ.sort_key):
            cs = merged[a]
            while cs and not cs[-1]:
                cs.pop()
            if cs:
                clean.append((a, tuple(cs)))
        object.__setattr__(self, "poly", poly if poly is not None else Poly())
        object.__setattr__(self, "poles", tuple(clean))

    def __setattr__(self, name, value):
        raise AttributeError("MellinRF is immutable")

    # -- structure ------------------------------------------------------

    @property
    def pole_terms(self) -> list:
        """``[(pole, multiplicity, [c_1..c_k])]`` as in the data model."""
        return [(a, len(cs), list(cs)) for a, cs in self.poles]

    @property
    def polynomial_part(self) -> Poly:
        return self.poly

    def is_zero(self) -> bool:
        return self.poly.is_zero() and not self.poles

    def is_strictly_proper(self) -> bool:
        return self.poly.is_zero()

    def pole_set(self) -> dict:
        return {a: len(cs) for a, cs in self.poles}

    def __eq__(self, other):
        if not isinstance(other, MellinRF):
            return NotImplemented
        return self.poly == other.poly and self.poles == other.poles

    def __hash__(self):
        return hash((self.poly, self.poles))

    def __repr__(self):
        parts = []
        if not self.poly.is_zero():
            parts.append(repr(self.poly))
        for a, cs in self.poles:
            for j, c in enumerate(cs, 1):
                if c:
                    parts.append("%s/(x-%s)^%d" % (c, a, j))
        return "MellinRF(%s)" % (" + ".join(parts) or "0")

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = as_rf(other)
        return MellinRF(self.poly + other.poly, self.poles + other.poles)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-as_rf(other))

    def __rsub__(self, other):
        return as_rf(other) - self

    def scale(self, c) -> "MellinRF":
        c = gq(c)
        if not c:
            return MellinRF()
        return MellinRF(self.poly * c, [(a, [x * c for x in cs]) for a, cs in self.poles])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussQ)):
            return self.scale(other)
        other = as_rf(other)
        n1, d1 = self.reconstruct()
        n2, d2 = other.reconstruct()
        return rf_normalize(n1 * n2, Counter(d1) + Counter(d2))

    __rmul__ = __mul__

    # -- conversions ----------------------------------------------------

    def reconstruct(self):
        """Return ``(numerator, roots)`` with ``roots`` a dict of multiplicities."""
        roots = self.pole_set()
        den = Poly.from_roots(roots)
        num = self.poly * den
        for a, cs in self.poles:
            k = len(cs)
            others = Poly.from_roots({b: m for b, m in roots.items() if b != a})
            lin = Poly.linear(a)
            for j, c in enumerate(cs, 1):
                if c:
                    num = num + others * (lin ** (k - j)) * c
        return num, roots

    def __call__(self, x0) -> GaussQ:
        return rf_eval(self, x0)

    def shift(self, offset) -> "MellinRF":
        """Substitute ``x -> x + offset``."""
        return self.affine(1, offset)

    def affine(self, scale, shift) -> "MellinRF":
        """Substitute ``x -> scale*x + shift`` (``scale`` nonzero)."""
        scale = gq(scale)
        shift = gq(shift)
        if not scale:
            raise ValueError("affine substitution needs a nonzero scale")
        inv = scale.inverse()
        poles = []
        for a, cs in self.poles:
            new_a = (a - shift) * inv
            poles.append((new_a, [c * inv ** j for j, c in enumerate(cs, 1)]))
        return MellinRF(self.poly.compose_affine(scale, shift), poles)


def as_rf(x) -> MellinRF:
    if isinstance(x, MellinRF):
        return x
    if isinstance(x, Poly):
        return MellinRF(x)
    return MellinRF(Poly([x]))


def _series_inverse_power(c: GaussQ, power: int, order: int) -> list:
    """Taylor coefficients in ``t`` of ``(t + c)**(-power)`` up to ``t**(order-1)``."""
    inv_c = c.inverse()
    # 1/(t+c) = sum_n (-1)^n c^(-n-1) t^n
    base = []
    term = inv_c
    for n in range(order):
        base.append(term)
        term = -term * inv_c
    out = [GaussQ(1)] + [GaussQ(0)] * (order - 1)
    for _ in range(power):
        out = _series_mul(out, base, order)
    return out


def _series_mul(a: list, b: list, order: int) -> list:
    out = [GaussQ(0)] * order
    for i, x in enumerate(a[:order]):
        if not x:
            continue
        for j in range(order - i):
            if j < len(b) and b[j]:
                out[i + j] = out[i + j] + x * b[j]
    return out


def _normalize_roots(num: Poly, roots: Mapping) -> MellinRF:
    roots = {gq(a): int(k) for a, k in roots.items() if k}
    den = Poly.from_roots(roots)
    quot, rem = num.divmod(den)
    poles = []
    for a, k in roots.items():
        # cover-up: principal part of rem/den at a from the local Taylor series
        g = rem.taylor_at(a)[:k]
        g = g + [GaussQ(0)] * (k - len(g))
        for b, kb in roots.items():
            if b == a:
                continue
            g = _series_mul(g, _series_inverse_power(a - b, kb, k), k)
        poles.append((a, [g[k - j] for j in range(1, k + 1)]))
    return MellinRF(quot, poles)


def _rational_roots(p: Poly) -> list:
    """Rational roots (with repetition) of a polynomial with real rational coefficients."""
    coeffs = [c.re for c in p.coeffs]
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    roots = []
    while ints and ints[0] == 0 and len(ints) > 1:
        roots.append(Fraction(0))
        ints = ints[1:]
    if len(ints) <= 1:
        return roots
    a0, an = abs(ints[0]), abs(ints[-1])
    cands = set()
    for u in _divisors(a0):
        for v in _divisors(an):
            cands.add(Fraction(u, v))
            cands.add(Fraction(-u, v))
    work = Poly(ints)
    for r in sorted(cands):
        while work.degree >= 1 and work(r) == 0:
            roots.append(r)
            work, _ = work.divmod(Poly.linear(r))
    return roots


def _divisors(n: int) -> list:
    if n > 10 ** 12:
        raise NonLinearFactor("denominator coefficients too large to split")
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return out


def split_linear(den: Poly):
    """Return ``(lead, roots)`` with ``den == lead * prod(x - a)**k``."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    lead = den.lead()
    monic = den * lead.inverse()
    if monic.degree == 0:
        return lead, {}
    if monic.degree == 1:
        return lead, {-monic.coeffs[0]: 1}
    if any(not c.is_real() for c in monic.coeffs):
        raise NonLinearFactor("cannot split a complex denominator of degree %d" % monic.degree)
    roots = Counter(gq(r) for r in _rational_roots(monic))
    if sum(roots.values()) != monic.degree:
        raise NonLinearFactor("denominator has an irreducible factor of degree >= 2")
    return lead, dict(roots)


def rf_normalize(num: Poly, den) -> MellinRF:
    """Partial-fraction normal form of ``num / den``.

    ``den`` is either a mapping ``{root: multiplicity}`` (the normal route)
    or a :class:`Poly` that must split over the rationals.  Common linear
    factors cancel automatically: a root of ``num`` at a pole lowers that
    pole's order.
    """
    if isinstance(den, Poly):
        lead, roots = split_linear(den)
        num = num * lead.inverse()
    else:
        roots = den
    return _normalize_roots(num, roots)


def rf_arith(a: MellinRF, b, op: str) -> MellinRF:
    """Dispatch ``add | sub | mul | scale``; for ``scale``, ``b`` is a scalar."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * as_rf(b)
    if op == "scale":
        return a.scale(b)
    raise ValueError("unknown op %r" % op)


def rf_eval(f: MellinRF, x0) -> GaussQ:
    x0 = gq(x0)
    acc = f.poly(x0)
    for a, cs in f.poles:
        d = x0 - a
        if not d:
            raise PoleEvaluation("evaluation at pole %s" % a)
        inv = d.inverse()
        p = inv
        for c in cs:
            acc = acc + c * p
            p = p * inv
    return acc
