"""Toeplitz operators with term-class symbols acting on monomials of the Bergman space.

A quasihomogeneous symbol acts as a weighted shift:

    T_{phi e^{im theta}} z^k = 0                                      if k + m < 0
                             = (2k+2m+2) M[phi](2k+m+2) z^(k+m)       otherwise

so a finite sum of Toeplitz products maps ``z^k`` to ``sum_d lambda_d(k) z^(k+d)``
with each ``lambda_d`` a rational function of ``k`` once ``k`` is large.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import ceil
from typing import Iterable, Sequence

from .errors import RedundancyMismatch
from .linalg import exact_rank, rref
from .mellin import mellin_forward
from .poly import Poly
from .ratfunc import MellinRF, rf_eval
from .scalars import GaussQ, gq, gq_json
from .symbols import Symbol, as_symbol

#: Extra degrees beyond K0 swept to cross-check the certificate.
REDUNDANT_SWEEP = 16


class MonomialVector:
    """Finite combination ``sum c_k z^k`` keyed by exponent; no zero entries."""

    __slots__ = ("entries",)

    def __init__(self, entries=None):
        d = {}
        for k, c in (entries or {}).items():
            c = gq(c)
            if c:
                d[int(k)] = c
        object.__setattr__(self, "entries", dict(sorted(d.items())))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialVector is immutable")

    @classmethod
    def monomial(cls, k: int, c=1) -> "MonomialVector":
        return cls({k: c})

    def __bool__(self):
        return bool(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __getitem__(self, k):
        return self.entries.get(k, GaussQ(0))

    def items(self):
        return self.entries.items()

    def __add__(self, other: "MonomialVector"):
        d = dict(self.entries)
        for k, c in other.entries.items():
            d[k] = d.get(k, GaussQ(0)) + c
        return MonomialVector(d)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "MonomialVector":
        c = gq(c)
        return MonomialVector({k: v * c for k, v in self.entries.items()})

    def __eq__(self, other):
        if isinstance(other, MonomialVector):
            return self.entries == other.entries
        if isinstance(other, dict):
            return self == MonomialVector(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.entries.items()))

    def __repr__(self):
        inner = ", ".join("%d: %s" % (k, c) for k, c in self.entries.items())
        return "MonomialVector({%s})" % inner

    def to_json(self) -> dict:
        return {str(k): gq_json(c) for k, c in self.entries.items()}


@dataclass(frozen=True)
class OperatorExpr:
    """``sum coeff * T_{f1} T_{f2} ...``; the rightmost factor acts first."""

    summands: tuple = ()

    def __post_init__(self):
        clean = []
        for coeff, factors in self.summands:
            factors = tuple(as_symbol(f) for f in factors)
            if not factors:
                raise ValueError("a summand needs at least one Toeplitz factor")
            coeff = gq(coeff)
            # T_0 = 0: zero summands are dropped so every stored factor is nonempty
            if coeff and all(factors):
                clean.append((coeff, factors))
        object.__setattr__(self, "summands", tuple(clean))

    @classmethod
    def product(cls, *symbols, coeff=1) -> "OperatorExpr":
        return cls(((coeff, tuple(symbols)),))

    def __add__(self, other: "OperatorExpr"):
        return OperatorExpr(self.summands + other.summands)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other: "OperatorExpr"):
        return self + (-other)

    def scale(self, c) -> "OperatorExpr":
        c = gq(c)
        return OperatorExpr(tuple((a * c, fs) for a, fs in self.summands))


def T(*symbols, coeff=1) -> OperatorExpr:
    """Shorthand: ``T(f, g)`` is ``T_f T_g``."""
    return OperatorExpr.product(*symbols, coeff=coeff)


@lru_cache(maxsize=4096)
def _radial_transform(p, s) -> MellinRF:
    return mellin_forward([(1, p, s)])


def _apply_symbol(f: Symbol, v: MonomialVector) -> MonomialVector:
    out: dict = {}
    for k, ck in v.items():
        for t in f.terms:
            j = k + t.m
            if j < 0:
                continue
            w = (2 * k + 2 * t.m + 2) * rf_eval(_radial_transform(t.p, t.s), 2 * k + t.m + 2)
            out[j] = out.get(j, GaussQ(0)) + ck * t.coeff * w
    return MonomialVector(out)


def toeplitz_apply(f: Symbol, k: int) -> MonomialVector:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _apply_symbol(as_symbol(f), MonomialVector.monomial(k))


def expr_apply(E: OperatorExpr, k: int) -> MonomialVector:
    if k < 0:
        raise ValueError("k must be nonnegative")
    total = MonomialVector()
    for coeff, factors in E.summands:
        v = MonomialVector.monomial(k)
        for f in reversed(factors):
            v = _apply_symbol(f, v)
            if not v:
                break
        total = total + v.scale(coeff)
    return total


def exceptional_bound(E: OperatorExpr) -> int:
    """K0: beyond it every branch condition holds and no Mellin pole is hit."""
    best = 0
    for _, factors in E.summands:
        shift = sum(max((abs(t.m) for t in f.terms), default=0) for f in factors)
        radial = sum(max((ceil(abs(t.p)) for t in f.terms), default=0) for f in factors)
        best = max(best, shift + radial)
    return best + 1


@dataclass
class Certificate:
    certified: bool
    K0: int
    # output shift -> generic coefficient as a rational function of k
    coefficients: dict = field(default_factory=dict)

    def nonzero_shifts(self) -> list:
        return sorted(d for d, lam in self.coefficients.items() if not lam.is_zero())


def generic_coefficients(E: OperatorExpr) -> dict:
    """``{d: lambda_d}`` with ``E z^k = sum lambda_d(k) z^(k+d)`` for ``k >= K0``."""
    total: dict = {}
    for coeff, factors in E.summands:
        state = {0: MellinRF(Poly([coeff]))}
        for f in reversed(factors):
            new: dict = {}
            for d, lam in state.items():
                for t in f.terms:
                    # factor evaluated at current degree k + d, as a function of k
                    weight = Poly([2 * d + 2 * t.m + 2, 2])
                    hat = _radial_transform(t.p, t.s).affine(2, 2 * d + t.m + 2)
                    piece = lam * (MellinRF(weight) * hat.scale(t.coeff))
                    key = d + t.m
                    new[key] = new[key] + piece if key in new else piece
            state = new
        for d, lam in state.items():
            total[d] = total[d] + lam if d in total else lam
    return total


def certify_finite_rank(E: OperatorExpr) -> Certificate:
    lambdas = generic_coefficients(E)
    ok = all(lam.is_zero() for lam in lambdas.values())
    return Certificate(ok, exceptional_bound(E), lambdas)


@dataclass
class RankResult:
    certificate: Certificate
    rank: "int | None"
    image_basis: list = field(default_factory=list)
    images: dict = field(default_factory=dict)

    @property
    def infinite(self) -> bool:
        return self.rank is None

    @property
    def K0(self) -> int:
        return self.certificate.K0


def _as_rows(vectors: Sequence[MonomialVector]):
    support = sorted({k for v in vectors for k in v.entries})
    rows = [[v[k] for k in support] for v in vectors]
    return support, rows


def monomial_rank(vectors: Iterable[MonomialVector]) -> int:
    _, rows = _as_rows(list(vectors))
    return exact_rank(rows)


def compute_rank(E: OperatorExpr, sweep: int = REDUNDANT_SWEEP) -> RankResult:
    """Rank of ``E`` on holomorphic polynomials, or ``rank=None`` when infinite."""
    cert = certify_finite_rank(E)
    if not cert.certified:
        return RankResult(cert, None)
    images = {k: expr_apply(E, k) for k in range(cert.K0 + 1)}
    for k in range(cert.K0 + 1, cert.K0 + sweep + 1):
        if expr_apply(E, k):
            raise RedundancyMismatch("certificate says finite rank but E(z^%d) != 0" % k)
    vectors = [v for v in images.values() if v]
    support, rows = _as_rows(vectors)
    rank = exact_rank(rows)
    basis = [
        MonomialVector({k: c for k, c in zip(support, row)}) for row in rref(rows)
    ]
    assert len(basis) == rank
    return RankResult(cert, rank, basis, images)
