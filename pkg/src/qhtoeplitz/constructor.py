"""Coefficient-matrix encoding of ``sum c[k][l] T_{z^k} T_{zb^l}`` and the
worked finite-rank families built from it."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ParamDomain, ShapeMismatch
from .poly import Poly
from .scalars import GaussQ, gq, to_fraction
from .symbols import from_monomial
from .toeplitz import OperatorExpr


class CoeffMatrix:
    """``(d+1) x (d+1)`` matrix of Gaussian rationals."""

    def __init__(self, entries, d: Optional[int] = None):
        rows = [[gq(x) for x in row] for row in entries]
        n = len(rows)
        if d is None:
            d = n - 1
        if n != d + 1 or any(len(r) != d + 1 for r in rows):
            raise ShapeMismatch("coefficient matrix must be %dx%d" % (d + 1, d + 1))
        self.d = d
        self.entries = rows

    @classmethod
    def zeros(cls, d: int) -> "CoeffMatrix":
        return cls([[0] * (d + 1) for _ in range(d + 1)], d)

    @classmethod
    def from_assignments(cls, d: int, items) -> "CoeffMatrix":
        """Build from ``((k, l), value)`` pairs; colliding positions are summed."""
        rows = [[GaussQ(0)] * (d + 1) for _ in range(d + 1)]
        for (k, l), v in items:
            rows[k][l] = rows[k][l] + gq(v)
        return cls(rows, d)

    def __getitem__(self, kl):
        k, l = kl
        return self.entries[k][l]

    def scale(self, c) -> "CoeffMatrix":
        c = gq(c)
        return CoeffMatrix([[x * c for x in row] for row in self.entries], self.d)

    def nonzero(self):
        for k, row in enumerate(self.entries):
            for l, c in enumerate(row):
                if c:
                    yield k, l, c

    def __eq__(self, other):
        if not isinstance(other, CoeffMatrix):
            return NotImplemented
        return self.d == other.d and self.entries == other.entries

    def __repr__(self):
        return "CoeffMatrix(d=%d, %s)" % (self.d, [[str(x) for x in r] for r in self.entries])


@dataclass
class FactorMatrices:
    """``(d+1) x N`` column factors with ``C = P * Q^*``."""

    P: list
    Q: list

    def __post_init__(self):
        self.P = [[gq(x) for x in row] for row in self.P]
        self.Q = [[gq(x) for x in row] for row in self.Q]

    def columns(self, which: str) -> list:
        """Column ``j`` of ``P`` (or ``Q``) read as the polynomial ``sum_k M[k][j] z^k``."""
        M = self.P if which == "P" else self.Q
        if not M:
            return []
        return [Poly(row[j] for row in M) for j in range(len(M[0]))]


def check_diagonal_conditions(C: CoeffMatrix):
    """Return ``(ok, violated)``; ``violated`` lists ``(m, "sum")`` and
    ``(m, "weighted")`` for diagonals ``k - l = m`` where

        sum_{k-l=m} c[k][l] != 0      or      sum_{k-l=m} l * c[k][l] != 0.
    """
    d = C.d
    violated = []
    for m in range(-d, d + 1):
        plain = GaussQ(0)
        weighted = GaussQ(0)
        for l in range(max(0, -m), min(d, d - m) + 1):
            c = C.entries[l + m][l]
            plain = plain + c
            weighted = weighted + c * l
        if plain:
            violated.append((m, "sum"))
        if weighted:
            violated.append((m, "weighted"))
    return not violated, violated


def matrix_to_expr(C: CoeffMatrix) -> OperatorExpr:
    return OperatorExpr(
        tuple((c, (from_monomial(k, 0), from_monomial(0, l))) for k, l, c in C.nonzero())
    )


def factor_to_matrix(F: FactorMatrices) -> CoeffMatrix:
    P, Q = F.P, F.Q
    if len(P) != len(Q) or not P:
        raise ShapeMismatch("P and Q need the same nonzero number of rows")
    N = len(P[0])
    if any(len(r) != N for r in P) or any(len(r) != N for r in Q):
        raise ShapeMismatch("P and Q need the same number of columns")
    n = len(P)
    rows = []
    for k in range(n):
        row = []
        for l in range(n):
            acc = GaussQ(0)
            for j in range(N):
                acc = acc + P[k][j] * Q[l][j].conjugate()
            row.append(acc)
        rows.append(row)
    return CoeffMatrix(rows, n - 1)


def sd_matrix(d: int) -> CoeffMatrix:
    """``c00 = d-1``, ``c11 = -d``, ``cdd = 1`` (summed where positions collide)."""
    if d < 1:
        raise ParamDomain("S_d needs d >= 1")
    return CoeffMatrix.from_assignments(d, [((0, 0), d - 1), ((1, 1), -d), ((d, d), 1)])


def _rows_to_factor(d: int, top, mid, bottom) -> list:
    rows = [[GaussQ(0)] * 3 for _ in range(d + 1)]
    rows[0] = [gq(x) for x in top]
    rows[1] = [gq(x) for x in mid]
    rows[d] = [gq(x) for x in bottom]
    return rows


@dataclass
class Example:
    family: str
    params: dict
    C: CoeffMatrix
    predicted_rank: int
    F: Optional[FactorMatrices] = None
    # F_j, G_j as printed, with signs so that the operator is sum sign_j T_{F_j} T_{conj G_j}
    Fs: list = field(default_factory=list)
    Gs: list = field(default_factory=list)
    signs: list = field(default_factory=list)
    scale: Fraction = Fraction(1)
    notes: list = field(default_factory=list)


_QUOTIENT_NOTE = (
    "The quotient operators built from F2 and G3 are not verified: that needs "
    "F2 and G3 to be zero-free on the closed disk, which is not checked."
)


def make_example(family: str, d: int, alpha=None, beta=None, gamma=None) -> Example:
    if family == "sd":
        if d < 2:
            raise ParamDomain("sd needs d >= 2")
        return Example("sd", {"d": d}, sd_matrix(d), d - 1)

    if d < 2:
        raise ParamDomain("%s needs d >= 2" % family)
    z = lambda k: Poly([0] * k + [1])  # noqa: E731

    if family == "dqz42":
        if alpha is None or beta is None or gamma is None:
            raise ParamDomain("dqz42 needs alpha, beta, gamma")
        a, b, g = to_fraction(alpha), to_fraction(beta), to_fraction(gamma)
        if b == 0 or a == g:
            raise ParamDomain("dqz42 needs beta != 0 and alpha != gamma")
        P = _rows_to_factor(
            d,
            [-(d - 1) * g, -(d - 1) * a, (d - 1) * (a - g)],
            [d * b, d * b, 0],
            [b * g, b * a, 0],
        )
        Q = _rows_to_factor(d, [0, 0, -b], [a, -g, 0], [1, -1, -1])
        Fs = [
            Poly([-(d - 1) * g, d * b]) + z(d) * (b * g),
            Poly([-(d - 1) * a, d * b]) + z(d) * (b * a),
            Poly([(d - 1) * (a - g)]),
        ]
        Gs = [z(1) * a + z(d), z(1) * g + z(d), Poly([b]) + z(d)]
        scale = b * (g - a)
        params = {"d": d, "alpha": a, "beta": b, "gamma": g}
    elif family == "revised43":
        if beta is None:
            raise ParamDomain("revised43 needs beta")
        b = to_fraction(beta)
        P = _rows_to_factor(d, [0, d - 1, -(d - 1) * b], [-d * (b * b + 1), 0, 0], [0, -b, -1])
        Q = _rows_to_factor(d, [0, 1, -b], [1, 0, 0], [0, -b, -1])
        Fs = [
            z(1) * (-d * (b * b + 1)),
            Poly([d - 1]) - z(d) * b,
            Poly([-(d - 1) * b]) - z(d),
        ]
        Gs = [z(1), Poly([-1]) + z(d) * b, Poly([b]) + z(d)]
        scale = b * b + 1
        params = {"d": d, "beta": b}
    else:
        raise ParamDomain("unknown family %r" % family)

    F = FactorMatrices(P, Q)
    C = factor_to_matrix(F)
    return Example(
        family, params, C, d - 1, F, Fs, Gs, [1, -1, -1], scale, [_QUOTIENT_NOTE]
    )
