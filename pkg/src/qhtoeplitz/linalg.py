"""Exact rank and row reduction over Q(i)."""

from __future__ import annotations

from math import lcm
from typing import Sequence

from .scalars import GaussQ, gq


def _to_gaussian_integers(row: Sequence[GaussQ]) -> list:
    den = 1
    for x in row:
        den = lcm(den, x.re.denominator, x.im.denominator)
    return [x * den for x in row]


def exact_rank(vectors: Sequence[Sequence]) -> int:
    """Rank of the span of ``vectors`` (rows of equal length).

    Rows are cleared to Gaussian integers and reduced by Bareiss
    fraction-free elimination; every division is exact.
    """
    rows = [_to_gaussian_integers([gq(x) for x in v]) for v in vectors]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("vectors must share a common coordinate set")
    prev = GaussQ(1)
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][c]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            ri = rows[i]
            for j in range(c + 1, ncols):
                ri[j] = (p * ri[j] - f * rows[rank][j]) / prev
            ri[c] = GaussQ(0)
        prev = p
        rank += 1
        if rank == len(rows):
            break
    return rank


def rref(vectors: Sequence[Sequence]) -> list:
    """Nonzero rows of the reduced row echelon form, pivots normalised to 1."""
    rows = [[gq(x) for x in v] for v in vectors]
    if not rows:
        return []
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return rows[:r]
