"""Exact Mellin transform on the term class ``c * r^p * (log r)^s``.

    M[r^p (log r)^s](x) = int_0^1 r^(p+x-1) (log r)^s dr = (-1)^s s! / (x + p)^(s+1)
"""

from __future__ import annotations

from math import factorial
from typing import Iterable

from .errors import NotStrictlyProper
from .ratfunc import MellinRF
from .scalars import GaussQ, gq, to_fraction

#: Deepest log power accepted; diamond of log-free terms only reaches s = 1.
MAX_LOG_POWER = 64


def _check_s(s: int) -> int:
    if s < 0 or s > MAX_LOG_POWER:
        raise ValueError("log power %d outside [0, %d]" % (s, MAX_LOG_POWER))
    return s


def mellin_forward(radial: Iterable) -> MellinRF:
    """Transform a list of ``(coeff, p, s)`` triples."""
    poles = []
    for coeff, p, s in radial:
        s = _check_s(int(s))
        c = gq(coeff) * ((-1) ** s * factorial(s))
        cs = [GaussQ(0)] * s + [c]
        poles.append((-gq(to_fraction(p)), cs))
    return MellinRF(None, poles)


def mellin_inverse(f: MellinRF) -> list:
    """Recover ``[(coeff, p, s)]`` from a strictly proper transform."""
    if not f.is_strictly_proper():
        raise NotStrictlyProper("transform has polynomial part %r" % (f.poly,))
    out = []
    for a, cs in f.poles:
        if not a.is_real():
            raise ValueError("pole %s is not real; exponent would be complex" % a)
        for j, c in enumerate(cs):
            if c:
                _check_s(j)
                out.append((c * GaussQ((-1) ** j, 0) / factorial(j), -a.re, j))
    return out


def mellin_eval_shift(f: MellinRF, offset) -> MellinRF:
    """``x -> x + offset``; transform of ``r^offset * phi``."""
    return f.shift(offset)
