"""Decision procedures: monomial-pair and polynomial-pair classification,
the first-order PDE check, and the finite-rank test for rational symbols."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .diamond import diamond, diamond_monomial_closed_form
from .errors import DomainError
from .poly import Poly
from .scalars import GaussQ, to_fraction
from .symbols import (
    L1_DISK,
    Symbol,
    eval_at_one,
    from_laurent,
    integrability_class,
    laurent_coeffs,
    wirtinger,
)
from .toeplitz import OperatorExpr


@dataclass
class MonomialPairResult:
    finite_rank_perturbation: bool
    matched_condition: Optional[int]
    all_matched: list
    perturbation: Optional[Symbol] = None


def classify_monomial_pair(p, m: int, q, n: int) -> MonomialPairResult:
    """When is ``T_{r^p e^{im theta}} T_{r^q e^{in theta}}`` a finite-rank
    perturbation of a Toeplitz operator with integrable symbol?"""
    p, q = to_fraction(p), to_fraction(q)
    if p <= -2 or q <= -2:
        raise DomainError("both radial exponents must exceed -2 (got p=%s, q=%s)" % (p, q))
    # m + p = 0 kills the r^(p+n) term of p <> q, leaving r^(q-m); n = q
    # kills r^(q-m).  Each equality is paired with the surviving exponent.
    conds = [
        q - m + 2 > 0 and p + n + 2 > 0,
        m + p == 0 and q - m + 2 > 0,
        n - q == 0 and p + n + 2 > 0,
    ]
    matched = [i + 1 for i, c in enumerate(conds) if c]
    ok = bool(matched)
    h = diamond_monomial_closed_form(p, m, q, n) if ok else None
    # several may hold at once; report the most specific (equality) one
    return MonomialPairResult(ok, matched[-1] if ok else None, matched, h)


@dataclass
class PolyPairResult:
    exists_H: bool
    case: Optional[int]
    semantic_exists_H: bool
    H: Optional[Symbol] = None


def _poly_symbol(P: Poly) -> Symbol:
    return from_laurent({k: c for k, c in enumerate(P.coeffs) if c})


def _match_pattern(P: Poly, Q: Poly) -> Optional[int]:
    dp, dq = P.degree, Q.degree
    if dp <= 0 or dq <= 0:
        return 1
    sp, sq = set(P.support()), set(Q.support())
    M = dp
    if dq == M - 1 and sp <= {0, M - 2, M - 1, M} and sq <= {0, M - 1}:
        return 2
    if dq == M and sp <= {0, M - 1, M} and sq <= {0, M - 1, M}:
        return 3
    if dq == M + 1 and sp <= {0, M} and sq <= {0, M - 1, M, M + 1}:
        return 4
    return None


def classify_poly_pair(P: Poly, Q: Poly) -> PolyPairResult:
    """Sparsity-pattern test for ``T_P T_{conj Q}`` alongside the semantic
    test (is ``P <> conj(Q)`` integrable?).

    Interior coefficients of a pattern may vanish; the pattern only bounds
    the support and fixes the degrees.
    """
    case = _match_pattern(P, Q)
    h = diamond(_poly_symbol(P), _poly_symbol(Q).conjugate())
    semantic = integrability_class(h) == L1_DISK
    return PolyPairResult(case is not None, case, semantic, h if semantic else None)


def _as_laurent(x) -> Symbol:
    if isinstance(x, Symbol):
        laurent_coeffs(x)
        return x
    if isinstance(x, Poly):
        return _poly_symbol(x)
    if isinstance(x, dict):
        return from_laurent(x)
    return Symbol.constant(x)


@dataclass
class PDEReport:
    ok: bool
    failures: list = field(default_factory=list)


def pde_rhs(Ps: Sequence, Qs: Sequence):
    """Right-hand sides ``(sum P' Qbar(1/zb), sum P(1/zb) Qbar'(z), sum P(1) Qbar(1))``."""
    if len(Ps) != len(Qs):
        raise ValueError("Ps and Qs must have equal length")
    dz = Symbol()
    dzb = Symbol()
    at_one = GaussQ(0)
    for P, Q in zip(Ps, Qs):
        P, Qc = _as_laurent(P), _as_laurent(Q).conjugate()
        dz = dz + wirtinger(P, "d_dz") * Qc.reflect()
        dzb = dzb + P.reflect() * wirtinger(Qc, "d_dzbar")
        at_one = at_one + eval_at_one(P) * eval_at_one(Qc)
    return dz, dzb, at_one


def pde_verify(Ps: Sequence, Qs: Sequence, H: Symbol) -> PDEReport:
    rhs_z, rhs_zb, rhs_one = pde_rhs(Ps, Qs)
    failures = []
    res = wirtinger(H, "d_dz") - rhs_z
    if res:
        failures.append({"equation": "d_dz", "residual": res})
    res = wirtinger(H, "d_dzbar") - rhs_zb
    if res:
        failures.append({"equation": "d_dzbar", "residual": res})
    gap = eval_at_one(H) - rhs_one
    if gap:
        failures.append({"equation": "H(1)", "residual": Symbol.constant(gap)})
    return PDEReport(not failures, failures)


def _bar_at_inverse(M: Poly) -> Symbol:
    """``conj(M)(1/z)`` as a holomorphic Laurent polynomial."""
    return _poly_symbol(M).conjugate().reflect()


def rational_zero_rank_check(F_nums: Sequence[Poly], G_nums: Sequence[Poly], D: Poly) -> bool:
    """Finite-rank test for ``sum T_{F_j} T_{conj G_j}``, ``F_j = F_nums[j]/D``,
    ``G_j = G_nums[j]/D``.

    ``D`` must not vanish on the closed unit disk; that is the caller's
    responsibility.  Both identities are checked after clearing
    ``D(z) * conj(D)(1/z)**2``.
    """
    if len(F_nums) != len(G_nums):
        raise ValueError("Fs and Gs must have equal length")
    if D.is_zero():
        raise ZeroDivisionError("zero common denominator")
    d_bar = _bar_at_inverse(D)
    dd_bar = _bar_at_inverse(D.derivative())
    first = Symbol()
    second = Symbol()
    for N, M in zip(F_nums, G_nums):
        n = _poly_symbol(N)
        m_bar = _bar_at_inverse(M)
        first = first + n * m_bar
        second = second + n * (_bar_at_inverse(M.derivative()) * d_bar - m_bar * dd_bar)
    return first.is_zero() and second.is_zero()


def polynomial_product_expr(Ps: Sequence[Poly], Qs: Sequence[Poly], signs=None) -> OperatorExpr:
    """``sum sign_j T_{P_j} T_{conj Q_j}``."""
    signs = signs or [1] * len(Ps)
    summands = []
    for s, P, Q in zip(signs, Ps, Qs):
        summands.append((s, (_poly_symbol(P), _poly_symbol(Q).conjugate())))
    return OperatorExpr(tuple(summands))
