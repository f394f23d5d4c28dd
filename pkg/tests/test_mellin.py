import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from qhtoeplitz.errors import NotStrictlyProper
from qhtoeplitz.mellin import MAX_LOG_POWER, mellin_eval_shift, mellin_forward, mellin_inverse
from qhtoeplitz.poly import Poly
from qhtoeplitz.ratfunc import MellinRF, rf_eval, rf_normalize
from qhtoeplitz.scalars import GaussQ

from strategies import gauss, radial_sums, small_frac


def canon(radial):
    """Merge ``(coeff, p, s)`` triples into a dict keyed by ``(p, s)``."""
    out = {}
    for c, p, s in radial:
        key = (Fraction(p), s)
        out[key] = out.get(key, GaussQ(0)) + c
    return {k: v for k, v in out.items() if v}


@pytest.mark.parametrize("alpha", [Fraction(-3, 2), 0, Fraction(7, 3)])
def test_forward_examples(alpha):
    assert mellin_forward([(1, alpha, 0)]) == rf_normalize(Poly([1]), {-alpha: 1})
    assert mellin_forward([(1, alpha, 1)]) == rf_normalize(Poly([-1]), {-alpha: 2})


def test_forward_log_squared():
    assert mellin_forward([(1, 2, 2)]) == rf_normalize(Poly([2]), {-2: 3})


def test_inverse_examples():
    assert canon(mellin_inverse(rf_normalize(Poly([1]), {-2: 1}))) == {(2, 0): 1}
    assert canon(mellin_inverse(rf_normalize(Poly([1]), {1: 2}))) == {(-1, 1): -1}
    with pytest.raises(NotStrictlyProper):
        mellin_inverse(MellinRF(Poly([1])))


def test_log_power_cap():
    with pytest.raises(ValueError):
        mellin_forward([(1, 0, MAX_LOG_POWER + 1)])


def test_shift_examples():
    f = rf_normalize(Poly([1]), {-2: 1})
    assert mellin_eval_shift(f, 3) == rf_normalize(Poly([1]), {-5: 1})
    assert mellin_eval_shift(f, 0) == f
    g = rf_normalize(Poly([1]), {Fraction(-1, 2): 2})
    assert mellin_eval_shift(g, 4) == rf_normalize(Poly([1]), {Fraction(-9, 2): 2})


@settings(max_examples=500)
@given(radial_sums())
def test_round_trip(x):
    assert canon(mellin_inverse(mellin_forward(x))) == canon(x)


@settings(max_examples=500)
@given(radial_sums(), radial_sums(), gauss)
def test_linearity(x, y, a):
    ax = [(a * c, p, s) for c, p, s in x]
    assert mellin_forward(ax + y) == mellin_forward(x).scale(a) + mellin_forward(y)


@settings(max_examples=500)
@given(radial_sums(), small_frac)
def test_shift_law(x, M):
    shifted = [(c, p + M, s) for c, p, s in x]
    assert mellin_forward(shifted) == mellin_eval_shift(mellin_forward(x), M)


positive_exps = st.sampled_from([Fraction(-1, 2), Fraction(-1, 3), 0, Fraction(1, 2), 1, 2, 3])


# quad may warn about roundoff on near-cancelling sums; the assertion
# below is what decides
@pytest.mark.filterwarnings("ignore::scipy.integrate.IntegrationWarning")
@settings(max_examples=60)
@given(radial_sums(max_terms=3, exps=positive_exps), st.sampled_from([2, 3, 4]))
def test_forward_matches_quadrature(x, z0):
    x = [(GaussQ(c.re), p, s) for c, p, s in x]  # real coefficients for quad

    def integrand(r):
        return sum(float(c.re) * r ** float(p) * math.log(r) ** s for c, p, s in x) * r ** (z0 - 1)

    exact = float(rf_eval(mellin_forward(x), z0).re)
    numeric, _ = quad(integrand, 0, 1, epsabs=0, epsrel=1e-13, limit=200)
    assert numeric == pytest.approx(exact, rel=1e-9, abs=1e-12)
