"""Hypothesis strategies shared across the suite."""

from fractions import Fraction

from hypothesis import strategies as st

from qhtoeplitz.poly import Poly
from qhtoeplitz.ratfunc import MellinRF
from qhtoeplitz.scalars import GaussQ
from qhtoeplitz.symbols import QHTerm, Symbol, from_laurent

small_int = st.integers(-4, 4)
small_frac = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
nonzero_frac = small_frac.filter(bool)

gauss = st.builds(GaussQ, small_frac, small_frac)
real_gauss = st.builds(GaussQ, small_frac)
nonzero_gauss = gauss.filter(bool)

exponents = st.sampled_from([Fraction(-3, 2), -1, Fraction(-1, 2), 0, Fraction(1, 2), 1, 2, 3])


def polys(max_degree=4, coeff=gauss):
    return st.lists(coeff, max_size=max_degree + 1).map(Poly)


@st.composite
def rational_functions(draw, max_factors=4):
    """Proper-or-not rational functions with at most ``max_factors``
    linear factors in the denominator, stored in normal form."""
    n = draw(st.integers(0, max_factors))
    poles = []
    for _ in range(n):
        a = draw(st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3)))
        poles.append((a, [draw(gauss) for _ in range(draw(st.integers(1, 2)))]))
    return MellinRF(draw(polys(2)), poles)


@st.composite
def radial_sums(draw, max_terms=4, max_log=2, exps=exponents):
    """``[(coeff, p, s)]`` with distinct ``(p, s)`` keys."""
    items = draw(
        st.dictionaries(
            st.tuples(exps, st.integers(0, max_log)),
            nonzero_gauss,
            max_size=max_terms,
        )
    )
    return [(c, Fraction(p), s) for (p, s), c in items.items()]


def terms(p=exponents, s=st.integers(0, 2), m=st.integers(-3, 3), coeff=nonzero_gauss):
    return st.builds(QHTerm, coeff, p.map(Fraction), s, m)


def symbols(max_terms=3, **kw):
    return st.lists(terms(**kw), max_size=max_terms).map(Symbol)


@st.composite
def zzbar_symbols(draw, max_terms=3, max_log=1, lo=-3, hi=3):
    """Symbols ``sum c z^a zb^b (log r)^s`` with integer ``a, b``."""
    out = []
    for _ in range(draw(st.integers(0, max_terms))):
        a, b = draw(st.integers(lo, hi)), draw(st.integers(lo, hi))
        s = draw(st.integers(0, max_log))
        out.append(QHTerm(draw(nonzero_gauss), Fraction(a + b), s, a - b))
    return Symbol(out)


def laurent_polys(lo=-4, hi=4, max_terms=4, coeff=nonzero_gauss):
    return st.dictionaries(st.integers(lo, hi), coeff, max_size=max_terms).map(from_laurent)


def holomorphic_polys(max_degree=4, coeff=nonzero_gauss):
    return laurent_polys(0, max_degree, max_degree + 1, coeff)
