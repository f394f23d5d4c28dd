import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhtoeplitz.errors import NonLinearFactor, PoleEvaluation
from qhtoeplitz.linalg import exact_rank, rref
from qhtoeplitz.poly import ZERO_DEGREE, Poly
from qhtoeplitz.ratfunc import MellinRF, rf_arith, rf_eval, rf_normalize
from qhtoeplitz.scalars import GaussQ, I, frac_str

from strategies import gauss, nonzero_gauss, polys, rational_functions

zeta = Poly.x()


def lin(a):
    """``zeta + a``"""
    return Poly([a, 1])


# -- GaussQ ------------------------------------------------------------------


@given(gauss, gauss, gauss)
def test_gauss_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


@given(nonzero_gauss)
def test_gauss_inverse(a):
    assert a * a.inverse() == 1
    assert a / a == GaussQ(1)


@given(gauss)
def test_conjugation_is_involution(a):
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).is_real()


def test_gauss_equals_plain_rationals():
    assert GaussQ(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(GaussQ(3)) == hash(3)
    assert I * I == -1
    assert str(GaussQ(Fraction(1, 2), Fraction(-3, 4))) == "(1/2-3/4i)"


def test_frac_str_always_has_denominator():
    assert frac_str(Fraction(0)) == "0/1"
    assert frac_str(Fraction(-6, 4)) == "-3/2"


# -- Poly --------------------------------------------------------------------


def test_zero_poly_degree_sentinel():
    assert Poly().degree == ZERO_DEGREE
    assert Poly([0, 0]).degree == ZERO_DEGREE
    assert Poly([1, 0, 0]).degree == 0


@given(polys(), polys(), gauss)
def test_poly_eval_is_a_ring_map(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


@given(polys(), polys().filter(lambda p: not p.is_zero()))
def test_poly_divmod(p, q):
    quo, rem = p.divmod(q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


# -- rf_normalize --------------------------------------------------------------


def test_normalize_cancels_common_factor():
    f = rf_normalize(zeta, lin(0) * lin(2))
    assert f.pole_terms == [(GaussQ(-2), 1, [GaussQ(1)])]
    assert f.polynomial_part.is_zero()


def test_normalize_double_pole():
    f = rf_normalize(Poly([1]), {-2: 2})
    assert f.pole_terms == [(GaussQ(-2), 2, [GaussQ(0), GaussQ(1)])]


def test_normalize_two_simple_poles():
    # residues of (x+2)/((x+3)(x+1)): at -3 -> (-1)/(-2), at -1 -> 1/2
    f = rf_normalize(lin(2), lin(3) * lin(1))
    half = GaussQ(Fraction(1, 2))
    assert f.pole_terms == [(GaussQ(-3), 1, [half]), (GaussQ(-1), 1, [half])]


def test_normalize_rejects_irreducible_quadratic():
    with pytest.raises(NonLinearFactor):
        rf_normalize(Poly([1]), Poly([1, 0, 1]))


def test_normalize_splits_gaussian_roots_from_factored_form():
    f = rf_normalize(Poly([1]), {I: 1, -I: 1})
    assert rf_eval(f, 2) == Fraction(1, 5)


@given(rational_functions())
def test_reconstruct_round_trip(f):
    num, roots = f.reconstruct()
    assert rf_normalize(num, roots) == f


@given(rational_functions(), rational_functions())
def test_reconstruct_is_a_true_quotient(f, g):
    num, roots = f.reconstruct()
    den = Poly.from_roots(roots)
    for x0 in (7, Fraction(13, 2), GaussQ(1, 9)):
        assert num(x0) / den(x0) == rf_eval(f, x0)


# -- rf_arith ------------------------------------------------------------------


def test_rf_arith_examples():
    a = rf_normalize(Poly([1]), {-1: 1})
    assert rf_arith(a, a.scale(-1), "add").is_zero()
    b = rf_normalize(Poly([1]), {-1: 1, 1: 1})
    assert rf_arith(b, MellinRF(Poly([-1, 1])), "mul") == a
    assert rf_arith(a, a, "mul") == rf_normalize(Poly([1]), {-1: 2})


@settings(max_examples=60)
@given(rational_functions(3), rational_functions(3), rational_functions(3))
def test_rf_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60)
@given(rational_functions(3), rational_functions(3), st.sampled_from([11, Fraction(-23, 3), GaussQ(2, 5)]))
def test_rf_eval_multiplicative(a, b, x0):
    assert rf_eval(a * b, x0) == rf_eval(a, x0) * rf_eval(b, x0)


def test_rf_eval_examples():
    assert rf_eval(rf_normalize(Poly([1]), {-2: 1}), 2) == Fraction(1, 4)
    assert rf_eval(rf_normalize(zeta, {-1: 2}), 1) == Fraction(1, 4)
    with pytest.raises(PoleEvaluation):
        rf_eval(rf_normalize(Poly([1]), {-2: 1}), -2)


# -- exact_rank ----------------------------------------------------------------


def _det(M):
    n = len(M)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = Fraction(1)
        for i in range(n):
            prod *= M[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total


def minor_rank(M):
    """Largest order of a nonvanishing minor."""
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    for r in range(min(rows, cols), 0, -1):
        for ri in itertools.combinations(range(rows), r):
            for ci in itertools.combinations(range(cols), r):
                if _det([[M[i][j] for j in ci] for i in ri]):
                    return r
    return 0


def test_exact_rank_examples():
    assert exact_rank([]) == 0
    assert exact_rank([[1, 0], [0, 1], [1, 1]]) == 2


def test_exact_rank_of_sd_images():
    # S_4 sends z^j to (3-j)/(j+1) z^j for j <= 2
    rows = [[Fraction(3 - j, j + 1) if i == j else 0 for i in range(5)] for j in range(3)]
    rows += [[0] * 5, [0] * 5]
    assert exact_rank(rows) == 3


@pytest.mark.parametrize("shape", [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2), (2, 3), (3, 2)])
def test_exact_rank_matches_minors_exhaustively(shape):
    r, c = shape
    for flat in itertools.product(range(-2, 3), repeat=r * c):
        M = [list(flat[i * c : (i + 1) * c]) for i in range(r)]
        assert exact_rank(M) == minor_rank(M), M


square3 = st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3), min_size=3, max_size=3)


@settings(max_examples=1500)
@given(square3)
def test_exact_rank_matches_minors_3x3(M):
    assert exact_rank(M) == minor_rank(M)


@pytest.mark.parametrize(
    "M",
    [
        [[1, 2, -1], [2, 4, -2], [-1, -2, 1]],
        [[1, 0, 1], [0, 1, 1], [1, 1, 2]],
        [[2, -2, 0], [1, 1, 2], [-1, -1, -2]],
        [[0, 0, 0], [0, 0, 0], [0, 0, 2]],
        [[1, 1, 1], [1, 1, 1], [1, 1, 1]],
    ],
)
def test_exact_rank_singular_corpus(M):
    assert exact_rank(M) == minor_rank(M)


def test_exact_rank_gaussian_entries():
    assert exact_rank([[1, I], [I, -1]]) == 1
    assert exact_rank([[1, I], [I, 1]]) == 2


def test_rref_spans_same_space():
    M = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    R = rref(M)
    assert len(R) == 2 == exact_rank(M)
    assert exact_rank(M + R) == 2
