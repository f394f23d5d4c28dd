"""Exact finite-rank calculus for Toeplitz products with quasihomogeneous
symbols on the Bergman space."""

from .constructor import (
    CoeffMatrix,
    FactorMatrices,
    check_diagonal_conditions,
    factor_to_matrix,
    make_example,
    matrix_to_expr,
)
from .criteria import (
    classify_monomial_pair,
    classify_poly_pair,
    pde_verify,
    rational_zero_rank_check,
)
from .diamond import diamond, diamond_monomial_closed_form, diamond_pair
from .linalg import exact_rank
from .mellin import mellin_eval_shift, mellin_forward, mellin_inverse
from .parser import parse_operator, parse_symbol, print_operator, print_symbol
from .poly import Poly
from .ratfunc import MellinRF, rf_arith, rf_eval, rf_normalize
from .scalars import GaussQ
from .symbols import (
    QHTerm,
    Symbol,
    eval_at_one,
    from_monomial,
    integrability_class,
    symbol_arith,
    wirtinger,
)
from .toeplitz import (
    MonomialVector,
    OperatorExpr,
    T,
    certify_finite_rank,
    compute_rank,
    expr_apply,
    toeplitz_apply,
)

__version__ = "0.1.0"
