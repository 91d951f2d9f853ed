from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orientedline import (
    GaussianInt,
    GaussianMatrix,
    IntMatrix,
    IntPolynomial,
    NotDivisible,
    X,
    adjacency_matrix,
    charpoly_exact,
    charpoly_faddeev_leverrier,
    complete_graph,
    integrality_check,
    poly_compose,
    poly_exact_divide,
    poly_product_power,
)
from orientedline.exact_algebra import det_bareiss, evaluation_points, integer_roots

from conftest import leibniz_charpoly, leibniz_det

small_ints = st.integers(min_value=-9, max_value=9)
polys = st.lists(small_ints, max_size=6).map(IntPolynomial)


def int_matrices(max_order=5, lo=-3, hi=3):
    return st.integers(min_value=1, max_value=max_order).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n
        ).map(lambda rows: IntMatrix(tuple(map(tuple, rows))))
    )


# -- polynomials ------------------------------------------------------------


def test_normalisation_and_degree():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]).is_zero()
    assert IntPolynomial().degree == -1
    assert str(X**2 - 4) == "x^2 - 4"
    assert str(-X) == "-x"


def test_product_power_examples():
    assert poly_product_power([(X - 2, 1), (X + 2, 1)]) == X * X - 4
    assert poly_product_power([(X * X - 4, 2)]) == IntPolynomial([16, 0, -8, 0, 1])
    assert poly_product_power([]) == IntPolynomial([1])


def test_compose_examples():
    assert poly_compose(X * X, X + 1) == IntPolynomial([1, 2, 1])
    assert poly_compose(X - 3, X * X + 9) == X * X + 6


@given(polys)
def test_compose_with_x_is_identity(p):
    assert poly_compose(p, X) == p


@given(polys, polys, polys)
@settings(max_examples=50)
def test_compose_associative(p, q, r):
    assert poly_compose(poly_compose(p, q), r) == poly_compose(p, poly_compose(q, r))


@given(polys, st.integers(-5, 5))
def test_compose_matches_evaluation(p, t):
    q = X * X - 3 * X + 1
    assert poly_compose(p, q)(t) == p(q(t))


def test_exact_divide_examples():
    assert poly_exact_divide(X * X - 4, X - 2) == X + 2
    res = poly_exact_divide(X * X + 1, X - 1)
    assert isinstance(res, NotDivisible)
    assert res.remainder_poly() == IntPolynomial([2])
    with pytest.raises(ZeroDivisionError):
        poly_exact_divide(X, IntPolynomial())


def test_exact_divide_nonprimitive_divisor_is_not_divisible_in_zx():
    res = poly_exact_divide(X, 2 * X)
    assert isinstance(res, NotDivisible)
    assert res.remainder == ()
    assert res.quotient == (Fraction(1, 2),)


@given(polys, st.lists(small_ints, max_size=4))
def test_exact_divide_recovers_factor(p, lower):
    monic = IntPolynomial(lower + [1])
    assert poly_exact_divide(p * monic, monic) == p


# -- integer roots ----------------------------------------------------------


def test_integer_roots_and_factored_display():
    p = IntPolynomial.from_roots({4: 1, 2: 3, -2: 5, 0: 3})
    assert integrality_check(p) == {4: 1, 2: 3, -2: 5, 0: 3}
    assert p.factored() == "(x - 4)*(x - 2)^3*x^3*(x + 2)^5"
    assert integrality_check(X * X - 2) is None
    roots, residual = integer_roots((X - 1) * (X * X + 1))
    assert roots == {1: 1} and residual == X * X + 1


@given(st.lists(st.integers(-12, 12), max_size=7))
def test_integrality_check_recovers_any_integer_root_multiset(roots):
    p = IntPolynomial.from_roots(roots)
    found = integrality_check(p)
    assert found is not None
    assert sorted(found.elements()) == sorted(roots)


# -- Gaussian integers --------------------------------------------------------


def test_gaussian_arithmetic():
    i = GaussianInt(0, 1)
    assert i * i == GaussianInt(-1, 0)
    assert (GaussianInt(3, 4) * GaussianInt(1, -2)).exact_div(GaussianInt(1, -2)) == GaussianInt(3, 4)
    with pytest.raises(ArithmeticError):
        GaussianInt(1, 0).exact_div(GaussianInt(1, 1))
    assert GaussianInt(2, -3).conjugate() == GaussianInt(2, 3)


# -- characteristic polynomials ---------------------------------------------


def test_charpoly_examples():
    assert charpoly_exact(IntMatrix.zeros(3)) == X**3
    assert charpoly_exact(adjacency_matrix(complete_graph(2))) == X * X - 1


def test_charpoly_k4_against_leibniz_oracle():
    a = adjacency_matrix(complete_graph(4))
    oracle = leibniz_charpoly(a)
    assert oracle == IntPolynomial([-3, -8, -6, 0, 1])  # (x-3)(x+1)^3
    assert charpoly_exact(a) == oracle


def test_evaluation_points_order():
    assert evaluation_points(6) == [0, 1, -1, 2, -2, 3]


@given(int_matrices(5))
@settings(max_examples=60, deadline=None)
def test_charpoly_matches_leibniz(m):
    assert charpoly_exact(m) == leibniz_charpoly(m)


@given(int_matrices(6, -50, 50))
@settings(max_examples=60, deadline=None)
def test_charpoly_matches_faddeev_leverrier(m):
    assert charpoly_exact(m) == charpoly_faddeev_leverrier(m)


@given(int_matrices(5), st.integers(-6, 6))
@settings(max_examples=60, deadline=None)
def test_charpoly_evaluates_to_independent_determinant(m, t):
    n = m.order
    shifted = [[(t if i == j else 0) - m[i, j] for j in range(n)] for i in range(n)]
    assert charpoly_exact(m)(t) == leibniz_det(shifted) == det_bareiss(shifted)


@given(int_matrices(4), int_matrices(4))
@settings(max_examples=40, deadline=None)
def test_block_diagonal_charpoly_is_product(a, b):
    n, k = a.order, b.order
    rows = [list(r) + [0] * k for r in a.rows] + [[0] * n + list(r) for r in b.rows]
    block = IntMatrix(tuple(map(tuple, rows)))
    assert charpoly_exact(block) == charpoly_exact(a) * charpoly_exact(b)


@given(int_matrices(6, -20, 20))
@settings(max_examples=60, deadline=None)
def test_trace_and_determinant_coefficients(m):
    p = charpoly_exact(m)
    n = m.order
    assert p.coeff(n - 1) == -m.trace()
    assert p.coeff(0) == (-1) ** n * det_bareiss(m.rows)


def test_large_entries_stay_exact():
    big = 10**40
    m = IntMatrix(((big, 1), (1, -big)))
    assert charpoly_exact(m) == X * X - (big * big + 1)


def _hermitian_from(rows_re, rows_im):
    n = len(rows_re)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        out[i][i] = GaussianInt(rows_re[i][i], 0)
        for j in range(i + 1, n):
            z = GaussianInt(rows_re[i][j], rows_im[i][j])
            out[i][j], out[j][i] = z, z.conjugate()
    return GaussianMatrix(tuple(map(tuple, out)))


@given(
    st.integers(1, 4).flatmap(
        lambda n: st.tuples(
            st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n),
            st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n),
        )
    )
)
@settings(max_examples=50, deadline=None)
def test_hermitian_charpoly_matches_gaussian_leibniz(parts):
    h = _hermitian_from(*parts)
    p = charpoly_exact(h)
    n = h.order
    for t in range(-3, 4):
        shifted = [[(GaussianInt(t) if i == j else GaussianInt(0)) - h[i, j] for j in range(n)] for i in range(n)]
        d = leibniz_det(shifted)
        assert d == GaussianInt(p(t), 0)


def test_non_hermitian_gaussian_rejected():
    m = GaussianMatrix(((GaussianInt(0), GaussianInt(0, 1)), (GaussianInt(0, 1), GaussianInt(0))))
    with pytest.raises(ValueError, match="Hermitian"):
        charpoly_exact(m)


def test_polynomial_json_schema():
    out = ((X - 2) ** 2 * (X * X + 1)).to_json()
    assert out["coeffs"] == ["4", "-4", "5", "-4", "1"]
    assert out["factored"] == "(x - 2)^2*(x^2 + 1)"
