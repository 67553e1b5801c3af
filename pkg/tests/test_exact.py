from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from tricover.exact import (
    ExactMatrix,
    HomogPoly,
    is_squarefree,
    poly_gcd,
    poly_mul,
    poly_product,
    rank,
)

X, Y = sympy.symbols("x y")


def to_sympy(p: HomogPoly):
    return sum(c * X**i * Y ** (p.degree - i) for i, c in enumerate(p.coeffs))


def fraction_rank(rows):
    """Plain Gauss-Jordan over Fraction; independent of the Bareiss path."""
    a = [[Fraction(v) for v in row] for row in rows]
    if not a:
        return 0
    r = 0
    for c in range(len(a[0])):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


polys = st.integers(0, 6).flatmap(
    lambda d: st.lists(st.integers(-20, 20), min_size=d + 1, max_size=d + 1).map(
        lambda cs: HomogPoly(d, tuple(cs))
    )
)
matrices = st.tuples(st.integers(0, 6), st.integers(0, 6)).flatmap(
    lambda rc: st.lists(
        st.lists(st.integers(-5, 5), min_size=rc[1], max_size=rc[1]),
        min_size=rc[0],
        max_size=rc[0],
    ).map(lambda rows: ExactMatrix(rc[0], rc[1], tuple(v for row in rows for v in row)))
)


class TestPolyMul:
    def test_difference_of_squares(self):
        p = poly_mul(HomogPoly.linear(1, 1), HomogPoly.linear(1, -1))
        assert p.degree == 2
        # x^2 - y^2: index i is the x^i y^(2-i) coefficient
        assert p.coeffs == (-1, 0, 1)

    def test_identity(self):
        p = HomogPoly(3, (4, -1, 0, 7))
        assert poly_mul(p, HomogPoly.const(1)) == p

    def test_binomial_cube(self):
        # hand convolution of [1, 2, 1] with [1, 1]
        sq = HomogPoly(2, (1, 2, 1))
        assert poly_mul(sq, HomogPoly.linear(1, 1)).coeffs == (1, 3, 3, 1)

    @given(polys, polys)
    def test_commutative(self, p, q):
        assert poly_mul(p, q) == poly_mul(q, p)

    @given(polys, polys, polys)
    def test_associative(self, p, q, s):
        assert poly_mul(poly_mul(p, q), s) == poly_mul(p, poly_mul(q, s))

    @given(polys, polys)
    def test_matches_sympy(self, p, q):
        prod = poly_mul(p, q)
        assert sympy.expand(to_sympy(prod) - to_sympy(p) * to_sympy(q)) == 0


class TestSquarefree:
    def test_repeated_x(self):
        assert not is_squarefree(HomogPoly.monomial(2, 3))  # x^2 y

    def test_cubic(self):
        assert is_squarefree(HomogPoly(3, (-1, 0, 0, 1)))  # x^3 - y^3

    def test_distinct_roots(self):
        f = poly_product(HomogPoly.linear(1, -i) for i in range(6))
        assert is_squarefree(f)

    def test_linear_forms(self):
        assert is_squarefree(HomogPoly.linear(1, 0))
        assert is_squarefree(HomogPoly.linear(0, 1))

    def test_y_squared(self):
        assert not is_squarefree(HomogPoly.monomial(1, 3))  # x y^2

    def test_zero_raises(self):
        with pytest.raises(ValueError, match="zero polynomial"):
            is_squarefree(HomogPoly.zero(3))

    @given(polys.filter(lambda p: not p.is_zero()))
    @settings(max_examples=60)
    def test_agrees_with_sympy(self, p):
        expected = all(mult == 1 for _, mult in sympy.factor_list(to_sympy(p), X, Y)[1])
        assert is_squarefree(p) == expected

    @given(polys.filter(lambda p: not p.is_zero() and p.degree >= 1))
    @settings(max_examples=40)
    def test_times_x_squared_never_squarefree(self, p):
        assert not is_squarefree(poly_mul(p, HomogPoly.monomial(2, 2)))


class TestGcd:
    def test_common_factor(self):
        a = poly_mul(HomogPoly.linear(1, -2), HomogPoly.linear(1, 3))
        b = poly_mul(HomogPoly.linear(1, -2), HomogPoly.linear(0, 1))
        assert poly_gcd(a, b) == HomogPoly.linear(1, -2)

    def test_power_of_y(self):
        a = HomogPoly.monomial(0, 3)  # y^3
        b = HomogPoly.monomial(1, 3)  # x y^2
        assert poly_gcd(a, b) == HomogPoly.monomial(0, 2)


class TestRank:
    def test_empty(self):
        assert rank(ExactMatrix(0, 0, ())) == 0

    def test_identity(self):
        assert rank(ExactMatrix.identity(3)) == 3

    def test_proportional(self):
        assert rank(ExactMatrix.from_rows([[1, 2], [2, 4], [3, 6]])) == 1

    def test_bad_shape(self):
        with pytest.raises(ValueError):
            ExactMatrix(2, 2, (1, 2, 3))

    @given(matrices)
    def test_matches_fraction_elimination(self, mat):
        assert rank(mat) == fraction_rank(mat.row_list())

    @given(matrices)
    def test_transpose(self, mat):
        assert rank(mat) == rank(mat.transpose())

    @given(matrices, st.randoms(use_true_random=False), st.integers(1, 9))
    def test_row_operations(self, mat, rnd, scale):
        rows = mat.row_list()
        rnd.shuffle(rows)
        if rows:
            rows[0] = [scale * v for v in rows[0]]
        assert rank(ExactMatrix.from_rows(rows, mat.cols)) == rank(mat)

    def test_large_entries(self):
        big = 10**40
        m = ExactMatrix.from_rows([[big, 1, 0], [big + 1, 1, 0], [2 * big + 1, 2, 0]])
        assert rank(m) == 2 == fraction_rank(m.row_list())
