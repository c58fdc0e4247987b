from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from narayana.exact_core import (
    IndeterminateMismatchError,
    PolySeries,
    QPolynomial,
    SeriesPreconditionError,
    binomial,
    finite_difference_check,
)

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=12
)
poly_coeffs = st.lists(rationals, min_size=0, max_size=7)


def make_poly(coeffs, var="q"):
    return QPolynomial(tuple(coeffs), var)


class TestBinomial:
    def test_pascal_row(self):
        assert [binomial(5, k) for k in range(6)] == [1, 5, 10, 10, 5, 1]

    def test_out_of_range_is_zero(self):
        assert binomial(4, -1) == 0
        assert binomial(4, 5) == 0

    def test_negative_upper_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    @given(st.integers(1, 40), st.integers(0, 40))
    def test_pascal_recurrence(self, n, k):
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


class TestQPolynomial:
    def test_trailing_zeros_normalized(self):
        assert QPolynomial((1, 2, 0, 0), "q") == QPolynomial((1, 2), "q")

    def test_degree_of_zero(self):
        assert QPolynomial.zero("q").degree == -1

    def test_constant_is_var_agnostic(self):
        c = QPolynomial.constant(3, "q")
        x = QPolynomial((0, 1), "x")
        assert (c + x).var == "x"
        assert c == QPolynomial.constant(3, "x")

    def test_mismatched_vars_rejected(self):
        q = QPolynomial((0, 1), "q")
        x = QPolynomial((0, 1), "x")
        with pytest.raises(IndeterminateMismatchError):
            q + x

    def test_product_example(self):
        q = QPolynomial((0, 1), "q")
        assert ((1 + q) * (1 - q)).coeffs == (Fraction(1), Fraction(0), Fraction(-1))

    def test_power_binomial_theorem(self):
        q = QPolynomial((0, 1), "q")
        p = (1 + q) ** 6
        assert [p.coefficient(i) for i in range(7)] == [
            binomial(6, i) for i in range(7)
        ]

    def test_call_horner(self):
        p = QPolynomial((1, -3, 2), "q")
        assert p(Fraction(5)) == 1 - 15 + 50

    def test_substitute_composes(self):
        p = QPolynomial((0, 0, 1), "q")
        inner = QPolynomial((1, 1), "x")
        assert p.substitute(inner) == QPolynomial((1, 2, 1), "x")

    def test_derivative_antiderivative_round_trip(self):
        p = QPolynomial((0, 1, 4, -2), "q")
        assert p.antiderivative().derivative() == p

    def test_antiderivative_constant_term_zero(self):
        p = QPolynomial((7, 2), "q")
        assert p.antiderivative().coefficient(0) == 0

    @given(poly_coeffs, poly_coeffs, poly_coeffs)
    @settings(max_examples=60)
    def test_ring_axioms(self, a, b, c):
        pa, pb, pc = make_poly(a), make_poly(b), make_poly(c)
        assert pa + pb == pb + pa
        assert pa * pb == pb * pa
        assert (pa + pb) * pc == pa * pc + pb * pc
        assert (pa * pb) * pc == pa * (pb * pc)

    @given(poly_coeffs, poly_coeffs, rationals)
    @settings(max_examples=60)
    def test_evaluation_is_ring_morphism(self, a, b, x):
        pa, pb = make_poly(a), make_poly(b)
        assert (pa * pb)(x) == pa(x) * pb(x)
        assert (pa + pb)(x) == pa(x) + pb(x)

    @given(poly_coeffs)
    def test_scalar_identities(self, a):
        p = make_poly(a)
        assert 1 * p == p
        assert 0 * p == QPolynomial.zero("q")


class TestFiniteDifference:
    @given(st.integers(0, 10))
    def test_r_below_n_vanishes(self, n):
        for r in range(n):
            assert finite_difference_check(n, r) == QPolynomial.zero("x")

    @given(st.integers(0, 8))
    def test_r_equal_n_is_factorial(self, n):
        import math

        expected = QPolynomial.constant(math.factorial(n), "x")
        assert finite_difference_check(n, n) == expected


class TestPolySeries:
    def test_geometric_reciprocal(self):
        one_minus_x = PolySeries([1, -1], 8)
        inv = one_minus_x.reciprocal()
        assert all(inv.coefficient(i) == QPolynomial.one("q") for i in range(9))

    def test_sqrt_of_square(self):
        s = PolySeries([1, 3, -2, 5], 10)
        assert (s * s).sqrt() == s

    def test_sqrt_requires_unit_constant(self):
        s = PolySeries([4, 1], 5)
        with pytest.raises(SeriesPreconditionError):
            s.sqrt()

    def test_reciprocal_requires_nonzero_constant(self):
        s = PolySeries([0, 1], 5)
        with pytest.raises(SeriesPreconditionError):
            s.reciprocal()

    def test_reciprocal_round_trip(self):
        s = PolySeries([2, -1, 3, 7], 9)
        prod = s * s.reciprocal()
        assert prod.coefficient(0) == QPolynomial.one("q")
        assert all(
            prod.coefficient(i) == QPolynomial.zero("q") for i in range(1, 10)
        )

    def test_compose_requires_zero_constant(self):
        outer = PolySeries([1, 1], 5)
        inner = PolySeries([1, 1], 5)
        with pytest.raises(SeriesPreconditionError):
            outer.compose(inner)

    def test_compose_geometric(self):
        # 1/(1-x) composed with 2x gives sum 2^n x^n
        outer = PolySeries([1, -1], 6).reciprocal()
        inner = PolySeries([0, 2], 6)
        got = outer.compose(inner)
        for i in range(7):
            assert got.coefficient(i) == QPolynomial.constant(2**i, "q")

    def test_shift_down_exactness_enforced(self):
        s = PolySeries([1, 2], 4)
        with pytest.raises(SeriesPreconditionError):
            s.shift_down(1)
        ok = PolySeries([0, 1, 5], 4).shift_down(1)
        assert ok.coefficient(0) == QPolynomial.one("q")
        assert ok.coefficient(1) == QPolynomial.constant(5, "q")

    @given(st.lists(rationals, min_size=1, max_size=5), st.lists(rationals, min_size=1, max_size=5))
    @settings(max_examples=40)
    def test_mul_commutes(self, a, b):
        sa = PolySeries(a, 6)
        sb = PolySeries(b, 6)
        assert sa * sb == sb * sa
