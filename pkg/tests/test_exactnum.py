"""Tests for exact scalars, weights, and sparse Laurent arithmetic."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ospchar.exactnum import (
    HalfInt,
    LaurentPolynomial,
    NotDivisible,
    Weight,
    evaluate_at_one,
    exact_divide,
    monomial,
    poly_from_json,
    poly_to_json,
)


def w(delta, eps):
    return Weight.from_ints(delta, eps)


class TestHalfInt:
    def test_arithmetic_closure(self):
        a, b = HalfInt(3), HalfInt(-1)  # 3/2, -1/2
        assert (a + b).doubled == 2
        assert (a - b).doubled == 4
        assert (-a).doubled == -3
        assert (a * 3).doubled == 9

    def test_str_renders_halves(self):
        assert str(HalfInt(7)) == "7/2"
        assert str(HalfInt(-1)) == "-1/2"
        assert str(HalfInt(4)) == "2"

    def test_ordering_is_by_value(self):
        assert HalfInt(1) < HalfInt(2) < HalfInt(4)


class TestMonomial:
    def test_constant_one(self):
        p = monomial(Weight.zero(1, 1), 1)
        assert p.terms == {(0, 0): 1}

    def test_negative_single_term(self):
        p = monomial(w([1], [0]), -1)
        assert p.terms == {(2, 0): -1}

    def test_half_integer_exponents_stored_doubled(self):
        half = Weight.from_doubled([1], [-1])  # d/2 - e/2
        p = monomial(half, 2)
        assert p.terms == {(1, -1): 2}

    def test_zero_coefficient_gives_zero(self):
        assert monomial(w([1], [2]), 0).is_zero()


class TestExactDivide:
    def test_difference_of_squares(self):
        num = monomial(w([1], []), 1) + monomial(w([-1], []), -1)
        den = monomial(Weight.from_doubled([1], []), 1) + monomial(
            Weight.from_doubled([-1], []), -1
        )
        q = exact_divide(num, den)
        assert q.terms == {(1,): 1, (-1,): 1}

    def test_zero_numerator(self):
        den = monomial(w([1], []), 1) + monomial(w([-1], []), -1)
        assert exact_divide(LaurentPolynomial.zero(1), den).is_zero()

    def test_weyl_type_numerator_rank_one(self):
        # alternating sum for lambda = 2 over the rank-(1,0) even group
        num = monomial(w([3], []), 1) + monomial(w([-3], []), -1)
        den = monomial(w([1], []), 1) + monomial(w([-1], []), -1)
        q = exact_divide(num, den)
        assert q.terms == {(4,): 1, (0,): 1, (-4,): 1}
        assert q * den == num

    def test_not_divisible_raises(self):
        num = monomial(w([1], []), 1) + monomial(Weight.zero(1, 0), 1)
        den = monomial(w([1], []), 1) + monomial(Weight.zero(1, 0), -1)
        with pytest.raises(NotDivisible):
            exact_divide(num, den)

    def test_coefficient_not_divisible_raises(self):
        num = monomial(w([1], []), 3)
        den = monomial(w([0], []), 2)
        with pytest.raises(NotDivisible):
            exact_divide(num, den)

    def test_zero_divisor_rejected(self):
        with pytest.raises(ZeroDivisionError):
            exact_divide(monomial(w([1], []), 1), LaurentPolynomial.zero(1))


class TestEvaluateAtOne:
    def test_constant(self):
        assert evaluate_at_one(monomial(Weight.zero(1, 1), 1)) == 1

    def test_two_terms(self):
        p = monomial(w([1], [0]), 1) + monomial(w([-1], [0]), 1)
        assert evaluate_at_one(p) == 2

    def test_zero(self):
        assert evaluate_at_one(LaurentPolynomial.zero(3)) == 0


exponents = st.tuples(st.integers(-6, 6), st.integers(-6, 6))
coeffs = st.integers(-9, 9).filter(bool)
polys = st.dictionaries(exponents, coeffs, max_size=5).map(
    lambda t: LaurentPolynomial(2, t)
)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


class TestRingProperties:
    @given(polys, nonzero_polys)
    @settings(max_examples=150, deadline=None)
    def test_divide_round_trip(self, p, q):
        assert exact_divide(p * q, q) == p

    @given(polys, polys, polys)
    @settings(max_examples=100, deadline=None)
    def test_associativity_and_distributivity(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(polys, polys)
    @settings(max_examples=100, deadline=None)
    def test_commutativity(self, p, q):
        assert p + q == q + p
        assert p * q == q * p

    @given(st.lists(st.tuples(exponents, coeffs), max_size=6))
    @settings(max_examples=100, deadline=None)
    def test_canonical_form_independent_of_construction_order(self, term_list):
        forward = LaurentPolynomial.zero(2)
        for exp, c in term_list:
            forward = forward + LaurentPolynomial(2, {exp: c})
        backward = LaurentPolynomial.zero(2)
        for exp, c in reversed(term_list):
            backward = backward + LaurentPolynomial(2, {exp: c})
        assert forward == backward


class TestSerialization:
    def test_sorted_by_leading_term_order(self):
        p = monomial(w([0], [1]), 2) + monomial(w([1], [-1]), -3) + monomial(w([1], [0]), 5)
        obj = poly_to_json(p)
        assert obj == [
            {"exp": [2, 0], "coef": "5"},
            {"exp": [2, -2], "coef": "-3"},
            {"exp": [0, 2], "coef": "2"},
        ]
        assert poly_from_json(obj, 2) == p

    def test_bit_exact_across_runs(self):
        p = monomial(w([2], [1]), 7) + monomial(w([-1], [3]), -4)
        blob1 = json.dumps(poly_to_json(p))
        blob2 = json.dumps(poly_to_json(poly_from_json(poly_to_json(p), 2)))
        assert blob1 == blob2

    def test_big_coefficients_as_decimal_strings(self):
        p = monomial(w([0], [0]), 10**30)
        assert poly_to_json(p) == [{"exp": [0, 0], "coef": str(10**30)}]
