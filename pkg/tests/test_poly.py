from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from domain.entity.poly import DEGREE_OF_ZERO, Poly, monomials_of_degree
from domain.exception.errors import StructuralError, ValidationError
from strategies import polys

x, y, z = Poly.variables(3)


class TestConstruction:
    def test_zero_coefficients_are_dropped(self):
        p = Poly(3, {(1, 0, 0): 0, (0, 1, 0): Fraction(0)})
        assert p.is_zero()
        assert p.degree() == DEGREE_OF_ZERO

    def test_cancellation_leaves_no_terms(self):
        p = Poly(2, {(1, 1): 2}) + Poly(2, {(1, 1): -2})
        assert p.is_zero()
        assert len(p) == 0

    def test_wrong_monomial_length(self):
        with pytest.raises(StructuralError):
            Poly(3, {(1, 0): 1})

    def test_negative_exponent(self):
        with pytest.raises(ValidationError):
            Poly(2, {(-1, 2): 1})

    def test_different_rings_do_not_mix(self):
        with pytest.raises(StructuralError):
            _ = x + Poly.variable(2, 0)

    def test_monomials_of_degree(self):
        quadrics = monomials_of_degree(3, 2)
        assert len(quadrics) == 6
        assert quadrics[0] == (2, 0, 0)
        assert quadrics[-1] == (0, 0, 2)
        assert monomials_of_degree(3, 2, variables=[1]) == [(0, 2, 0)]


class TestArithmetic:
    @settings(max_examples=200, deadline=None)
    @given(polys(), polys(), polys())
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero()

    @settings(max_examples=100, deadline=None)
    @given(polys(), polys())
    def test_degree_of_product(self, a, b):
        assume(not a.is_zero() and not b.is_zero())
        assert (a * b).degree() == a.degree() + b.degree()

    def test_power(self):
        assert (x + y) ** 2 == x * x + 2 * x * y + y * y
        assert (x + y) ** 0 == 1
        with pytest.raises(ValidationError):
            _ = x ** -1

    def test_scalar_mixing(self):
        p = 2 * x + Fraction(1, 2)
        assert p.constant_value() == Fraction(1, 2)
        assert (1 - x).coefficient((1, 0, 0)) == -1

    @pytest.mark.parametrize("value", [0, 3, Fraction(-2, 5)])
    def test_constant_hashes_like_number(self, value):
        c = Poly.constant(3, value)
        assert c == value
        assert hash(c) == hash(value)
        assert {value: "value"}[c] == "value"


class TestSubstitution:
    def test_compose(self):
        p = x * y + z ** 2
        q = p.compose([y, x, x + y])
        assert q == y * x + (x + y) ** 2

    def test_evaluate(self):
        p = 3 * x ** 2 * y - z
        assert p.evaluate([1, 2, Fraction(1, 2)]) == Fraction(11, 2)

    def test_derivative(self):
        assert (x ** 2 * y).derivative(0) == 2 * x * y
        assert (x ** 2 * y).derivative(2).is_zero()

    def test_homogenize_and_dehomogenize(self):
        u, v = Poly.variables(2)
        affine = u ** 2 + 3 * v + 1
        homogeneous = affine.homogenize(2)
        assert homogeneous == x ** 2 + 3 * y * z + z ** 2
        assert homogeneous.dehomogenize() == affine

    def test_homogenize_below_degree(self):
        u, _ = Poly.variables(2)
        with pytest.raises(ValidationError):
            (u ** 3).homogenize(2)

    def test_embed(self):
        t = Poly.variable(1, 0)
        assert (t ** 2 + t).embed(3, [1]) == y ** 2 + y


class TestNormalForms:
    def test_content_and_primitive(self):
        p = Poly(2, {(1, 0): Fraction(2, 3), (0, 1): Fraction(-4, 3)})
        assert p.content() == Fraction(2, 3)
        u, v = Poly.variables(2)
        assert p.primitive() == u - 2 * v

    def test_primitive_has_positive_leading_coefficient(self):
        assert (-2 * x + 4 * z).primitive() == x - 2 * z

    def test_format(self):
        p = Poly(3, {(2, 1, 0): 3, (0, 0, 1): Fraction(-1, 2)})
        assert p.format() == "3*x^2*y - 1/2*z"
        assert Poly.zero(3).format() == "0"
        assert (-x).format() == "-x"

    def test_leading_term_of_zero(self):
        with pytest.raises(ValidationError):
            Poly.zero(2).leading_term()
