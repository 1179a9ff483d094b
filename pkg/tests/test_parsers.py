from fractions import Fraction

import pytest

from domain.entity.poly import Poly
from domain.exception.errors import ParseError, StructuralError, ValidationError
from domain.value_object.projective import LineP2
from domain.value_object.weight_vector import WeightVector
from presentation.cli.parsers import PolyParser, is_spec_text, parse_line, parse_weights

x, y, z = Poly.variables(3)


class TestPolyParser:
    parser = PolyParser(["x", "y", "z"])

    def test_polynomial(self):
        assert self.parser.parse("3*x^2*y - 1/2*z^3") == 3 * x ** 2 * y - Fraction(1, 2) * z ** 3

    def test_implicit_multiplication(self):
        assert self.parser.parse("2 x y + (x - z)^2") == 2 * x * y + (x - z) ** 2

    def test_unknown_variable(self):
        with pytest.raises(ParseError) as error:
            self.parser.parse("x + w")
        assert error.value.column == 5

    def test_bad_character(self):
        with pytest.raises(ParseError) as error:
            self.parser.parse("x $ y")
        assert error.value.column == 3

    def test_unbalanced(self):
        with pytest.raises(ParseError):
            self.parser.parse("(x + y")

    def test_not_polynomial(self):
        with pytest.raises(ParseError):
            self.parser.parse("x / y")

    def test_empty(self):
        with pytest.raises(ParseError):
            self.parser.parse("   ")


class TestMapParser:
    def test_header(self, parse_map):
        m = parse_map("map N=2 d=2 vars=(u,v,w): [v*w : u*w + v^2 : w^2]")
        assert m.coords == (y * z, x * z + y ** 2, z ** 2)

    def test_bare_list_and_comments(self, parse_map):
        m = parse_map("# Хенон\n[y*z : x*z + y^2 : z^2]  # конец")
        assert m.N == 2 and m.d == 2

    def test_arity(self, parse_map):
        with pytest.raises(StructuralError):
            parse_map("map N=3 d=2 vars=(x,y,z): [x^2 : y^2 : z^2]")

    def test_not_homogeneous(self, parse_map):
        with pytest.raises(ValidationError):
            parse_map("[x^2 + y : y^2 : z^2]")

    def test_error_position_on_second_line(self, parse_map):
        with pytest.raises(ParseError) as error:
            parse_map("map N=2 d=2 vars=(x,y,z):\n[x^2 : y^2 : z$]")
        assert (error.value.line, error.value.column) == (2, 15)

    def test_missing_bracket(self, parse_map):
        with pytest.raises(ParseError):
            parse_map("[x^2 : y^2 : z^2")

    def test_duplicate_names(self, parse_map):
        with pytest.raises(ParseError):
            parse_map("map N=2 d=1 vars=(x,x,z): [x : x : z]")

    def test_round_trip_text(self, parse_map, henon23):
        assert parse_map(henon23.to_text()) == henon23


class TestSpecParser:
    def test_spec(self, parse_spec):
        spec = parse_spec("henon N=3 k=2 d=2 b=(1,2,3) P3=(x2^2) P4=(x2*x3 + 1/2*x3^2)")
        assert spec.b == (1, 2, 3)
        assert sorted(spec.P) == [3, 4]
        assert is_spec_text("# comment\nhenon N=2 k=2 d=2 b=(1,1) P3=(x2^2)")

    def test_rational_b(self, parse_spec):
        assert parse_spec("henon N=2 k=2 d=2 b=(-3/4, 2) P3=(x2^2)").b == (Fraction(-3, 4), 2)

    def test_zero_denominator(self, parse_spec):
        with pytest.raises(ParseError):
            parse_spec("henon N=2 k=2 d=2 b=(1/0, 2) P3=(x2^2)")

    def test_duplicate_part(self, parse_spec):
        with pytest.raises(ParseError):
            parse_spec("henon N=2 k=2 d=2 b=(1,1) P3=(x2^2) P3=(x2^2)")

    def test_bad_header(self, parse_spec):
        with pytest.raises(ParseError):
            parse_spec("henon N=2 d=2 b=(1,1) P3=(x2^2)")


class TestLinesAndWeights:
    def test_equation(self):
        assert parse_line("y = 3*z") == LineP2.of(0, 1, -3)

    def test_prefixed_form(self):
        assert parse_line("line: x - y") == LineP2.of(1, -1, 0)

    @pytest.mark.parametrize("text", ["x^2", "y = 3", "0"])
    def test_not_a_line(self, text):
        with pytest.raises(ValidationError):
            parse_line(text)

    def test_weights(self):
        assert parse_weights("1, 0, -1") == WeightVector.of(1, 0, -1)

    def test_weights_syntax(self):
        with pytest.raises(ParseError):
            parse_weights("1,a")

    def test_weights_sum(self):
        with pytest.raises(ValidationError):
            parse_weights("1,1")
