import pytest

from algebra.cyclo import CycScalar
from algebra.errors import ExpressionError
from algebra.expressions import algebra_for, format_element, parse, parse_element
from algebra.hopf import h_generator, h_monomial
from algebra.qplane import plane_monomial
from algebra.samples import random_elements


class TestParsing:
    def test_expression_is_bound_to_algebra(self):
        expression = parse("x*y + 2", "M")
        assert expression.algebra == "plane"

    def test_incomplete_power(self):
        with pytest.raises(ExpressionError) as error:
            parse("x^")
        assert error.value.position == 2

    def test_illegal_character(self):
        with pytest.raises(ExpressionError) as error:
            parse("x $ y")
        assert error.value.position == 2

    def test_empty(self):
        with pytest.raises(ExpressionError):
            parse("   ")

    def test_generator_of_other_algebra(self):
        with pytest.raises(ExpressionError, match="belongs to F"):
            parse("K*a", "H")

    def test_unknown_symbol(self):
        with pytest.raises(ExpressionError, match="unknown symbol"):
            parse("z", "plane")

    def test_unknown_algebra(self):
        with pytest.raises(ExpressionError):
            parse("x", "sl2")

    def test_negative_power_of_nilpotent(self):
        with pytest.raises(ExpressionError):
            parse("Xp^-1", "H")

    def test_fractional_exponent(self):
        with pytest.raises(ExpressionError, match="not an integer"):
            parse("x^1/2")

    def test_zero_denominator(self):
        with pytest.raises(ExpressionError):
            parse("1/0")


class TestEvaluation:
    def test_reordering_in_plane(self):
        assert parse_element("y*x") == plane_monomial(3, 1, 1, CycScalar.q_power(3, 2))

    def test_reordering_n5(self):
        assert parse_element("y*x", N=5) == plane_monomial(5, 1, 1, CycScalar.q_power(5, 4))

    def test_scalars(self):
        assert parse_element("q^-1*x") == plane_monomial(3, 1, 0, CycScalar.q_power(3, 2))
        assert parse_element("1/2*y") == plane_monomial(3, 0, 1, CycScalar.from_rational(3, 1) / 2)

    def test_inverse_generator(self):
        assert parse_element("K^-1", "H") == parse_element("Kinv", "H")
        assert parse_element("x^-1") == plane_monomial(3, 2, 0)

    def test_grouping(self):
        assert parse_element("(x + y)*(x - y)") == parse_element("x^2 - x*y + y*x - y^2")

    def test_hopf_normal_form(self):
        element = parse_element("Xp*K", "H")
        assert element == h_monomial(3, 0, 1, 1, CycScalar.q_power(3, -2))

    def test_formatting_parses_back(self):
        element = h_generator(3, "Xm") * h_generator(3, "K") * h_generator(3, "Xp")
        assert format_element(element) == "Xm*K*Xp"
        assert parse_element(format_element(element), "H") == element

    def test_forms(self):
        assert parse_element("dy*dx", "wz") == parse_element("-q*dx*dy", "wz")

    def test_quantum_determinant(self):
        assert parse_element("a*d - q*b*c", "F") == parse_element("1", "F")


class TestFormatRoundTrip:
    @pytest.mark.parametrize("algebra", ["M", "H", "F", "omega"])
    def test_random_elements_parse_back(self, algebra, rng):
        for element in random_elements(algebra_for(algebra, 3), rng, 20):
            assert parse_element(format_element(element), algebra) == element

    @pytest.mark.slow
    @pytest.mark.parametrize("algebra", ["M", "H", "F", "omega"])
    def test_thousand_random_elements_parse_back(self, algebra, rng):
        for element in random_elements(algebra_for(algebra, 3), rng, 1000):
            assert parse_element(format_element(element), algebra) == element

    @pytest.mark.slow
    @pytest.mark.parametrize("algebra", ["M", "H", "F"])
    def test_round_trip_n5(self, algebra, rng):
        for element in random_elements(algebra_for(algebra, 5), rng, 200):
            assert parse_element(format_element(element), algebra, N=5) == element
