from fractions import Fraction

import pytest

from algebra.cyclo import CycScalar, RootParams, check_root, field_degree, qfactorial, qnumber
from algebra.errors import FieldMismatchError, InvalidRootError, ScalarDivisionError
from algebra.samples import random_scalar


class TestCheckRoot:
    @pytest.mark.parametrize("N", [3, 5, 7, 9, 15])
    def test_accepts_odd_orders(self, N):
        assert check_root(N) == N

    @pytest.mark.parametrize("N", [1, 2, 4, 6, -3, True, 3.0])
    def test_rejects_other_orders(self, N):
        with pytest.raises(InvalidRootError):
            check_root(N)

    def test_invalid_root_is_value_error(self):
        with pytest.raises(ValueError):
            RootParams(N=4)


class TestFieldDegree:
    @pytest.mark.parametrize("N,degree", [(3, 2), (5, 4), (7, 6), (9, 6), (15, 8)])
    def test_degree_is_euler_phi(self, N, degree):
        assert field_degree(N) == degree


class TestArithmetic:
    def test_q_has_order_N(self, q3):
        assert q3 ** 3 == 1
        assert q3 ** 2 != 1

    def test_cyclotomic_relation(self, q3):
        assert 1 + q3 + q3 ** 2 == 0

    def test_negative_powers(self, q3):
        assert q3 ** -1 == q3 ** 2
        assert CycScalar.q_power(3, -1) == q3 ** 2
        assert CycScalar.q_power(5, -7) == CycScalar.q_power(5, 3)

    def test_inverse(self, q3):
        z = 1 + q3
        assert z * z.inverse() == 1
        assert (2 + q3) / (2 + q3) == 1

    def test_division_by_zero(self):
        with pytest.raises(ScalarDivisionError):
            CycScalar.zero(3).inverse()
        with pytest.raises(ZeroDivisionError):
            CycScalar.one(5) / 0

    def test_rational_coercion(self, q3):
        assert q3 * Fraction(1, 2) + Fraction(1, 2) * q3 == q3
        assert (q3 - q3) == 0

    def test_mixed_fields_rejected(self):
        with pytest.raises(FieldMismatchError):
            CycScalar.q_power(3) + CycScalar.q_power(5)

    def test_conjugation_inverts_q(self, q3):
        assert q3.conjugate() == q3 ** -1
        assert (q3 + q3.conjugate()) == -1
        assert (q3 - q3.conjugate()).conjugate() == -(q3 - q3.conjugate())

    def test_from_coefficients_reduces(self):
        # q^3 = 1 at N = 3
        assert CycScalar.from_coefficients(3, [0, 0, 0, 1]) == 1


class TestFieldAxioms:
    @pytest.fixture(params=[3, 5])
    def triples(self, request, rng):
        N = request.param
        spread = field_degree(N)
        return [tuple(random_scalar(N, rng, spread) for _ in range(3)) for _ in range(50)]

    def test_associativity(self, triples):
        for a, b, c in triples:
            assert (a * b) * c == a * (b * c)
            assert (a + b) + c == a + (b + c)

    def test_distributivity(self, triples):
        for a, b, c in triples:
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c

    def test_inverses(self, triples):
        for a, b, _ in triples:
            assert a * a.inverse() == 1
            assert (a * b) / b == a

    def test_conjugation_is_automorphism(self, triples):
        for a, b, _ in triples:
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()
            assert (a + b).conjugate() == a.conjugate() + b.conjugate()
            assert a.conjugate().conjugate() == a
            assert a.inverse().conjugate() == a.conjugate().inverse()


class TestFormatting:
    def test_strings(self, q3):
        assert str(q3) == "q"
        assert str(q3 ** 2) == "-1 - q"
        assert str(CycScalar.from_rational(3, Fraction(1, 3))) == "1/3"
        assert str(CycScalar.zero(3)) == "0"
        assert str(CycScalar.from_coefficients(5, [0, Fraction(2, 3), 0, -1])) == "2/3*q - q^3"


class TestQNumbers:
    def test_small_values(self, q3):
        assert qnumber(3, 0) == 0
        assert qnumber(3, 1) == 1
        assert qnumber(3, 2) == q3 + q3 ** -1
        assert qnumber(3, 2) == -1

    @pytest.mark.parametrize("N", [3, 5, 7])
    def test_q_number_N_vanishes(self, N):
        assert qnumber(N, N) == 0
        assert all(qnumber(N, n) != 0 for n in range(1, N))

    def test_antisymmetry(self):
        assert qnumber(5, -3) == -qnumber(5, 3)

    def test_factorial(self):
        assert qfactorial(3, 2) == -1
        assert qfactorial(5, 5) == 0
