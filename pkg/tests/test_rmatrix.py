import pytest

from algebra.cyclo import CycScalar
from algebra.errors import FieldMismatchError
from algebra.linalg import CycMatrix
from representations.repcat import simple_module
from representations.rmatrix import (
    check_inverse,
    check_not_triangular,
    check_quasitriangular,
    check_r_matrix,
    check_ybe,
    explicit_r_n3,
    r_in_representation,
    r_universal,
)


@pytest.fixture(scope="module")
def R3():
    return r_universal(3)


class TestUniversalR:
    def test_inverse_is_certified(self, R3):
        assert R3.inverse_certified
        assert check_inverse(R3).passed

    def test_x_coefficients_n3(self, R3, q3):
        assert R3.x_coefficients == [CycScalar.one(3), q3 - q3 ** -1, q3 * 3]

    def test_explicit_form(self, R3):
        assert R3.value == explicit_r_n3()

    def test_exponent_one_agrees_at_n3(self, R3):
        assert r_universal(3, 1).value == R3.value

    def test_quasitriangular(self, R3):
        report = check_quasitriangular(R3)
        assert report.passed, report.failure

    @pytest.mark.slow
    def test_exponent_one_fails_at_n5(self):
        # q^{mn} in R_K only intertwines the coproducts when q^2 = q^{-1}
        printed = r_universal(5, 1)
        assert printed.inverse_certified
        report = check_quasitriangular(printed)
        assert not report.passed
        assert report.failure["case"] == "Δ^op(Xp) R = R Δ(Xp)"
        assert check_quasitriangular(r_universal(5)).passed

    def test_yang_baxter(self, R3):
        assert check_ybe(R3).passed

    def test_not_triangular(self, R3):
        report = check_not_triangular(R3)
        assert report.passed
        assert "term" in report.details

    def test_summary(self, R3):
        summary = R3.summary()
        assert summary["N"] == 3
        assert summary["inverse_certified"] is True


class TestRepresentations:
    def test_trivial_factor_gives_identity(self, R3, catalog3):
        V = catalog3["3_irr"]
        assert r_in_representation(R3, catalog3["1"], V) == CycMatrix.identity(3, 3)

    def test_fundamental(self, R3, catalog3):
        matrix = r_in_representation(R3, catalog3["2"], catalog3["2"])
        assert matrix.is_invertible()

    def test_field_mismatch(self, R3):
        with pytest.raises(FieldMismatchError):
            r_in_representation(R3, simple_module(5, 2), simple_module(5, 2))

    def test_bundle_with_module(self, catalog3):
        report = check_r_matrix(3, V=catalog3["2"])
        assert report.passed, report.failure

    @pytest.mark.slow
    def test_bundle_n5(self):
        assert check_r_matrix(5).passed
