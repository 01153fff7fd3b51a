import pytest

from algebra.cyclo import CycScalar
from algebra.errors import CalculusError
from algebra.qplane import plane_monomial
from calculus.gauge import (
    Connection,
    Curvature,
    check_curvature_linearity,
    check_gauge_shift,
    covariant_derivative,
    covariant_derivative_one_form,
    curvature,
    decompose_connection_space,
    hermitian_constraints,
    is_hermitian,
    random_connection,
)
from calculus.wz import wz_algebra, wz_d, wz_from_plane


@pytest.fixture
def forms3():
    algebra = wz_algebra(3)
    return {
        "x": algebra.monomial((1, 0, "")),
        "y": algebra.monomial((0, 1, "")),
        "dx": algebra.monomial((0, 0, "dx")),
        "dy": algebra.monomial((0, 0, "dy")),
    }


class TestCurvature:
    def test_flat_connection(self, forms3):
        rho = curvature(forms3["x"] * forms3["dx"])
        assert rho.is_flat()

    def test_curved_connection(self, forms3, q3):
        rho = curvature(forms3["y"] * forms3["dx"])
        assert rho == (forms3["dx"] * forms3["dy"]).scale(-q3)
        assert not rho.is_flat()

    def test_exact_connection_is_flat_up_to_square(self, forms3):
        phi = wz_d(forms3["x"])
        assert curvature(phi) == Curvature(phi * phi)

    def test_connection_must_be_one_form(self, forms3):
        with pytest.raises(CalculusError):
            Connection(forms3["x"])
        with pytest.raises(CalculusError):
            curvature(forms3["dx"] * forms3["dy"])

    def test_covariant_derivative(self, forms3):
        phi = forms3["dy"]
        f = plane_monomial(3, 1, 0)
        assert covariant_derivative(phi, f) == phi * forms3["x"] + forms3["dx"]

    def test_covariant_derivative_rejects_forms(self, forms3):
        with pytest.raises(CalculusError):
            covariant_derivative(forms3["dx"], forms3["dy"])
        with pytest.raises(CalculusError):
            covariant_derivative_one_form(forms3["dx"], forms3["x"])

    def test_linearity(self, rng):
        report = check_curvature_linearity(N=3, rng=rng, samples=10)
        assert report.passed, report.failure

    def test_linearity_for_given_connection(self, forms3):
        report = check_curvature_linearity(forms3["y"] * forms3["dx"], samples=5)
        assert report.passed, report.failure

    @pytest.mark.slow
    def test_linearity_full_sample(self, rng):
        report = check_curvature_linearity(N=3, rng=rng, samples=100)
        assert report.passed, report.failure
        assert report.checked == 300


class TestGaugeShift:
    def test_shift_by_exact_form(self, forms3):
        report = check_gauge_shift(forms3["y"] * forms3["dx"], plane_monomial(3, 2, 1))
        assert report.passed, report.failure

    def test_random_shift(self, rng):
        connection = random_connection(3, rng)
        f = wz_from_plane(plane_monomial(3, 1, 1, CycScalar.q_power(3)))
        assert check_gauge_shift(connection, f).passed


class TestHermitian:
    def test_solution_dimension(self):
        constraints = hermitian_constraints(3)
        assert constraints.solution_dimension == 18
        assert len(constraints.unknowns) == 18
        assert len(constraints.hermitian_basis) == 18

    def test_basis_satisfies_constraints(self):
        constraints = hermitian_constraints(3)
        for phi in constraints.hermitian_basis:
            assert is_hermitian(phi)

    def test_differentials(self, forms3):
        assert is_hermitian(forms3["dx"])
        assert not is_hermitian(forms3["x"] * forms3["dx"])

    def test_coefficient_check(self):
        constraints = hermitian_constraints(3)
        coefficients = [CycScalar.zero(3)] * 18
        assert constraints.is_satisfied(coefficients)
        coefficients = list(coefficients)
        coefficients[0] = CycScalar.q_power(3)
        assert not constraints.is_satisfied(coefficients)


class TestConnectionSpace:
    def test_decomposition(self):
        report = decompose_connection_space(3)
        counts = report.counts()
        assert report.dimension == 18
        assert report.verified
        assert counts["6_eve"] == 1
        assert counts["3_irr"] == 2
