import pytest

from algebra.cyclo import CycScalar
from algebra.qplane import plane_basis, plane_monomial
from representations.invariant import (
    check_invariant_form_on_M,
    closed_form_scalar_product,
    coaction_adjoint_sides,
    invariant_form_on_M,
    invariant_form_on_rep,
    scalar_product,
    volume_normalization,
)


@pytest.fixture(scope="module")
def form3():
    return invariant_form_on_M(3)


class TestFormOnPlane:
    def test_hermitian(self, form3):
        assert form3.is_hermitian()
        assert form3.dim == 9

    def test_normalization(self, form3):
        xy = plane_monomial(3, 1, 1)
        assert scalar_product(form3, xy, xy) == 1

    def test_unit_against_top_monomial(self, form3, q3):
        assert volume_normalization(3)[1] == q3 ** 2
        assert scalar_product(form3, plane_monomial(3, 0, 0), plane_monomial(3, 2, 2)) == q3 ** 2

    def test_x_is_isotropic(self, form3):
        x = plane_monomial(3, 1, 0)
        assert scalar_product(form3, x, x) == CycScalar.zero(3)

    def test_closed_form_agrees(self, form3):
        basis = plane_basis(3)
        for z in basis:
            for w in basis:
                assert scalar_product(form3, z, w) == closed_form_scalar_product(z, w)

    def test_nondegenerate(self, form3):
        assert form3.rank() == 9

    def test_adjoint_coaction(self, form3):
        z, w = plane_monomial(3, 1, 0), plane_monomial(3, 1, 2)
        lhs, rhs = coaction_adjoint_sides(form3, z, w)
        assert lhs == rhs

    def test_full_check(self):
        report = check_invariant_form_on_M(3)
        assert report.passed, report.failure

    def test_json(self, form3):
        data = form3.to_json()
        assert data["rank"] == 9
        assert data["basis"][0] == "1"

    @pytest.mark.slow
    def test_full_check_n5(self, rng):
        assert check_invariant_form_on_M(5, rng, samples=5).passed


class TestModuleMetrics:
    def test_projective_metric_is_nondegenerate_and_indefinite(self):
        form, report = invariant_form_on_rep("6_eve")
        assert report.hermitian
        assert report.rank == 6
        assert report.indefinite

    def test_radical_is_degenerate(self):
        _, report = invariant_form_on_rep("6_eve", submodule="radical")
        assert report.dimension == 4
        assert report.degenerate

    def test_socle_is_isotropic(self):
        _, report = invariant_form_on_rep("6_odd", submodule="socle")
        assert report.rank == 0

    def test_unknown_submodule(self):
        with pytest.raises(ValueError):
            invariant_form_on_rep("6_eve", submodule="top")
