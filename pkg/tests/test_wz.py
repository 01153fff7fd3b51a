import pytest

from algebra.cyclo import CycScalar
from algebra.errors import FieldMismatchError
from algebra.qplane import plane_monomial
from calculus.wz import (
    check_form_action,
    check_wz,
    coact_form,
    cohomology,
    d_matrix,
    form_representation,
    is_consistent,
    two_form_factor,
    wz_algebra,
    wz_coaction_covariance,
    wz_d,
    wz_differential,
    wz_dims,
    wz_form,
    wz_from_plane,
    wz_mul,
    wz_star,
)


@pytest.fixture
def forms3():
    algebra = wz_algebra(3)
    return {
        "x": algebra.monomial((1, 0, "")),
        "y": algebra.monomial((0, 1, "")),
        "dx": algebra.monomial((0, 0, "dx")),
        "dy": algebra.monomial((0, 0, "dy")),
    }


class TestConventions:
    def test_factors(self, q3):
        assert two_form_factor(3, "wz") == -(q3 ** -2)
        assert two_form_factor(5, "manin") == -CycScalar.q_power(5)

    def test_conventions_agree_at_n3(self):
        assert two_form_factor(3, "wz") == two_form_factor(3, "manin")

    def test_unknown_convention(self):
        with pytest.raises(ValueError):
            two_form_factor(3, "cartan")

    def test_consistency(self):
        assert is_consistent(3, "wz")
        assert is_consistent(7, "manin")
        assert not is_consistent(5, "wz")


class TestRelations:
    def test_dims(self):
        assert wz_dims(3) == (9, 18, 9)

    def test_commutation_rules(self, forms3, q3):
        x, y, dx, dy = forms3["x"], forms3["y"], forms3["dx"], forms3["dy"]
        assert x * dx == (dx * x).scale(q3 ** 2)
        assert y * dx == (dx * y).scale(q3)
        assert y * dy == (dy * y).scale(q3 ** 2)
        assert x * dy == (dy * x).scale(q3) + (dx * y).scale(q3 ** 2 - 1)

    def test_two_forms(self, forms3, q3):
        dx, dy = forms3["dx"], forms3["dy"]
        assert (dx * dx).is_zero()
        assert (dy * dy).is_zero()
        assert dy * dx == (dx * dy).scale(-(q3 ** -2))

    def test_formatting(self, forms3):
        assert str(forms3["x"] * forms3["dx"]) == "x*dx"
        assert str(forms3["dx"] * forms3["dy"]) == "dx*dy"

    def test_components(self, q3):
        omega = wz_form(3, deg0=plane_monomial(3, 1, 0), dy=plane_monomial(3, 0, 2, q3))
        assert omega.deg0 == plane_monomial(3, 1, 0)
        assert omega.deg1y == plane_monomial(3, 0, 2, q3)
        assert omega.deg1x.is_zero()
        assert omega.degrees == {0, 1}

    def test_mixed_roots(self):
        with pytest.raises(FieldMismatchError):
            wz_mul(wz_differential(3, "dx"), wz_differential(5, "dx"))
        with pytest.raises(ValueError):
            wz_differential(3, "dz")


class TestDifferential:
    def test_constants_are_closed(self):
        assert wz_d(wz_algebra(3).one()).is_zero()

    def test_generators(self, forms3):
        assert wz_d(forms3["x"]) == forms3["dx"]
        assert wz_d(forms3["y"]) == forms3["dy"]

    def test_square(self, forms3, q3):
        x = forms3["x"]
        assert wz_d(x * x) == (x * forms3["dx"]).scale(q3 ** -2 + 1)

    def test_cube_vanishes(self, forms3):
        x = forms3["x"]
        assert wz_d(x * x * x).is_zero()

    def test_one_form(self, forms3, q3):
        assert wz_d(forms3["y"] * forms3["dx"]) == (forms3["dx"] * forms3["dy"]).scale(-q3)

    def test_d_squared(self):
        assert (d_matrix(3, 1) @ d_matrix(3, 0)).is_zero()

    def test_d_matrix_degree(self):
        with pytest.raises(ValueError):
            d_matrix(3, 2)

    def test_cohomology(self):
        result = cohomology(3)
        assert result.dims == (9, 18, 9)
        assert result.euler_characteristic == 0
        assert result.betti[0] >= 1
        assert result.nontrivial


class TestStar:
    def test_differentials_are_real(self, forms3):
        assert wz_star(forms3["dx"]) == forms3["dx"]
        assert wz_star(forms3["dy"]) == forms3["dy"]

    def test_antimultiplicative(self, forms3, q3):
        assert wz_star(forms3["x"] * forms3["dx"]) == (forms3["x"] * forms3["dx"]).scale(q3 ** -2)

    def test_involution_on_function(self):
        f = wz_from_plane(plane_monomial(3, 1, 2, CycScalar.q_power(3)))
        assert wz_star(wz_star(f)) == f

    @pytest.mark.slow
    def test_star_on_random_forms(self, rng):
        from calculus.wz import random_form

        for _ in range(500):
            a, b = random_form(3, rng), random_form(3, rng)
            assert wz_star(wz_star(a)) == a
            assert wz_star(a * b) == wz_star(b) * wz_star(a)


class TestChecks:
    def test_check_wz(self, rng):
        report = check_wz(3, rng=rng, samples=10)
        assert report.passed, report.failure

    @pytest.mark.slow
    def test_check_wz_full_sample(self, rng):
        report = check_wz(3, rng=rng, samples=500)
        assert report.passed, report.failure
        assert report.checked >= 1500

    def test_coaction_covariance(self):
        report = wz_coaction_covariance(3)
        assert report.passed, report.failure

    def test_coaction_of_dx(self, forms3):
        assert len(coact_form(forms3["dx"]).terms) == 2

    def test_form_action(self):
        report = check_form_action(3)
        assert report.passed, report.failure

    def test_one_forms_as_module(self):
        rep = form_representation(3, 1)
        assert rep.dim == 18
        assert rep.check_relations().passed

    @pytest.mark.slow
    def test_manin_n5(self, rng):
        report = check_wz(5, "manin", rng=rng, samples=5)
        assert report.asserted
        assert report.passed, report.failure
