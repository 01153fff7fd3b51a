import pytest

from algebra.qplane import plane_monomial
from calculus.diffops import (
    EndoOperator,
    check_diffops,
    check_invariant_ops,
    check_partial_relations,
    check_scaling_ops,
    check_sigma,
    check_twisted_leibniz,
    invariant_ops,
    multiplication_operator,
    partials,
    scaling_ops,
    sigma_of,
)
from representations.action import action_representation


def monomial(r, s, coefficient=1):
    return plane_monomial(3, r, s, coefficient)


class TestSigma:
    def test_generators(self, q3):
        values = sigma_of(monomial(1, 0))
        assert values[("x", "x")] == monomial(1, 0, q3 ** 2)
        assert values[("x", "y")] == monomial(0, 1, q3 ** 2 - 1)
        assert values[("y", "x")].is_zero()
        assert values[("y", "y")] == monomial(1, 0, q3)

    def test_unit(self):
        values = sigma_of(monomial(0, 0))
        assert values[("x", "x")] == monomial(0, 0)
        assert values[("x", "y")].is_zero()

    def test_check(self):
        report = check_sigma(3)
        assert report.passed, report.failure


class TestPartials:
    def test_first_order(self):
        dx, dy = partials(3)
        assert dx(monomial(1, 0)) == monomial(0, 0)
        assert dy(monomial(1, 0)).is_zero()
        assert dy(monomial(0, 1)) == monomial(0, 0)

    def test_square(self, q3):
        dx, _ = partials(3)
        assert dx(monomial(2, 0)) == monomial(1, 0, q3 ** 2 + 1)

    def test_relations(self):
        report = check_partial_relations(3)
        assert report.passed, report.failure

    def test_nilpotent_at_n3(self):
        dx, dy = partials(3)
        assert (dx ** 3).is_zero()
        assert (dy ** 3).is_zero()

    def test_twisted_leibniz(self):
        assert check_twisted_leibniz(3).passed

    def test_operator_algebra(self):
        one = EndoOperator.identity(3)
        mx = multiplication_operator(3, "x")
        assert (mx ** 3) == one
        assert (mx - mx).is_zero()


class TestScaling:
    def test_values(self, q3):
        mu_x, mu_y = scaling_ops(3)
        assert mu_y(monomial(0, 1)) == monomial(0, 1, q3 ** 2)
        assert mu_x(monomial(1, 0)) == monomial(1, 0, q3 ** 2)
        assert mu_y(monomial(1, 0)) == monomial(1, 0)

    def test_check(self):
        assert check_scaling_ops(3).passed


class TestInvariantOperators:
    def test_match_action(self):
        k, k_inverse, xp, xm = invariant_ops(3)
        rep = action_representation(3)
        assert k.matrix == rep.K
        assert xp.matrix == rep.Xp
        assert xm.matrix == rep.Xm

    def test_check(self):
        report = check_invariant_ops(3)
        assert report.passed, report.failure

    def test_bundle(self):
        assert check_diffops(3).passed

    @pytest.mark.slow
    def test_reported_only_at_n5(self):
        report = check_invariant_ops(5)
        assert all(not part.asserted for part in report.parts)
