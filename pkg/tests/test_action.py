import pytest

from algebra.elements import TensorElement
from algebra.errors import FieldMismatchError
from algebra.hopf import f_generator, h_algebra, h_generator
from algebra.qplane import plane_algebra, plane_generator, plane_monomial
from representations.action import (
    LADDER_N3,
    act,
    act_on_manin_dual,
    act_right,
    act_via_pairing,
    check_coaction,
    check_inverse_mapping,
    check_ladder_n3,
    check_module_algebra,
    check_right_action,
    check_star_covariance,
    coact_left,
    coact_right,
    decompose_M,
    manin_dual_representation,
    plane_summand,
)


@pytest.fixture
def x():
    return plane_generator(3, "x")


@pytest.fixture
def y():
    return plane_generator(3, "y")


class TestCoactions:
    def test_left_coaction_of_x(self, x, y):
        a, b = f_generator(3, "a"), f_generator(3, "b")
        assert coact_left(x) == TensorElement.pure([a, x]) + TensorElement.pure([b, y])

    def test_right_coaction_of_y(self, x, y):
        b, d = f_generator(3, "b"), f_generator(3, "d")
        assert coact_right(y) == TensorElement.pure([x, b]) + TensorElement.pure([y, d])

    def test_unit(self):
        one = plane_algebra(3).one()
        assert coact_left(one) == TensorElement.pure([f_generator(3, "1"), one])

    def test_multiplicative(self, x, y):
        assert coact_right(x * y) == coact_right(x) * coact_right(y)

    def test_comodule_algebra_laws(self):
        report = check_coaction(3)
        assert report.passed, report.failure


class TestLeftAction:
    def test_generator_values(self, x, y, q3):
        K, Xp, Xm = (h_generator(3, name) for name in ("K", "Xp", "Xm"))
        one = plane_algebra(3).one()
        assert act(K, x) == x.scale(q3)
        assert act(Xm, x) == y
        assert act(Xp, y) == x
        assert act(Xp, one).is_zero()

    def test_unit_acts_trivially(self, x, y):
        z = x * y + y.scale(3)
        assert act(h_algebra(3).one(), z) == z

    def test_leibniz_example(self, x, y, q3):
        Xp, K = h_generator(3, "Xp"), h_generator(3, "K")
        expected = (x * x).scale(q3)
        assert act(Xp, x * y) == expected
        assert act(Xp, x) * y + act(K, x) * act(Xp, y) == expected

    def test_agrees_with_pairing(self, x, y):
        h = h_generator(3, "Xm") * h_generator(3, "Xp") + h_generator(3, "K")
        for z in (x, y * y, x * y * y):
            assert act(h, z) == act_via_pairing(h, z)

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            act(h_generator(5, "K"), plane_generator(3, "x"))

    def test_module_algebra(self, rng):
        from algebra.samples import random_element

        H, M = h_algebra(3), plane_algebra(3)
        samples = [(random_element(H, rng), random_element(H, rng), random_element(M, rng)) for _ in range(3)]
        report = check_module_algebra(3, samples)
        assert report.passed, report.failure

    @pytest.mark.slow
    def test_module_algebra_full_sample(self, rng):
        from algebra.samples import random_element

        H, M = h_algebra(3), plane_algebra(3)
        samples = [(random_element(H, rng), random_element(H, rng), random_element(M, rng)) for _ in range(500)]
        report = check_module_algebra(3, samples)
        assert report.passed, report.failure
        composition = next(part for part in report.parts if part.name == "action:composition")
        assert composition.checked == 500

    @pytest.mark.slow
    def test_module_algebra_N5(self):
        assert check_module_algebra(5).passed


class TestRightActionAndDual:
    def test_right_action_composition(self):
        assert check_right_action(3).passed

    def test_right_action_of_unit(self, x):
        assert act_right(h_algebra(3).one(), x) == x

    def test_manin_dual(self, q3):
        assert act_on_manin_dual(h_generator(3, "Xm"), "dx") == {"dy": 1}
        assert act_on_manin_dual(h_generator(3, "K"), "dx") == {"dx": q3}
        assert act_on_manin_dual(h_generator(3, "Xp"), "dx") == {}

    def test_manin_dual_unknown_generator(self):
        with pytest.raises(ValueError):
            act_on_manin_dual(h_generator(3, "K"), "dz")

    def test_manin_dual_is_two_dimensional_simple(self):
        rep = manin_dual_representation(3)
        assert rep.dim == 2
        assert rep.check_relations().passed


class TestLadderAndSummands:
    def test_ladder(self):
        assert check_ladder_n3().passed
        assert LADDER_N3["Xm"][(1, 0)] == (0, 1)

    def test_decompose_M_n3(self):
        summands = decompose_M(3)
        assert [s.dimension for s in summands] == [3, 3, 3]
        assert sum(s.irreducible for s in summands) == 1
        assert all(s.indecomposable for s in summands)
        assert sorted(s.invariant_subspace_dim for s in summands if not s.irreducible) == [1, 2]
        assert {s.degree: s.label for s in summands} == {0: "3_odd", 1: "3_eve", 2: "3_irr"}

    def test_degree_zero_piece(self):
        summand = decompose_M(3)[0]
        assert set(summand.basis) == {"1", "x*y^2", "x^2*y"}
        assert summand.flags == ["reducible", "indecomposable"]

    def test_plane_summands_are_not_verma_modules(self):
        from representations.repcat import baby_verma_module
        from representations.decomposition import identify

        for p in (1, 2):
            piece = plane_summand(3, p)
            assert identify(piece, [baby_verma_module(3, n) for n in (1, 2)]) is None

    def test_plane_summand_range(self):
        with pytest.raises(ValueError):
            plane_summand(3, 3)

    @pytest.mark.slow
    def test_decompose_M_n5(self):
        summands = decompose_M(5)
        assert sorted(s.invariant_subspace_dim or 5 for s in summands) == [1, 2, 3, 4, 5]
        assert all(s.indecomposable for s in summands)

    def test_inverse_mapping(self):
        report = check_inverse_mapping(3)
        assert report.passed, report.failure
        assert report.details["invertible_elements"] > 0

    def test_inverse_of_x(self, x):
        from algebra.qplane import plane_inverse

        assert plane_inverse(x) == plane_monomial(3, 2, 0)


class TestStarCovariance:
    def test_star_covariance(self):
        report = check_star_covariance(3)
        assert report.passed, report.failure
