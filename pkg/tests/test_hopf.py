import pytest

from algebra.cyclo import CycScalar
from algebra.elements import TensorElement
from algebra.errors import FieldMismatchError
from algebra.hopf import (
    check_hopf_axioms,
    check_stars,
    check_twisted_star,
    f_algebra,
    f_antipode,
    f_coproduct,
    f_counit,
    f_generator,
    h_algebra,
    h_antipode,
    h_coproduct,
    h_counit,
    h_generator,
    h_mul,
    pair_tensors,
    pairing,
    star_F,
    star_H,
)


def gens(N=3):
    return {name: h_generator(N, name) for name in ("K", "Kinv", "Xp", "Xm")}


def fgens(N=3):
    return {name: f_generator(N, name) for name in "abcd"}


class TestHRelations:
    def test_k_commutes_with_x(self, q3):
        g = gens()
        assert g["K"] * g["Xp"] == (g["Xp"] * g["K"]).scale(q3 ** 2)
        assert g["K"] * g["Xm"] == (g["Xm"] * g["K"]).scale(q3 ** -2)

    def test_commutator(self, q3):
        g = gens()
        lhs = g["Xp"] * g["Xm"] - g["Xm"] * g["Xp"]
        rhs = (g["K"] - g["Kinv"]).scale((q3 - q3 ** -1).inverse())
        assert lhs == rhs

    @pytest.mark.parametrize("N", [3, 5])
    def test_nilpotency_and_order(self, N):
        g = gens(N)
        assert (g["Xp"] ** N).is_zero()
        assert (g["Xm"] ** N).is_zero()
        assert g["K"] ** N == h_algebra(N).one()
        assert g["K"] * g["Kinv"] == h_algebra(N).one()

    def test_formatting(self):
        g = gens()
        assert str(g["Xm"] * g["K"] * g["Xp"]) == "Xm*K*Xp"

    def test_mixed_algebras_rejected(self):
        with pytest.raises(FieldMismatchError):
            h_generator(3, "K") * f_generator(3, "a")
        with pytest.raises(FieldMismatchError):
            h_mul(h_generator(3, "K"), h_generator(5, "K"))

    def test_unknown_generator(self):
        with pytest.raises(ValueError):
            h_generator(3, "E")


class TestHStructureMaps:
    def test_coproduct_of_generators(self):
        g = gens()
        assert h_coproduct(g["K"]) == TensorElement.pure([g["K"], g["K"]])
        expected = TensorElement.pure([g["Xp"], h_algebra(3).one()]) + TensorElement.pure([g["K"], g["Xp"]])
        assert h_coproduct(g["Xp"]) == expected

    def test_coproduct_is_multiplicative(self):
        g = gens()
        u, v = g["Xp"] * g["K"], g["Xm"] + g["Xp"]
        assert h_coproduct(u * v) == h_coproduct(u) * h_coproduct(v)

    def test_antipode_and_counit(self):
        g = gens()
        assert h_antipode(g["K"]) == g["Kinv"]
        assert h_antipode(g["Xp"]) == -(g["Kinv"] * g["Xp"])
        assert h_counit(g["K"]) == 1
        assert h_counit(g["Xp"] + g["K"]) == 1

    def test_hopf_axioms(self):
        assert check_hopf_axioms("H", 3).passed

    @pytest.mark.slow
    def test_hopf_axioms_N5(self):
        assert check_hopf_axioms("H", 5).passed


class TestFAlgebra:
    def test_relations(self, q3):
        f = fgens()
        assert f["a"] * f["b"] == (f["b"] * f["a"]).scale(q3)
        assert f["a"] * f["c"] == (f["c"] * f["a"]).scale(q3)
        assert f["b"] * f["c"] == f["c"] * f["b"]
        assert f["a"] ** 3 == f_algebra(3).one()
        assert (f["b"] ** 3).is_zero()

    def test_quantum_determinant(self, q3):
        f = fgens()
        one = f_algebra(3).one()
        assert f["a"] * f["d"] - (f["b"] * f["c"]).scale(q3) == one
        assert f["d"] * f["a"] - (f["b"] * f["c"]).scale(q3 ** -1) == one

    def test_coproduct_of_d(self):
        f = fgens()
        expected = TensorElement.pure([f["c"], f["b"]]) + TensorElement.pure([f["d"], f["d"]])
        assert f_coproduct(f["d"]) == expected

    def test_antipode(self, q3):
        f = fgens()
        assert f_antipode(f["a"]) == f["d"]
        assert f_antipode(f["d"]) == f["a"]
        assert f_antipode(f["b"]) == f["b"].scale(-(q3 ** -1))

    def test_counit(self):
        f = fgens()
        assert f_counit(f["a"]) == 1
        assert f_counit(f["d"]) == 1
        assert f_counit(f["b"]) == 0

    def test_hopf_axioms(self):
        assert check_hopf_axioms("F", 3).passed

    def test_unknown_algebra(self):
        with pytest.raises(ValueError):
            check_hopf_axioms("G", 3)


class TestPairing:
    def test_generator_values(self, q3):
        g, f = gens(), fgens()
        assert pairing(g["K"], f["a"]) == q3
        assert pairing(g["K"], f["d"]) == q3 ** -1
        assert pairing(g["Xp"], f["b"]) == 1
        assert pairing(g["Xm"], f["c"]) == 1
        assert pairing(g["Xp"], f["c"]) == 0

    def test_unit_pairs_with_counit(self):
        f = fgens()
        u = f["a"] * f["b"] + f["d"]
        assert pairing(h_algebra(3).one(), u) == f_counit(u)

    def test_products_pair_with_coproducts(self):
        g = gens()
        F = f_algebra(3)
        for left, right in ((g["K"], g["Xp"]), (g["Xp"], g["Xm"]), (g["Xm"], g["K"] + g["Xp"])):
            for m in F.basis():
                u = F.monomial(m)
                assert pairing(left * right, u) == pair_tensors(TensorElement.pure([left, right]), f_coproduct(u))

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            pairing(h_generator(3, "K"), f_generator(5, "a"))


class TestStars:
    def test_generator_images(self, q3):
        g = gens()
        assert star_H(g["K"]) == g["K"]
        assert star_H(g["Xp"]) == g["Xp"].scale(-(q3 ** -1))
        assert star_H(g["Xm"]) == g["Xm"].scale(-q3)
        assert star_F(fgens()["d"]) == fgens()["d"]

    def test_star_is_antilinear(self, q3):
        a = fgens()["a"]
        assert star_F(a.scale(q3)) == a.scale(q3 ** -1)

    def test_check_stars(self, rng):
        from algebra.samples import random_element

        samples = [(random_element(h_algebra(3), rng), random_element(h_algebra(3), rng)) for _ in range(3)]
        samples += [(random_element(f_algebra(3), rng), random_element(f_algebra(3), rng)) for _ in range(3)]
        report = check_stars(3, samples)
        assert report.passed, report.failure

    @pytest.mark.slow
    def test_check_stars_full_sample(self, rng):
        from algebra.samples import random_element

        samples = []
        for A in (h_algebra(3), f_algebra(3)):
            samples += [(random_element(A, rng), random_element(A, rng)) for _ in range(500)]
        report = check_stars(3, samples)
        assert report.passed, report.failure

    @pytest.mark.slow
    def test_star_involution_on_random_elements(self, rng):
        from algebra.samples import random_elements

        for A, star in ((h_algebra(3), star_H), (f_algebra(3), star_F)):
            for u in random_elements(A, rng, 500):
                assert star(star(u)) == u

    def test_twisted_star(self):
        report = check_twisted_star(3)
        assert report.passed, report.failure
        assert all(part.details["untwisted_violation"] for part in report.parts)

    def test_twisted_star_sign(self):
        from algebra.hopf import twisted_star_H

        with pytest.raises(ValueError):
            twisted_star_H(h_generator(3, "K"), 2)
