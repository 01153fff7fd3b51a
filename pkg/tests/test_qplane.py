import pytest

from algebra.cyclo import CycScalar
from algebra.errors import FieldMismatchError, QuantumGroupError
from algebra.linalg import CycMatrix
from algebra.qplane import (
    PlaneMatrixRep,
    from_matrix,
    normalize,
    plane_basis,
    plane_generator,
    plane_inverse,
    plane_monomial,
    plane_mul,
    star_M,
    to_matrix,
)


@pytest.fixture
def x():
    return plane_generator(3, "x")


@pytest.fixture
def y():
    return plane_generator(3, "y")


class TestRelations:
    def test_xy_is_q_yx(self, x, y, q3):
        assert x * y == (y * x).scale(q3)

    def test_yx_normal_form(self, x, y):
        assert y * x == plane_monomial(3, 1, 1, CycScalar.q_power(3, 2))

    @pytest.mark.parametrize("N", [3, 5])
    def test_generators_have_order_N(self, N):
        assert plane_generator(N, "x") ** N == plane_monomial(N, 0, 0)
        assert plane_generator(N, "y") ** N == plane_monomial(N, 0, 0)

    def test_normalize_word(self, q3):
        # y x^-1 = q x^-1 y
        assert normalize(["y", "x^-1"], 3) == plane_monomial(3, 2, 1, q3)
        assert normalize([("x", 2), ("y", 1)], 3, scalar=2) == plane_monomial(3, 2, 1, 2)

    def test_normalize_unknown_symbol(self):
        with pytest.raises(ValueError):
            normalize(["z"], 3)

    def test_formatting(self, x, y):
        assert str(x * x * y) == "x^2*y"
        assert str(x + y) in ("x + y", "y + x")

    def test_fields_must_match(self):
        with pytest.raises(FieldMismatchError):
            plane_mul(plane_generator(3, "x"), plane_generator(5, "x"))

    def test_basis_size(self):
        assert len(plane_basis(5)) == 25


class TestMatrixPicture:
    def test_to_matrix_is_multiplicative(self, x, y):
        a = x + y.scale(2)
        b = x * y + y * y
        assert to_matrix(a * b) == to_matrix(a) @ to_matrix(b)

    def test_matrix_picture_is_faithful(self, x, y, q3):
        z = x * x + y.scale(q3) + plane_monomial(3, 1, 2, 3)
        assert from_matrix(to_matrix(z)) == z

    def test_inverse(self, x, y):
        z = x + y.scale(2)
        assert z * plane_inverse(z) == plane_monomial(3, 0, 0)

    def test_rep_rejects_wrong_matrices(self):
        with pytest.raises(QuantumGroupError):
            PlaneMatrixRep(CycMatrix.identity(3, 3), CycMatrix.identity(3, 3).scale(2))

    def test_standard_rep(self):
        rep = PlaneMatrixRep.standard(5)
        assert rep.x.shape == (5, 5)


class TestStar:
    def test_generators_self_adjoint(self, x, y):
        assert star_M(x) == x
        assert star_M(y) == y

    def test_antimultiplicative(self, x, y, q3):
        a = x.scale(q3) + y
        b = x * y + plane_monomial(3, 2, 0, 2)
        assert star_M(a * b) == star_M(b) * star_M(a)

    def test_involution(self, x, y, q3):
        z = (x * y).scale(q3) + y * y
        assert star_M(star_M(z)) == z

    def test_xy_star(self, x, y, q3):
        assert star_M(x * y) == y * x

    @pytest.mark.slow
    def test_star_on_random_elements(self, rng):
        from algebra.qplane import plane_algebra
        from algebra.samples import random_elements

        M = plane_algebra(3)
        left, right = random_elements(M, rng, 500), random_elements(M, rng, 500)
        for a, b in zip(left, right):
            assert star_M(star_M(a)) == a
            assert star_M(a * b) == star_M(b) * star_M(a)
