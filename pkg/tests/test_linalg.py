import pytest

from algebra.cyclo import CycScalar
from algebra.errors import FieldMismatchError, ScalarDivisionError
from algebra.linalg import CoordinateSystem, CycMatrix, EchelonBasis, nullspace, rank_of


@pytest.fixture
def q():
    return CycScalar.q_power(3)


class TestEchelonBasis:
    def test_add_reports_new_directions(self, q):
        basis = EchelonBasis(3)
        assert basis.add({0: q, 1: CycScalar.one(3)})
        assert not basis.add({0: q * q, 1: q})
        assert basis.add({1: CycScalar.one(3)})
        assert basis.rank == 2
        assert basis.pivots == [0, 1]

    def test_zero_vector_is_never_added(self):
        basis = EchelonBasis(3)
        assert not basis.add({})
        assert basis.rank == 0

    def test_contains(self, q):
        basis = EchelonBasis(3)
        basis.add({0: CycScalar.one(3), 2: q})
        assert basis.contains({0: q, 2: q * q})
        assert not basis.contains({1: q})

    def test_rank_of(self, q):
        vectors = [{0: q}, {1: q}, {0: q, 1: q}]
        assert rank_of(vectors, 3) == 2


class TestNullspace:
    def test_single_equation(self, q):
        solutions = nullspace([{0: CycScalar.one(3), 1: q}], 2, 3)
        assert len(solutions) == 1
        (v,) = solutions
        assert v[0] + q * v[1] == 0

    def test_no_equations(self):
        assert len(nullspace([], 4, 5)) == 4


class TestCycMatrix:
    def test_identity_and_product(self, q):
        m = CycMatrix.from_dense(3, [[1, q], [0, 1]])
        assert m @ CycMatrix.identity(3, 2) == m
        assert CycMatrix.identity(3, 2) @ m == m

    def test_inverse(self, q):
        m = CycMatrix.from_dense(3, [[1, q], [q, 1]])
        assert m.is_invertible()
        assert m @ m.inverse() == CycMatrix.identity(3, 2)

    def test_singular_inverse_raises(self, q):
        m = CycMatrix.from_dense(3, [[1, q], [q * q, 1]])
        # q^3 = 1, so the rows are proportional
        assert m.rank() == 1
        with pytest.raises(ScalarDivisionError):
            m.inverse()

    def test_power_and_negative_power(self, q):
        m = CycMatrix.diagonal(3, [q, 1])
        assert m.power(3) == CycMatrix.identity(3, 2)
        assert m.power(-1) == CycMatrix.diagonal(3, [q * q, 1])

    def test_nullspace_is_annihilated(self, q):
        m = CycMatrix.from_dense(3, [[1, q, 0], [0, 1, q]])
        kernel = m.nullspace()
        assert len(kernel) == 1
        assert m.apply(kernel[0]) == {}

    def test_transpose_and_conjugate(self, q):
        m = CycMatrix.from_dense(3, [[q, 1], [0, 0]])
        assert m.transpose()[1, 0] == 1
        assert m.conj_transpose()[0, 0] == q * q

    def test_kron_trace(self, q):
        a = CycMatrix.diagonal(3, [1, q])
        b = CycMatrix.diagonal(3, [q, q])
        assert a.kron(b).shape == (4, 4)
        assert a.kron(b).trace() == a.trace() * b.trace()

    def test_from_columns(self, q):
        m = CycMatrix.from_columns(3, 2, [{0: q}, {1: q}])
        assert m == CycMatrix.diagonal(3, [q, q])
        assert m.is_diagonal()

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            CycMatrix.identity(3, 2) + CycMatrix.identity(5, 2)

    def test_matrices_are_unhashable(self):
        with pytest.raises(TypeError):
            hash(CycMatrix.identity(3, 1))


class TestCoordinateSystem:
    def test_coordinates(self, q):
        one = CycScalar.one(3)
        system = CoordinateSystem(3, [{0: one, 1: q}, {1: one}], 3)
        coords = system.coordinates({0: 2 * one, 1: 2 * q + 5})
        assert coords == {0: CycScalar.from_rational(3, 2), 1: CycScalar.from_rational(3, 5)}

    def test_vector_outside_span(self):
        one = CycScalar.one(3)
        system = CoordinateSystem(3, [{0: one}], 2)
        with pytest.raises(ValueError):
            system.coordinates({1: one})

    def test_dependent_family_rejected(self, q):
        with pytest.raises(ValueError):
            CoordinateSystem(3, [{0: q}, {0: q * q}], 1)
