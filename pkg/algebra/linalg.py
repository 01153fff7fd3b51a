"""
Sparse exact linear algebra over Q(q).

Vectors are dicts column -> CycScalar without zero entries; matrices keep one
such dict per row. Elimination is an incrementally maintained reduced
row-echelon basis, which is all the rank, nullspace, inverse and coordinate
computations of the library need.
"""
import logging
from typing import Dict, Iterable, List, Optional, Sequence

from algebra.cyclo import CycScalar
from algebra.errors import FieldMismatchError, ScalarDivisionError

logger = logging.getLogger(__name__)

Vector = Dict[int, CycScalar]


def _axpy(target: Vector, scale: CycScalar, source: Vector) -> None:
    """target += scale * source, in place, dropping zeros."""
    for k, value in source.items():
        current = target.get(k)
        update = scale * value
        if current is not None:
            update = current + update
        if update:
            target[k] = update
        elif current is not None:
            del target[k]


def add_vectors(u: Vector, v: Vector, scale=None) -> Vector:
    out = dict(u)
    if scale is None:
        for k, value in v.items():
            current = out.get(k)
            total = value if current is None else current + value
            if total:
                out[k] = total
            else:
                out.pop(k, None)
        return out
    _axpy(out, scale, v)
    return out


def scale_vector(v: Vector, c: CycScalar) -> Vector:
    if not c:
        return {}
    return {k: c * value for k, value in v.items()}


class EchelonBasis:
    """Reduced row-echelon basis of a growing subspace; pivots are normalized to 1."""

    def __init__(self, N: int):
        self.N = N
        self.rows: Dict[int, Vector] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def reduce(self, vector: Vector) -> Vector:
        """
        Residue of a vector modulo the subspace.

        Args:
            vector: Sparse vector

        Returns:
            The vector minus its component along the pivot rows; zero on pivot columns
        """
        out = {k: c for k, c in vector.items() if c}
        for pivot in [k for k in out if k in self.rows]:
            c = out.get(pivot)
            if c:
                _axpy(out, -c, self.rows[pivot])
        return out

    def add(self, vector: Vector) -> bool:
        """Insert a vector; returns False when it was already in the span."""
        residue = self.reduce(vector)
        if not residue:
            return False
        pivot = min(residue)
        inverse = residue[pivot].inverse()
        row = {k: c * inverse for k, c in residue.items()}
        for other in self.rows.values():
            c = other.get(pivot)
            if c:
                _axpy(other, -c, row)
        self.rows[pivot] = row
        return True

    def extend(self, vectors: Iterable[Vector]) -> int:
        added = 0
        for vector in vectors:
            added += self.add(vector)
        return added

    def contains(self, vector: Vector) -> bool:
        return not self.reduce(vector)

    def basis(self) -> List[Vector]:
        return [dict(self.rows[p]) for p in sorted(self.rows)]


def rank_of(vectors: Iterable[Vector], N: int) -> int:
    basis = EchelonBasis(N)
    basis.extend(vectors)
    return basis.rank


def nullspace(equations: Iterable[Vector], ncols: int, N: int) -> List[Vector]:
    """
    Solutions x of sum_k row[k] x[k] = 0 for every row.

    Args:
        equations: Sparse rows
        ncols: Number of unknowns
        N: Order of q

    Returns:
        A basis of the solution space, one vector per free column
    """
    echelon = EchelonBasis(N)
    echelon.extend(equations)
    one = CycScalar.one(N)
    solutions = []
    for free in range(ncols):
        if free in echelon.rows:
            continue
        vector = {free: one}
        for pivot, row in echelon.rows.items():
            c = row.get(free)
            if c:
                vector[pivot] = -c
        solutions.append(vector)
    logger.debug("nullspace: %d unknowns, rank %d, %d solutions", ncols, echelon.rank, len(solutions))
    return solutions


class CoordinateSystem:
    """Coordinates of vectors with respect to a linearly independent family."""

    def __init__(self, N: int, basis: Sequence[Vector], ambient_dim: int):
        self.N = N
        self.size = len(basis)
        self.ambient_dim = ambient_dim
        one = CycScalar.one(N)
        self._echelon = EchelonBasis(N)
        for i, vector in enumerate(basis):
            augmented = dict(vector)
            augmented[ambient_dim + i] = one
            self._echelon.add(augmented)
        if any(pivot >= ambient_dim for pivot in self._echelon.rows):
            raise ValueError("basis vectors are linearly dependent")

    def coordinates(self, vector: Vector, check: bool = True) -> Vector:
        """
        Express a vector of the span in the basis.

        Args:
            vector: Vector of the ambient space
            check: Verify membership in the span

        Returns:
            Sparse coordinate vector indexed 0..size-1
        """
        if check:
            residue = self._echelon.reduce(vector)
            if any(k < self.ambient_dim for k in residue):
                raise ValueError("vector is not in the span of the basis")
        out: Vector = {}
        for pivot, row in self._echelon.rows.items():
            c = vector.get(pivot)
            if c:
                for k, value in row.items():
                    if k >= self.ambient_dim:
                        index = k - self.ambient_dim
                        total = out.get(index)
                        update = c * value if total is None else total + c * value
                        if update:
                            out[index] = update
                        else:
                            out.pop(index, None)
        return out


class CycMatrix:
    """Sparse matrix with entries in Q(q)."""

    __slots__ = ("N", "nrows", "ncols", "rows")

    def __init__(self, N: int, nrows: int, ncols: int, rows: Optional[List[Vector]] = None):
        self.N = N
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [{} for _ in range(nrows)]
        self.rows = [{k: c for k, c in row.items() if c} for row in rows]

    # ------------------------------------------------------------------ builders
    @classmethod
    def zeros(cls, N: int, nrows: int, ncols: Optional[int] = None) -> "CycMatrix":
        return cls(N, nrows, nrows if ncols is None else ncols)

    @classmethod
    def identity(cls, N: int, n: int) -> "CycMatrix":
        one = CycScalar.one(N)
        return cls(N, n, n, [{i: one} for i in range(n)])

    @classmethod
    def diagonal(cls, N: int, values: Sequence) -> "CycMatrix":
        return cls(N, len(values), len(values), [{i: CycScalar.coerce(N, v)} for i, v in enumerate(values)])

    @classmethod
    def from_dense(cls, N: int, data: Sequence[Sequence]) -> "CycMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        rows = [{j: CycScalar.coerce(N, v) for j, v in enumerate(row)} for row in data]
        return cls(N, nrows, ncols, rows)

    @classmethod
    def from_columns(cls, N: int, nrows: int, columns: Sequence[Vector]) -> "CycMatrix":
        rows: List[Vector] = [{} for _ in range(nrows)]
        for j, column in enumerate(columns):
            for i, c in column.items():
                if c:
                    rows[i][j] = c
        return cls(N, nrows, len(columns), rows)

    # ---------------------------------------------------------------- accessors
    def __getitem__(self, index) -> CycScalar:
        i, j = index
        value = self.rows[i].get(j)
        return value if value is not None else CycScalar.zero(self.N)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def entries(self):
        for i, row in enumerate(self.rows):
            for j, c in row.items():
                yield i, j, c

    def column(self, j: int) -> Vector:
        return {i: row[j] for i, row in enumerate(self.rows) if j in row}

    def columns(self) -> List[Vector]:
        cols: List[Vector] = [{} for _ in range(self.ncols)]
        for i, j, c in self.entries():
            cols[j][i] = c
        return cols

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "CycMatrix":
        position = {j: k for k, j in enumerate(col_indices)}
        rows = [{position[j]: c for j, c in self.rows[i].items() if j in position} for i in row_indices]
        return CycMatrix(self.N, len(row_indices), len(col_indices), rows)

    def to_strings(self) -> List[List[str]]:
        return [[str(self[i, j]) for j in range(self.ncols)] for i in range(self.nrows)]

    # --------------------------------------------------------------- arithmetic
    def _check(self, other: "CycMatrix") -> None:
        if not isinstance(other, CycMatrix):
            raise TypeError(f"expected a matrix, got {type(other).__name__}")
        if other.N != self.N:
            raise FieldMismatchError(f"matrices over N={self.N} and N={other.N}")

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return CycMatrix(self.N, self.nrows, self.ncols, [add_vectors(a, b) for a, b in zip(self.rows, other.rows)])

    def __neg__(self) -> "CycMatrix":
        return CycMatrix(self.N, self.nrows, self.ncols, [{k: -c for k, c in row.items()} for row in self.rows])

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        return self + (-other)

    def scale(self, c) -> "CycMatrix":
        c = CycScalar.coerce(self.N, c)
        return CycMatrix(self.N, self.nrows, self.ncols, [scale_vector(row, c) for row in self.rows])

    def __mul__(self, c) -> "CycMatrix":
        if isinstance(c, CycMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for row in self.rows:
            acc: Vector = {}
            for k, c in row.items():
                source = other.rows[k]
                if source:
                    _axpy(acc, c, source)
            out.append(acc)
        return CycMatrix(self.N, self.nrows, other.ncols, out)

    def apply(self, vector: Vector) -> Vector:
        out: Vector = {}
        for i, row in enumerate(self.rows):
            total = None
            for k, c in row.items():
                v = vector.get(k)
                if v is not None:
                    total = c * v if total is None else total + c * v
            if total:
                out[i] = total
        return out

    def power(self, exponent: int) -> "CycMatrix":
        if exponent < 0:
            return self.inverse().power(-exponent)
        result = CycMatrix.identity(self.N, self.nrows)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def transpose(self) -> "CycMatrix":
        return CycMatrix.from_columns(self.N, self.ncols, self.rows)

    def conjugate(self) -> "CycMatrix":
        return CycMatrix(self.N, self.nrows, self.ncols, [{k: c.conjugate() for k, c in row.items()} for row in self.rows])

    def conj_transpose(self) -> "CycMatrix":
        return self.conjugate().transpose()

    def kron(self, other: "CycMatrix") -> "CycMatrix":
        self._check(other)
        rows = []
        for row in self.rows:
            for other_row in other.rows:
                out = {}
                for j, c in row.items():
                    for l, d in other_row.items():
                        out[j * other.ncols + l] = c * d
                rows.append(out)
        return CycMatrix(self.N, self.nrows * other.nrows, self.ncols * other.ncols, rows)

    def trace(self) -> CycScalar:
        total = CycScalar.zero(self.N)
        for i, row in enumerate(self.rows):
            c = row.get(i)
            if c is not None:
                total = total + c
        return total

    # ------------------------------------------------------------- comparisons
    def is_zero(self) -> bool:
        return not any(self.rows)

    def is_diagonal(self) -> bool:
        return all(set(row) <= {i} for i, row in enumerate(self.rows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.N == other.N and self.shape == other.shape and self.rows == other.rows

    __hash__ = None

    def __repr__(self) -> str:
        return f"CycMatrix(N={self.N}, shape={self.shape}, nonzero={sum(len(r) for r in self.rows)})"

    # -------------------------------------------------------------- elimination
    def rank(self) -> int:
        return rank_of(self.rows, self.N)

    def nullspace(self) -> List[Vector]:
        """Basis of {v : M v = 0}."""
        return nullspace(self.rows, self.ncols, self.N)

    def column_space(self) -> List[Vector]:
        """Echelon basis of the span of the columns."""
        echelon = EchelonBasis(self.N)
        echelon.extend(self.columns())
        return echelon.basis()

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "CycMatrix":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices can be inverted")
        n = self.nrows
        one = CycScalar.one(self.N)
        echelon = EchelonBasis(self.N)
        for i, row in enumerate(self.rows):
            augmented = dict(row)
            augmented[n + i] = one
            echelon.add(augmented)
        if sorted(echelon.rows) != list(range(n)):
            raise ScalarDivisionError("matrix is singular")
        rows = [{k - n: c for k, c in echelon.rows[p].items() if k >= n} for p in range(n)]
        return CycMatrix(self.N, n, n, rows)
