"""
The reduced quantum plane: xy = q yx, x^N = y^N = 1, isomorphic to M_N(C).

Normal form is sum c_rs x^r y^s with 0 <= r, s < N.
"""
import logging
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

from algebra.cyclo import CycScalar, check_root
from algebra.elements import AlgebraElement, MonomialAlgebra
from algebra.errors import FieldMismatchError, QuantumGroupError
from algebra.linalg import CycMatrix, Vector

logger = logging.getLogger(__name__)

PlaneMonomial = Tuple[int, int]


@lru_cache(maxsize=None)
def _plane_product(N: int, left: PlaneMonomial, right: PlaneMonomial):
    (r, s), (r2, s2) = left, right
    # (x^r y^s)(x^r2 y^s2) = q^{-s r2} x^{r+r2} y^{s+s2}
    return ((((r + r2) % N, (s + s2) % N), CycScalar.q_power(N, -s * r2)),)


class PlaneAlgebra(MonomialAlgebra):
    name = "plane"

    def basis(self) -> List[PlaneMonomial]:
        return [(r, s) for r in range(self.N) for s in range(self.N)]

    def unit(self) -> PlaneMonomial:
        return (0, 0)

    def multiply_monomials(self, left, right):
        return _plane_product(self.N, left, right)

    def format_monomial(self, monomial: PlaneMonomial) -> str:
        r, s = monomial
        factors = []
        for name, e in (("x", r), ("y", s)):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) or "1"

    def element(self, terms=None) -> "PlaneElement":
        return PlaneElement(self, terms)

    def index(self, monomial: PlaneMonomial) -> int:
        r, s = monomial
        return r * self.N + s

    def monomial_at(self, index: int) -> PlaneMonomial:
        return divmod(index, self.N)


class PlaneElement(AlgebraElement):
    """An element of the reduced quantum plane."""

    __slots__ = ()

    def to_vector(self) -> Vector:
        algebra = self.algebra
        return {algebra.index(m): c for m, c in self.terms.items()}

    @property
    def degree_class(self) -> set:
        """The residues r + s mod N of the monomials present."""
        return {(r + s) % self.N for r, s in self.terms}


@lru_cache(maxsize=None)
def plane_algebra(N: int) -> PlaneAlgebra:
    return PlaneAlgebra(check_root(N))


def plane_element(N: int, terms=None) -> PlaneElement:
    return plane_algebra(N).element(terms)


def plane_monomial(N: int, r: int, s: int, coefficient=1) -> PlaneElement:
    return plane_element(N, {(r % N, s % N): coefficient})


def plane_generator(N: int, name: str) -> PlaneElement:
    if name == "x":
        return plane_monomial(N, 1, 0)
    if name == "y":
        return plane_monomial(N, 0, 1)
    raise ValueError(f"unknown generator of the quantum plane: {name!r}")


def plane_from_vector(N: int, vector: Vector) -> PlaneElement:
    algebra = plane_algebra(N)
    return algebra.element({algebra.monomial_at(i): c for i, c in vector.items()})


Symbol = Union[str, Tuple[str, int]]


def normalize(word: Iterable[Symbol], N: int, scalar=1) -> PlaneElement:
    """
    Bring a word in x, y and their inverses to normal form.

    Args:
        word: Symbols "x", "y", "x^-1", "y^-1" or pairs (generator, exponent)
        N: Order of q
        scalar: Overall coefficient

    Returns:
        scalar * product of the word, as sum c x^r y^s
    """
    result = plane_element(N, {(0, 0): scalar})
    for symbol in word:
        if isinstance(symbol, tuple):
            name, exponent = symbol
        elif symbol.endswith("^-1"):
            name, exponent = symbol[:-3], -1
        else:
            name, exponent = symbol, 1
        factor = plane_monomial(N, exponent, 0) if name == "x" else None
        if name == "y":
            factor = plane_monomial(N, 0, exponent)
        if factor is None:
            raise ValueError(f"unknown symbol {symbol!r}")
        result = result * factor
    return result


def plane_mul(a: PlaneElement, b: PlaneElement) -> PlaneElement:
    if a.N != b.N:
        raise FieldMismatchError(f"plane elements over N={a.N} and N={b.N}")
    return a * b


class PlaneMatrixRep:
    """The N x N matrices realizing x and y; relations are verified on construction."""

    def __init__(self, x: CycMatrix, y: CycMatrix):
        N = x.N
        q = CycScalar.q_power(N)
        identity = CycMatrix.identity(N, x.nrows)
        if x @ y != (y @ x).scale(q):
            raise QuantumGroupError("matrices do not satisfy xy = q yx")
        if x.power(N) != identity or y.power(N) != identity:
            raise QuantumGroupError("matrices do not satisfy x^N = y^N = 1")
        self.N = N
        self.x = x
        self.y = y

    @classmethod
    def standard(cls, N: int) -> "PlaneMatrixRep":
        return _standard_rep(N)


@lru_cache(maxsize=None)
def _standard_rep(N: int) -> PlaneMatrixRep:
    one = CycScalar.one(N)
    x = CycMatrix(N, N, N, [{i: CycScalar.q_power(N, -i)} for i in range(N)])
    y = CycMatrix(N, N, N, [{(i + 1) % N: one} for i in range(N)])
    return PlaneMatrixRep(x, y)


def to_matrix(z: PlaneElement) -> CycMatrix:
    """
    Image of a plane element under x -> diag(q^{-i}), y -> cyclic shift.

    Args:
        z: Plane element

    Returns:
        N x N matrix; (x^r y^s)[i, i+s] = q^{-ir}
    """
    N = z.N
    rows: List[dict] = [{} for _ in range(N)]
    for (r, s), c in z.terms.items():
        for i in range(N):
            j = (i + s) % N
            value = c * CycScalar.q_power(N, -i * r)
            total = rows[i].get(j)
            rows[i][j] = value if total is None else total + value
    return CycMatrix(N, N, N, rows)


def from_matrix(m: CycMatrix) -> PlaneElement:
    N = m.N
    if m.shape != (N, N):
        raise ValueError(f"expected an {N}x{N} matrix, got {m.shape}")
    scale = CycScalar.from_rational(N, 1) / N
    terms = {}
    for r in range(N):
        for s in range(N):
            total = CycScalar.zero(N)
            for i in range(N):
                entry = m.rows[i].get((i + s) % N)
                if entry is not None:
                    total = total + entry * CycScalar.q_power(N, i * r)
            if total:
                terms[(r, s)] = total * scale
    return plane_element(N, terms)


def star_M(z: PlaneElement) -> PlaneElement:
    """x* = x, y* = y extended antilinearly and antimultiplicatively: (x^r y^s)* = q^{-rs} x^r y^s."""
    N = z.N
    return plane_element(N, {(r, s): c.conjugate() * CycScalar.q_power(N, -r * s) for (r, s), c in z.terms.items()})


def plane_inverse(z: PlaneElement) -> PlaneElement:
    return from_matrix(to_matrix(z).inverse())


def plane_basis(N: int) -> List[PlaneElement]:
    algebra = plane_algebra(N)
    return [algebra.monomial(m) for m in algebra.basis()]
