"""
Structure of H as an algebra: the left regular representation, the Jacobson
radical from the trace form, the semisimple quotient, and the Gr(2) block model.
"""
import logging
import random
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from algebra.cyclo import CycScalar, check_root
from algebra.hopf import h_algebra, h_monomial
from algebra.linalg import CycMatrix, EchelonBasis, Vector, nullspace
from algebra.reports import CheckReport, ReportBuilder
from representations.repcat import Representation, catalog, highest_weight_vectors

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def regular_representation(N: int) -> Representation:
    """Left multiplication by K, X+, X- on the basis X-^i K^j X+^k of H."""
    H = h_algebra(check_root(N))
    basis = H.basis()
    index = {m: i for i, m in enumerate(basis)}
    matrices = {}
    for name, generator in (("K", (0, 1, 0)), ("Xp", (0, 0, 1)), ("Xm", (1, 0, 0))):
        columns = []
        for m in basis:
            columns.append({index[out]: c for out, c in H.multiply_monomials(generator, m)})
        matrices[name] = CycMatrix.from_columns(N, len(basis), columns)
    logger.debug("regular representation of H for N=%d built (dim %d)", N, len(basis))
    return Representation(N, matrices["K"], matrices["Xp"], matrices["Xm"], label="H", check=False)


@lru_cache(maxsize=None)
def _monomial_traces(N: int) -> Dict[Tuple[int, int, int], CycScalar]:
    """Trace of left multiplication by each basis monomial."""
    H = h_algebra(N)
    traces = {}
    for m in H.basis():
        total = CycScalar.zero(N)
        if m[0] == m[2]:
            for b in H.basis():
                for out, c in H.multiply_monomials(m, b):
                    if out == b:
                        total = total + c
        traces[m] = total
    return traces


def _trace_form_rows(N: int, traces: Dict) -> List[Vector]:
    H = h_algebra(N)
    basis = H.basis()
    rows = []
    for u in basis:
        row: Vector = {}
        for j, v in enumerate(basis):
            total = None
            for out, c in H.multiply_monomials(u, v):
                t = traces[out]
                if t:
                    total = c * t if total is None else total + c * t
            if total:
                row[j] = total
        rows.append(row)
    return rows


class RadicalReport(BaseModel):
    """The Jacobson radical of H and the simple blocks of H / radical."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    N: int
    dimension: int
    radical_dimension: int
    block_dims: List[int]
    quotient_trace_rank: int
    basis: List[Vector] = Field(default_factory=list, exclude=True)

    @property
    def semisimple_quotient(self) -> bool:
        return self.quotient_trace_rank == self.dimension - self.radical_dimension

    def summary(self) -> Dict:
        return {
            "N": self.N,
            "dim H": self.dimension,
            "dim radical": self.radical_dimension,
            "blocks": self.block_dims,
            "quotient trace-form rank": self.quotient_trace_rank,
            "semisimple quotient": self.semisimple_quotient,
        }


def block_order(N: int) -> List[int]:
    """N, then N-p and p for p = 1 .. (N-1)/2."""
    order = [N]
    for p in range(1, (N - 1) // 2 + 1):
        order.extend([N - p, p])
    return order


@lru_cache(maxsize=None)
def radical(N: int) -> RadicalReport:
    """
    The Jacobson radical of H as the kernel of the trace form (u, v) -> Tr(L_u L_v).

    Args:
        N: Order of q

    Returns:
        RadicalReport with the radical basis, the matrix block sizes n^2 of H / radical
        (n times the number of highest weight vectors of weight q^{n-1} in the quotient)
        and the rank of the quotient's own trace form
    """
    check_root(N)
    H = h_algebra(N)
    size = len(H.basis())
    traces = _monomial_traces(N)
    rows = _trace_form_rows(N, traces)
    basis = nullspace(rows, size, N)
    logger.debug("radical of H for N=%d has dimension %d", N, len(basis))

    regular = regular_representation(N)
    quotient, kept = regular.quotient(basis, label="H/J")
    block_dims = []
    for n in block_order(N):
        multiplicity = len(highest_weight_vectors(quotient, n))
        block_dims.append(n * multiplicity)

    # trace form of the quotient on its own regular representation
    monomials = H.basis()
    quotient_traces = {m: quotient.monomial_matrix(m).trace() for m in monomials}
    representatives = [monomials[i] for i in kept]
    quotient_rows = []
    for u in representatives:
        row: Vector = {}
        for j, v in enumerate(representatives):
            total = None
            for out, c in H.multiply_monomials(u, v):
                t = quotient_traces[out]
                if t:
                    total = c * t if total is None else total + c * t
            if total:
                row[j] = total
        quotient_rows.append(row)
    quotient_rank = EchelonBasis(N)
    quotient_rank.extend(quotient_rows)
    return RadicalReport(
        N=N,
        dimension=size,
        radical_dimension=len(basis),
        block_dims=block_dims,
        quotient_trace_rank=quotient_rank.rank,
        basis=basis,
    )


def check_radical_ideal(N: int) -> CheckReport:
    """The radical is stable under left and right multiplication by the generators."""
    report = radical(N)
    H = h_algebra(N)
    basis = H.basis()
    index = {m: i for i, m in enumerate(basis)}
    echelon = EchelonBasis(N)
    echelon.extend(report.basis)
    builder = ReportBuilder("radical-ideal", N)
    generators = [h_monomial(N, *g) for g in ((0, 1, 0), (0, 0, 1), (1, 0, 0))]
    for vector in report.basis:
        element = H.element({basis[i]: c for i, c in vector.items()})
        for g in generators:
            for side, product in (("left", g * element), ("right", element * g)):
                image = {index[m]: c for m, c in product.terms.items()}
                if not builder.expect(f"{side} multiple of a radical element by {g}", echelon.contains(image)):
                    return builder.done()
    return builder.done()


# ---------------------------------------------------------------- block model

class Gr2Scalar:
    """α + γθ1 + δθ2 + βθ1θ2 with θ1² = θ2² = 0 and θ1θ2 = -θ2θ1."""

    __slots__ = ("alpha", "beta", "gamma", "delta")

    def __init__(self, alpha: CycScalar, beta: CycScalar, gamma: CycScalar, delta: CycScalar):
        self.alpha = alpha
        self.beta = beta
        self.gamma = gamma
        self.delta = delta

    @classmethod
    def even(cls, alpha, beta) -> "Gr2Scalar":
        zero = alpha * 0
        return cls(alpha, beta, zero, zero)

    @classmethod
    def odd(cls, gamma, delta) -> "Gr2Scalar":
        zero = gamma * 0
        return cls(zero, zero, gamma, delta)

    def __add__(self, other: "Gr2Scalar") -> "Gr2Scalar":
        return Gr2Scalar(self.alpha + other.alpha, self.beta + other.beta, self.gamma + other.gamma, self.delta + other.delta)

    def __mul__(self, other: "Gr2Scalar") -> "Gr2Scalar":
        a, b, c, d = self.alpha, self.beta, self.gamma, self.delta
        a2, b2, c2, d2 = other.alpha, other.beta, other.gamma, other.delta
        return Gr2Scalar(
            a * a2,
            a * b2 + b * a2 + c * d2 - d * c2,
            a * c2 + c * a2,
            a * d2 + d * a2,
        )

    @property
    def is_even(self) -> bool:
        return not self.gamma and not self.delta

    @property
    def is_odd(self) -> bool:
        return not self.alpha and not self.beta

    @property
    def is_nilpotent(self) -> bool:
        return not self.alpha

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gr2Scalar):
            return NotImplemented
        return (self.alpha, self.beta, self.gamma, self.delta) == (other.alpha, other.beta, other.gamma, other.delta)

    def __hash__(self) -> int:
        return hash((self.alpha, self.beta, self.gamma, self.delta))

    def __repr__(self) -> str:
        return f"Gr2Scalar({self.alpha}, {self.beta}, {self.gamma}, {self.delta})"


class BlockSpec(BaseModel):
    """One summand: the full matrix block M_N or a Grassmann block M_{N-p|p}."""

    size: int
    split: Optional[Tuple[int, int]] = None

    @property
    def complex_dim(self) -> int:
        if self.split is None:
            return self.size ** 2
        big, small = self.split
        return 2 * (big ** 2 + small ** 2) + 4 * big * small

    @property
    def radical_dim(self) -> int:
        """Parameters attached to θ1θ2 on even entries and to θ1, θ2 on odd entries."""
        if self.split is None:
            return 0
        big, small = self.split
        return big ** 2 + small ** 2 + 4 * big * small

    @property
    def simple_block_dims(self) -> List[int]:
        if self.split is None:
            return [self.size ** 2]
        return [n ** 2 for n in self.split]

    @property
    def column_dims(self) -> List[int]:
        """Complex dimension of one column: N for M_N, 2N for a Grassmann block."""
        return [self.size] if self.split is None else [2 * self.size] * 2

    def is_even_entry(self, i: int, j: int) -> bool:
        if self.split is None:
            return True
        big = self.split[0]
        return (i < big) == (j < big)


class BlockModel(BaseModel):
    N: int
    blocks: List[BlockSpec]

    @property
    def complex_dim(self) -> int:
        return sum(b.complex_dim for b in self.blocks)

    @property
    def radical_dim(self) -> int:
        return sum(b.radical_dim for b in self.blocks)

    @property
    def simple_block_dims(self) -> List[int]:
        return [d for b in self.blocks for d in b.simple_block_dims]

    @property
    def pim_dims(self) -> List[int]:
        return [d for b in self.blocks for d in b.column_dims]


def block_model(N: int) -> BlockModel:
    check_root(N)
    blocks = [BlockSpec(size=N)]
    for p in range(1, (N - 1) // 2 + 1):
        blocks.append(BlockSpec(size=N, split=(N - p, p)))
    return BlockModel(N=N, blocks=blocks)


def block_matrix_product(spec: BlockSpec, left: List[List[Gr2Scalar]], right: List[List[Gr2Scalar]]) -> List[List[Gr2Scalar]]:
    n = spec.size
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            total = left[i][0] * right[0][j]
            for k in range(1, n):
                total = total + left[i][k] * right[k][j]
            row.append(total)
        out.append(row)
    return out


def _random_block(spec: BlockSpec, N: int, rng, nilpotent: bool = False) -> List[List[Gr2Scalar]]:
    def scalar():
        return CycScalar.from_coefficients(N, [rng.randint(-2, 2) for _ in range(2)])

    matrix = []
    for i in range(spec.size):
        row = []
        for j in range(spec.size):
            if spec.is_even_entry(i, j):
                row.append(Gr2Scalar.even(CycScalar.zero(N) if nilpotent else scalar(), scalar()))
            else:
                row.append(Gr2Scalar.odd(scalar(), scalar()))
        matrix.append(row)
    return matrix


def check_block_dims(N: int, rng=None, with_radical: bool = True) -> CheckReport:
    """
    Compare the block model of H with the algebra itself.

    Checks total dimension N^3, the parity pattern being closed under products, the
    Grassmann-supported part being an ideal, and (with_radical) the radical dimension and
    simple blocks computed from the trace form, plus PIM dimensions against the catalog.
    """
    rng = rng or random.Random(0)
    model = block_model(N)
    builder = ReportBuilder("block-model", N)
    builder.expect_equal("total complex dimension", model.complex_dim, N ** 3)
    for spec in model.blocks[1:]:
        left = _random_block(spec, N, rng)
        right = _random_block(spec, N, rng)
        nil = _random_block(spec, N, rng, nilpotent=True)
        product = block_matrix_product(spec, left, right)
        builder.expect(
            f"parity pattern of M_{spec.split} closed under products",
            all(
                product[i][j].is_even if spec.is_even_entry(i, j) else product[i][j].is_odd
                for i in range(spec.size)
                for j in range(spec.size)
            ),
        )
        ideal = block_matrix_product(spec, left, nil)
        builder.expect(
            f"Grassmann part of M_{spec.split} is an ideal",
            all(entry.is_nilpotent for row in ideal for entry in row),
        )
    pim_dims = sorted(m.dim for m in catalog(N) if m.dim >= N)
    builder.expect_equal("PIM dimensions", sorted(model.pim_dims), pim_dims)
    details = {"complex_dim": model.complex_dim, "radical_dim": model.radical_dim, "blocks": model.simple_block_dims}
    if with_radical:
        computed = radical(N)
        builder.expect_equal("radical dimension", computed.radical_dimension, model.radical_dim)
        builder.expect_equal("simple blocks of H/J", computed.block_dims, model.simple_block_dims)
        builder.expect("H/J is semisimple", computed.semisimple_quotient)
    return builder.done(**details)
