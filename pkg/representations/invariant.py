"""
Quantum group invariant sesquilinear forms, antilinear in the first slot.

A form with Gram matrix G is invariant on a module when (h z, w) = (z, h* w),
i.e. ρ(h)^† G = G ρ(h*), for the generators h of H. On the quantum plane the
conditions (g z, w) = (z, g* w) for g = x, y are imposed as well, which makes
the form unique: (z, w) = φ0 · [x^{N-1} y^{N-1}] (z* w).
"""
import cmath
import logging
import random
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel

from algebra.cyclo import CycScalar, check_root
from algebra.errors import QuantumGroupError, SolutionSpaceError
from algebra.hopf import f_algebra, f_antipode, h_antipode, h_coproduct, h_counit, h_generator, star_F, star_H
from algebra.linalg import CycMatrix, Vector, nullspace
from algebra.qplane import PlaneElement, plane_algebra, plane_basis, plane_monomial, star_M
from algebra.reports import CheckReport, ReportBuilder
from representations.action import action_representation, coact_right
from representations.repcat import Representation, get_module, module_radical, socle, submodule_chain

logger = logging.getLogger(__name__)

TOLERANCE = 1e-9


def embed(c: CycScalar) -> complex:
    """Numerical value under q -> exp(2πi/N)."""
    root = cmath.exp(2j * cmath.pi / c.N)
    return complex(sum(float(a) * root ** i for i, a in enumerate(c.coefficients())))


class Signature(BaseModel):
    positive: int
    negative: int
    null: int

    @property
    def definite(self) -> bool:
        return self.null == 0 and (self.positive == 0 or self.negative == 0)

    @property
    def indefinite(self) -> bool:
        return self.positive > 0 and self.negative > 0


class SesquilinearForm:
    """(u, v) = sum conj(u_i) G_ij v_j over a declared basis."""

    def __init__(self, gram: CycMatrix, basis: Optional[Sequence[str]] = None):
        if gram.nrows != gram.ncols:
            raise ValueError(f"Gram matrix must be square, got {gram.shape}")
        self.N = gram.N
        self.gram = gram
        self.basis = list(basis) if basis is not None else [f"v{i}" for i in range(gram.nrows)]

    @property
    def dim(self) -> int:
        return self.gram.nrows

    def __call__(self, u: Vector, v: Vector) -> CycScalar:
        total = CycScalar.zero(self.N)
        for i, a in u.items():
            row = self.gram.rows[i]
            for j, b in v.items():
                g = row.get(j)
                if g is not None:
                    total = total + a.conjugate() * g * b
        return total

    def is_hermitian(self) -> bool:
        return self.gram == self.gram.conj_transpose()

    def rank(self) -> int:
        return self.gram.rank()

    def is_degenerate(self) -> bool:
        return self.rank() < self.dim

    def restrict(self, vectors: Sequence[Vector], basis: Optional[Sequence[str]] = None) -> "SesquilinearForm":
        """The form B^† G B on the span of the given vectors."""
        B = CycMatrix.from_columns(self.N, self.dim, vectors)
        return SesquilinearForm(B.conj_transpose() @ self.gram @ B, basis)

    def numeric(self) -> np.ndarray:
        dense = np.zeros((self.dim, self.dim), dtype=complex)
        for i, j, c in self.gram.entries():
            dense[i, j] = embed(c)
        return dense

    def signature(self) -> Signature:
        """Inertia of the Hermitian matrix under the complex embedding."""
        if not self.is_hermitian():
            raise QuantumGroupError("signature requested for a non-Hermitian form")
        eigenvalues = np.linalg.eigvalsh(self.numeric())
        return Signature(
            positive=int(np.sum(eigenvalues > TOLERANCE)),
            negative=int(np.sum(eigenvalues < -TOLERANCE)),
            null=int(np.sum(np.abs(eigenvalues) <= TOLERANCE)),
        )

    def nonzero_entries(self) -> Dict[Tuple[str, str], str]:
        return {(self.basis[i], self.basis[j]): str(c) for i, j, c in self.gram.entries()}

    def to_json(self) -> Dict:
        return {
            "basis": self.basis,
            "gram": self.gram.to_strings(),
            "rank": self.rank(),
            "hermitian": self.is_hermitian(),
        }


def _invariance_solutions(N: int, n: int, conditions: Sequence[Tuple[CycMatrix, CycMatrix]]) -> List[CycMatrix]:
    """
    All G with A^† G = G B for every (A, B) in conditions.

    The unknown G[i][j] sits in column i·n + j.
    """
    equations = []
    for A, B in conditions:
        a_columns = A.columns()
        b_columns = B.columns()
        for a in range(n):
            for b in range(n):
                # (A^† G)[a, b] - (G B)[a, b]
                row: Dict[int, CycScalar] = {}
                for i, c in a_columns[a].items():
                    key = i * n + b
                    row[key] = row.get(key, CycScalar.zero(N)) + c.conjugate()
                for j, c in b_columns[b].items():
                    key = a * n + j
                    row[key] = row.get(key, CycScalar.zero(N)) - c
                row = {k: c for k, c in row.items() if c}
                if row:
                    equations.append(row)
    solutions = nullspace(equations, n * n, N)
    logger.debug("invariance system: %d equations, %d unknowns, %d solutions", len(equations), n * n, len(solutions))
    return [CycMatrix(N, n, n, [{k % n: c for k, c in s.items() if k // n == i} for i in range(n)]) for s in solutions]


def _module_conditions(rep: Representation) -> List[Tuple[CycMatrix, CycMatrix]]:
    conditions = []
    for name in ("K", "Xp", "Xm"):
        h = h_generator(rep.N, name)
        conditions.append((rep.matrix(h), rep.matrix(star_H(h))))
    return conditions


def _left_multiplication(N: int, g: PlaneElement) -> CycMatrix:
    columns = [(g * z).to_vector() for z in plane_basis(N)]
    return CycMatrix.from_columns(N, N * N, columns)


def volume_normalization(N: int) -> Tuple[Tuple[int, int], CycScalar]:
    """The monomial m = x^k y^k, k = (N-1)/2, with (m, m) = 1, and φ0 = (1, x^{N-1} y^{N-1}) = q^{2k²}."""
    k = (N - 1) // 2
    return (k, k), CycScalar.q_power(N, 2 * k * k)


def invariant_form_on_M(N: int = 3) -> SesquilinearForm:
    """
    The unique invariant scalar product on the quantum plane.

    Raises:
        SolutionSpaceError: if the invariance system does not have a one-dimensional solution space
    """
    N = check_root(N)
    rep = action_representation(N)
    conditions = _module_conditions(rep)
    for name in ("x", "y"):
        g = plane_monomial(N, 1, 0) if name == "x" else plane_monomial(N, 0, 1)
        L = _left_multiplication(N, g)
        conditions.append((L, _left_multiplication(N, star_M(g))))
    solutions = _invariance_solutions(N, N * N, conditions)
    if len(solutions) != 1:
        raise SolutionSpaceError("invariant scalar product on M is not unique", len(solutions))
    gram = solutions[0]
    M = plane_algebra(N)
    m, _ = volume_normalization(N)
    diagonal = gram[M.index(m), M.index(m)]
    if not diagonal:
        raise SolutionSpaceError("invariant scalar product vanishes on the normalizing monomial", 1)
    gram = gram.scale(diagonal.inverse())
    return SesquilinearForm(gram, [str(z) for z in plane_basis(N)])


def scalar_product(form: SesquilinearForm, z: PlaneElement, w: PlaneElement) -> CycScalar:
    return form(z.to_vector(), w.to_vector())


def closed_form_scalar_product(z: PlaneElement, w: PlaneElement) -> CycScalar:
    """φ0 times the coefficient of x^{N-1} y^{N-1} in z* w."""
    N = z.N
    _, phi0 = volume_normalization(N)
    return phi0 * (star_M(z) * w).coefficient((N - 1, N - 1))


# ------------------------------------------------------------------ checks

def check_invariant_form_on_M(N: int = 3, rng: Optional[random.Random] = None, samples: int = 10) -> CheckReport:
    """
    Invariance of the scalar product on M.

    Exact matrix identities ρ(h)^† G = G ρ(h*) and sum ρ((S h1)*)^† G ρ(h2) = ε(h) G
    for h = K, X+, X-; hermiticity; the closed form; and the coaction conditions
    (Δ_R z, Δ_R w) = (z, w) 1 and (z, Δ_R w) = ((1⊗S) Δ_R z, w) on monomial pairs
    (all pairs at N = 3, sampled otherwise).
    """
    N = check_root(N)
    rng = rng or random.Random(0)
    form = invariant_form_on_M(N)
    G = form.gram
    rep = action_representation(N)
    builder = ReportBuilder("invariant-form", N)
    builder.expect("hermitian", form.is_hermitian())
    for name in ("K", "Xp", "Xm"):
        h = h_generator(N, name)
        builder.expect_equal(f"({name} z, w) = (z, {name}* w)", rep.matrix(h).conj_transpose() @ G, G @ rep.matrix(star_H(h)))
        total = CycMatrix.zeros(N, rep.dim)
        H = h.algebra
        for (m1, m2), c in h_coproduct(h).terms.items():
            left = rep.matrix(star_H(h_antipode(H.monomial(m1))))
            total = total + (left.conj_transpose() @ G @ rep.monomial_matrix(m2)).scale(c)
        builder.expect_equal(f"((S {name}1)* z, {name}2 w) = ε({name})(z, w)", total, G.scale(h_counit(h)))

    basis = plane_basis(N)
    pairs = [(z, w) for z in basis for w in basis]
    if N > 3:
        pairs = rng.sample(pairs, min(samples, len(pairs)))
    for z, w in pairs:
        value = scalar_product(form, z, w)
        if not builder.expect_equal(f"closed form of ({z}, {w})", value, closed_form_scalar_product(z, w)):
            break
        if not builder.expect_equal(f"(Δ_R {z}, Δ_R {w}) = ({z}, {w}) 1", coaction_scalar_product(form, z, w), _f_scalar(N, value)):
            break
        lhs, rhs = coaction_adjoint_sides(form, z, w)
        if not builder.expect_equal(f"({z}, Δ_R {w}) = ((1⊗S)Δ_R {z}, {w})", lhs, rhs):
            break
    return builder.done(normalized_on=str(plane_monomial(N, *volume_normalization(N)[0])))


def _f_scalar(N: int, value: CycScalar):
    F = f_algebra(N)
    return F.monomial(F.unit(), value) if value else F.zero()


def coaction_scalar_product(form: SesquilinearForm, z: PlaneElement, w: PlaneElement):
    """sum (z_i, w_j) T_i* U_j for Δ_R z = z_i ⊗ T_i, Δ_R w = w_j ⊗ U_j, an element of F."""
    N = z.N
    F = f_algebra(N)
    M = plane_algebra(N)
    total = F.zero()
    left = coact_right(z).terms.items()
    right = coact_right(w).terms.items()
    for (zi, ti), c in left:
        t_star = star_F(F.monomial(ti, c))
        for (wj, uj), d in right:
            value = form.gram[M.index(zi), M.index(wj)]
            if value:
                total = total + (t_star * F.monomial(uj, d)).scale(value)
    return total


def coaction_adjoint_sides(form: SesquilinearForm, z: PlaneElement, w: PlaneElement):
    """Both sides of (z, Δ_R w) = ((1⊗S) Δ_R z, w), as elements of F."""
    N = z.N
    F = f_algebra(N)
    M = plane_algebra(N)
    lhs = F.zero()
    for (wj, uj), d in coact_right(w).terms.items():
        value = scalar_product(form, z, M.monomial(wj))
        if value:
            lhs = lhs + F.monomial(uj, d * value)
    rhs = F.zero()
    for (zi, ti), c in coact_right(z).terms.items():
        value = scalar_product(form, M.monomial(zi), w)
        if value:
            rhs = rhs + star_F(f_antipode(F.monomial(ti, c))).scale(value)
    return lhs, rhs


# ------------------------------------------------------------ module metrics

class MetricReport(BaseModel):
    module: str
    dimension: int
    solution_dimension: int
    rank: int
    degenerate: bool
    signature: Signature
    hermitian: bool

    @property
    def indefinite(self) -> bool:
        return self.signature.indefinite


def _hermitian_candidates(N: int, solutions: Sequence[CycMatrix]) -> List[CycMatrix]:
    """A spanning set over the reals of the Hermitian solutions."""
    imaginary = CycScalar.q_power(N) - CycScalar.q_power(N, -1)
    candidates = []
    for B in solutions:
        adjoint = B.conj_transpose()
        for candidate in (B + adjoint, (B - adjoint).scale(imaginary)):
            if not candidate.is_zero():
                candidates.append(candidate)
    return candidates


def invariant_metric(rep: Representation, rng: Optional[random.Random] = None, tries: int = 4) -> Tuple[SesquilinearForm, int]:
    """
    A Hermitian invariant metric of maximal rank found among integer combinations.

    Returns:
        (form, dimension of the complex solution space of the invariance system)

    Raises:
        SolutionSpaceError: if the module carries no nonzero Hermitian invariant form
    """
    N = rep.N
    rng = rng or random.Random(0)
    solutions = _invariance_solutions(N, rep.dim, _module_conditions(rep))
    candidates = _hermitian_candidates(N, solutions)
    if not candidates:
        raise SolutionSpaceError(f"no Hermitian invariant form on {rep.name}", len(solutions))
    best: Optional[CycMatrix] = None
    best_rank = -1
    weightings = [list(range(1, len(candidates) + 1))]
    weightings += [[rng.randint(-9, 9) for _ in candidates] for _ in range(tries)]
    for weights in weightings:
        gram = CycMatrix.zeros(N, rep.dim)
        for weight, candidate in zip(weights, candidates):
            if weight:
                gram = gram + candidate.scale(weight)
        rank = gram.rank()
        if rank > best_rank:
            best, best_rank = gram, rank
        if best_rank == rep.dim:
            break
    return SesquilinearForm(best, [f"v{i}" for i in range(rep.dim)]), len(solutions)


def _metric_report(name: str, form: SesquilinearForm, solution_dimension: int) -> MetricReport:
    rank = form.rank()
    return MetricReport(
        module=name,
        dimension=form.dim,
        solution_dimension=solution_dimension,
        rank=rank,
        degenerate=rank < form.dim,
        signature=form.signature(),
        hermitian=form.is_hermitian(),
    )


SUBMODULES = ("radical", "socle", "intermediate")


def invariant_form_on_rep(
    module: Union[str, Representation], N: int = 3, submodule: Optional[str] = None
) -> Tuple[SesquilinearForm, MetricReport]:
    """
    Invariant metric on a module, or its restriction to a submodule.

    Args:
        module: Catalog label or a Representation
        N: Order of q, used with a label
        submodule: None, "radical", "socle" or "intermediate" (the last for projective
                   indecomposables only); the metric of the module is restricted to it

    Returns:
        (form, report) with exact rank and the numerical signature
    """
    rep = get_module(module, N) if isinstance(module, str) else module
    form, solution_dimension = invariant_metric(rep)
    name = rep.name
    if submodule is not None:
        if submodule not in SUBMODULES:
            raise ValueError(f"unknown submodule {submodule!r}; expected one of {', '.join(SUBMODULES)}")
        if submodule == "radical":
            vectors = module_radical(rep)
        elif submodule == "socle":
            vectors = socle(rep)
        else:
            vectors = submodule_chain(rep).intermediate
        form = form.restrict(vectors)
        name = f"{submodule}({name})"
    report = _metric_report(name, form, solution_dimension)
    logger.debug("metric on %s: rank %d of %d", name, report.rank, report.dimension)
    return form, report
