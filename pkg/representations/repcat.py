"""
Finite-dimensional H-modules given by matrices, and the catalog of indecomposables.

For 1 <= n <= N the simple module L_n has basis v_0 .. v_{n-1} with
K v_j = q^{n-1-2j} v_j, X- v_j = v_{j+1}, X+ v_j = c_j v_{j-1}. L_N is the
N-dimensional irreducible projective. The baby Verma module Z_n (dim N) uses
the same formulas on v_0 .. v_{N-1}; its submodule v_n .. v_{N-1} is L_{N-n}.
The projective cover P_n (dim 2N) glues Z_{N-n} under Z_n. The graded pieces
of the quantum plane add one more N-dimensional indecomposable N_p for each
1 <= p < N, with a unique proper submodule of dimension p.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.cyclo import CycScalar, check_root, qnumber
from algebra.errors import NotProjectiveError, QuantumGroupError
from algebra.hopf import HElement
from algebra.linalg import CoordinateSystem, CycMatrix, EchelonBasis, Vector, nullspace
from algebra.reports import CheckReport, ReportBuilder

logger = logging.getLogger(__name__)

GENERATORS = ("K", "Xp", "Xm")


class Representation:
    """Matrices of K, X+ and X- on a finite-dimensional H-module."""

    def __init__(self, N: int, K: CycMatrix, Xp: CycMatrix, Xm: CycMatrix, label: Optional[str] = None, check: bool = True):
        self.N = check_root(N)
        self.K = K
        self.Xp = Xp
        self.Xm = Xm
        self.label = label
        self._powers: Dict[Tuple[str, int], CycMatrix] = {}
        if check:
            report = self.check_relations()
            if not report.passed:
                raise QuantumGroupError(f"matrices do not define an H-module: {report.message}")

    @property
    def dim(self) -> int:
        return self.K.nrows

    @property
    def name(self) -> str:
        return self.label or f"<{self.dim}-dim module>"

    def generator_matrices(self) -> Dict[str, CycMatrix]:
        return {"K": self.K, "Xp": self.Xp, "Xm": self.Xm}

    def _power(self, name: str, exponent: int) -> CycMatrix:
        key = (name, exponent)
        if key not in self._powers:
            if exponent == 0:
                self._powers[key] = CycMatrix.identity(self.N, self.dim)
            else:
                self._powers[key] = self._power(name, exponent - 1) @ self.generator_matrices()[name]
        return self._powers[key]

    def monomial_matrix(self, monomial: Tuple[int, int, int]) -> CycMatrix:
        i, j, k = monomial
        return self._power("Xm", i) @ self._power("K", j) @ self._power("Xp", k)

    def matrix(self, h: HElement) -> CycMatrix:
        """
        The matrix of an element of H.

        Args:
            h: Element of H over the same N

        Returns:
            sum c rho(X-)^i rho(K)^j rho(X+)^k over the terms of h
        """
        total = CycMatrix.zeros(self.N, self.dim)
        for monomial, c in h.terms.items():
            total = total + self.monomial_matrix(monomial).scale(c)
        return total

    def k_inverse(self) -> CycMatrix:
        return self._power("K", self.N - 1)

    def check_relations(self) -> CheckReport:
        N = self.N
        q = CycScalar.q_power(N)
        builder = ReportBuilder(f"relations:{self.name}", N)
        K, Xp, Xm = self.K, self.Xp, self.Xm
        identity = CycMatrix.identity(N, self.dim)
        zero = CycMatrix.zeros(N, self.dim)
        k_inverse = K.power(N - 1)
        builder.expect_equal("K X+ = q^2 X+ K", K @ Xp, (Xp @ K).scale(q ** 2))
        builder.expect_equal("K X- = q^-2 X- K", K @ Xm, (Xm @ K).scale(q ** -2))
        builder.expect_equal(
            "(q - q^-1)[X+, X-] = K - K^-1", (Xp @ Xm - Xm @ Xp).scale(q - q ** -1), K - k_inverse
        )
        builder.expect_equal("K^N = 1", K.power(N), identity)
        builder.expect_equal("X+^N = 0", Xp.power(N), zero)
        builder.expect_equal("X-^N = 0", Xm.power(N), zero)
        return builder.done()

    # ---------------------------------------------------------------- subspaces
    def is_invariant(self, basis: Sequence[Vector]) -> bool:
        echelon = EchelonBasis(self.N)
        echelon.extend(basis)
        return all(echelon.contains(g.apply(v)) for g in self.generator_matrices().values() for v in basis)

    def submodule_generated(self, vectors: Sequence[Vector]) -> List[Vector]:
        """Echelon basis of the smallest invariant subspace containing the vectors."""
        echelon = EchelonBasis(self.N)
        queue = [v for v in vectors if v]
        matrices = list(self.generator_matrices().values())
        while queue:
            v = queue.pop()
            if echelon.add(v):
                queue.extend(g.apply(v) for g in matrices)
        return echelon.basis()

    def restrict(self, basis: Sequence[Vector], label: Optional[str] = None) -> "Representation":
        """The module structure on an invariant subspace, in the given basis."""
        coordinates = CoordinateSystem(self.N, basis, self.dim)
        images = {}
        for name, g in self.generator_matrices().items():
            images[name] = CycMatrix.from_columns(self.N, len(basis), [coordinates.coordinates(g.apply(v)) for v in basis])
        return Representation(self.N, images["K"], images["Xp"], images["Xm"], label=label, check=False)

    def quotient(self, basis: Sequence[Vector], label: Optional[str] = None) -> Tuple["Representation", List[int]]:
        """
        The quotient module by an invariant subspace.

        Args:
            basis: Basis of an invariant subspace
            label: Label of the result

        Returns:
            The quotient module and the ambient coordinates used as its basis
            (the non-pivot columns of the subspace in reduced echelon form)
        """
        echelon = EchelonBasis(self.N)
        echelon.extend(basis)
        kept = [i for i in range(self.dim) if i not in echelon.rows]
        position = {i: k for k, i in enumerate(kept)}
        one = CycScalar.one(self.N)
        images = {}
        for name, g in self.generator_matrices().items():
            columns = []
            for i in kept:
                residue = echelon.reduce(g.apply({i: one}))
                columns.append({position[k]: c for k, c in residue.items()})
            images[name] = CycMatrix.from_columns(self.N, len(kept), columns)
        return Representation(self.N, images["K"], images["Xp"], images["Xm"], label=label, check=False), kept

    def weight_space(self, exponent: int) -> List[Vector]:
        """Eigenvectors of K for the eigenvalue q^exponent."""
        shifted = self.K - CycMatrix.identity(self.N, self.dim).scale(CycScalar.q_power(self.N, exponent))
        return shifted.nullspace()

    def k_spectrum(self) -> Dict[int, int]:
        """Multiplicity of each eigenvalue q^w of K, keyed by w mod N."""
        if self.K.is_diagonal():
            spectrum: Dict[int, int] = {}
            for i in range(self.dim):
                w = _q_exponent(self.K[i, i])
                spectrum[w] = spectrum.get(w, 0) + 1
            return spectrum
        spectrum = {}
        for w in range(self.N):
            size = len(self.weight_space(w))
            if size:
                spectrum[w] = size
        return spectrum

    def is_weight_basis(self) -> bool:
        return self.K.is_diagonal()

    def summary(self) -> Dict:
        return {
            "label": self.label,
            "N": self.N,
            "dim": self.dim,
            "k_spectrum": {f"q^{w}": m for w, m in sorted(self.k_spectrum().items())},
        }

    def __repr__(self) -> str:
        return f"Representation({self.name}, N={self.N}, dim={self.dim})"


@lru_cache(maxsize=None)
def _q_exponents(N: int) -> Dict[CycScalar, int]:
    return {CycScalar.q_power(N, w): w for w in range(N)}


def _q_exponent(value: CycScalar) -> int:
    exponent = _q_exponents(value.N).get(value)
    if exponent is None:
        raise QuantumGroupError(f"{value} is not a power of q")
    return exponent


# ------------------------------------------------------------------- builders

def _ladder_coefficients(N: int, n: int, size: int) -> List[CycScalar]:
    """c_j = sum_{i<j} [n-1-2i], the X+ coefficients of a highest weight ladder."""
    coefficients = [CycScalar.zero(N)]
    for j in range(1, size):
        coefficients.append(coefficients[-1] + qnumber(N, n - 1 - 2 * j + 2))
    return coefficients


def _ladder(N: int, n: int, size: int, offset: int = 0, total: Optional[int] = None):
    """Rows of K, X+, X- for a ladder of highest weight q^{n-1} placed at an offset."""
    total = total or size
    one = CycScalar.one(N)
    c = _ladder_coefficients(N, n, size)
    K = [{} for _ in range(total)]
    Xp = [{} for _ in range(total)]
    Xm = [{} for _ in range(total)]
    for j in range(size):
        K[offset + j][offset + j] = CycScalar.q_power(N, n - 1 - 2 * j)
        if j + 1 < size:
            Xm[offset + j + 1][offset + j] = one
        if j >= 1 and c[j]:
            Xp[offset + j - 1][offset + j] = c[j]
    return K, Xp, Xm


def _from_rows(N: int, rows, label: str) -> Representation:
    K, Xp, Xm = (CycMatrix(N, len(r), len(r), r) for r in rows)
    return Representation(N, K, Xp, Xm, label=label)


def module_label(N: int, kind: str, n: int) -> str:
    """
    Catalog name of a module.

    Args:
        N: Order of q
        kind: "simple", "projective", "verma" or "plane"
        n: Highest weight parameter (highest weight q^{n-1}); for "plane" the
           dimension of the invariant subspace

    Returns:
        The N=3 names 1, 2, 3_irr, 6_odd, 6_eve, 3_odd, 3_eve, else n, N_irr, P_n, N_p;
        baby Verma modules are Z_n for every N
    """
    if kind == "simple":
        return f"{N}_irr" if n == N else str(n)
    if kind == "verma":
        return f"Z_{n}"
    if N == 3:
        names = {("projective", 1): "6_odd", ("projective", 2): "6_eve", ("plane", 1): "3_odd", ("plane", 2): "3_eve"}
        return names[(kind, n)]
    return f"P_{n}" if kind == "projective" else f"{N}_{n}"


def simple_module(N: int, n: int) -> Representation:
    if not 1 <= n <= N:
        raise ValueError(f"simple modules have dimension 1..{N}, got {n}")
    return _from_rows(N, _ladder(N, n, n), module_label(N, "simple", n))


def baby_verma_module(N: int, n: int) -> Representation:
    """Z_n, dimension N, highest weight q^{n-1}; reducible for n < N."""
    if not 1 <= n <= N:
        raise ValueError(f"baby Verma modules are indexed by 1..{N}, got {n}")
    label = module_label(N, "simple", N) if n == N else module_label(N, "verma", n)
    return _from_rows(N, _ladder(N, n, N), label)


def projective_module(N: int, n: int) -> Representation:
    """
    The projective cover P_n of L_n, 1 <= n < N.

    Basis v_0..v_{N-1} (a copy of Z_n) followed by w_0..w_{N-1} (a copy of Z_s, s = N - n);
    X+ v_j picks up an extra w_{j+s-1} for j <= n.
    """
    if not 1 <= n < N:
        raise ValueError(f"non-simple projectives are indexed by 1..{N - 1}, got {n}")
    s = N - n
    K, Xp, Xm = _ladder(N, n, N, 0, 2 * N)
    K2, Xp2, Xm2 = _ladder(N, s, N, N, 2 * N)
    for rows, extra in ((K, K2), (Xp, Xp2), (Xm, Xm2)):
        for i in range(N, 2 * N):
            rows[i] = extra[i]
    one = CycScalar.one(N)
    for j in range(n + 1):
        Xp[N + j + s - 1][j] = one
    return _from_rows(N, (K, Xp, Xm), module_label(N, "projective", n))


def trivial_module(N: int) -> Representation:
    return simple_module(N, 1)


@lru_cache(maxsize=None)
def catalog(N: int) -> Tuple[Representation, ...]:
    """
    The N-dimensional irreducible projective, the projectives P_{N-p}, P_p and their simple tops.

    Ordered N_irr, then P_{N-p}, P_p for p = 1 .. (N-1)/2, then L_{N-p}, L_p.
    """
    check_root(N)
    modules = [simple_module(N, N)]
    half = (N - 1) // 2
    for p in range(1, half + 1):
        modules.extend([projective_module(N, N - p), projective_module(N, p)])
    for p in range(1, half + 1):
        modules.extend([simple_module(N, N - p), simple_module(N, p)])
    logger.debug("catalog for N=%d: %s", N, [m.label for m in modules])
    return tuple(modules)


@lru_cache(maxsize=None)
def module_catalog(N: int) -> Tuple[Representation, ...]:
    """The catalog plus the reducible summands of the quantum plane and the baby Verma modules, used for matching."""
    from representations.action import plane_summand

    plane = tuple(plane_summand(N, p) for p in range(1, N))
    return catalog(N) + plane + tuple(baby_verma_module(N, n) for n in range(1, N))


def _alias(label: str) -> str:
    return label.replace("_", "").replace(" ", "").lower()


def get_module(label: str, N: int = 3) -> Representation:
    """Look up a catalog module by label; underscores are optional (3irr, 6odd, P1)."""
    wanted = _alias(label)
    for module in module_catalog(N):
        if _alias(module.label) == wanted:
            return module
    known = ", ".join(m.label for m in module_catalog(N))
    raise QuantumGroupError(f"unknown module {label!r} for N={N}; known: {known}")


# ------------------------------------------------------------------ structure

def dual_rep(rep: Representation) -> Representation:
    """rho*(h) = rho(S h)^T with S K = K^-1, S X+ = -K^-1 X+, S X- = -X- K."""
    k_inverse = rep.k_inverse()
    K = k_inverse.transpose()
    Xp = (-(k_inverse @ rep.Xp)).transpose()
    Xm = (-(rep.Xm @ rep.K)).transpose()
    label = f"{rep.label}*" if rep.label else None
    return Representation(rep.N, K, Xp, Xm, label=label, check=False)


def highest_weight_vectors(rep: Representation, n: int) -> List[Vector]:
    """Vectors v with K v = q^{n-1} v, X+ v = 0 and X-^n v = 0."""
    N = rep.N
    candidates = rep.weight_space(n - 1)
    if not candidates:
        return []
    lowering = rep.Xm.power(n)
    equations: Dict[Tuple[int, int], Dict[int, CycScalar]] = {}
    for index, v in enumerate(candidates):
        for tag, image in (("p", rep.Xp.apply(v)), ("m", lowering.apply(v))):
            for row, c in image.items():
                equations.setdefault((tag, row), {})[index] = c
    solutions = nullspace(equations.values(), len(candidates), N)
    vectors = []
    for solution in solutions:
        combined: Vector = {}
        for index, c in solution.items():
            for k, value in candidates[index].items():
                total = combined.get(k)
                combined[k] = c * value if total is None else total + c * value
        vectors.append({k: v for k, v in combined.items() if v})
    return vectors


def socle(rep: Representation) -> List[Vector]:
    """Sum of the simple submodules, each generated by a highest weight vector."""
    generators = []
    for n in range(1, rep.N + 1):
        for v in highest_weight_vectors(rep, n):
            vector = v
            for _ in range(n):
                generators.append(vector)
                vector = rep.Xm.apply(vector)
    echelon = EchelonBasis(rep.N)
    echelon.extend(generators)
    return echelon.basis()


def module_radical(rep: Representation) -> List[Vector]:
    """Intersection of the maximal submodules, as the annihilator of the socle of the dual."""
    return nullspace(socle(dual_rep(rep)), rep.dim, rep.N)


class SubmoduleChain:
    """socle ⊂ intermediate(λ) ⊂ radical inside a 2N-dimensional projective."""

    def __init__(self, rep: Representation, socle: List[Vector], intermediate: List[Vector], radical: List[Vector], parameter: CycScalar):
        self.rep = rep
        self.socle = socle
        self.intermediate = intermediate
        self.radical = radical
        self.parameter = parameter

    @property
    def dims(self) -> Tuple[int, int, int]:
        return len(self.socle), len(self.intermediate), len(self.radical)

    def verify(self) -> CheckReport:
        builder = ReportBuilder(f"submodule-chain:{self.rep.name}", self.rep.N)
        for name, basis in (("socle", self.socle), ("intermediate", self.intermediate), ("radical", self.radical)):
            builder.expect(f"{name} is invariant", self.rep.is_invariant(basis))
        inner = EchelonBasis(self.rep.N)
        inner.extend(self.intermediate)
        outer = EchelonBasis(self.rep.N)
        outer.extend(self.radical)
        builder.expect("socle ⊂ intermediate", all(inner.contains(v) for v in self.socle))
        builder.expect("intermediate ⊂ radical", all(outer.contains(v) for v in self.intermediate))
        builder.expect_equal("dim intermediate", len(self.intermediate), self.rep.N)
        return builder.done(dims=list(self.dims))

    def summary(self) -> Dict:
        socle_dim, intermediate_dim, radical_dim = self.dims
        return {
            "module": self.rep.label,
            "lambda": str(self.parameter),
            "socle": socle_dim,
            "intermediate": intermediate_dim,
            "radical": radical_dim,
        }


def submodule_chain(pim: Representation, parameter=0) -> SubmoduleChain:
    """
    Submodules of a projective P_n: the socle L_n, an intermediate submodule of
    dimension N depending on a parameter λ, and the radical of dimension 2N - n.

    Args:
        pim: A 2N-dimensional projective indecomposable module
        parameter: The scalar λ selecting the intermediate submodule

    Returns:
        SubmoduleChain with verified invariant subspaces
    """
    N = pim.N
    parameter = CycScalar.coerce(N, parameter)
    if pim.dim != 2 * N:
        raise NotProjectiveError(f"{pim.name} has dimension {pim.dim}, expected {2 * N}")
    radical = module_radical(pim)
    n = pim.dim - len(radical)
    if not 1 <= n < N:
        raise NotProjectiveError(f"{pim.name} has a top of dimension {n}")
    s = N - n
    soc = socle(pim)

    # highest weight vectors of weight q^{s-1} in rad/soc
    candidates = pim.weight_space(s - 1)
    radical_test = nullspace(radical, pim.dim, N)
    socle_test = nullspace(soc, pim.dim, N)
    equations = []
    for functional in radical_test:
        equations.append({i: _dot(functional, v) for i, v in enumerate(candidates)})
    raised = [pim.Xp.apply(v) for v in candidates]
    for functional in socle_test:
        equations.append({i: _dot(functional, v) for i, v in enumerate(raised)})
    solutions = nullspace([{k: c for k, c in row.items() if c} for row in equations], len(candidates), N)
    if len(solutions) != 2:
        raise NotProjectiveError(
            f"{pim.name}: expected a 2-dimensional space of weight q^{s - 1} in rad/soc, found {len(solutions)}"
        )
    u1, u2 = (_combine(candidates, solution) for solution in solutions)
    mixed = dict(u1)
    for k, c in u2.items():
        total = mixed.get(k)
        mixed[k] = c * parameter if total is None else total + c * parameter
    mixed = {k: c for k, c in mixed.items() if c}
    intermediate = pim.submodule_generated(list(soc) + [mixed])
    logger.debug("chain of %s: socle %d, intermediate %d, radical %d", pim.name, len(soc), len(intermediate), len(radical))
    return SubmoduleChain(pim, soc, intermediate, radical, parameter)


def _dot(functional: Vector, vector: Vector) -> CycScalar:
    total = None
    for k, c in functional.items():
        v = vector.get(k)
        if v is not None:
            total = c * v if total is None else total + c * v
    return total if total is not None else CycScalar.zero(next(iter(functional.values())).N)


def _combine(vectors: Sequence[Vector], coefficients: Vector) -> Vector:
    out: Vector = {}
    for index, c in coefficients.items():
        for k, value in vectors[index].items():
            total = out.get(k)
            out[k] = c * value if total is None else total + c * value
    return {k: v for k, v in out.items() if v}


# ------------------------------------------------------------- q-trace, tensors

def qtrace(rep: Representation, h: HElement) -> CycScalar:
    """Tr_q(h) = Tr(K h) on the module."""
    return (rep.K @ rep.matrix(h)).trace()


def qdim(rep: Representation) -> CycScalar:
    return rep.K.trace()


def tensor_rep(A: Representation, B: Representation) -> Representation:
    """
    The tensor product module, acting through the coproduct of H.

    Args:
        A: First factor
        B: Second factor

    Returns:
        Representation with K ↦ K⊗K, X+ ↦ X+⊗1 + K⊗X+, X- ↦ X-⊗K^-1 + 1⊗X-
    """
    if A.N != B.N:
        raise QuantumGroupError(f"cannot tensor modules over N={A.N} and N={B.N}")
    N = A.N
    id_a = CycMatrix.identity(N, A.dim)
    id_b = CycMatrix.identity(N, B.dim)
    K = A.K.kron(B.K)
    Xp = A.Xp.kron(id_b) + A.K.kron(B.Xp)
    Xm = A.Xm.kron(B.k_inverse()) + id_a.kron(B.Xm)
    label = f"{A.label}⊗{B.label}" if A.label and B.label else None
    return Representation(N, K, Xp, Xm, label=label)
