"""
F coacts on the reduced quantum plane M and H acts on it by duality.

Δ_L x = a⊗x + b⊗y, Δ_L y = c⊗x + d⊗y and Δ_R x = x⊗a + y⊗c, Δ_R y = x⊗b + y⊗d,
both extended multiplicatively. The left action X^L[z] = (id⊗<X,·>) Δ_R z has
the closed form

    K^L  x^r y^s = q^{r-s} x^r y^s
    X+^L x^r y^s = q^r [s] x^{r+1} y^{s-1}
    X-^L x^r y^s = q^s [r] x^{r-1} y^{s+1}

with [s] = (1 - q^{-2s}) / (1 - q^{-2}) and exponents taken mod N.
"""
import logging
import random
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from algebra.cyclo import CycScalar, check_root
from algebra.elements import TensorElement
from algebra.errors import FieldMismatchError, QuantumGroupError
from algebra.hopf import (
    HElement,
    f_algebra,
    f_coproduct,
    f_generator,
    f_monomial,
    h_antipode,
    h_coproduct,
    h_algebra,
    h_generator,
    h_mul,
    pairing,
    star_F,
    star_H,
    tensor_star,
)
from algebra.linalg import CycMatrix
from algebra.qplane import (
    PlaneElement,
    plane_algebra,
    plane_basis,
    plane_element,
    plane_from_vector,
    plane_generator,
    plane_inverse,
    plane_monomial,
    star_M,
    to_matrix,
)
from algebra.reports import CheckReport, ReportBuilder, combine_reports
from representations.decomposition import identify, is_indecomposable
from representations.repcat import Representation, module_label, socle

logger = logging.getLogger(__name__)

PlaneMonomial = Tuple[int, int]


# ------------------------------------------------------------------ coactions

@lru_cache(maxsize=None)
def _generator_coactions(N: int, side: str) -> Dict[str, TensorElement]:
    a, b, c, d = (f_generator(N, name) for name in "abcd")
    x, y = plane_generator(N, "x"), plane_generator(N, "y")
    if side == "left":
        return {
            "x": TensorElement.pure([a, x]) + TensorElement.pure([b, y]),
            "y": TensorElement.pure([c, x]) + TensorElement.pure([d, y]),
        }
    return {
        "x": TensorElement.pure([x, a]) + TensorElement.pure([y, c]),
        "y": TensorElement.pure([x, b]) + TensorElement.pure([y, d]),
    }


@lru_cache(maxsize=None)
def _coact_monomial(N: int, side: str, monomial: PlaneMonomial) -> TensorElement:
    generators = _generator_coactions(N, side)
    r, s = monomial
    return (generators["x"] ** r) * (generators["y"] ** s)


def _coact(z: PlaneElement, side: str) -> TensorElement:
    N = z.N
    F, M = f_algebra(N), plane_algebra(N)
    total = TensorElement([F, M] if side == "left" else [M, F])
    for monomial, c in z.terms.items():
        total = total + _coact_monomial(N, side, monomial).scale(c)
    return total


def coact_left(z: PlaneElement) -> TensorElement:
    """Δ_L z in F⊗M."""
    return _coact(z, "left")


def coact_right(z: PlaneElement) -> TensorElement:
    """Δ_R z in M⊗F."""
    return _coact(z, "right")


def check_coaction(N: int = 3) -> CheckReport:
    """
    Comodule-algebra laws for both coactions.

    Checks the counit law, Δ(1) = 1⊗1, multiplicativity Δ(zw) = Δ(z)Δ(w) on all
    monomial pairs and the coassociativity (Δ_F⊗id)Δ_L = (id⊗Δ_L)Δ_L on monomials.
    """
    N = check_root(N)
    builder = ReportBuilder("coaction", N)
    F, M = f_algebra(N), plane_algebra(N)
    one = plane_element(N, {(0, 0): 1})
    basis = plane_basis(N)
    for side, coact in (("left", coact_left), ("right", coact_right)):
        unit = TensorElement.one([F, M] if side == "left" else [M, F])
        builder.expect_equal(f"Δ_{side}(1) = 1⊗1", coact(one), unit)
        for z in basis:
            delta = coact(z)
            recovered = plane_element(N)
            for key, c in delta.terms.items():
                f, m = (key[0], key[1]) if side == "left" else (key[1], key[0])
                if f[1] == 0 and f[2] == 0:
                    recovered = recovered + plane_element(N, {m: c})
            builder.expect_equal(f"counit law for Δ_{side}({z})", recovered, z)
        for z in basis:
            for w in basis:
                if not builder.expect_equal(f"Δ_{side}({z}·{w})", coact(z * w), coact(z) * coact(w)):
                    break
        if builder.failed:
            break
    one_scalar = CycScalar.one(N)

    def identity(m):
        return [((m,), one_scalar)]

    for z in basis:
        delta = coact_left(z)
        outer = delta.map_legs([lambda m: f_coproduct(F.monomial(m)).terms.items(), identity], [F, F, M])
        inner = delta.map_legs([identity, lambda m: coact_left(M.monomial(m)).terms.items()], [F, F, M])
        if not builder.expect_equal(f"coassociativity of Δ_L on {z}", outer, inner):
            break
    logger.debug("coaction laws checked on %d monomial pairs", len(basis) ** 2)
    return builder.done()


# --------------------------------------------------------------------- action

def _bracket(N: int, s: int) -> CycScalar:
    """(1 - q^{-2s}) / (1 - q^{-2}) = sum_{t<s} q^{-2t}."""
    total = CycScalar.zero(N)
    for t in range(s % N):
        total = total + CycScalar.q_power(N, -2 * t)
    return total


@lru_cache(maxsize=None)
def action_representation(N: int) -> Representation:
    """
    The N²-dimensional H-module M in the monomial basis x^r y^s (index r·N + s).

    Raises:
        QuantumGroupError: if the closed formulas fail the H relations
    """
    N = check_root(N)
    M = plane_algebra(N)
    size = N * N
    K = CycMatrix(N, size, size)
    Xp = CycMatrix(N, size, size)
    Xm = CycMatrix(N, size, size)
    for r, s in M.basis():
        source = M.index((r, s))
        K.rows[source][source] = CycScalar.q_power(N, r - s)
        if s:
            Xp.rows[M.index(((r + 1) % N, s - 1))][source] = CycScalar.q_power(N, r) * _bracket(N, s)
        if r:
            Xm.rows[M.index((r - 1, (s + 1) % N))][source] = CycScalar.q_power(N, s) * _bracket(N, r)
    rep = Representation(N, K, Xp, Xm, label="M")
    logger.debug("built the action of H on M for N=%d", N)
    return rep


def act(h: HElement, z: PlaneElement) -> PlaneElement:
    """
    The left action h[z].

    Args:
        h: Element of H
        z: Element of the quantum plane over the same N

    Returns:
        h[z], computed with the generator matrices of the action
    """
    if h.N != z.N:
        raise FieldMismatchError(f"cannot act with H over N={h.N} on the plane over N={z.N}")
    rep = action_representation(z.N)
    return plane_from_vector(z.N, rep.matrix(h).apply(z.to_vector()))


def act_via_pairing(h: HElement, z: PlaneElement) -> PlaneElement:
    """h[z] = (id⊗<h,·>) Δ_R z."""
    if h.N != z.N:
        raise FieldMismatchError(f"cannot act with H over N={h.N} on the plane over N={z.N}")
    N = z.N
    result = plane_element(N)
    for (m, f), c in coact_right(z).terms.items():
        value = pairing(h, f_monomial(N, *f))
        if value:
            result = result + plane_element(N, {m: c * value})
    return result


def act_right(h: HElement, z: PlaneElement) -> PlaneElement:
    """The right action z◁h = (<h,·>⊗id) Δ_L z."""
    if h.N != z.N:
        raise FieldMismatchError(f"cannot act with H over N={h.N} on the plane over N={z.N}")
    N = z.N
    result = plane_element(N)
    for (f, m), c in coact_left(z).terms.items():
        value = pairing(h, f_monomial(N, *f))
        if value:
            result = result + plane_element(N, {m: c * value})
    return result


MANIN_DUAL = {"dx": (1, 0), "dy": (0, 1)}


def act_on_manin_dual(h: HElement, generator: str) -> Dict[str, CycScalar]:
    """
    Action of H on the Manin dual generators dx, dy.

    dx and dy transform as x and y, which span an invariant two-dimensional subspace.

    Returns:
        Coefficients of dx and dy in h[generator], zero entries omitted
    """
    if generator not in MANIN_DUAL:
        raise ValueError(f"unknown Manin dual generator {generator!r}; expected 'dx' or 'dy'")
    image = act(h, plane_monomial(h.N, *MANIN_DUAL[generator]))
    coefficients = {}
    for name, monomial in MANIN_DUAL.items():
        c = image.coefficient(monomial)
        if c:
            coefficients[name] = c
    if len(coefficients) != len(image):
        raise QuantumGroupError("span{x, y} is not invariant")
    return coefficients


def manin_dual_representation(N: int) -> Representation:
    """The two-dimensional module spanned by dx, dy."""
    rep = action_representation(N)
    M = plane_algebra(N)
    one = CycScalar.one(N)
    return rep.restrict([{M.index(m): one} for m in MANIN_DUAL.values()], label="dx,dy")


def check_module_algebra(N: int = 3, samples: Optional[List[Tuple[HElement, HElement, PlaneElement]]] = None) -> CheckReport:
    """
    M is a left H-module algebra and the action is the dual of Δ_R.

    Args:
        N: Order of q
        samples: Optional triples (u, v, z) for act(uv, z) = act(u, act(v, z))

    Returns:
        Suite report: representation property, pairing agreement, Leibniz rule h[zw] = Σ h1[z] h2[w]
    """
    N = check_root(N)
    rep = action_representation(N)
    generators = {name: h_generator(N, name) for name in ("K", "Xp", "Xm")}
    basis = plane_basis(N)

    pairing_check = ReportBuilder("action:pairing", N)
    for name, h in generators.items():
        for z in basis:
            if not pairing_check.expect_equal(f"{name}^L[{z}] via Δ_R", act(h, z), act_via_pairing(h, z)):
                break

    leibniz = ReportBuilder("action:leibniz", N)
    for name, h in generators.items():
        delta = h_coproduct(h)
        H = h_algebra(N)
        legs = [(H.monomial(k1), H.monomial(k2), c) for (k1, k2), c in delta.terms.items()]
        for z in basis:
            for w in basis:
                rhs = plane_element(N)
                for h1, h2, c in legs:
                    rhs = rhs + (act(h1, z) * act(h2, w)).scale(c)
                if not leibniz.expect_equal(f"{name}^L[{z}·{w}]", act(h, z * w), rhs):
                    break
            if leibniz.failed:
                break

    composition = ReportBuilder("action:composition", N)
    for u, v, z in samples or []:
        composition.expect_equal(f"({u})({v}) on {z}", act(h_mul(u, v), z), act(u, act(v, z)))

    return combine_reports(
        "module-algebra",
        N,
        [rep.check_relations(), pairing_check.done(), leibniz.done(), composition.done()],
    )


def check_right_action(N: int = 3) -> CheckReport:
    """z◁(hg) = (z◁h)◁g on generator pairs."""
    N = check_root(N)
    builder = ReportBuilder("right-action", N)
    names = ("K", "Xp", "Xm")
    for first in names:
        for second in names:
            h, g = h_generator(N, first), h_generator(N, second)
            for z in plane_basis(N):
                builder.expect_equal(f"{z}◁({first}·{second})", act_right(h_mul(h, g), z), act_right(g, act_right(h, z)))
    return builder.done()


# ------------------------------------------------------------- ladder at N=3

# nonzero matrix elements of X±^L at N = 3: source monomial -> target monomial
LADDER_N3: Dict[str, Dict[PlaneMonomial, PlaneMonomial]] = {
    "Xp": {(0, 1): (1, 0), (0, 2): (1, 1), (1, 1): (2, 0), (1, 2): (2, 1), (2, 1): (0, 0), (2, 2): (0, 1)},
    "Xm": {(1, 0): (0, 1), (1, 1): (0, 2), (1, 2): (0, 0), (2, 0): (1, 1), (2, 1): (1, 2), (2, 2): (1, 0)},
}


def ladder(N: int) -> Dict[str, Dict[PlaneMonomial, PlaneMonomial]]:
    """Adjacency of the X±^L ladders read off the action matrices."""
    rep = action_representation(N)
    M = plane_algebra(N)
    adjacency = {}
    for name in ("Xp", "Xm"):
        edges = {}
        for source, column in enumerate(rep.generator_matrices()[name].columns()):
            if len(column) > 1:
                raise QuantumGroupError(f"{name}^L does not map monomials to monomials")
            for target in column:
                edges[M.monomial_at(source)] = M.monomial_at(target)
        adjacency[name] = edges
    return adjacency


def check_ladder_n3() -> CheckReport:
    builder = ReportBuilder("ladder", 3)
    computed = ladder(3)
    for name, edges in LADDER_N3.items():
        builder.expect_equal(f"{name}^L ladder", computed[name], edges)
    return builder.done()


# -------------------------------------------------------------- decomposition

class MSummand(BaseModel):
    """One of the N invariant subspaces V_t = span{x^r y^s : r + s ≡ t} of M."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    degree: int
    dimension: int
    basis: List[str]
    irreducible: bool
    indecomposable: bool
    invariant_subspace_dim: Optional[int]
    label: Optional[str]
    vectors: List[PlaneElement] = Field(default_factory=list, exclude=True)

    @property
    def flags(self) -> List[str]:
        if self.irreducible:
            return ["irreducible"]
        flags = ["reducible"]
        if self.indecomposable:
            flags.append("indecomposable")
        return flags


def _graded_monomials(N: int, t: int) -> List[PlaneMonomial]:
    M = plane_algebra(N)
    return sorted(((r, s) for r, s in M.basis() if (r + s) % N == t), key=lambda m: m[0])


@lru_cache(maxsize=None)
def _graded_piece(N: int, t: int) -> Representation:
    rep = action_representation(N)
    M = plane_algebra(N)
    one = CycScalar.one(N)
    vectors = [{M.index(m): one} for m in _graded_monomials(N, t)]
    if not rep.is_invariant(vectors):
        raise QuantumGroupError(f"degree {t} piece of M is not invariant")
    return rep.restrict(vectors)


@lru_cache(maxsize=None)
def plane_summand(N: int, p: int) -> Representation:
    """
    N_p, the span of the monomials of degree p - 1 mod N, as a catalog module.

    Raises:
        ValueError: unless 1 <= p < N
    """
    N = check_root(N)
    if not 1 <= p < N:
        raise ValueError(f"reducible summands of M are indexed by 1..{N - 1}, got {p}")
    piece = _graded_piece(N, p - 1)
    return Representation(N, piece.K, piece.Xp, piece.Xm, label=module_label(N, "plane", p), check=False)


def decompose_M(N: int = 3) -> List[MSummand]:
    """
    Split M into N indecomposable N-dimensional summands.

    The summands are graded pieces V_t; V_{N-1} is irreducible and V_t for t < N-1
    is N_{t+1}, whose unique proper submodule has dimension t + 1.

    Raises:
        QuantumGroupError: if a graded piece fails to be invariant
    """
    N = check_root(N)
    summands = []
    for t in range(N):
        piece = _graded_piece(N, t)
        bottom = len(socle(piece))
        irreducible = bottom == N
        label = identify(piece)
        elements = [plane_monomial(N, *m) for m in _graded_monomials(N, t)]
        summands.append(
            MSummand(
                degree=t,
                dimension=N,
                basis=[str(e) for e in elements],
                irreducible=irreducible,
                indecomposable=label is not None or is_indecomposable(piece),
                invariant_subspace_dim=None if irreducible else bottom,
                label=label,
                vectors=elements,
            )
        )
    logger.debug("M = %s", " + ".join(s.label or "?" for s in summands))
    return summands


# ------------------------------------------------------------------ stars

def _mixed_star(element):
    return star_M(element) if isinstance(element, PlaneElement) else star_F(element)


def check_star_covariance(N: int = 3) -> CheckReport:
    """
    Compatibility of the stars with the coactions and the action.

    (Δ_{L,R} z)* = Δ_{L,R}(z*) and h[z*] = [(S h)* [z]]* on all monomials, h = K, X+, X-.
    """
    N = check_root(N)
    builder = ReportBuilder("star-covariance", N)
    basis = plane_basis(N)
    for z in basis:
        builder.expect_equal(f"(Δ_R {z})*", tensor_star(coact_right(z), _mixed_star), coact_right(star_M(z)))
        builder.expect_equal(f"(Δ_L {z})*", tensor_star(coact_left(z), _mixed_star), coact_left(star_M(z)))
    for name in ("K", "Xp", "Xm"):
        h = h_generator(N, name)
        twisted = star_H(h_antipode(h))
        for z in basis:
            builder.expect_equal(f"{name}^L[{z}*]", act(h, star_M(z)), star_M(act(twisted, z)))
    return builder.done()


def _coefficient_grid(N: int) -> List[CycScalar]:
    q = CycScalar.q_power(N)
    return [CycScalar.zero(N), CycScalar.one(N), -CycScalar.one(N), q, -q]


def check_inverse_mapping(N: int = 3, rng: Optional[random.Random] = None, samples: int = 20) -> CheckReport:
    """
    Inverses of invertible elements of V_t lie in V_{-t}.

    Every combination with coefficients in {0, ±1, ±q} is tried (N = 3 only),
    plus random integer combinations.
    """
    N = check_root(N)
    rng = rng or random.Random(0)
    builder = ReportBuilder("inverse-mapping", N)
    tried = 0
    for summand in decompose_M(N):
        target = (-summand.degree) % N
        candidates: List[List[CycScalar]] = []
        if N == 3:
            grid = _coefficient_grid(N)
            candidates.extend([a, b, c] for a in grid for b in grid for c in grid)
        for _ in range(samples):
            candidates.append([CycScalar.from_rational(N, rng.randint(-3, 3)) for _ in summand.vectors])
        for coefficients in candidates:
            z = plane_element(N)
            for c, e in zip(coefficients, summand.vectors):
                z = z + e.scale(c)
            if not to_matrix(z).is_invertible():
                continue
            tried += 1
            inverse = plane_inverse(z)
            if not builder.expect(
                f"inverse of {z} in V_{summand.degree}",
                inverse.degree_class <= {target},
                inverse=inverse,
                expected_degree=target,
            ):
                break
    return builder.done(invertible_elements=tried)
