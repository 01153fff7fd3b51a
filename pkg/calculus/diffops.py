"""
Differential operators on the quantum plane as exact N²×N² matrices.

Partial derivatives are read with coefficients on the RIGHT of the
differentials, df = dx ∂x(f) + dy ∂y(f), and σ is defined by
f dx^j = sum_i dx^i σ_i^j(f). wz_d produces left coefficients; partials()
converts once through σ.
"""
import logging
from functools import lru_cache
from typing import Dict, Optional, Tuple

from algebra.cyclo import CycScalar, check_root
from algebra.linalg import CycMatrix
from algebra.qplane import PlaneElement, plane_algebra, plane_basis, plane_element, plane_from_vector
from algebra.reports import CheckReport, ReportBuilder, combine_reports
from calculus.wz import wz_algebra, wz_d, wz_from_plane
from representations.action import action_representation
from representations.repcat import Representation

logger = logging.getLogger(__name__)

INDICES = ("x", "y")


class EndoOperator:
    """A linear operator on the quantum plane in the monomial basis x^r y^s (index r*N + s)."""

    __slots__ = ("matrix", "tag")

    def __init__(self, matrix: CycMatrix, tag: str = ""):
        self.matrix = matrix
        self.tag = tag

    @property
    def N(self) -> int:
        return self.matrix.N

    @classmethod
    def identity(cls, N: int) -> "EndoOperator":
        return cls(CycMatrix.identity(N, N * N), "1")

    @classmethod
    def from_function(cls, N: int, fn, tag: str = "") -> "EndoOperator":
        columns = [fn(z).to_vector() for z in plane_basis(N)]
        return cls(CycMatrix.from_columns(N, N * N, columns), tag)

    def __call__(self, z: PlaneElement) -> PlaneElement:
        return plane_from_vector(self.N, self.matrix.apply(z.to_vector()))

    def __add__(self, other: "EndoOperator") -> "EndoOperator":
        return EndoOperator(self.matrix + other.matrix, f"({self.tag} + {other.tag})")

    def __sub__(self, other: "EndoOperator") -> "EndoOperator":
        return EndoOperator(self.matrix - other.matrix, f"({self.tag} - {other.tag})")

    def __matmul__(self, other: "EndoOperator") -> "EndoOperator":
        return EndoOperator(self.matrix @ other.matrix, f"{self.tag} {other.tag}")

    def __pow__(self, exponent: int) -> "EndoOperator":
        return EndoOperator(self.matrix.power(exponent), f"{self.tag}^{exponent}")

    def scale(self, c) -> "EndoOperator":
        return EndoOperator(self.matrix.scale(c), f"({c}) {self.tag}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, EndoOperator):
            return NotImplemented
        return self.matrix == other.matrix

    __hash__ = None

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def is_diagonal(self) -> bool:
        return self.matrix.is_diagonal()

    def __str__(self) -> str:
        return self.tag or "<operator>"


def first_difference(A: CycMatrix, B: CycMatrix) -> Optional[Dict[str, str]]:
    """The first entry where two matrices differ, or None."""
    difference = A - B
    for i, j, _ in difference.entries():
        return {"row": str(i), "column": str(j), "lhs": str(A[i, j]), "rhs": str(B[i, j])}
    return None


def multiplication_operator(N: int, name: str) -> EndoOperator:
    """Left multiplication M_x or M_y."""
    g = plane_element(N, {(1, 0) if name == "x" else (0, 1): 1})
    return EndoOperator.from_function(N, lambda z: g * z, f"M_{name}")


# ------------------------------------------------------------------------ sigma

def _sigma_generators(N: int) -> Dict[str, Dict[Tuple[str, str], PlaneElement]]:
    q = CycScalar.q_power(N)
    x = plane_element(N, {(1, 0): 1})
    y = plane_element(N, {(0, 1): 1})
    zero = plane_element(N)
    return {
        "x": {("x", "x"): x.scale(q ** 2), ("x", "y"): y.scale(q ** 2 - 1), ("y", "x"): zero, ("y", "y"): x.scale(q)},
        "y": {("x", "x"): y.scale(q), ("x", "y"): zero, ("y", "x"): zero, ("y", "y"): y.scale(q ** 2)},
    }


def _matrix_product(N: int, left, right):
    return {
        (i, k): sum((left[(i, j)] * right[(j, k)] for j in INDICES), plane_element(N))
        for i in INDICES
        for k in INDICES
    }


@lru_cache(maxsize=None)
def _sigma_monomial(N: int, monomial: Tuple[int, int]) -> Dict[Tuple[str, str], PlaneElement]:
    r, s = monomial
    if monomial == (0, 0):
        one, zero = plane_element(N, {(0, 0): 1}), plane_element(N)
        return {(i, j): one if i == j else zero for i in INDICES for j in INDICES}
    generators = _sigma_generators(N)
    head, rest = ("x", (r - 1, s)) if r else ("y", (0, s - 1))
    return _matrix_product(N, generators[head], _sigma_monomial(N, rest))


def sigma_of(f: PlaneElement) -> Dict[Tuple[str, str], PlaneElement]:
    """σ_i^j(f) for all (i, j), with σ(fg) = σ(f)σ(g) as 2×2 matrices."""
    N = f.N
    result = {(i, j): plane_element(N) for i in INDICES for j in INDICES}
    for monomial, c in f.terms.items():
        for key, value in _sigma_monomial(N, monomial).items():
            result[key] = result[key] + value.scale(c)
    return result


@lru_cache(maxsize=None)
def sigma(N: int = 3) -> Dict[Tuple[str, str], EndoOperator]:
    """The four operators σ_i^j keyed by (i, j)."""
    N = check_root(N)
    return {
        (i, j): EndoOperator.from_function(N, lambda z, key=(i, j): sigma_of(z)[key], f"σ_{i}^{j}")
        for i in INDICES
        for j in INDICES
    }


def check_sigma(N: int = 3) -> CheckReport:
    """
    σ is an algebra map into 2×2 matrices over the plane and reproduces the commutation rules.

    f dx^j computed in the form algebra must equal sum_i dx^i σ_i^j(f).
    """
    N = check_root(N)
    builder = ReportBuilder("sigma", N)
    M = plane_algebra(N)
    monomials = [M.monomial(m) for m in M.basis()]
    for f in monomials:
        for g in monomials:
            if not builder.expect_equal(f"σ({f}·{g}) = σ({f})σ({g})", sigma_of(f * g), _matrix_product(N, sigma_of(f), sigma_of(g))):
                break
    forms = wz_algebra(N)
    differentials = {i: forms.monomial((0, 0, f"d{i}")) for i in INDICES}
    for f in monomials:
        values = sigma_of(f)
        for j in INDICES:
            moved = sum((differentials[i] * wz_from_plane(values[(i, j)]) for i in INDICES), forms.element())
            if not builder.expect_equal(f"{f} d{j}", wz_from_plane(f) * differentials[j], moved):
                break
    return builder.done()


# --------------------------------------------------------------------- partials

def _partials_of(f: PlaneElement) -> Tuple[PlaneElement, PlaneElement]:
    df = wz_d(wz_from_plane(f))
    a, b = df.deg1x, df.deg1y
    sa, sb = sigma_of(a), sigma_of(b)
    return sa[("x", "x")] + sb[("x", "y")], sa[("y", "x")] + sb[("y", "y")]


@lru_cache(maxsize=None)
def partials(N: int = 3) -> Tuple[EndoOperator, EndoOperator]:
    """(∂x, ∂y) with df = dx ∂x(f) + dy ∂y(f)."""
    N = check_root(N)
    dx = EndoOperator.from_function(N, lambda z: _partials_of(z)[0], "∂x")
    dy = EndoOperator.from_function(N, lambda z: _partials_of(z)[1], "∂y")
    logger.debug("built partial derivatives for N=%d", N)
    return dx, dy


def check_twisted_leibniz(N: int = 3) -> CheckReport:
    """∂_i(fg) = ∂_i(f) g + sum_j σ_i^j(f) ∂_j(g) on all monomial pairs."""
    N = check_root(N)
    builder = ReportBuilder("twisted-leibniz", N)
    partial = dict(zip(INDICES, partials(N)))
    M = plane_algebra(N)
    monomials = [M.monomial(m) for m in M.basis()]
    for f in monomials:
        values = sigma_of(f)
        for g in monomials:
            for i in INDICES:
                rhs = partial[i](f) * g + sum((values[(i, j)] * partial[j](g) for j in INDICES), plane_element(N))
                if not builder.expect_equal(f"∂{i}({f}·{g})", partial[i](f * g), rhs):
                    return builder.done()
    return builder.done()


def check_partial_relations(N: int = 3) -> CheckReport:
    """Commutation of ∂x, ∂y with the multiplication operators and with each other."""
    N = check_root(N)
    q = CycScalar.q_power(N)
    dx, dy = partials(N)
    mx, my = multiplication_operator(N, "x"), multiplication_operator(N, "y")
    one = EndoOperator.identity(N)

    relations = ReportBuilder("partial-relations", N)
    relations.expect_equal("∂x x = 1 + q² x ∂x + (q²-1) y ∂y", (dx @ mx).matrix, (one + (mx @ dx).scale(q ** 2) + (my @ dy).scale(q ** 2 - 1)).matrix)
    relations.expect_equal("∂x y = q y ∂x", (dx @ my).matrix, (my @ dx).scale(q).matrix)
    relations.expect_equal("∂y x = q x ∂y", (dy @ mx).matrix, (mx @ dy).scale(q).matrix)
    relations.expect_equal("∂y y = 1 + q² y ∂y", (dy @ my).matrix, (one + (my @ dy).scale(q ** 2)).matrix)

    relations.expect_equal("∂y ∂x = q ∂x ∂y", (dy @ dx).matrix, (dx @ dy).scale(q).matrix)

    nilpotency = ReportBuilder("partial-nilpotency", N, asserted=N == 3)
    nilpotency.expect("∂x³ = 0", (dx ** 3).is_zero())
    nilpotency.expect("∂y³ = 0", (dy ** 3).is_zero())
    return combine_reports("partials", N, [relations.done(), nilpotency.done()])


# ------------------------------------------------------------ invariant operators

@lru_cache(maxsize=None)
def scaling_ops(N: int = 3) -> Tuple[EndoOperator, EndoOperator]:
    """μx = 1 + (q²-1)(x∂x + y∂y), μy = 1 + (q²-1) y∂y."""
    N = check_root(N)
    q = CycScalar.q_power(N)
    dx, dy = partials(N)
    mx, my = multiplication_operator(N, "x"), multiplication_operator(N, "y")
    one = EndoOperator.identity(N)
    mu_x = one + (mx @ dx + my @ dy).scale(q ** 2 - 1)
    mu_y = one + (my @ dy).scale(q ** 2 - 1)
    mu_x.tag, mu_y.tag = "μx", "μy"
    return mu_x, mu_y


def check_scaling_ops(N: int = 3) -> CheckReport:
    """μy(x^r y^s) = q^{2s} x^r y^s and μx(x^r y^s) = q^{2(r+s)} x^r y^s."""
    N = check_root(N)
    builder = ReportBuilder("scaling", N)
    mu_x, mu_y = scaling_ops(N)
    M = plane_algebra(N)
    for r, s in M.basis():
        z = M.monomial((r, s))
        builder.expect_equal(f"μy({z})", mu_y(z), z.scale(CycScalar.q_power(N, 2 * s)))
        builder.expect_equal(f"μx({z})", mu_x(z), z.scale(CycScalar.q_power(N, 2 * (r + s))))
    builder.expect("μx, μy diagonal and invertible", mu_x.is_diagonal() and mu_y.is_diagonal() and mu_x.matrix.is_invertible() and mu_y.matrix.is_invertible())
    return builder.done()


@lru_cache(maxsize=None)
def invariant_ops(N: int = 3) -> Tuple[EndoOperator, EndoOperator, EndoOperator, EndoOperator]:
    """
    K, K^-1, X+, X- built from derivatives and scaling operators.

    Returns:
        (μx²μy², μxμy, q^{-1} x ∂y μy², q y ∂x μx)
    """
    N = check_root(N)
    q = CycScalar.q_power(N)
    dx, dy = partials(N)
    mu_x, mu_y = scaling_ops(N)
    mx, my = multiplication_operator(N, "x"), multiplication_operator(N, "y")
    k = mu_x @ mu_x @ mu_y @ mu_y
    k_inverse = mu_x @ mu_y
    xp = (mx @ dy @ mu_y @ mu_y).scale(q ** -1)
    xm = (my @ dx @ mu_x).scale(q)
    k.tag, k_inverse.tag, xp.tag, xm.tag = "K_L", "Kinv_L", "Xp_L", "Xm_L"
    return k, k_inverse, xp, xm


def check_invariant_ops(N: int = 3) -> CheckReport:
    """Compare the operators of invariant_ops entry by entry with the action on the plane."""
    N = check_root(N)
    rep = action_representation(N)
    k, k_inverse, xp, xm = invariant_ops(N)
    builder = ReportBuilder("invariant-ops", N, asserted=N == 3)
    for name, built, expected in (("K", k, rep.K), ("Kinv", k_inverse, rep.k_inverse()), ("Xp", xp, rep.Xp), ("Xm", xm, rep.Xm)):
        difference = first_difference(built.matrix, expected)
        builder.expect(f"{built.tag} equals the {name} action matrix", difference is None, **(difference or {}))
    builder.expect("Kinv_L K_L = 1", (k_inverse @ k).matrix == CycMatrix.identity(N, N * N))
    relations = Representation(N, k.matrix, xp.matrix, xm.matrix, label="derivative-built", check=False).check_relations()
    relations.asserted = N == 3
    return combine_reports("invariant-ops", N, [builder.done(), relations])


def check_diffops(N: int = 3) -> CheckReport:
    N = check_root(N)
    return combine_reports(
        "diffops",
        N,
        [check_sigma(N), check_twisted_leibniz(N), check_partial_relations(N), check_scaling_ops(N), check_invariant_ops(N)],
    )
