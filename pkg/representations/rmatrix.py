"""
The universal R-matrix R = R_K R_X of H.

    R_K = (1/N) sum_{m,n} q^{e m n} K^m ⊗ K^n
    R_X = sum_k (1 - q^{-2})^k q^{k(k+1)/2} / [k]! X-^k ⊗ X+^k

The default exponent e = -2 makes R_K act as q^{ab/2} on weight vectors of
weights q^a, q^b. At N = 3 it coincides with e = 1.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from algebra.cyclo import CycScalar, check_root, qfactorial
from algebra.elements import TensorElement
from algebra.errors import FieldMismatchError, QuantumGroupError
from algebra.hopf import HElement, h_algebra, h_coproduct, h_counit, h_generator
from algebra.linalg import CycMatrix
from algebra.reports import CheckReport, ReportBuilder, combine_reports
from representations.repcat import Representation

logger = logging.getLogger(__name__)


def _k_part(N: int, exponent: int) -> TensorElement:
    H = h_algebra(N)
    scale = CycScalar.from_rational(N, 1) / N
    terms = {((0, m, 0), (0, n, 0)): CycScalar.q_power(N, exponent * m * n) * scale for m in range(N) for n in range(N)}
    return TensorElement((H, H), terms)


def _x_coefficients(N: int) -> List[CycScalar]:
    one = CycScalar.one(N)
    step = one - CycScalar.q_power(N, -2)
    return [step ** k * CycScalar.q_power(N, k * (k + 1) // 2) / qfactorial(N, k) for k in range(N)]


def _series(N: int, coefficients: List[CycScalar]) -> TensorElement:
    """sum_k c_k X-^k ⊗ X+^k."""
    H = h_algebra(N)
    return TensorElement((H, H), {((k, 0, 0), (0, 0, k)): c for k, c in enumerate(coefficients)})


def _series_inverse(coefficients: List[CycScalar]) -> List[CycScalar]:
    """Coefficients of 1 / f(u) for f(u) = sum c_k u^k with c_0 = 1, truncated at u^N = 0."""
    inverse = [coefficients[0].inverse()]
    for n in range(1, len(coefficients)):
        total = CycScalar.zero(coefficients[0].N)
        for k in range(1, n + 1):
            total = total + coefficients[k] * inverse[n - k]
        inverse.append(-total * inverse[0])
    return inverse


class UniversalR:
    """R, its factors and its inverse, with the inverse certified by multiplication."""

    def __init__(self, N: int, k_exponent: int = -2):
        self.N = check_root(N)
        self.k_exponent = k_exponent
        self.r_k = _k_part(N, k_exponent)
        coefficients = _x_coefficients(N)
        self.r_x = _series(N, coefficients)
        self.value = self.r_k * self.r_x
        r_k_inverse = _k_part(N, -k_exponent)
        r_x_inverse = _series(N, _series_inverse(coefficients))
        self.inverse = r_x_inverse * r_k_inverse
        H = h_algebra(N)
        one = TensorElement.one((H, H))
        self.inverse_certified = (
            self.r_k * r_k_inverse == one
            and r_k_inverse * self.r_k == one
            and self.r_x * r_x_inverse == one
            and r_x_inverse * self.r_x == one
        )
        if not self.inverse_certified:
            raise QuantumGroupError(f"R_K with exponent {k_exponent} is not invertible for N={N}")
        logger.debug("universal R for N=%d has %d terms", N, len(self.value))

    @property
    def x_coefficients(self) -> List[CycScalar]:
        return [self.r_x.coefficient(((k, 0, 0), (0, 0, k))) for k in range(self.N)]

    def flipped(self) -> TensorElement:
        return self.value.flip()

    def leg(self, positions: Tuple[int, int], inverse: bool = False) -> TensorElement:
        """R_{ij} in H⊗H⊗H."""
        H = h_algebra(self.N)
        element = self.inverse if inverse else self.value
        return element.embed(positions, (H, H, H))

    def summary(self) -> Dict:
        return {
            "N": self.N,
            "k_exponent": self.k_exponent,
            "terms": len(self.value),
            "inverse_certified": self.inverse_certified,
            "x_coefficients": [str(c) for c in self.x_coefficients],
            "value": str(self.value),
        }


@lru_cache(maxsize=None)
def r_universal(N: int, k_exponent: int = -2) -> UniversalR:
    return UniversalR(N, k_exponent)


def explicit_r_n3() -> TensorElement:
    """The N = 3 R-matrix written out term by term."""
    N = 3
    H = h_algebra(N)
    q = CycScalar.q_power(N)
    third = CycScalar.from_rational(N, 1) / 3
    k_terms = {
        (0, 0): 1, (0, 1): 1, (0, 2): 1,
        (1, 0): 1, (1, 1): q, (1, 2): q ** 2,
        (2, 0): 1, (2, 1): q ** 2, (2, 2): q,
    }
    r_k = TensorElement((H, H), {((0, m, 0), (0, n, 0)): third * c for (m, n), c in k_terms.items()})
    r_x = TensorElement(
        (H, H),
        {
            ((0, 0, 0), (0, 0, 0)): 1,
            ((1, 0, 0), (0, 0, 1)): q - q ** -1,
            ((2, 0, 0), (0, 0, 2)): q * 3,
        },
    )
    return r_k * r_x


def _counit_leg(t: TensorElement, leg: int) -> HElement:
    H = h_algebra(t.N)
    result = H.element()
    for key, c in t.terms.items():
        value = h_counit(H.monomial(key[leg])) * c
        if value:
            result = result + H.monomial(key[1 - leg], value)
    return result


def check_quasitriangular(R: UniversalR, samples: Optional[List[HElement]] = None) -> CheckReport:
    """
    Almost cocommutativity and the two coproduct identities.

    Δ^op(h) R = R Δ(h) for h = K, X+, X- (and any sampled elements),
    (Δ⊗id)R = R13 R23, (id⊗Δ)R = R13 R12, (ε⊗id)R = (id⊗ε)R = 1.
    """
    N = R.N
    H = h_algebra(N)
    builder = ReportBuilder("quasitriangular", N)
    elements = [h_generator(N, name) for name in ("1", "K", "Xp", "Xm")] + list(samples or [])
    for h in elements:
        delta = h_coproduct(h)
        if not builder.expect_equal(f"Δ^op({h}) R = R Δ({h})", delta.flip() * R.value, R.value * delta):
            break

    def coproduct_leg(m):
        return h_coproduct(H.monomial(m)).terms.items()

    def identity(m):
        return [((m,), CycScalar.one(N))]

    triple = (H, H, H)
    builder.expect_equal(
        "(Δ⊗id)R = R13 R23",
        R.value.map_legs([coproduct_leg, identity], triple),
        R.leg((0, 2)) * R.leg((1, 2)),
    )
    builder.expect_equal(
        "(id⊗Δ)R = R13 R12",
        R.value.map_legs([identity, coproduct_leg], triple),
        R.leg((0, 2)) * R.leg((0, 1)),
    )
    builder.expect_equal("(ε⊗id)R = 1", _counit_leg(R.value, 0), H.one())
    builder.expect_equal("(id⊗ε)R = 1", _counit_leg(R.value, 1), H.one())
    return builder.done()


def check_inverse(R: UniversalR) -> CheckReport:
    """R R^{-1} = R^{-1} R = 1⊗1 by full multiplication."""
    H = h_algebra(R.N)
    one = TensorElement.one((H, H))
    builder = ReportBuilder("r-inverse", R.N)
    builder.expect_equal("R R^-1 = 1⊗1", R.value * R.inverse, one)
    builder.expect_equal("R^-1 R = 1⊗1", R.inverse * R.value, one)
    return builder.done()


def check_ybe(R: UniversalR) -> CheckReport:
    builder = ReportBuilder("yang-baxter", R.N)
    r12, r13, r23 = R.leg((0, 1)), R.leg((0, 2)), R.leg((1, 2))
    builder.expect_equal("R12 R13 R23 = R23 R13 R12", r12 * r13 * r23, r23 * r13 * r12)
    return builder.done()


def check_not_triangular(R: UniversalR) -> CheckReport:
    """R21 differs from R^{-1}; the first differing coefficient is recorded."""
    builder = ReportBuilder("not-triangular", R.N)
    flipped = R.flipped()
    witness = None
    for key in sorted(set(flipped.terms) | set(R.inverse.terms)):
        if flipped.coefficient(key) != R.inverse.coefficient(key):
            witness = key
            break
    if witness is None:
        builder.fail("R21 = R^-1")
        return builder.done()
    H = h_algebra(R.N)
    builder.expect("R21 ≠ R^-1", True)
    return builder.done(
        term=" ⊗ ".join(H.format_monomial(m) for m in witness),
        r21_coefficient=str(flipped.coefficient(witness)),
        inverse_coefficient=str(R.inverse.coefficient(witness)),
    )


def r_in_representation(R: UniversalR, A: Representation, B: Representation) -> CycMatrix:
    """(ρ_A ⊗ ρ_B)(R) as a (dim A · dim B)-square matrix."""
    if A.N != R.N or B.N != R.N:
        raise FieldMismatchError(f"R over N={R.N} evaluated on modules over N={A.N}, N={B.N}")
    size = A.dim * B.dim
    total = CycMatrix.zeros(R.N, size)
    for (left, right), c in R.value.terms.items():
        total = total + A.monomial_matrix(left).kron(B.monomial_matrix(right)).scale(c)
    return total


def check_matrix_ybe(R: UniversalR, V: Representation) -> CheckReport:
    """Matrix Yang-Baxter equation in V⊗V⊗V and invertibility of R in V⊗V."""
    N = R.N
    builder = ReportBuilder(f"matrix-ybe:{V.name}", N)
    identity = CycMatrix.identity(N, V.dim)
    r_vv = r_in_representation(R, V, V)
    builder.expect(f"R invertible on {V.name}⊗{V.name}", r_vv.is_invertible())
    r12 = r_vv.kron(identity)
    r23 = identity.kron(r_vv)
    r13 = CycMatrix.zeros(N, V.dim ** 3)
    for (left, right), c in R.value.terms.items():
        r13 = r13 + V.monomial_matrix(left).kron(identity).kron(V.monomial_matrix(right)).scale(c)
    builder.expect_equal("R12 R13 R23 = R23 R13 R12", r12 @ r13 @ r23, r23 @ r13 @ r12)
    return builder.done()


def check_r_matrix(N: int = 3, k_exponent: int = -2, V: Optional[Representation] = None) -> CheckReport:
    """Every R-matrix identity for one N, bundled."""
    R = r_universal(N, k_exponent)
    parts = [check_quasitriangular(R), check_inverse(R), check_ybe(R), check_not_triangular(R)]
    if V is not None:
        parts.append(check_matrix_ybe(R, V))
    if N == 3:
        builder = ReportBuilder("explicit-n3", 3)
        builder.expect_equal("R equals the explicit N=3 element", R.value, explicit_r_n3())
        parts.append(builder.done())
    return combine_reports("r-matrix", N, parts)
