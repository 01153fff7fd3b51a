"""
Connections on the quantum plane, taken as a free module over itself.

A connection is a one-form φ with ∇1 = φ, so ∇f = φf + df on functions and
∇ψ = φψ + dψ on one-forms; the curvature ρ = dφ + φ² satisfies ∇²f = ρf.
"""
import logging
import random
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from algebra.cyclo import CycScalar, check_root
from algebra.errors import CalculusError
from algebra.linalg import CycMatrix, EchelonBasis
from algebra.qplane import PlaneElement
from algebra.reports import CheckReport, ReportBuilder
from calculus.wz import (
    WZForm,
    form_representation,
    random_form,
    wz_algebra,
    wz_d,
    wz_from_plane,
    wz_star,
)
from representations.decomposition import DecompositionReport, decompose_rep

logger = logging.getLogger(__name__)


class Connection:
    """A connection one-form φ."""

    __slots__ = ("phi",)

    def __init__(self, phi: WZForm):
        if not phi.is_homogeneous(1):
            raise CalculusError(f"a connection is a one-form, got degrees {sorted(phi.degrees)}")
        self.phi = phi

    @property
    def N(self) -> int:
        return self.phi.N

    def __str__(self) -> str:
        return str(self.phi)


class Curvature:
    """The two-form ρ of a connection."""

    __slots__ = ("rho",)

    def __init__(self, rho: WZForm):
        if not rho.is_homogeneous(2):
            raise CalculusError(f"curvature must be a two-form, got degrees {sorted(rho.degrees)}")
        self.rho = rho

    def is_flat(self) -> bool:
        return self.rho.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, Curvature):
            return self.rho == other.rho
        if isinstance(other, WZForm):
            return self.rho == other
        return NotImplemented

    __hash__ = None

    def __str__(self) -> str:
        return str(self.rho)


def _phi(connection: Union[Connection, WZForm]) -> WZForm:
    return connection.phi if isinstance(connection, Connection) else Connection(connection).phi


def curvature(connection: Union[Connection, WZForm]) -> Curvature:
    """ρ = dφ + φ²."""
    phi = _phi(connection)
    return Curvature(wz_d(phi) + phi * phi)


def covariant_derivative(connection: Union[Connection, WZForm], f: Union[PlaneElement, WZForm]) -> WZForm:
    """∇f = φf + df for a function f."""
    phi = _phi(connection)
    form = f if isinstance(f, WZForm) else wz_from_plane(f, phi.convention)
    if not form.is_homogeneous(0):
        raise CalculusError("covariant_derivative expects a function; use covariant_derivative_one_form")
    return phi * form + wz_d(form)


def covariant_derivative_one_form(connection: Union[Connection, WZForm], psi: WZForm) -> WZForm:
    """∇ψ = φψ + dψ for a one-form ψ."""
    phi = _phi(connection)
    if not psi.is_homogeneous(1):
        raise CalculusError("covariant_derivative_one_form expects a one-form")
    return phi * psi + wz_d(psi)


def random_connection(N: int, rng: random.Random, convention: str = "wz", terms: int = 4) -> Connection:
    return Connection(random_form(N, rng, convention, terms=terms, degree=1))


def check_curvature_linearity(
    connection: Optional[Union[Connection, WZForm]] = None,
    N: int = 3,
    rng: Optional[random.Random] = None,
    samples: int = 100,
) -> CheckReport:
    """
    ∇² is right-linear: ∇²(fg) = (∇²f)g, and ∇²f = ρf, on random functions.

    Also checks the Leibniz rule ∇(fg) = (∇f)g + f dg for every pair.
    """
    rng = rng or random.Random(0)
    if connection is None:
        connection = random_connection(check_root(N), rng)
    phi = _phi(connection)
    N = phi.N
    rho = curvature(phi).rho
    builder = ReportBuilder("curvature-linearity", N)

    def nabla_squared(form: WZForm) -> WZForm:
        return covariant_derivative_one_form(phi, covariant_derivative(phi, form))

    for _ in range(samples):
        f = random_form(N, rng, phi.convention, degree=0)
        g = random_form(N, rng, phi.convention, degree=0)
        if not builder.expect_equal(f"∇({f}·{g})", covariant_derivative(phi, f * g), covariant_derivative(phi, f) * g + f * wz_d(g)):
            break
        if not builder.expect_equal(f"∇²({f}) = ρ·{f}", nabla_squared(f), rho * f):
            break
        if not builder.expect_equal(f"∇²({f}·{g}) = ∇²({f})·{g}", nabla_squared(f * g), nabla_squared(f) * g):
            break
    return builder.done(connection=str(phi))


def check_gauge_shift(connection: Union[Connection, WZForm], f: Union[PlaneElement, WZForm]) -> CheckReport:
    """curvature(φ + df) = curvature(φ) + φ·df + df·φ + df·df."""
    phi = _phi(connection)
    form = f if isinstance(f, WZForm) else wz_from_plane(f, phi.convention)
    df = wz_d(form)
    builder = ReportBuilder("gauge-shift", phi.N)
    builder.expect("d(df) = 0", wz_d(df).is_zero())
    builder.expect_equal(
        f"curvature({phi} + d({form}))",
        curvature(phi + df).rho,
        curvature(phi).rho + phi * df + df * phi + df * df,
    )
    return builder.done()


# ------------------------------------------------------------------ hermiticity

class HermitianConstraints(BaseModel):
    """
    The antilinear system star(φ) = φ on φ = sum_m c_m e_m over the one-form basis.

    Row i reads sum_j S[i, j] conj(c_j) = c_i, S being the matrix of the star.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    N: int
    convention: str
    unknowns: List[str]
    equations: List[str]
    solution_dimension: int = Field(description="real dimension of the space of hermitian connections")
    star_matrix: CycMatrix = Field(exclude=True)
    hermitian_basis: List[WZForm] = Field(default_factory=list, exclude=True)

    def is_satisfied(self, coefficients: List[CycScalar]) -> bool:
        conjugated = {j: c.conjugate() for j, c in enumerate(coefficients) if c}
        image = self.star_matrix.apply(conjugated)
        return all(image.get(i, CycScalar.zero(self.N)) == c for i, c in enumerate(coefficients))

    def summary(self) -> dict:
        return self.model_dump()


def _format_equation(N: int, row: int, entries: dict, unknowns: List[str]) -> str:
    parts = []
    for j, c in sorted(entries.items()):
        text = str(c)
        coefficient = "" if text == "1" else f"({text})·"
        parts.append(f"{coefficient}conj({unknowns[j]})")
    return f"{' + '.join(parts) or '0'} = {unknowns[row]}"


def hermitian_constraints(N: int = 3, convention: str = "wz") -> HermitianConstraints:
    """
    Constraints on the 2N² coefficients of a hermitian connection.

    The hermitian one-forms are spanned over the reals by e + e* and (q - q^-1)(e - e*);
    the complex rank of that family is the real dimension of the solution space.
    """
    N = check_root(N)
    algebra = wz_algebra(N, convention)
    basis = algebra.degree_basis(1)
    size = len(basis)
    columns = [wz_star(algebra.monomial(m)).to_vector(1) for m in basis]
    star_matrix = CycMatrix.from_columns(N, size, columns)
    unknowns = [f"c[{algebra.format_monomial(m)}]" for m in basis]
    equations = [_format_equation(N, i, star_matrix.rows[i], unknowns) for i in range(size)]
    imaginary = CycScalar.q_power(N) - CycScalar.q_power(N, -1)
    span = EchelonBasis(N)
    hermitian_basis = []
    for m in basis:
        e = algebra.monomial(m)
        for candidate in (e + wz_star(e), (e - wz_star(e)).scale(imaginary)):
            if candidate and span.add(candidate.to_vector(1)):
                hermitian_basis.append(candidate)
    logger.debug("hermitian connections for N=%d: %d-dimensional", N, span.rank)
    return HermitianConstraints(
        N=N,
        convention=convention,
        unknowns=unknowns,
        equations=equations,
        solution_dimension=span.rank,
        star_matrix=star_matrix,
        hermitian_basis=hermitian_basis,
    )


def is_hermitian(connection: Union[Connection, WZForm]) -> bool:
    phi = _phi(connection)
    return wz_star(phi) == phi


def decompose_connection_space(N: int = 3, convention: str = "wz") -> DecompositionReport:
    """The space of connections Ω¹ decomposed into indecomposable H-modules."""
    rep = form_representation(N, 1, convention)
    return decompose_rep(rep, strict=False)
