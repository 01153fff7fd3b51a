"""
The reduced Wess-Zumino complex Ω(M) = Ω⁰ ⊕ Ω¹ ⊕ Ω² over the quantum plane.

Forms are written with coefficients to the LEFT: f + g dx + h dy + k dx dy.
A differential is moved rightwards past a function with

    dx x = q^{-2} x dx           dx y = q^{-1} y dx
    dy y = q^{-2} y dy           dy x = q^{-1} x dy - (1 - q^{-2}) y dx

(equivalent to x dx = q² dx x, x dy = q dy x + (q² - 1) dx y, y dx = q dx y,
y dy = q² dy y), and dx² = dy² = 0, dy dx = κ dx dy. The two-form convention
"wz" takes κ = -q^{-2}, "manin" takes κ = -q; they agree at N = 3.
"""
import logging
import random
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from algebra.cyclo import CycScalar, check_root
from algebra.elements import AlgebraElement, MonomialAlgebra, TensorElement
from algebra.errors import CalculusError, FieldMismatchError
from algebra.hopf import HElement, f_algebra, f_generator, h_algebra, h_coproduct, h_generator, star_F, tensor_star
from algebra.linalg import CycMatrix
from algebra.qplane import PlaneElement, plane_algebra, plane_element, star_M
from algebra.reports import CheckReport, ReportBuilder, combine_reports
from representations.action import act, act_on_manin_dual
from representations.repcat import Representation

logger = logging.getLogger(__name__)

CONVENTIONS = ("wz", "manin")
DIFFERENTIALS = ("", "dx", "dy", "dxdy")
DEGREE = {"": 0, "dx": 1, "dy": 1, "dxdy": 2}

FormMonomial = Tuple[int, int, str]


def two_form_factor(N: int, convention: str) -> CycScalar:
    """κ in dy dx = κ dx dy."""
    if convention == "wz":
        return -CycScalar.q_power(N, -2)
    if convention == "manin":
        return -CycScalar.q_power(N, 1)
    raise ValueError(f"unknown two-form convention {convention!r}; expected one of {', '.join(CONVENTIONS)}")


def is_consistent(N: int, convention: str) -> bool:
    """Whether d∘d = 0 and the star relations hold for this convention."""
    return convention == "manin" or N == 3


@lru_cache(maxsize=None)
def _move_generator(N: int, differential: str, generator: str) -> Tuple[Tuple[Tuple[int, int], CycScalar, str], ...]:
    """differential · generator as a sum of (plane monomial, coefficient, differential)."""
    q = lambda k: CycScalar.q_power(N, k)  # noqa: E731
    x, y = (1, 0), (0, 1)
    if differential == "dx":
        return ((x, q(-2), "dx"),) if generator == "x" else ((y, q(-1), "dx"),)
    if generator == "y":
        return ((y, q(-2), "dy"),)
    return ((x, q(-1), "dy"), (y, q(-2) - 1, "dx"))


@lru_cache(maxsize=None)
def _move(N: int, differential: str, monomial: Tuple[int, int]) -> Tuple[Tuple[Tuple[int, int], CycScalar, str], ...]:
    """differential · x^r y^s rewritten with the function on the left."""
    r, s = monomial
    if differential == "" or monomial == (0, 0):
        return (((r, s), CycScalar.one(N), differential),)
    M = plane_algebra(N)
    if differential == "dxdy":
        acc: Dict[Tuple[Tuple[int, int], str], CycScalar] = {}
        for m1, c1, first in _move(N, "dy", monomial):
            for m2, c2, _ in _move(N, "dx", m1):
                if first == "dy":
                    key = (m2, "dxdy")
                    acc[key] = acc[key] + c1 * c2 if key in acc else c1 * c2
        return tuple((m, c, d) for (m, d), c in acc.items() if c)
    generator, rest = ("x", (r - 1, s)) if r else ("y", (0, s - 1))
    acc = {}
    for m1, c1, middle in _move_generator(N, differential, generator):
        for m2, c2, last in _move(N, middle, rest):
            for m, c3 in M.multiply_monomials(m1, m2):
                key = (m, last)
                value = c1 * c2 * c3
                acc[key] = acc[key] + value if key in acc else value
    return tuple((m, c, d) for (m, d), c in acc.items() if c)


def _wedge(N: int, convention: str, left: str, right: str) -> Optional[Tuple[CycScalar, str]]:
    if not left:
        return CycScalar.one(N), right
    if not right:
        return CycScalar.one(N), left
    if DEGREE[left] + DEGREE[right] > 2 or left == right:
        return None
    if left == "dx":
        return CycScalar.one(N), "dxdy"
    return two_form_factor(N, convention), "dxdy"


@lru_cache(maxsize=None)
def _wz_product(N: int, convention: str, left: FormMonomial, right: FormMonomial):
    r, s, first = left
    r2, s2, second = right
    M = plane_algebra(N)
    acc: Dict[FormMonomial, CycScalar] = {}
    for m, c1, moved in _move(N, first, (r2, s2)):
        wedge = _wedge(N, convention, moved, second)
        if wedge is None:
            continue
        c2, differential = wedge
        for (r3, s3), c3 in M.multiply_monomials((r, s), m):
            key = (r3, s3, differential)
            value = c1 * c2 * c3
            acc[key] = acc[key] + value if key in acc else value
    return tuple((k, c) for k, c in acc.items() if c)


class WZAlgebra(MonomialAlgebra):
    """Ω(M) with basis x^r y^s ω, ω in {1, dx, dy, dx dy}."""

    name = "wz"

    def __init__(self, N: int, convention: str = "wz"):
        super().__init__(N)
        two_form_factor(N, convention)
        self.convention = convention

    def _key(self):
        return (self.convention,)

    def basis(self) -> List[FormMonomial]:
        return [(r, s, d) for d in DIFFERENTIALS for r in range(self.N) for s in range(self.N)]

    def degree_basis(self, degree: int) -> List[FormMonomial]:
        return [m for m in self.basis() if DEGREE[m[2]] == degree]

    def unit(self) -> FormMonomial:
        return (0, 0, "")

    def multiply_monomials(self, left, right):
        return _wz_product(self.N, self.convention, left, right)

    def format_monomial(self, monomial: FormMonomial) -> str:
        r, s, differential = monomial
        factors = []
        for name, e in (("x", r), ("y", s)):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if differential == "dxdy":
            factors.extend(["dx", "dy"])
        elif differential:
            factors.append(differential)
        return "*".join(factors) or "1"

    def element(self, terms=None) -> "WZForm":
        return WZForm(self, terms)

    def index(self, monomial: FormMonomial) -> int:
        """Position inside the basis of the homogeneous component."""
        r, s, differential = monomial
        offset = self.N * self.N if differential == "dy" else 0
        return offset + r * self.N + s


class WZForm(AlgebraElement):
    """A differential form; deg0, deg1x, deg1y, deg2 are the left coefficients of 1, dx, dy, dx dy."""

    __slots__ = ()

    def _compatible(self, other):
        if isinstance(other, AlgebraElement) and not isinstance(other, WZForm):
            raise FieldMismatchError("cannot combine a form with an element of another algebra")
        return super()._compatible(other)

    @property
    def convention(self) -> str:
        return self.algebra.convention

    def component(self, differential: str) -> PlaneElement:
        return plane_element(self.N, {(r, s): c for (r, s, d), c in self.terms.items() if d == differential})

    @property
    def deg0(self) -> PlaneElement:
        return self.component("")

    @property
    def deg1x(self) -> PlaneElement:
        return self.component("dx")

    @property
    def deg1y(self) -> PlaneElement:
        return self.component("dy")

    @property
    def deg2(self) -> PlaneElement:
        return self.component("dxdy")

    @property
    def degrees(self) -> set:
        return {DEGREE[d] for _, _, d in self.terms}

    def is_homogeneous(self, degree: int) -> bool:
        return self.degrees <= {degree}

    def homogeneous_part(self, degree: int) -> "WZForm":
        return self._new({m: c for m, c in self.terms.items() if DEGREE[m[2]] == degree})

    def to_vector(self, degree: int) -> Dict[int, CycScalar]:
        return {self.algebra.index(m): c for m, c in self.terms.items() if DEGREE[m[2]] == degree}


@lru_cache(maxsize=None)
def wz_algebra(N: int, convention: str = "wz") -> WZAlgebra:
    return WZAlgebra(check_root(N), convention)


def wz_form(
    N: int,
    deg0: Optional[PlaneElement] = None,
    dx: Optional[PlaneElement] = None,
    dy: Optional[PlaneElement] = None,
    dxdy: Optional[PlaneElement] = None,
    convention: str = "wz",
) -> WZForm:
    """f + g dx + h dy + k dx dy from its left coefficients."""
    terms = {}
    for differential, coefficient in (("", deg0), ("dx", dx), ("dy", dy), ("dxdy", dxdy)):
        if coefficient is None:
            continue
        if coefficient.N != N:
            raise FieldMismatchError(f"coefficient over N={coefficient.N} in a form over N={N}")
        for (r, s), c in coefficient.terms.items():
            terms[(r, s, differential)] = c
    return wz_algebra(N, convention).element(terms)


def wz_from_plane(z: PlaneElement, convention: str = "wz") -> WZForm:
    return wz_form(z.N, deg0=z, convention=convention)


def wz_differential(N: int, name: str, convention: str = "wz") -> WZForm:
    if name not in ("dx", "dy"):
        raise ValueError(f"unknown differential {name!r}")
    return wz_algebra(N, convention).monomial((0, 0, name))


def wz_mul(a: WZForm, b: WZForm) -> WZForm:
    if a.algebra != b.algebra:
        raise FieldMismatchError(f"forms over {a.algebra!r} and {b.algebra!r}")
    return a * b


def wz_dims(N: int) -> Tuple[int, int, int]:
    """Dimensions of Ω⁰, Ω¹, Ω² from a basis count."""
    algebra = wz_algebra(N)
    return tuple(len(algebra.degree_basis(p)) for p in range(3))


# ------------------------------------------------------------------ differential

@lru_cache(maxsize=None)
def _d_function(N: int, convention: str, monomial: Tuple[int, int]):
    """d(x^r y^s) by the Leibniz rule d(g·rest) = dg·rest + g·d(rest)."""
    r, s = monomial
    if monomial == (0, 0):
        return ()
    algebra = wz_algebra(N, convention)
    generator, differential, rest = ((1, 0), "dx", (r - 1, s)) if r else ((0, 1), "dy", (0, s - 1))
    dg_rest = algebra.monomial((0, 0, differential)) * algebra.monomial((rest[0], rest[1], ""))
    g_drest = algebra.monomial((generator[0], generator[1], "")) * algebra.element(dict(_d_function(N, convention, rest)))
    return tuple((dg_rest + g_drest).terms.items())


def wz_d(omega: WZForm) -> WZForm:
    """The exterior derivative: d1 = 0, dx = d(x), dy = d(y), graded Leibniz, d(f dξ) = df dξ."""
    algebra = omega.algebra
    N, convention = omega.N, omega.convention
    total = algebra.element()
    for (r, s, differential), c in omega.terms.items():
        if differential == "dxdy":
            continue
        df = algebra.element(dict(_d_function(N, convention, (r, s))))
        if differential:
            df = df * algebra.monomial((0, 0, differential))
        total = total + df.scale(c)
    return total


def d_matrix(N: int, degree: int, convention: str = "wz") -> CycMatrix:
    """d: Ω^p -> Ω^{p+1} in the bases x^r y^s, (x^r y^s dx, x^r y^s dy), x^r y^s dx dy."""
    if degree not in (0, 1):
        raise ValueError("d is a nonzero map only out of degrees 0 and 1")
    algebra = wz_algebra(N, convention)
    sources = algebra.degree_basis(degree)
    size = len(algebra.degree_basis(degree + 1))
    columns = [wz_d(algebra.monomial(m)).to_vector(degree + 1) for m in sources]
    return CycMatrix.from_columns(N, size, columns)


class Cohomology(BaseModel):
    N: int
    convention: str
    dims: Tuple[int, int, int]
    ranks: Tuple[int, int]
    betti: Tuple[int, int, int]

    @property
    def euler_characteristic(self) -> int:
        h0, h1, h2 = self.betti
        return h0 - h1 + h2

    @property
    def nontrivial(self) -> bool:
        return self.betti != (1, 0, 0)


def cohomology(N: int = 3, convention: str = "wz") -> Cohomology:
    """
    Dimensions of the cohomology of d, by exact ranks.

    Raises:
        CalculusError: if d∘d ≠ 0 for the chosen two-form convention
    """
    N = check_root(N)
    d0 = d_matrix(N, 0, convention)
    d1 = d_matrix(N, 1, convention)
    if not (d1 @ d0).is_zero():
        raise CalculusError(f"d∘d ≠ 0 with the {convention!r} two-form convention at N={N}")
    n0, n1, n2 = wz_dims(N)
    r0, r1 = d0.rank(), d1.rank()
    result = Cohomology(N=N, convention=convention, dims=(n0, n1, n2), ranks=(r0, r1), betti=(n0 - r0, n1 - r1 - r0, n2 - r1))
    logger.debug("cohomology N=%d (%s): %s", N, convention, result.betti)
    return result


# ------------------------------------------------------------------------ star

@lru_cache(maxsize=None)
def _star_monomial(N: int, convention: str, monomial: FormMonomial):
    r, s, differential = monomial
    algebra = wz_algebra(N, convention)
    if differential == "dxdy":
        adjoint = algebra.monomial((0, 0, "dy")) * algebra.monomial((0, 0, "dx"))
    else:
        adjoint = algebra.monomial((0, 0, differential))
    coefficient = star_M(plane_element(N, {(r, s): 1}))
    return tuple((adjoint * wz_form(N, deg0=coefficient, convention=convention)).terms.items())


def wz_star(omega: WZForm) -> WZForm:
    """dx* = dx, dy* = dy and the plane star on coefficients; antilinear and antimultiplicative."""
    total: Dict[FormMonomial, CycScalar] = {}
    for monomial, c in omega.terms.items():
        for key, d in _star_monomial(omega.N, omega.convention, monomial):
            value = c.conjugate() * d
            total[key] = total[key] + value if key in total else value
    return omega.algebra.element(total)


def random_form(N: int, rng: random.Random, convention: str = "wz", terms: int = 4, degree: Optional[int] = None) -> WZForm:
    algebra = wz_algebra(N, convention)
    basis = algebra.basis() if degree is None else algebra.degree_basis(degree)
    q_powers = [CycScalar.q_power(N, k) for k in range(N)]
    chosen = {}
    for monomial in rng.sample(basis, min(terms, len(basis))):
        chosen[monomial] = rng.choice(q_powers) * rng.randint(-3, 3)
    return algebra.element(chosen)


def check_wz(N: int = 3, convention: str = "wz", rng: Optional[random.Random] = None, samples: int = 50) -> CheckReport:
    """
    Identities of the complex.

    Associativity and graded Leibniz on random forms, d∘d = 0, the star
    involution, antimultiplicativity and d*ω = (-1)^p *dω on basis forms.
    """
    N = check_root(N)
    rng = rng or random.Random(0)
    algebra = wz_algebra(N, convention)
    builder = ReportBuilder(f"wz:{convention}", N, asserted=is_consistent(N, convention))
    for _ in range(samples):
        a, b, c = (random_form(N, rng, convention) for _ in range(3))
        if not builder.expect_equal(f"({a})({b})({c}) associative", (a * b) * c, a * (b * c)):
            break
        p = rng.choice([0, 1, 2])
        a = random_form(N, rng, convention, degree=p)
        sign = 1 if p % 2 == 0 else -1
        if not builder.expect_equal(f"d(({a})({b}))", wz_d(a * b), wz_d(a) * b + (a * wz_d(b)).scale(sign)):
            break
        if not builder.expect_equal(f"(({a})({b}))*", wz_star(a * b), wz_star(b) * wz_star(a)):
            break
    builder.expect("d∘d = 0", (d_matrix(N, 1, convention) @ d_matrix(N, 0, convention)).is_zero())
    for monomial in algebra.basis():
        omega = algebra.monomial(monomial)
        if not builder.expect_equal(f"({omega})** = {omega}", wz_star(wz_star(omega)), omega):
            break
        p = DEGREE[monomial[2]]
        sign = 1 if p % 2 == 0 else -1
        if not builder.expect_equal(f"d({omega})* = (-1)^{p} (d{omega})*", wz_d(wz_star(omega)), wz_star(wz_d(omega)).scale(sign)):
            break
    return builder.done()


# -------------------------------------------------------------------- coaction

def _form_generators(N: int, convention: str) -> Dict[str, WZForm]:
    algebra = wz_algebra(N, convention)
    return {
        "x": algebra.monomial((1, 0, "")),
        "y": algebra.monomial((0, 1, "")),
        "dx": algebra.monomial((0, 0, "dx")),
        "dy": algebra.monomial((0, 0, "dy")),
    }


@lru_cache(maxsize=None)
def _form_generator_coactions(N: int, convention: str, side: str) -> Dict[str, TensorElement]:
    a, b, c, d = (f_generator(N, name) for name in "abcd")
    g = _form_generators(N, convention)
    if side == "left":
        pure = lambda f, w: TensorElement.pure([f, w])  # noqa: E731
        return {
            "x": pure(a, g["x"]) + pure(b, g["y"]),
            "y": pure(c, g["x"]) + pure(d, g["y"]),
            "dx": pure(a, g["dx"]) + pure(b, g["dy"]),
            "dy": pure(c, g["dx"]) + pure(d, g["dy"]),
        }
    pure = lambda w, f: TensorElement.pure([w, f])  # noqa: E731
    return {
        "x": pure(g["x"], a) + pure(g["y"], c),
        "y": pure(g["x"], b) + pure(g["y"], d),
        "dx": pure(g["dx"], a) + pure(g["dy"], c),
        "dy": pure(g["dx"], b) + pure(g["dy"], d),
    }


@lru_cache(maxsize=None)
def _coact_form_monomial(N: int, convention: str, side: str, monomial: FormMonomial) -> TensorElement:
    generators = _form_generator_coactions(N, convention, side)
    r, s, differential = monomial
    value = (generators["x"] ** r) * (generators["y"] ** s)
    if differential == "dxdy":
        value = value * generators["dx"] * generators["dy"]
    elif differential:
        value = value * generators[differential]
    return value


def coact_form(omega: WZForm, side: str = "right") -> TensorElement:
    """Δ_R ω in Ω⊗F (side="right") or Δ_L ω in F⊗Ω (side="left"), extended multiplicatively."""
    N, convention = omega.N, omega.convention
    factors = (f_algebra(N), omega.algebra) if side == "left" else (omega.algebra, f_algebra(N))
    total = TensorElement(factors)
    for monomial, c in omega.terms.items():
        total = total + _coact_form_monomial(N, convention, side, monomial).scale(c)
    return total


def _relations(N: int, convention: str) -> List[Tuple[str, List[Tuple[CycScalar, Tuple[str, ...]]]]]:
    """Defining relations of Ω as signed words in the generators."""
    q = CycScalar.q_power(N)
    one = CycScalar.one(N)
    relations = [
        ("xy = q yx", [(one, ("x", "y")), (-q, ("y", "x"))]),
        ("x dx = q² dx x", [(one, ("x", "dx")), (-q ** 2, ("dx", "x"))]),
        ("x dy = q dy x + (q² - 1) dx y", [(one, ("x", "dy")), (-q, ("dy", "x")), (one - q ** 2, ("dx", "y"))]),
        ("y dx = q dx y", [(one, ("y", "dx")), (-q, ("dx", "y"))]),
        ("y dy = q² dy y", [(one, ("y", "dy")), (-q ** 2, ("dy", "y"))]),
        ("dx² = 0", [(one, ("dx", "dx"))]),
        ("dy² = 0", [(one, ("dy", "dy"))]),
    ]
    if convention == "wz":
        relations.append(("dx dy + q² dy dx = 0", [(one, ("dx", "dy")), (q ** 2, ("dy", "dx"))]))
    else:
        relations.append(("q dx dy + dy dx = 0", [(q, ("dx", "dy")), (one, ("dy", "dx"))]))
    return relations


def _mixed_star(element):
    return wz_star(element) if isinstance(element, WZForm) else star_F(element)


def wz_coaction_covariance(N: int = 3, convention: str = "wz") -> CheckReport:
    """
    The coactions respect every defining relation of Ω and commute with the star.

    Each relation, evaluated on the coacted generators, must vanish in F⊗Ω (Ω⊗F).
    """
    N = check_root(N)
    builder = ReportBuilder(f"wz-coaction:{convention}", N, asserted=is_consistent(N, convention))
    generators = _form_generators(N, convention)
    for side in ("left", "right"):
        coacted = _form_generator_coactions(N, convention, side)
        for name, terms in _relations(N, convention):
            total = None
            for c, word in terms:
                product = coacted[word[0]]
                for letter in word[1:]:
                    product = product * coacted[letter]
                total = product.scale(c) if total is None else total + product.scale(c)
            builder.expect(f"Δ_{side} preserves {name}", total.is_zero(), remainder=total)
        for name, generator in generators.items():
            builder.expect_equal(
                f"(Δ_{side} {name})* = Δ_{side}({name}*)",
                tensor_star(coact_form(generator, side), _mixed_star),
                coact_form(wz_star(generator), side),
            )
    return builder.done()


# -------------------------------------------------------------------- H-action

def _manin_dual_form(N: int, convention: str, coefficients: Dict[str, CycScalar]) -> WZForm:
    algebra = wz_algebra(N, convention)
    return algebra.element({(0, 0, name): c for name, c in coefficients.items()})


def act_on_form(h: HElement, omega: WZForm) -> WZForm:
    """
    h(f ω) = sum h1(f) h2(ω), with dx, dy transforming as x, y.

    Args:
        h: Element of H
        omega: Form over the same N

    Returns:
        The transformed form
    """
    if h.N != omega.N:
        raise FieldMismatchError(f"cannot act with H over N={h.N} on forms over N={omega.N}")
    N, convention = omega.N, omega.convention
    algebra = omega.algebra
    H = h_algebra(N)
    total = algebra.element()
    for (r, s, differential), c in omega.terms.items():
        f = plane_element(N, {(r, s): c})
        if not differential:
            total = total + wz_form(N, deg0=act(h, f), convention=convention)
            continue
        for (m1, m2), e in h_coproduct(h).terms.items():
            moved = wz_form(N, deg0=act(H.monomial(m1), f), convention=convention)
            if differential == "dxdy":
                image = algebra.element()
                for (n1, n2), g in h_coproduct(H.monomial(m2)).terms.items():
                    first = _manin_dual_form(N, convention, act_on_manin_dual(H.monomial(n1), "dx"))
                    second = _manin_dual_form(N, convention, act_on_manin_dual(H.monomial(n2), "dy"))
                    image = image + (first * second).scale(g)
            else:
                image = _manin_dual_form(N, convention, act_on_manin_dual(H.monomial(m2), differential))
            total = total + (moved * image).scale(e)
    return total


def form_representation(N: int = 3, degree: int = 1, convention: str = "wz") -> Representation:
    """The H-module Ω^p in the basis of d_matrix."""
    algebra = wz_algebra(N, convention)
    basis = algebra.degree_basis(degree)
    size = len(basis)
    matrices = {}
    for name in ("K", "Xp", "Xm"):
        h = h_generator(N, name)
        columns = [act_on_form(h, algebra.monomial(m)).to_vector(degree) for m in basis]
        matrices[name] = CycMatrix.from_columns(N, size, columns)
    return Representation(N, matrices["K"], matrices["Xp"], matrices["Xm"], label=f"Ω{degree}")


def check_form_action(N: int = 3, convention: str = "wz") -> CheckReport:
    """Ω is an H-module algebra and d commutes with the action of K, X+, X-."""
    N = check_root(N)
    algebra = wz_algebra(N, convention)
    H = h_algebra(N)
    leibniz = ReportBuilder("form-action:leibniz", N, asserted=is_consistent(N, convention))
    covariance = ReportBuilder("form-action:d-covariance", N, asserted=is_consistent(N, convention))
    forms = [algebra.monomial(m) for m in algebra.basis()]
    generators = (algebra.monomial((1, 0, "")), algebra.monomial((0, 1, "")), algebra.monomial((0, 0, "dx")), algebra.monomial((0, 0, "dy")))
    for name in ("K", "Xp", "Xm"):
        h = h_generator(N, name)
        legs = [(H.monomial(m1), H.monomial(m2), c) for (m1, m2), c in h_coproduct(h).terms.items()]
        for omega in forms:
            for g in generators:
                rhs = algebra.element()
                for h1, h2, c in legs:
                    rhs = rhs + (act_on_form(h1, omega) * act_on_form(h2, g)).scale(c)
                if not leibniz.expect_equal(f"{name}(({omega})({g}))", act_on_form(h, omega * g), rhs):
                    break
            if not covariance.expect_equal(f"d {name}({omega}) = {name}(d {omega})", wz_d(act_on_form(h, omega)), act_on_form(h, wz_d(omega))):
                break
    return combine_reports("form-action", N, [leibniz.done(), covariance.done()])
