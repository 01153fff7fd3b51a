"""
The dual pair of N^3-dimensional Hopf algebras at a primitive N-th root of unity.

H is generated by K, X+, X- with K X± = q^{±2} X± K, [X+, X-] = (K - K^{-1}) / (q - q^{-1}),
K^N = 1, X±^N = 0; its basis is X-^i K^j X+^k.

F is generated by a, b, c with ab = q ba, ac = q ca, bc = cb, a^N = 1,
b^N = c^N = 0; d = a^{N-1}(1 + q bc); its basis is a^α b^β c^γ.
"""
import logging
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from algebra.cyclo import CycScalar, check_root
from algebra.elements import AlgebraElement, MonomialAlgebra, TensorElement
from algebra.errors import FieldMismatchError
from algebra.reports import CheckReport, ReportBuilder, combine_reports

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


def _q(N: int, k: int) -> CycScalar:
    return CycScalar.q_power(N, k)


def _accumulate(target: Dict, key, value: CycScalar) -> None:
    current = target.get(key)
    total = value if current is None else current + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


# --------------------------------------------------------------------------- H

@lru_cache(maxsize=None)
def _commutator_coefficients(N: int, a: int) -> Tuple[CycScalar, CycScalar]:
    """[X+, X-^a] = X-^{a-1} (u K - v K^{-1})."""
    scale = (_q(N, 1) - _q(N, -1)).inverse()
    c1 = sum((_q(N, -2 * t) for t in range(a)), CycScalar.zero(N))
    c2 = sum((_q(N, 2 * t) for t in range(a)), CycScalar.zero(N))
    return c1 * scale, c2 * scale


def _left_xm(N: int, terms: Dict[Triple, CycScalar]) -> Dict[Triple, CycScalar]:
    out: Dict[Triple, CycScalar] = {}
    for (i, j, k), c in terms.items():
        if i + 1 < N:
            _accumulate(out, (i + 1, j, k), c)
    return out


def _left_k(N: int, terms: Dict[Triple, CycScalar]) -> Dict[Triple, CycScalar]:
    out: Dict[Triple, CycScalar] = {}
    for (i, j, k), c in terms.items():
        _accumulate(out, (i, (j + 1) % N, k), c * _q(N, -2 * i))
    return out


def _left_xp(N: int, terms: Dict[Triple, CycScalar]) -> Dict[Triple, CycScalar]:
    out: Dict[Triple, CycScalar] = {}
    for (i, j, k), c in terms.items():
        if k + 1 < N:
            _accumulate(out, (i, j, k + 1), c * _q(N, -2 * j))
        if i:
            u, v = _commutator_coefficients(N, i)
            _accumulate(out, (i - 1, (j + 1) % N, k), c * u)
            _accumulate(out, (i - 1, (j - 1) % N, k), -(c * v))
    return out


@lru_cache(maxsize=None)
def _h_product(N: int, left: Triple, right: Triple):
    i, j, k = left
    terms = {right: CycScalar.one(N)}
    for _ in range(k):
        terms = _left_xp(N, terms)
    for _ in range(j):
        terms = _left_k(N, terms)
    for _ in range(i):
        terms = _left_xm(N, terms)
    return tuple(terms.items())


class HAlgebra(MonomialAlgebra):
    name = "H"

    def basis(self) -> List[Triple]:
        N = self.N
        return [(i, j, k) for i in range(N) for j in range(N) for k in range(N)]

    def unit(self) -> Triple:
        return (0, 0, 0)

    def multiply_monomials(self, left, right):
        return _h_product(self.N, left, right)

    def format_monomial(self, monomial: Triple) -> str:
        factors = []
        for name, e in zip(("Xm", "K", "Xp"), monomial):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) or "1"

    def element(self, terms=None) -> "HElement":
        return HElement(self, terms)


class HElement(AlgebraElement):
    """An element of H in the basis X-^i K^j X+^k."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, AlgebraElement) and not isinstance(other, HElement):
            raise FieldMismatchError("cannot multiply elements of H and of another algebra")
        return super().__mul__(other)


@lru_cache(maxsize=None)
def h_algebra(N: int) -> HAlgebra:
    return HAlgebra(check_root(N))


def h_element(N: int, terms=None) -> HElement:
    return h_algebra(N).element(terms)


def h_monomial(N: int, i: int, j: int, k: int, coefficient=1) -> HElement:
    if i >= N or k >= N:
        return h_element(N)
    return h_element(N, {(i, j % N, k): coefficient})


_H_GENERATORS = {"1": (0, 0, 0), "K": (0, 1, 0), "Xp": (0, 0, 1), "Xm": (1, 0, 0)}


def h_generator(N: int, name: str) -> HElement:
    if name in ("Kinv", "K^-1"):
        return h_monomial(N, 0, N - 1, 0)
    if name not in _H_GENERATORS:
        raise ValueError(f"unknown generator of H: {name!r}")
    return h_monomial(N, *_H_GENERATORS[name])


def h_generators(N: int) -> Dict[str, HElement]:
    return {name: h_generator(N, name) for name in ("K", "Xp", "Xm")}


def h_mul(u: HElement, v: HElement) -> HElement:
    if u.N != v.N:
        raise FieldMismatchError(f"elements of H over N={u.N} and N={v.N}")
    return u * v


@lru_cache(maxsize=None)
def _h_generator_coproducts(N: int) -> Dict[str, TensorElement]:
    H = h_algebra(N)
    pair = (H, H)
    return {
        "Xm": TensorElement(pair, {((1, 0, 0), (0, N - 1, 0)): 1, ((0, 0, 0), (1, 0, 0)): 1}),
        "K": TensorElement(pair, {((0, 1, 0), (0, 1, 0)): 1}),
        "Xp": TensorElement(pair, {((0, 0, 1), (0, 0, 0)): 1, ((0, 1, 0), (0, 0, 1)): 1}),
    }


@lru_cache(maxsize=None)
def _h_coproduct_power(N: int, name: str, exponent: int) -> TensorElement:
    if exponent == 0:
        H = h_algebra(N)
        return TensorElement.one((H, H))
    return _h_coproduct_power(N, name, exponent - 1) * _h_generator_coproducts(N)[name]


@lru_cache(maxsize=None)
def _h_coproduct_monomial(N: int, monomial: Triple):
    i, j, k = monomial
    value = _h_coproduct_power(N, "Xm", i) * _h_coproduct_power(N, "K", j) * _h_coproduct_power(N, "Xp", k)
    return tuple(value.terms.items())


def _coproduct(element: AlgebraElement, monomial_coproduct) -> TensorElement:
    algebra = element.algebra
    acc: Dict = {}
    for m, c in element.terms.items():
        for key, d in monomial_coproduct(element.N, m):
            _accumulate(acc, key, c * d)
    return TensorElement((algebra, algebra), acc)


def h_coproduct(u: HElement) -> TensorElement:
    """ΔX+ = X+⊗1 + K⊗X+, ΔX- = X-⊗K^{-1} + 1⊗X-, ΔK = K⊗K, extended multiplicatively."""
    return _coproduct(u, _h_coproduct_monomial)


@lru_cache(maxsize=None)
def _h_antipode_monomial(N: int, monomial: Triple):
    i, j, k = monomial
    s_xp = h_monomial(N, 0, N - 1, 1, -1)
    s_k = h_monomial(N, 0, N - 1, 0)
    s_xm = h_monomial(N, 1, 1, 0, -1)
    value = (s_xp ** k) * (s_k ** j) * (s_xm ** i)
    return tuple(value.terms.items())


def _apply_linear(element: AlgebraElement, monomial_map, conjugate: bool = False) -> AlgebraElement:
    acc: Dict = {}
    for m, c in element.terms.items():
        if conjugate:
            c = c.conjugate()
        for key, d in monomial_map(element.N, m):
            _accumulate(acc, key, c * d)
    return element.algebra.element(acc)


def h_antipode(u: HElement) -> HElement:
    """S X+ = -K^{-1} X+, S X- = -X- K, S K = K^{-1}, extended anti-multiplicatively."""
    return _apply_linear(u, _h_antipode_monomial)


def h_counit(u: HElement) -> CycScalar:
    total = CycScalar.zero(u.N)
    for (i, j, k), c in u.terms.items():
        if i == 0 and k == 0:
            total = total + c
    return total


# --------------------------------------------------------------------------- F

@lru_cache(maxsize=None)
def _f_product(N: int, left: Triple, right: Triple):
    (a, b, c), (a2, b2, c2) = left, right
    if b + b2 >= N or c + c2 >= N:
        return ()
    return ((((a + a2) % N, b + b2, c + c2), _q(N, -(b + c) * a2)),)


class FAlgebra(MonomialAlgebra):
    name = "F"

    def basis(self) -> List[Triple]:
        N = self.N
        return [(a, b, c) for a in range(N) for b in range(N) for c in range(N)]

    def unit(self) -> Triple:
        return (0, 0, 0)

    def multiply_monomials(self, left, right):
        return _f_product(self.N, left, right)

    def format_monomial(self, monomial: Triple) -> str:
        factors = []
        for name, e in zip("abc", monomial):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) or "1"

    def element(self, terms=None) -> "FElement":
        return FElement(self, terms)


class FElement(AlgebraElement):
    """An element of F in the basis a^α b^β c^γ."""

    __slots__ = ()


@lru_cache(maxsize=None)
def f_algebra(N: int) -> FAlgebra:
    return FAlgebra(check_root(N))


def f_element(N: int, terms=None) -> FElement:
    return f_algebra(N).element(terms)


def f_monomial(N: int, a: int, b: int, c: int, coefficient=1) -> FElement:
    if b >= N or c >= N:
        return f_element(N)
    return f_element(N, {(a % N, b, c): coefficient})


def f_expand_d(N: int) -> FElement:
    """d = a^{N-1}(1 + q bc)."""
    return f_element(N, {(N - 1, 0, 0): 1, (N - 1, 1, 1): _q(N, 1)})


def f_generator(N: int, name: str) -> FElement:
    if name == "d":
        return f_expand_d(N)
    if name == "1":
        return f_monomial(N, 0, 0, 0)
    exponents = {"a": (1, 0, 0), "b": (0, 1, 0), "c": (0, 0, 1)}
    if name not in exponents:
        raise ValueError(f"unknown generator of F: {name!r}")
    return f_monomial(N, *exponents[name])


def f_mul(u: FElement, v: FElement) -> FElement:
    if u.N != v.N:
        raise FieldMismatchError(f"elements of F over N={u.N} and N={v.N}")
    return u * v


@lru_cache(maxsize=None)
def _f_generator_coproducts(N: int) -> Dict[str, TensorElement]:
    F = f_algebra(N)
    gen = {name: f_generator(N, name) for name in "abcd"}

    def tensor(*pairs):
        total = TensorElement((F, F))
        for left, right in pairs:
            total = total + TensorElement.pure([gen[left], gen[right]])
        return total

    return {
        "a": tensor(("a", "a"), ("b", "c")),
        "b": tensor(("a", "b"), ("b", "d")),
        "c": tensor(("c", "a"), ("d", "c")),
        "d": tensor(("c", "b"), ("d", "d")),
    }


@lru_cache(maxsize=None)
def _f_coproduct_power(N: int, name: str, exponent: int) -> TensorElement:
    if exponent == 0:
        F = f_algebra(N)
        return TensorElement.one((F, F))
    return _f_coproduct_power(N, name, exponent - 1) * _f_generator_coproducts(N)[name]


@lru_cache(maxsize=None)
def _f_coproduct_monomial(N: int, monomial: Triple):
    a, b, c = monomial
    value = _f_coproduct_power(N, "a", a) * _f_coproduct_power(N, "b", b) * _f_coproduct_power(N, "c", c)
    return tuple(value.terms.items())


def f_coproduct(u: FElement) -> TensorElement:
    """Δa = a⊗a + b⊗c, Δb = a⊗b + b⊗d, Δc = c⊗a + d⊗c, with d expanded."""
    return _coproduct(u, _f_coproduct_monomial)


@lru_cache(maxsize=None)
def _f_antipode_monomial(N: int, monomial: Triple):
    a, b, c = monomial
    s_a = f_expand_d(N)
    s_b = f_monomial(N, 0, 1, 0, -_q(N, -1))
    s_c = f_monomial(N, 0, 0, 1, -_q(N, 1))
    value = (s_c ** c) * (s_b ** b) * (s_a ** a)
    return tuple(value.terms.items())


def f_antipode(u: FElement) -> FElement:
    """S a = d, S b = -q^{-1} b, S c = -q c, S d = a, extended anti-multiplicatively."""
    return _apply_linear(u, _f_antipode_monomial)


def f_counit(u: FElement) -> CycScalar:
    total = CycScalar.zero(u.N)
    for (a, b, c), value in u.terms.items():
        if b == 0 and c == 0:
            total = total + value
    return total


# --------------------------------------------------------------------- pairing
# Generators closed under the coproduct: ("K", j), "Xp", "Xm".

def _generator_coproduct(N: int, generator):
    if generator == "Xp":
        return ((("Xp"), ("K", 0)), (("K", 1), "Xp"))
    if generator == "Xm":
        return (("Xm", ("K", N - 1)), (("K", 0), "Xm"))
    return ((generator, generator),)


def _pair_letter(N: int, generator, letter: str) -> CycScalar:
    if isinstance(generator, tuple):
        return _q(N, generator[1]) if letter == "a" else CycScalar.zero(N)
    if (generator, letter) in (("Xp", "b"), ("Xm", "c")):
        return CycScalar.one(N)
    return CycScalar.zero(N)


@lru_cache(maxsize=None)
def _pair_generator_word(N: int, generator, letters: str) -> CycScalar:
    if not letters:
        return CycScalar.one(N) if isinstance(generator, tuple) else CycScalar.zero(N)
    total = CycScalar.zero(N)
    for first, rest in _generator_coproduct(N, generator):
        head = _pair_letter(N, first, letters[0])
        if head:
            total = total + head * _pair_generator_word(N, rest, letters[1:])
    return total


def _pair_generator(N: int, generator, monomial: Triple) -> CycScalar:
    a, b, c = monomial
    return _pair_generator_word(N, generator, "a" * a + "b" * b + "c" * c)


@lru_cache(maxsize=None)
def _pair_monomials(N: int, h: Triple, f: Triple) -> CycScalar:
    i, j, k = h
    if h == (0, 0, 0):
        return CycScalar.one(N) if f[1] == 0 and f[2] == 0 else CycScalar.zero(N)
    if i:
        generator, rest = "Xm", (i - 1, j, k)
    elif j:
        generator, rest = ("K", 1), (0, j - 1, k)
    else:
        generator, rest = "Xp", (0, 0, k - 1)
    total = CycScalar.zero(N)
    for (f1, f2), c in _f_coproduct_monomial(N, f):
        head = _pair_generator(N, generator, f1)
        if head:
            total = total + c * head * _pair_monomials(N, rest, f2)
    return total


def pairing(h: HElement, u: FElement) -> CycScalar:
    """
    The duality <h, u> fixed by <K, a> = q, <X+, b> = 1, <X-, c> = 1.

    Args:
        h: Element of H
        u: Element of F

    Returns:
        The bilinear pairing, computed by peeling generators of h against coproducts of u
    """
    if h.N != u.N:
        raise FieldMismatchError(f"cannot pair H over N={h.N} with F over N={u.N}")
    total = CycScalar.zero(h.N)
    for hm, hc in h.terms.items():
        for fm, fc in u.terms.items():
            value = _pair_monomials(h.N, hm, fm)
            if value:
                total = total + hc * fc * value
    return total


def pair_tensors(hh: TensorElement, ff: TensorElement) -> CycScalar:
    """<h1 ⊗ h2, u1 ⊗ u2> = <h1, u1><h2, u2>, extended bilinearly."""
    N = hh.N
    total = CycScalar.zero(N)
    for hk, hc in hh.terms.items():
        for fk, fc in ff.terms.items():
            value = hc * fc
            for hm, fm in zip(hk, fk):
                value = value * _pair_monomials(N, hm, fm)
                if not value:
                    break
            if value:
                total = total + value
    return total


# ----------------------------------------------------------------------- stars

def _anti_extend(N: int, images: Dict[str, HElement], monomial: Triple) -> HElement:
    """Image of X-^i K^j X+^k under the antimultiplicative map fixed by generator images."""
    i, j, k = monomial
    return (images["Xp"] ** k) * (images["K"] ** j) * (images["Xm"] ** i)


@lru_cache(maxsize=None)
def _star_h_monomial(N: int, monomial: Triple):
    images = {
        "Xp": h_monomial(N, 0, 0, 1, -_q(N, -1)),
        "Xm": h_monomial(N, 1, 0, 0, -_q(N, 1)),
        "K": h_monomial(N, 0, 1, 0),
    }
    return tuple(_anti_extend(N, images, monomial).terms.items())


def star_H(u: HElement) -> HElement:
    """X+* = -q^{-1} X+, X-* = -q X-, K* = K; antilinear and antimultiplicative."""
    return _apply_linear(u, _star_h_monomial, conjugate=True)


@lru_cache(maxsize=None)
def _twisted_star_monomial(N: int, monomial: Triple, sign: int):
    images = {
        "Xp": h_monomial(N, 1, 0, 0, sign),
        "Xm": h_monomial(N, 0, 0, 1, sign),
        "K": h_monomial(N, 0, N - 1, 0),
    }
    return tuple(_anti_extend(N, images, monomial).terms.items())


def twisted_star_H(u: HElement, sign: int = 1) -> HElement:
    """K* = K^{-1}, X±* = sign X∓."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return _apply_linear(u, lambda N, m: _twisted_star_monomial(N, m, sign), conjugate=True)


@lru_cache(maxsize=None)
def _star_f_monomial(N: int, monomial: Triple):
    a, b, c = monomial
    value = f_monomial(N, 0, 0, 1) ** c * f_monomial(N, 0, 1, 0) ** b * f_monomial(N, 1, 0, 0) ** a
    return tuple(value.terms.items())


def star_F(u: FElement) -> FElement:
    """a, b, c (hence d) self-adjoint; antilinear and antimultiplicative."""
    return _apply_linear(u, _star_f_monomial, conjugate=True)


def tensor_star(t: TensorElement, star: Callable[[AlgebraElement], AlgebraElement]) -> TensorElement:
    """(*⊗...⊗*) applied leg-wise, conjugating coefficients once."""
    total = TensorElement(t.factors)
    for key, c in t.terms.items():
        legs = [star(f.monomial(m)) for f, m in zip(t.factors, key)]
        total = total + TensorElement.pure(legs).scale(c.conjugate())
    return total


# -------------------------------------------------------------------- checkers

class _HopfOps:
    """The structure maps of one of the two algebras, used by the generic checkers."""

    def __init__(self, which: str, N: int):
        if which == "H":
            self.algebra = h_algebra(N)
            self.coproduct_monomial = lambda m: _h_coproduct_monomial(N, m)
            self.antipode = h_antipode
            self.counit = h_counit
            self.star = star_H
        elif which == "F":
            self.algebra = f_algebra(N)
            self.coproduct_monomial = lambda m: _f_coproduct_monomial(N, m)
            self.antipode = f_antipode
            self.counit = f_counit
            self.star = star_F
        else:
            raise ValueError(f"unknown Hopf algebra {which!r}; expected 'H' or 'F'")
        self.which = which
        self.N = N

    def coproduct(self, u: AlgebraElement) -> TensorElement:
        return _coproduct(u, lambda N, m: self.coproduct_monomial(m))

    def counit_monomial(self, m) -> CycScalar:
        return self.counit(self.algebra.monomial(m))


def _contract(t: TensorElement, left: Callable, right: Callable, algebra: MonomialAlgebra) -> AlgebraElement:
    """sum c f(t1) g(t2) with f, g mapping monomials to elements."""
    total = algebra.zero()
    for (m1, m2), c in t.terms.items():
        total = total + (left(m1) * right(m2)).scale(c)
    return total


def check_hopf_axioms(algebra: str = "H", N: int = 3) -> CheckReport:
    """
    Verify the Hopf algebra axioms on every basis monomial.

    Args:
        algebra: "H" or "F"
        N: Order of q

    Returns:
        CheckReport naming the first failing monomial, if any
    """
    ops = _HopfOps(algebra, N)
    A = ops.algebra
    builder = ReportBuilder(f"hopf-axioms:{algebra}", N)
    identity_leg = lambda m: [((m,), CycScalar.one(N))]
    delta_leg = lambda m: ops.coproduct_monomial(m)
    counit_leg = lambda m: [((), ops.counit_monomial(m))]
    k_inverse = h_generator(N, "Kinv") if algebra == "H" else None
    k = h_generator(N, "K") if algebra == "H" else None

    logger.debug("checking Hopf axioms of %s for N=%d", algebra, N)
    for m in A.basis():
        u = A.monomial(m)
        delta = ops.coproduct(u)
        left = delta.map_legs([delta_leg, identity_leg], (A, A, A))
        right = delta.map_legs([identity_leg, delta_leg], (A, A, A))
        if not builder.expect_equal(f"coassociativity on {u}", left, right):
            break

        for name, legs in (("(ε⊗id)Δ", [counit_leg, identity_leg]), ("(id⊗ε)Δ", [identity_leg, counit_leg])):
            reduced = delta.map_legs(legs, (A,))
            back = A.element({key[0]: c for key, c in reduced.terms.items()})
            if not builder.expect_equal(f"{name} on {u}", back, u):
                break
        if builder.failed:
            break

        unit_part = A.one().scale(ops.counit(u))
        s_left = _contract(delta, lambda x: ops.antipode(A.monomial(x)), A.monomial, A)
        s_right = _contract(delta, A.monomial, lambda x: ops.antipode(A.monomial(x)), A)
        if not builder.expect_equal(f"m(S⊗id)Δ on {u}", s_left, unit_part):
            break
        if not builder.expect_equal(f"m(id⊗S)Δ on {u}", s_right, unit_part):
            break

        if algebra == "H":
            s2 = h_antipode(h_antipode(u))
            if not builder.expect_equal(f"S²u = K^-1 u K on {u}", s2, k_inverse * u * k):
                break
    return builder.done(basis_size=len(A.basis()))


def check_stars(N: int = 3, samples: Optional[List[Tuple[AlgebraElement, AlgebraElement]]] = None) -> CheckReport:
    """
    Star structures of H and F.

    Checks involution, antimultiplicativity (generator times basis, plus sample pairs),
    Δ∘* = (*⊗*)∘Δ and S*S* = id on the basis, stability of the defining ideals and the
    duality <h*, u> = conj <h, (Su)*> for generators h against the basis of F.
    """
    parts = []
    for which in ("H", "F"):
        ops = _HopfOps(which, N)
        A = ops.algebra
        builder = ReportBuilder(f"star:{which}", N)
        generators = [A.monomial(m) for m in ((0, 0, 1), (0, 1, 0), (1, 0, 0))]
        for m in A.basis():
            u = A.monomial(m)
            if not builder.expect_equal(f"** = id on {u}", ops.star(ops.star(u)), u):
                break
            for g in generators:
                if not builder.expect_equal(f"({g}·{u})* = {u}*·{g}*", ops.star(g * u), ops.star(u) * ops.star(g)):
                    break
            if builder.failed:
                break
            if not builder.expect_equal(
                f"Δ(u*) = (*⊗*)Δu on {u}", ops.coproduct(ops.star(u)), tensor_star(ops.coproduct(u), ops.star)
            ):
                break
            back = ops.star(ops.antipode(ops.star(ops.antipode(u))))
            if not builder.expect_equal(f"S*S* = id on {u}", back, u):
                break
        for left, right in samples or []:
            if left.algebra != A:
                continue
            if not builder.expect_equal(
                f"antimultiplicativity on sample ({left}, {right})",
                ops.star(left * right),
                ops.star(right) * ops.star(left),
            ):
                break
        # (g*)^N equals the image of g^N, i.e. the ideal is preserved
        for g in generators:
            builder.expect_equal(f"(({g})*)^N = ({g}^N)*", ops.star(g) ** N, ops.star(g ** N))
        parts.append(builder.done())

    builder = ReportBuilder("star:duality", N)
    F = f_algebra(N)
    for name, h in h_generators(N).items():
        for m in F.basis():
            u = F.monomial(m)
            lhs = pairing(star_H(h), u)
            rhs = pairing(h, star_F(f_antipode(u))).conjugate()
            if not builder.expect_equal(f"<{name}*, {u}> = conj<{name}, (S{u})*>", lhs, rhs):
                break
        if builder.failed:
            break
    parts.append(builder.done())
    return combine_reports("stars", N, parts)


def check_twisted_star(N: int = 3) -> CheckReport:
    """
    The twisted star K* = K^{-1}, X±* = s X∓ (s = ±1).

    Verifies for both signs: involution, Δ∘* = (*⊗*)∘Δ^op and S∘* = *∘S on the basis; records
    a basis element on which the untwisted law Δ∘* = (*⊗*)∘Δ fails.
    """
    H = h_algebra(N)
    parts = []
    for sign in (1, -1):
        star = lambda u, s=sign: twisted_star_H(u, s)
        builder = ReportBuilder(f"twisted-star:{'+' if sign > 0 else '-'}", N)
        violation = None
        for m in H.basis():
            u = H.monomial(m)
            if not builder.expect_equal(f"** = id on {u}", star(star(u)), u):
                break
            delta = h_coproduct(u)
            if not builder.expect_equal(
                f"Δ(u*) = (*⊗*)Δ^op u on {u}", h_coproduct(star(u)), tensor_star(delta.flip(), star)
            ):
                break
            if not builder.expect_equal(f"S(u*) = (Su)* on {u}", h_antipode(star(u)), star(h_antipode(u))):
                break
            if violation is None and h_coproduct(star(u)) != tensor_star(delta, star):
                violation = str(u)
        builder.expect("untwisted law fails somewhere", violation is not None)
        parts.append(builder.done(untwisted_violation=violation))
    return combine_reports("twisted-star", N, parts)
