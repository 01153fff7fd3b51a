"""
Elements of finite-dimensional algebras given by a monomial basis.

An algebra supplies its basis, the product of two basis monomials (as a tuple
of (monomial, coefficient) pairs) and a formatter. Elements are sparse maps
monomial -> CycScalar with no zero coefficients, so equality is map equality.
"""
import logging
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Sequence, Tuple

from algebra.cyclo import CycScalar
from algebra.errors import FieldMismatchError

logger = logging.getLogger(__name__)

Monomial = Hashable
Terms = Tuple[Tuple[Monomial, CycScalar], ...]


class MonomialAlgebra:
    """Base class for the algebras of the library; subclasses fill in the structure constants."""

    name = "algebra"

    def __init__(self, N: int):
        self.N = N

    def basis(self) -> List[Monomial]:
        raise NotImplementedError

    def unit(self) -> Monomial:
        raise NotImplementedError

    def multiply_monomials(self, left: Monomial, right: Monomial) -> Terms:
        raise NotImplementedError

    def format_monomial(self, monomial: Monomial) -> str:
        raise NotImplementedError

    def element(self, terms=None) -> "AlgebraElement":
        return AlgebraElement(self, terms)

    def one(self) -> "AlgebraElement":
        return self.element({self.unit(): 1})

    def zero(self) -> "AlgebraElement":
        return self.element()

    def monomial(self, monomial: Monomial, coefficient=1) -> "AlgebraElement":
        return self.element({monomial: coefficient})

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.N == other.N and self._key() == other._key()

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.N, self._key()))

    def _key(self) -> Hashable:
        return ()

    def __repr__(self) -> str:
        return f"{type(self).__name__}(N={self.N})"


def format_terms(items: Iterable[Tuple[str, CycScalar]]) -> str:
    """
    Render sum_i c_i m_i with monomial texts m_i.

    Args:
        items: Pairs (monomial text, coefficient), monomial text "1" for the unit

    Returns:
        A string the expression parser reads back
    """
    parts = []
    for text, c in items:
        scalar = str(c)
        negative = scalar.startswith("-") and " " not in scalar
        if negative:
            scalar = scalar[1:]
        if " " in scalar:
            scalar = f"({scalar})"
        if scalar == "1":
            body = text
        elif text == "1":
            body = scalar
        else:
            body = f"{scalar}*{text}"
        if not parts:
            parts.append("-" + body if negative else body)
        else:
            parts.append((" - " if negative else " + ") + body)
    return "".join(parts) or "0"


class AlgebraElement:
    """A sparse linear combination of basis monomials of a MonomialAlgebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: MonomialAlgebra, terms=None):
        self.algebra = algebra
        clean: Dict[Monomial, CycScalar] = {}
        if terms:
            N = algebra.N
            for monomial, c in terms.items():
                c = CycScalar.coerce(N, c)
                if c:
                    clean[monomial] = c
        self.terms = clean

    @property
    def N(self) -> int:
        return self.algebra.N

    def _new(self, terms) -> "AlgebraElement":
        return type(self)(self.algebra, terms)

    def _compatible(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.algebra != self.algebra:
                raise FieldMismatchError(f"cannot combine elements of {self.algebra!r} and {other.algebra!r}")
            return other
        try:
            scalar = CycScalar.coerce(self.N, other)
        except TypeError:
            return None
        return self._new({self.algebra.unit(): scalar})

    # --------------------------------------------------------------- arithmetic
    def __add__(self, other):
        other = self._compatible(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._compatible(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._compatible(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "AlgebraElement":
        c = CycScalar.coerce(self.N, c)
        return self._new({m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._compatible(other)
        product = self.algebra.multiply_monomials
        acc: Dict[Monomial, CycScalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for m, c in product(m1, m2):
                    value = c12 * c
                    acc[m] = acc[m] + value if m in acc else value
        return self._new(acc)

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = self._new({self.algebra.unit(): 1})
        for _ in range(exponent):
            result = result * self
        return result

    def map_coefficients(self, fn: Callable[[CycScalar], CycScalar]) -> "AlgebraElement":
        return self._new({m: fn(c) for m, c in self.terms.items()})

    # --------------------------------------------------------------- inspection
    def coefficient(self, monomial: Monomial) -> CycScalar:
        c = self.terms.get(monomial)
        return c if c is not None else CycScalar.zero(self.N)

    def items(self) -> List[Tuple[Monomial, CycScalar]]:
        return sorted(self.terms.items(), key=lambda item: item[0])

    def __iter__(self) -> Iterator[Tuple[Monomial, CycScalar]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self.algebra == other.algebra and self.terms == other.terms
        try:
            other = self._compatible(other)
        except FieldMismatchError:
            return False
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.algebra, frozenset(self.terms.items())))

    def __str__(self) -> str:
        fmt = self.algebra.format_monomial
        return format_terms((fmt(m), c) for m, c in self.items())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def to_json(self) -> List[List[str]]:
        fmt = self.algebra.format_monomial
        return [[fmt(m), str(c)] for m, c in self.items()]


class TensorElement:
    """Element of a tensor product A_1 ⊗ ... ⊗ A_k of monomial algebras."""

    __slots__ = ("factors", "terms")

    def __init__(self, factors: Sequence[MonomialAlgebra], terms=None):
        self.factors = tuple(factors)
        N = self.factors[0].N
        clean = {}
        for key, c in (terms or {}).items():
            c = CycScalar.coerce(N, c)
            if c:
                clean[tuple(key)] = c
        self.terms = clean

    @property
    def N(self) -> int:
        return self.factors[0].N

    @classmethod
    def pure(cls, elements: Sequence[AlgebraElement]) -> "TensorElement":
        """The elementary tensor e_1 ⊗ ... ⊗ e_k."""
        terms = {(): CycScalar.one(elements[0].N)}
        for element in elements:
            nxt = {}
            for key, c in terms.items():
                for m, d in element.terms.items():
                    nxt[key + (m,)] = c * d
            terms = nxt
        return cls([e.algebra for e in elements], terms)

    @classmethod
    def one(cls, factors: Sequence[MonomialAlgebra]) -> "TensorElement":
        return cls(factors, {tuple(f.unit() for f in factors): 1})

    def _new(self, terms, factors=None) -> "TensorElement":
        return TensorElement(self.factors if factors is None else factors, terms)

    def _check(self, other: "TensorElement") -> None:
        if not isinstance(other, TensorElement) or other.factors != self.factors:
            raise FieldMismatchError("tensor elements live in different tensor products")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms[key] + c if key in terms else c
        return self._new(terms)

    def __neg__(self) -> "TensorElement":
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = CycScalar.coerce(self.N, c)
        return self._new({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return self.scale(other)
        self._check(other)
        products = [f.multiply_monomials for f in self.factors]
        acc = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                partial = [((), c1 * c2)]
                for product, m1, m2 in zip(products, k1, k2):
                    expanded = product(m1, m2)
                    if not expanded:
                        partial = []
                        break
                    partial = [(key + (m,), c * d) for key, c in partial for m, d in expanded]
                for key, c in partial:
                    acc[key] = acc[key] + c if key in acc else c
        return self._new(acc)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int) -> "TensorElement":
        result = TensorElement.one(self.factors)
        for _ in range(exponent):
            result = result * self
        return result

    def map_legs(self, maps: Sequence[Callable[[Monomial], Iterable[Tuple[tuple, CycScalar]]]], factors) -> "TensorElement":
        """
        Apply one linear map per tensor leg.

        Args:
            maps: For each leg, a function monomial -> iterable of (tuple of output monomials, coefficient);
                  the tuples are concatenated, so a leg may map to zero, one or several legs
            factors: Factors of the resulting tensor product

        Returns:
            The image tensor
        """
        acc = {}
        for key, c in self.terms.items():
            partial = [((), c)]
            for fn, m in zip(maps, key):
                partial = [(k + out, v * d) for k, v in partial for out, d in fn(m)]
                if not partial:
                    break
            for k, v in partial:
                acc[k] = acc[k] + v if k in acc else v
        return TensorElement(factors, acc)

    def permute(self, order: Sequence[int]) -> "TensorElement":
        """Reorder the legs: leg i of the result is leg order[i] of self."""
        factors = [self.factors[i] for i in order]
        return TensorElement(factors, {tuple(k[i] for i in order): c for k, c in self.terms.items()})

    def flip(self) -> "TensorElement":
        return self.permute([1, 0])

    def embed(self, positions: Sequence[int], factors: Sequence[MonomialAlgebra]) -> "TensorElement":
        """Place leg i at position positions[i] of a larger tensor product, units elsewhere."""
        units = [f.unit() for f in factors]
        terms = {}
        for key, c in self.terms.items():
            full = list(units)
            for position, m in zip(positions, key):
                full[position] = m
            terms[tuple(full)] = c
        return TensorElement(factors, terms)

    def coefficient(self, key) -> CycScalar:
        c = self.terms.get(tuple(key))
        return c if c is not None else CycScalar.zero(self.N)

    def items(self):
        return sorted(self.terms.items(), key=lambda item: item[0])

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.factors == other.factors and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.factors, frozenset(self.terms.items())))

    def __str__(self) -> str:
        items = []
        for key, c in self.items():
            text = " ⊗ ".join(f.format_monomial(m) for f, m in zip(self.factors, key))
            items.append((text, c))
        return format_terms(items)

    def __repr__(self) -> str:
        return f"TensorElement({self})"
