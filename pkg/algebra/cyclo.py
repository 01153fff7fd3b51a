"""
Exact arithmetic in the cyclotomic field Q(q), q a primitive N-th root of unity.

Elements are kept as integer coefficient vectors over a common positive
denominator, reduced modulo the N-th cyclotomic polynomial, so equality of two
scalars is equality of their stored data.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

import sympy
from pydantic import BaseModel, ConfigDict, field_validator

from algebra.errors import FieldMismatchError, InvalidRootError, ScalarDivisionError

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]

_Q = sympy.Symbol("q")


def check_root(N) -> int:
    """
    Validate the order of the root of unity.

    Args:
        N: Candidate order

    Returns:
        N itself when it is an odd integer >= 3
    """
    if isinstance(N, bool) or not isinstance(N, int) or N < 3 or N % 2 == 0:
        raise InvalidRootError(N)
    return N


class RootParams(BaseModel):
    """The order N of the primitive root of unity q."""

    model_config = ConfigDict(frozen=True)

    N: int = 3

    @field_validator("N")
    @classmethod
    def _odd_order(cls, value: int) -> int:
        return check_root(value)


class CyclotomicField:
    """Reduction data for Q(q) with q a primitive N-th root of unity."""

    def __init__(self, N: int):
        self.N = check_root(N)
        poly = sympy.Poly(sympy.cyclotomic_poly(N, _Q), _Q)
        ascending = [int(c) for c in reversed(poly.all_coeffs())]
        self.degree = len(ascending) - 1
        self.modulus = sympy.Poly(poly.as_expr(), _Q, domain=sympy.QQ)

        # q^k as integer vectors for 0 <= k < 2N
        d = self.degree
        vector = [0] * d
        vector[0] = 1
        powers = []
        for _ in range(2 * N):
            powers.append(tuple(vector))
            top = vector[-1]
            vector = [0] + vector[:-1]
            if top:
                for i in range(d):
                    vector[i] -= top * ascending[i]
        self.powers: Tuple[Tuple[int, ...], ...] = tuple(powers)
        # complex conjugation q^i -> q^{-i}
        self.conjugates = tuple(self.powers[(-i) % N] for i in range(d))
        logger.debug("cyclotomic field N=%d of degree %d ready", N, d)

    def reduce(self, coefficients: Sequence[int]) -> List[int]:
        """
        Reduce an integer coefficient list modulo the cyclotomic polynomial.

        Args:
            coefficients: Coefficients of 1, q, q^2, ...

        Returns:
            List of length degree
        """
        d = self.degree
        out = list(coefficients[:d]) + [0] * max(0, d - len(coefficients))
        for k in range(d, len(coefficients)):
            c = coefficients[k]
            if c:
                row = self.powers[k % self.N]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return out


@lru_cache(maxsize=None)
def cyclotomic_field(N: int) -> CyclotomicField:
    return CyclotomicField(N)


def field_degree(N: int) -> int:
    return cyclotomic_field(N).degree


class CycScalar:
    """An element of Q(q); immutable."""

    __slots__ = ("N", "nums", "den", "_hash")

    def __init__(self, N: int, nums: Sequence[int], den: int = 1):
        # nums must already have length degree(N)
        if den < 0:
            nums = [-n for n in nums]
            den = -den
        common = gcd(den, *nums)
        if not any(nums):
            nums, den = [0] * len(nums), 1
        elif common > 1:
            nums = [n // common for n in nums]
            den //= common
        self.N = N
        self.nums = tuple(nums)
        self.den = den
        self._hash = None

    # ---------------------------------------------------------------- builders
    @classmethod
    def from_rational(cls, N: int, value: Rational) -> "CycScalar":
        field = cyclotomic_field(N)
        value = Fraction(value)
        nums = [0] * field.degree
        nums[0] = value.numerator
        return cls(N, nums, value.denominator)

    @classmethod
    def q_power(cls, N: int, k: int = 1) -> "CycScalar":
        field = cyclotomic_field(N)
        return cls(N, field.powers[k % N], 1)

    @classmethod
    def from_coefficients(cls, N: int, coefficients: Iterable[Rational]) -> "CycScalar":
        """
        Build sum_i coefficients[i] q^i.

        Args:
            N: Order of q
            coefficients: Rational coefficients of 1, q, q^2, ... (any length)

        Returns:
            The reduced scalar
        """
        fractions = [Fraction(c) for c in coefficients]
        den = 1
        for f in fractions:
            den = den * f.denominator // gcd(den, f.denominator)
        ints = [f.numerator * (den // f.denominator) for f in fractions]
        return cls(N, cyclotomic_field(N).reduce(ints), den)

    @classmethod
    def zero(cls, N: int) -> "CycScalar":
        return cls.from_rational(N, 0)

    @classmethod
    def one(cls, N: int) -> "CycScalar":
        return cls.from_rational(N, 1)

    @classmethod
    def coerce(cls, N: int, value) -> "CycScalar":
        if isinstance(value, CycScalar):
            if value.N != N:
                raise FieldMismatchError(f"scalar over N={value.N} used where N={N} is expected")
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls.from_rational(N, value)
        raise TypeError(f"cannot interpret {value!r} as a scalar")

    def _other(self, other):
        if isinstance(other, CycScalar):
            if other.N != self.N:
                raise FieldMismatchError(f"cannot combine scalars over N={self.N} and N={other.N}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycScalar.from_rational(self.N, other)
        return None

    # -------------------------------------------------------------- arithmetic
    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return CycScalar(self.N, [a + b for a, b in zip(self.nums, other.nums)], self.den)
        return CycScalar(
            self.N,
            [a * other.den + b * self.den for a, b in zip(self.nums, other.nums)],
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.N, [-a for a in self.nums], self.den)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if not self or not other:
            return CycScalar.zero(self.N)
        a, b = self.nums, other.nums
        conv = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return CycScalar(self.N, cyclotomic_field(self.N).reduce(conv), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if not self:
            raise ScalarDivisionError("division by zero in Q(q)")
        if self.is_rational():
            return CycScalar.from_rational(self.N, Fraction(self.den, self.nums[0]))
        field = cyclotomic_field(self.N)
        poly = sympy.Poly(list(reversed(self.nums)), _Q, domain=sympy.QQ)
        inverse = poly.invert(field.modulus)
        coefficients = [Fraction(int(c.p), int(c.q)) for c in reversed(inverse.all_coeffs())]
        return CycScalar.from_coefficients(self.N, coefficients) * self.den

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "CycScalar":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base, exponent = self.inverse(), -exponent
        result = CycScalar.one(self.N)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "CycScalar":
        """Complex conjugation, the Galois automorphism q -> q^{-1}."""
        field = cyclotomic_field(self.N)
        out = [0] * field.degree
        for c, row in zip(self.nums, field.conjugates):
            if c:
                for i, t in enumerate(row):
                    if t:
                        out[i] += c * t
        return CycScalar(self.N, out, self.den)

    # ------------------------------------------------------------- inspection
    def __bool__(self) -> bool:
        return any(self.nums)

    def is_zero(self) -> bool:
        return not self

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def coefficients(self) -> List[Fraction]:
        return [Fraction(n, self.den) for n in self.nums]

    def __eq__(self, other) -> bool:
        if isinstance(other, CycScalar):
            return self.N == other.N and self.den == other.den and self.nums == other.nums
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational() and Fraction(self.nums[0], self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.N, self.nums, self.den))
        return self._hash

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coefficients()):
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                monomial = "q" if i == 1 else f"q^{i}"
                body = monomial if abs(c) == 1 else f"{abs(c)}*{monomial}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts) or "0"

    def __repr__(self) -> str:
        return f"CycScalar(N={self.N}, {self})"


def qnumber(N: int, n: int) -> CycScalar:
    """
    The q-number [n] = (q^n - q^{-n}) / (q - q^{-1}).

    Args:
        N: Order of q
        n: Any integer

    Returns:
        [n] computed as the finite sum q^{n-1} + q^{n-3} + ... + q^{1-n}
    """
    if n < 0:
        return -qnumber(N, -n)
    total = CycScalar.zero(N)
    for j in range(n):
        total = total + CycScalar.q_power(N, n - 1 - 2 * j)
    return total


def qfactorial(N: int, n: int) -> CycScalar:
    result = CycScalar.one(N)
    for k in range(1, n + 1):
        result = result * qnumber(N, k)
    return result
