"""Exact integers, rationals and elements of real quadratic fields Q(sqrt(d)).

Rationals are plain :class:`fractions.Fraction` values. :class:`QuadExt` holds
``p + q*sqrt(d)`` with rational ``p, q`` and a squarefree radicand ``d >= 2``.
Nothing in here touches floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import NamedTuple, Union

Rational = Fraction


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def integer_sqrt(n: int) -> int:
    """Return floor(sqrt(n)) for a nonnegative integer."""
    if n < 0:
        raise DomainError(f"integer_sqrt of negative number {n}")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def integer_cbrt(n: int) -> int | None:
    """Exact integer cube root of ``n`` (any sign), or None if ``n`` is not a cube."""
    m = abs(n)
    lo, hi = 0, 1 << (m.bit_length() // 3 + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**3 <= m:
            lo = mid
        else:
            hi = mid - 1
    if lo**3 != m:
        return None
    return lo if n >= 0 else -lo


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` by trial division."""
    if n < 1:
        raise DomainError(f"cannot factorize {n}")
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    p = 3
    while p * p <= n:
        if n % p == 0:
            return False
        p += 2
    return True


class SquarefreeDecomposition(NamedTuple):
    """``n == f**2 * s`` with ``s`` squarefree."""

    s: int
    f: int


def squarefree_decompose(n: int) -> SquarefreeDecomposition:
    if n < 1:
        raise DomainError(f"squarefree_decompose needs a positive integer, got {n}")
    s = f = 1
    for p, e in factorize(n).items():
        f *= p ** (e // 2)
        if e % 2:
            s *= p
    return SquarefreeDecomposition(s, f)


@lru_cache(maxsize=4096)
def is_squarefree(n: int) -> bool:
    return n >= 1 and squarefree_decompose(n).f == 1


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Square root of ``x`` if it is the square of a rational, else None."""
    x = Fraction(x)
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    if is_square(num) and is_square(den):
        return Fraction(math.isqrt(num), math.isqrt(den))
    return None


@dataclass(frozen=True, eq=False)
class QuadExt:
    """The number ``p + q*sqrt(d)`` in the real quadratic field Q(sqrt(d))."""

    p: Fraction
    q: Fraction
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))
        if self.d < 2 or not is_squarefree(self.d):
            raise DomainError(f"radicand must be squarefree and >= 2, got {self.d}")

    def _coerce(self, other) -> QuadExt | None:
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise DomainError(f"mismatched radicands {self.d} and {other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(Fraction(other), Fraction(0), self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.p + o.p, self.q + o.q, self.d)

    __radd__ = __add__

    def __neg__(self) -> QuadExt:
        return QuadExt(-self.p, -self.q, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.p - o.p, self.q - o.q, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(
            self.p * o.p + self.d * self.q * o.q,
            self.p * o.q + self.q * o.p,
            self.d,
        )

    __rmul__ = __mul__

    def conj(self) -> QuadExt:
        return QuadExt(self.p, -self.q, self.d)

    def norm(self) -> Fraction:
        return self.p * self.p - self.d * self.q * self.q

    def reciprocal(self) -> QuadExt:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(%d))" % self.d)
        return QuadExt(self.p / n, -self.q / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __pow__(self, m: int) -> QuadExt:
        if not isinstance(m, int) or m < 0:
            raise DomainError(f"exponent must be a nonnegative integer, got {m!r}")
        result = QuadExt(Fraction(1), Fraction(0), self.d)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def is_rational(self) -> bool:
        return self.q == 0

    def sign(self) -> int:
        """Sign of the real number ``p + q*sqrt(d)``, computed exactly."""
        sp = (self.p > 0) - (self.p < 0)
        sq = (self.q > 0) - (self.q < 0)
        if sp == sq or sq == 0:
            return sp
        if sp == 0:
            return sq
        # opposite signs: compare p^2 with d*q^2
        diff = self.p * self.p - self.d * self.q * self.q
        return sp if diff > 0 else (sq if diff < 0 else 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExt):
            if self.q == 0 and other.q == 0:
                return self.p == other.p
            return self.d == other.d and self.p == other.p and self.q == other.q
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.d))

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __bool__(self) -> bool:
        return self.p != 0 or self.q != 0

    def __str__(self) -> str:
        return format_coefficient(self)

    def __repr__(self) -> str:
        return f"QuadExt({self.p!s}, {self.q!s}, {self.d})"


Coefficient = Union[Fraction, QuadExt]


def _check_same_d(x: QuadExt, y: QuadExt) -> None:
    if x.d != y.d:
        raise DomainError(f"mismatched radicands {x.d} and {y.d}")


def quad_add(x: QuadExt, y: QuadExt) -> QuadExt:
    _check_same_d(x, y)
    return x + y


def quad_sub(x: QuadExt, y: QuadExt) -> QuadExt:
    _check_same_d(x, y)
    return x - y


def quad_mul(x: QuadExt, y: QuadExt) -> QuadExt:
    _check_same_d(x, y)
    return x * y


def quad_conj(z: QuadExt) -> QuadExt:
    return z.conj()


def quad_pow(z: QuadExt, m: int) -> QuadExt:
    return z**m


def quad_norm(z: QuadExt) -> Fraction:
    return z.norm()


def collapse(z):
    """Demote a QuadExt with zero surd part to a Fraction; pass anything else through."""
    if isinstance(z, QuadExt):
        return z.p if z.q == 0 else z
    return Fraction(z)


def format_coefficient(z) -> str:
    """Render as ``p/q`` or ``p/q + r/s*sqrt(d)`` (denominators of 1 omitted)."""
    if isinstance(z, QuadExt):
        if z.q == 0:
            return str(z.p)
        q = z.q
        sign = "-" if q < 0 else "+"
        surd = f"sqrt({z.d})" if abs(q) == 1 else f"{abs(q)}*sqrt({z.d})"
        if z.p == 0:
            return f"-{surd}" if q < 0 else surd
        return f"{z.p} {sign} {surd}"
    return str(Fraction(z))


_COEFF_RE = re.compile(
    r"""^\s*
    (?:(?P<p>[+-]?\d+(?:/\d+)?)\s*(?=[+-]|$))?
    (?:(?P<sign>[+-])?\s*(?P<q>\d+(?:/\d+)?)?\s*\*?\s*sqrt\(\s*(?P<d>\d+)\s*\))?
    \s*$""",
    re.VERBOSE,
)


def parse_coefficient(text: str) -> Coefficient:
    """Inverse of :func:`format_coefficient`."""
    m = _COEFF_RE.match(text)
    if m is None or (m.group("p") is None and m.group("d") is None):
        raise ValueError(f"cannot parse coefficient {text!r}")
    p = Fraction(m.group("p")) if m.group("p") is not None else Fraction(0)
    if m.group("d") is None:
        return p
    q = Fraction(m.group("q")) if m.group("q") is not None else Fraction(1)
    if m.group("sign") == "-":
        q = -q
    return collapse(QuadExt(p, q, int(m.group("d"))))
