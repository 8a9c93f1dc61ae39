"""Pell equations x^2 - N*y^2 = 1: Brahmagupta composition and the Chakravala method.

The ``t_sequence`` helpers enumerate the solutions of n^2 - 8d*t^2 = 1, which
decide when (u-1)(v-2) = 2d*t^2 admits a rational bilinear law.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional

from .exactnum import (
    DomainError,
    QuadExt,
    integer_sqrt,
    is_square,
    is_squarefree,
    squarefree_decompose,
)


@dataclass(frozen=True)
class PellTriple:
    """An integer solution (x, y) of x^2 - N*y^2 = m."""

    x: int
    y: int
    m: int
    N: int

    def __post_init__(self) -> None:
        if self.x * self.x - self.N * self.y * self.y != self.m:
            raise DomainError(
                f"({self.x}, {self.y}) does not satisfy x^2 - {self.N}*y^2 = {self.m}"
            )


class FundamentalUnit(NamedTuple):
    """``alpha + beta*sqrt(radicand)``, the least unit > 1 of norm +1."""

    alpha: int
    beta: int
    radicand: int

    def as_quadext(self) -> QuadExt:
        s, f = squarefree_decompose(self.radicand)
        return QuadExt(Fraction(self.alpha), Fraction(self.beta * f), s)


class ChakravalaStep(NamedTuple):
    a: int
    b: int
    k: int
    x: int


def compose(s: PellTriple, t: PellTriple, sign: int = 1) -> PellTriple:
    """Brahmagupta's rule (a,b;m) * (c,d;n) -> (ac +- Nbd, ad +- bc; mn)."""
    if s.N != t.N:
        raise DomainError(f"cannot compose triples for N={s.N} and N={t.N}")
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    N = s.N
    return PellTriple(
        s.x * t.x + sign * N * s.y * t.y,
        s.x * t.y + sign * s.y * t.x,
        s.m * t.m,
        N,
    )


def _check_nonsquare(N: int) -> None:
    if N < 2 or is_square(N):
        raise DomainError(f"N must be a nonsquare integer >= 2, got {N}")


def _nearest_root(N: int) -> int:
    r = integer_sqrt(N)
    # round(sqrt(N)): r+1 is nearer iff N > r^2 + r
    return r + 1 if N - r * r > r else r


def chakravala_steps(N: int) -> Iterator[ChakravalaStep]:
    """Yield the (a, b, k, x) states of the cyclic method until k = +-1.

    The final yielded state has k in {1, -1} and x = 0 (no further multiplier).
    """
    _check_nonsquare(N)
    a = _nearest_root(N)
    b = 1
    k = a * a - N
    root = integer_sqrt(N)
    while k not in (1, -1):
        ak = abs(k)
        # x = -a * b^{-1} (mod |k|); gcd(b, k) = 1 is an invariant of the method
        x0 = (-a * pow(b, -1, ak)) % ak
        # candidates congruent to x0 on either side of sqrt(N)
        below = x0 + ((root - x0) // ak) * ak
        candidates = [c for c in (below, below + ak) if c > 0]
        x = min(candidates, key=lambda c: (abs(c * c - N), c))
        yield ChakravalaStep(a, b, k, x)
        a, b, k = (a * x + N * b) // ak, (a + b * x) // ak, (x * x - N) // k
        a, b = abs(a), abs(b)
    yield ChakravalaStep(a, b, k, 0)


def chakravala(N: int) -> PellTriple:
    """Fundamental solution of x^2 - N*y^2 = 1."""
    *_, last = chakravala_steps(N)
    triple = PellTriple(last.a, last.b, last.k, N)
    if triple.m == -1:
        triple = compose(triple, triple)
    return triple


@lru_cache(maxsize=256)
def fundamental_unit_norm_one(radicand: int) -> FundamentalUnit:
    sol = chakravala(radicand)
    return FundamentalUnit(sol.x, sol.y, radicand)


def _check_d(d: int) -> None:
    if d < 1 or d % 2 == 0 or not is_squarefree(d):
        raise DomainError(f"d must be a positive squarefree odd integer, got {d}")


def _split_power(z: QuadExt, d: int) -> tuple[int, int]:
    """(t, n) from z = n + 2t*sqrt(2d), asserting both are integers."""
    t = (z - z.conj()) / QuadExt(Fraction(0), Fraction(4), 2 * d)
    n = (z + z.conj()) / 2
    if t.q != 0 or n.q != 0 or t.p.denominator != 1 or n.p.denominator != 1:
        raise ArithmeticError(f"non-integral sequence term for d={d}: t={t}, n={n}")
    return int(t.p), int(n.p)


def _t_n_pairs(d: int) -> Iterator[tuple[int, int]]:
    """(t_m, n_m) for m = 1, 2, ... from successive powers of the unit of Z[sqrt(8d)]."""
    eps = fundamental_unit_norm_one(8 * d).as_quadext()
    z = eps
    while True:
        yield _split_power(z, d)
        z = z * eps


def t_sequence(d: int, m: int) -> tuple[int, int]:
    """Return (t, n) with n + 2t*sqrt(2d) = eps^m, eps the norm-one unit for radicand 8d.

    For d = 1 this is t = ((3+2r)^m - (3-2r)^m) / (4r), n = ((3+2r)^m + (3-2r)^m) / 2
    with r = sqrt(2); always n^2 - 8d*t^2 = 1.
    """
    _check_d(d)
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    eps = fundamental_unit_norm_one(8 * d).as_quadext()
    return _split_power(eps**m, d)


def is_in_t_sequence(t: int, d: int) -> Optional[int]:
    """Index m with t_sequence(d, m)[0] == t, or None.

    The walk along the sequence is cross-checked against the square test on 8d*t^2 + 1.
    """
    _check_d(d)
    if t < 1:
        raise DomainError(f"t must be positive, got {t}")
    found = None
    for m, (tm, _) in enumerate(_t_n_pairs(d), start=1):
        if tm >= t:
            found = m if tm == t else None
            break
    if (found is not None) != is_square(8 * d * t * t + 1):
        raise ArithmeticError(f"sequence walk and square test disagree for t={t}, d={d}")
    return found
