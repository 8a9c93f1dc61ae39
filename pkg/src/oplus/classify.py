"""Integer classification of when (u, v) admits a rational bilinear group law.

For integers u, v a rational bilinear law exists iff 9 - 8u - 4v + 4uv = n^2,
equivalently (u-1)(v-2) = (n^2 - 1)/4. Each ``classify_*`` function covers one
family of (u, v) singled out by the shape of (u-1)(v-2); ``classify`` picks the
first family that applies and falls back to the discriminant test.

The Mordell (k = 1) and Ramanujan-Nagell conclusions are hard-coded here;
``mordell_search`` and ``ramanujan_nagell_search`` re-derive them by bounded search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .exactnum import (
    DomainError,
    factorize,
    integer_cbrt,
    integer_sqrt,
    is_prime,
    is_square,
    squarefree_decompose,
)
from .grouplaw import Bilinear, discriminant, solve
from .pell import is_in_t_sequence, t_sequence

CASES = (
    "affine",
    "prime_case",
    "near_diagonal",
    "pell_2t2",
    "pell_2dt2",
    "mordell_2t3",
    "ramanujan_nagell",
    "general",
)

# Nagell (1948): the only positive solutions of n^2 + 7 = 2^t
RAMANUJAN_NAGELL_SOLUTIONS = ((1, 3), (3, 4), (5, 5), (11, 7), (181, 15))
RAMANUJAN_NAGELL_EXPONENTS = frozenset(t for _, t in RAMANUJAN_NAGELL_SOLUTIONS)

# all integral points on y^2 = x^3 + 1
MORDELL_K1_SOLUTIONS = ((-1, 0), (0, 1), (0, -1), (2, 3), (2, -3))

DEFAULT_MORDELL_BOUND = 10**5


@dataclass(frozen=True)
class Classification:
    case_name: str
    truth: bool
    witness: Optional[dict[str, Any]] = None

    def __post_init__(self) -> None:
        if self.case_name not in CASES:
            raise ValueError(f"unknown case {self.case_name!r}")
        if self.truth and self.witness is None:
            raise ValueError("a true classification needs a witness")


@dataclass(frozen=True)
class MordellSolutionSet:
    k: int
    bound: int
    solutions: list[tuple[int, int]] = field(default_factory=list)


def _as_int(x, name: str) -> int:
    if isinstance(x, bool):
        raise DomainError(f"{name} must be an integer")
    if isinstance(x, int):
        return x
    f = Fraction(x)
    if f.denominator != 1:
        raise DomainError(f"{name} must be an integer, got {x}")
    return f.numerator


def _product(u: int, v: int) -> int:
    return (u - 1) * (v - 2)


def _true_witness(u: int, v: int, **extra) -> dict[str, Any]:
    disc = int(discriminant(u, v))
    witness = {"n": integer_sqrt(disc)}
    witness.update(extra)
    return witness


def precheck(u: int, v: int) -> bool:
    """Necessary conditions: (u-1)(v-2) is even and nonnegative."""
    prod = _product(_as_int(u, "u"), _as_int(v, "v"))
    return prod % 2 == 0 and prod >= 0


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def sigma0(n: int) -> int:
    """Number of positive divisors of n."""
    count = 1
    for e in factorize(n).values():
        count *= e + 1
    return count


def enumerate_uv_for_n(n: int, include_negative_divisors: bool = False) -> list[tuple[int, int]]:
    """All (u, v) with (u-1)(v-2) = (n^2-1)/4, one pair per divisor of the right side.

    Positive divisors come first (ascending), then the negative ones when requested.
    """
    n = _as_int(n, "n")
    if n < 3 or n % 2 == 0:
        raise DomainError(f"n must be an odd integer >= 3, got {n}")
    rhs = (n * n - 1) // 4
    divs = divisors(rhs)
    pairs = [(d + 1, rhs // d + 2) for d in divs]
    if include_negative_divisors:
        pairs += [(-d + 1, -(rhs // d) + 2) for d in divs]
    return pairs


def classify_prime_case(u: int, v: int) -> Classification:
    """u-1 and v-2 both prime: true only for (4, 4) and (3, 5)."""
    u, v = _as_int(u, "u"), _as_int(v, "v")
    if not (is_prime(u - 1) and is_prime(v - 2)):
        raise DomainError(f"u-1={u - 1} and v-2={v - 2} must both be prime")
    if (u, v) in ((4, 4), (3, 5)):
        return Classification("prime_case", True, {"n": 5})
    return Classification("prime_case", False)


def classify_near_diagonal(u: int, v: int) -> Classification:
    u, v = _as_int(u, "u"), _as_int(v, "v")
    if abs(u - v + 1) != 1:
        raise DomainError(f"|u - v + 1| must be 1, got {abs(u - v + 1)}")
    n = abs(2 * u - 3) if u == v else abs(2 * v - 5)
    return Classification("near_diagonal", True, {"n": n})


def _pell_t(prod: int, d: int) -> Optional[int]:
    if prod <= 0 or prod % (2 * d):
        return None
    q = prod // (2 * d)
    if not is_square(q):
        return None
    return integer_sqrt(q)


def classify_pell(u: int, v: int, d: int = 1) -> Classification:
    """(u-1)(v-2) = 2d*t^2 with t > 0: true iff t lies on the Pell sequence for 8d."""
    u, v, d = _as_int(u, "u"), _as_int(v, "v"), _as_int(d, "d")
    t = _pell_t(_product(u, v), d) if d >= 1 else None
    if t is None:
        raise DomainError(f"(u-1)(v-2) = {_product(u, v)} is not 2*{d}*t^2 with t > 0")
    m = is_in_t_sequence(t, d)
    case = "pell_2t2" if d == 1 else "pell_2dt2"
    if m is None:
        return Classification(case, False, {"t": t, "d": d})
    _, n = t_sequence(d, m)
    return Classification(case, True, {"n": n, "t": t, "d": d, "m": m})


def mordell_search(k: int, bound: int = DEFAULT_MORDELL_BOUND) -> MordellSolutionSet:
    """Every integral (x, y) with y^2 = x^3 + k and |x| <= bound."""
    if bound < 1:
        raise DomainError(f"bound must be positive, got {bound}")
    sols: list[tuple[int, int]] = []
    for x in range(-bound, bound + 1):
        rhs = x * x * x + k
        if rhs < 0:
            continue
        y = integer_sqrt(rhs)
        if y * y == rhs:
            sols.append((x, y))
            if y:
                sols.append((x, -y))
    return MordellSolutionSet(k, bound, sols)


def classify_mordell_2t3(u: int, v: int) -> Classification:
    """(u-1)(v-2) = 2t^3: true iff t is 0 or 1, since n^2 = (2t)^3 + 1."""
    u, v = _as_int(u, "u"), _as_int(v, "v")
    prod = _product(u, v)
    t = integer_cbrt(prod // 2) if prod % 2 == 0 else None
    if t is None:
        raise DomainError(f"(u-1)(v-2) = {prod} is not of the form 2t^3")
    if t not in (0, 1):
        return Classification("mordell_2t3", False, {"t": t})
    laws = [law for law in solve(u, v).rational_laws if isinstance(law, Bilinear)]
    return Classification("mordell_2t3", True, _true_witness(u, v, t=t, laws=laws))


def ramanujan_nagell_search(t_max: int) -> list[tuple[int, int]]:
    """Positive (n, t) with n^2 + 7 = 2^t and t <= t_max."""
    if t_max < 3:
        raise DomainError(f"t_max must be at least 3, got {t_max}")
    out = []
    for t in range(3, t_max + 1):
        rhs = (1 << t) - 7
        n = integer_sqrt(rhs)
        if n * n == rhs:
            out.append((n, t))
    return out


def _ramanujan_nagell_t(prod: int) -> Optional[int]:
    """t > 1 with prod = 2(2^(t-3) - 1), or None."""
    if prod == -1:
        # t = 2: 2(1/2 - 1) = -1
        return 2
    if prod % 2:
        return None
    q = prod // 2 + 1
    if q < 1 or q & (q - 1):
        return None
    return q.bit_length() - 1 + 3


def classify_ramanujan_nagell(u: int, v: int) -> Classification:
    """(u-1)(v-2) = 2(2^(t-3) - 1): true iff t is in {3, 4, 5, 7, 15}."""
    u, v = _as_int(u, "u"), _as_int(v, "v")
    t = _ramanujan_nagell_t(_product(u, v))
    if t is None:
        raise DomainError(f"(u-1)(v-2) = {_product(u, v)} is not 2(2^(t-3) - 1)")
    if t not in RAMANUJAN_NAGELL_EXPONENTS:
        return Classification("ramanujan_nagell", False, {"t": t})
    n = dict((tt, nn) for nn, tt in RAMANUJAN_NAGELL_SOLUTIONS)[t]
    return Classification("ramanujan_nagell", True, {"n": n, "t": t})


def _pell_d(prod: int) -> Optional[tuple[int, int]]:
    """(d, t) with prod = 2d*t^2, d odd squarefree and t > 0; d is unique when it exists."""
    if prod <= 0 or prod % 2:
        return None
    s, f = squarefree_decompose(prod // 2)
    if s % 2 == 0:
        return None
    return s, f


def classify(u: int, v: int) -> Classification:
    """Classify (u, v) by the first applicable family, else by the discriminant.

    Order: affine, prime_case, near_diagonal, ramanujan_nagell, mordell_2t3,
    pell_2t2, pell_2dt2, general. Truth is always in the bilinear sense.
    """
    u, v = _as_int(u, "u"), _as_int(v, "v")
    prod = _product(u, v)

    if v - u == 2:
        # discriminant is (2u - 1)^2 here, so a bilinear law exists as well
        return Classification("affine", True, {"n": abs(2 * u - 1)})
    if is_prime(u - 1) and is_prime(v - 2):
        return classify_prime_case(u, v)
    if abs(u - v + 1) == 1:
        return classify_near_diagonal(u, v)
    if _ramanujan_nagell_t(prod) is not None:
        return classify_ramanujan_nagell(u, v)
    if prod % 2 == 0 and integer_cbrt(prod // 2) is not None:
        return classify_mordell_2t3(u, v)
    dt = _pell_d(prod)
    if dt is not None:
        return classify_pell(u, v, dt[0])

    if not precheck(u, v):
        return Classification("general", False)
    disc = int(discriminant(u, v))
    if is_square(disc):
        return Classification("general", True, {"n": integer_sqrt(disc)})
    return Classification("general", False)
