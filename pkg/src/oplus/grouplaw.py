"""Polynomial group laws ``x (+) y = P(x, y)`` and the constraint system 1(+)1=u, 2(+)2=v.

Associativity forces P to be bilinear and symmetric, which leaves two families:

* ``Affine(c)``:   P = x + y + c, isomorphic to the additive group of the field;
* ``Bilinear(a, b)``: P = a*x*y + b*x + b*y + (b**2 - b)/a with a != 0, isomorphic
  to the multiplicative group via ``f(x) = a*x + b``. The point ``-b/a`` (sent to 0
  by f) is excluded from the carrier set and absorbs everything under P.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .exactnum import (
    Coefficient,
    DomainError,
    QuadExt,
    collapse,
    format_coefficient,
    rational_sqrt,
    squarefree_decompose,
)


@dataclass(frozen=True)
class ConstraintPair:
    u: Fraction
    v: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))


@dataclass(frozen=True)
class Affine:
    c: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", Fraction(self.c))


@dataclass(frozen=True)
class Bilinear:
    a: Coefficient
    b: Coefficient

    def __post_init__(self) -> None:
        if not self.a:
            raise DomainError("bilinear law needs a != 0")

    @property
    def c(self) -> Coefficient:
        return collapse((self.b * self.b - self.b) / self.a)


GroupLaw = Union[Affine, Bilinear]


def is_rational_law(law: GroupLaw) -> bool:
    if isinstance(law, Affine):
        return True
    return not isinstance(law.a, QuadExt) and not isinstance(law.b, QuadExt)


@dataclass(frozen=True)
class SolveResult:
    pair: ConstraintPair
    discriminant: Fraction
    field_radicand: Optional[int]
    laws: list[GroupLaw] = field(default_factory=list)

    @property
    def rational_laws(self) -> list[GroupLaw]:
        return [law for law in self.laws if is_rational_law(law)]


def discriminant(u, v) -> Fraction:
    """``9 - 8u - 4v + 4uv``; the bilinear solutions are rational iff this is a rational square."""
    u, v = Fraction(u), Fraction(v)
    return 9 - 8 * u - 4 * v + 4 * u * v


def _sqrt_in_field(disc: Fraction) -> tuple[Coefficient, Optional[int]]:
    """Return (sqrt(disc), radicand) with radicand None when the root is rational."""
    r = rational_sqrt(disc)
    if r is not None:
        return r, None
    # sqrt(n/m) = sqrt(n*m)/m = f*sqrt(s)/m
    num, den = disc.numerator, disc.denominator
    s, f = squarefree_decompose(num * den)
    return QuadExt(Fraction(0), Fraction(f, den), s), s


def solve(u, v) -> SolveResult:
    """All affine and bilinear laws with P(1,1) = u and P(2,2) = v.

    Laws are ordered affine first, then the bilinear law from the ``+`` root of
    the discriminant, then the ``-`` root. A root with a == 0 is dropped (that
    case is exactly the affine one). A negative discriminant gives no bilinear laws.
    """
    pair = ConstraintPair(u, v)
    u, v = pair.u, pair.v
    disc = discriminant(u, v)
    laws: list[GroupLaw] = []
    if v - u == 2:
        laws.append(Affine(u - 2))
    if disc < 0:
        return SolveResult(pair, disc, None, laws)

    root, radicand = _sqrt_in_field(disc)
    centre = u + v - 3
    roots = [centre + root] if disc == 0 else [centre + root, centre - root]
    for a in roots:
        a = collapse(a)
        if not a:
            continue
        b = collapse((-3 * a - u + v) / 2)
        laws.append(Bilinear(a, b))
    return SolveResult(pair, disc, radicand, laws)


def is_true_over_Q(u, v, bilinear_only: bool = False) -> bool:
    """Whether some law with rational coefficients gives 1(+)1=u and 2(+)2=v.

    With ``bilinear_only`` the affine family is ignored, which is the reading
    used by the integer classification theorems.
    """
    result = solve(u, v)
    for law in result.rational_laws:
        if bilinear_only and isinstance(law, Affine):
            continue
        return True
    return False


def evaluate(law: GroupLaw, x, y) -> Coefficient:
    if isinstance(law, Affine):
        return collapse(x + y + law.c)
    a, b = law.a, law.b
    return collapse(a * x * y + b * x + b * y + law.c)


def identity(law: GroupLaw) -> Coefficient:
    if isinstance(law, Affine):
        return -law.c
    return collapse((1 - law.b) / law.a)


def annihilator(law: GroupLaw) -> Optional[Coefficient]:
    if isinstance(law, Affine):
        return None
    return collapse(-law.b / law.a)


def isomorphism_image(law: GroupLaw, x) -> Coefficient:
    """``f(x) = a*x + b``, the map onto the multiplicative group."""
    if not isinstance(law, Bilinear):
        raise DomainError("isomorphism_image is defined for bilinear laws only")
    return collapse(law.a * x + law.b)


def inverse(law: GroupLaw, x) -> Coefficient:
    if isinstance(law, Affine):
        return collapse(-x - 2 * law.c)
    fx = isomorphism_image(law, x)
    if not fx:
        raise DomainError("annihilator has no inverse")
    return collapse((1 / fx - law.b) / law.a)


def verify_coefficient_constraint(a, b, c) -> bool:
    """The associativity condition on a*x*y + b*x + b*y + c."""
    if not a:
        return b == 1
    return a * c == b * b - b


def format_law(law: GroupLaw) -> str:
    """Canonical polynomial text, e.g. ``24*x*y - 39*x - 39*y + 65``."""
    if isinstance(law, Affine):
        terms = [(Fraction(1), "x"), (Fraction(1), "y"), (law.c, "")]
    else:
        terms = [(law.a, "x*y"), (law.b, "x"), (law.b, "y"), (law.c, "")]

    out = ""
    for coeff, mono in terms:
        if not coeff:
            continue
        if isinstance(coeff, QuadExt):
            text, sign = f"({format_coefficient(coeff)})", "+"
            body = f"{text}*{mono}" if mono else text
        else:
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
        if not out:
            out = body if sign == "+" else f"-{body}"
        else:
            out += f" {sign} {body}"
    return out or "0"
