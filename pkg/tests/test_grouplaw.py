import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oplus.exactnum import DomainError, QuadExt
from oplus.grouplaw import (
    Affine,
    Bilinear,
    annihilator,
    discriminant,
    evaluate,
    format_law,
    identity,
    inverse,
    is_rational_law,
    is_true_over_Q,
    isomorphism_image,
    solve,
    verify_coefficient_constraint,
)

from conftest import fraction_points, nonzero_fractions, small_fractions

F = Fraction
LAW_2_4 = Bilinear(F(6), F(-8))
LAW_11_5 = Bilinear(F(24), F(-39))


def _sympy_laws(u, v):
    """Independent oracle: real (a, b), a != 0, solving P(1,1)=u, P(2,2)=v symbolically."""
    a, b = sympy.symbols("a b")
    c = (b**2 - b) / a
    P = lambda x, y: a * x * y + b * x + b * y + c  # noqa: E731
    sols = sympy.solve(
        [sympy.together(P(1, 1) - u).as_numer_denom()[0], sympy.together(P(2, 2) - v).as_numer_denom()[0]],
        [a, b],
        dict=True,
    )
    return {(sympy.nsimplify(s[a]), sympy.nsimplify(s[b])) for s in sols if s[a] != 0 and s[a].is_real}


def _to_sympy(z):
    if isinstance(z, QuadExt):
        return sympy.Rational(z.p.numerator, z.p.denominator) + sympy.Rational(
            z.q.numerator, z.q.denominator
        ) * sympy.sqrt(z.d)
    return sympy.Rational(z.numerator, z.denominator)


@pytest.mark.parametrize(
    "u, v, disc", [(11, 5, 121), (11, 22, 801), (F(3, 2), F(3, 2), 0), (2, 4, 9)]
)
def test_discriminant(u, v, disc):
    assert discriminant(u, v) == disc


def test_solve_11_5():
    res = solve(11, 5)
    assert res.field_radicand is None
    assert res.laws == [Bilinear(F(24), F(-39)), Bilinear(F(2), F(-6))]
    assert format_law(res.laws[0]) == "24*x*y - 39*x - 39*y + 65"
    assert format_law(res.laws[1]) == "2*x*y - 6*x - 6*y + 21"


def test_solve_11_22():
    res = solve(11, 22)
    assert res.field_radicand == 89
    plus, minus = res.laws
    assert plus.a == QuadExt(F(30), F(3), 89)
    assert minus.a == QuadExt(F(30), F(-3), 89)
    for law in res.laws:
        assert law.b == (11 - 3 * law.a) / 2


def test_solve_2_4():
    res = solve(2, 4)
    assert res.laws == [Affine(F(0)), LAW_2_4]
    assert [format_law(law) for law in res.laws] == ["x + y", "6*x*y - 8*x - 8*y + 12"]


def test_solve_negative_discriminant():
    # 9 - 8u - 4v + 4uv at (0, 3): 9 - 12 = -3
    res = solve(0, 3)
    assert res.discriminant == -3
    assert res.laws == [] and res.field_radicand is None


def test_solve_rational_constraints():
    res = solve(F(1, 2), F(5, 2))
    assert any(isinstance(law, Affine) for law in res.laws)
    for law in res.laws:
        assert evaluate(law, 1, 1) == F(1, 2)
        assert evaluate(law, 2, 2) == F(5, 2)


@pytest.mark.parametrize("u, v", [(11, 5), (11, 22), (2, 4), (3, 7), (F(3, 2), 7), (F(1, 3), 4), (-5, 9)])
def test_solve_matches_sympy(u, v):
    ours = {(_to_sympy(l.a), _to_sympy(l.b)) for l in solve(u, v).laws if isinstance(l, Bilinear)}
    theirs = _sympy_laws(sympy.nsimplify(u), sympy.nsimplify(v))
    # compare numerically-exact via simplification of differences
    assert len(ours) == len(theirs)
    for a1, b1 in ours:
        assert any(sympy.simplify(a1 - a2) == 0 and sympy.simplify(b1 - b2) == 0 for a2, b2 in theirs)


@pytest.mark.parametrize("u, v, expected", [(11, 5, True), (11, 22, False), (4, 4, True)])
def test_is_true_over_Q(u, v, expected):
    assert is_true_over_Q(u, v) is expected


def test_bilinear_only_flag():
    # (u, u+2) with u = 1/2: the only bilinear root is a = 0, so only the affine law exists
    assert is_true_over_Q(F(1, 2), F(5, 2))
    assert not is_true_over_Q(F(1, 2), F(5, 2), bilinear_only=True)


def test_evaluate_examples():
    assert evaluate(LAW_2_4, 1, 1) == 2
    assert evaluate(LAW_2_4, 2, 2) == 4
    assert evaluate(Affine(F(0)), 7, 0) == 7
    assert evaluate(LAW_11_5, 1, 1) == 11


def test_identity_examples():
    assert identity(LAW_2_4) == F(3, 2)
    assert identity(Affine(F(0))) == 0
    assert identity(LAW_11_5) == F(5, 3)


def test_inverse_examples():
    assert inverse(Affine(F(0)), 5) == -5
    assert inverse(LAW_2_4, 1) == F(5, 4)
    assert evaluate(LAW_2_4, 1, F(5, 4)) == F(3, 2)
    with pytest.raises(DomainError, match="annihilator"):
        inverse(LAW_2_4, F(4, 3))


def test_annihilator_examples():
    assert annihilator(LAW_2_4) == F(4, 3)
    assert annihilator(Affine(F(7))) is None
    assert annihilator(LAW_11_5) == F(13, 8)


def test_isomorphism_examples():
    assert isomorphism_image(LAW_2_4, F(3, 2)) == 1
    assert isomorphism_image(LAW_2_4, F(4, 3)) == 0
    assert isomorphism_image(LAW_11_5, 1) == -15
    with pytest.raises(DomainError):
        isomorphism_image(Affine(F(0)), 1)


def test_coefficient_constraint_examples():
    assert verify_coefficient_constraint(24, -39, 65)
    assert verify_coefficient_constraint(0, 1, 7)
    assert not verify_coefficient_constraint(1, 1, 1)


def test_bilinear_rejects_zero_a():
    with pytest.raises(DomainError):
        Bilinear(F(0), F(1))


def test_format_law_quadratic():
    text = format_law(solve(11, 22).laws[0])
    assert text.startswith("(30 + 3*sqrt(89))*x*y")


@given(nonzero_fractions, small_fractions)
def test_bilinear_family_closed(a, b):
    assert verify_coefficient_constraint(a, b, (b * b - b) / a)


def _check_group_axioms(law, rng, points=20):
    ann = annihilator(law)
    e = identity(law)
    xs = fraction_points(rng, points, exclude=(ann,))
    for x in xs:
        y, z = rng.choice(xs), rng.choice(xs)
        assert evaluate(law, x, y) == evaluate(law, y, x)
        assert evaluate(law, evaluate(law, x, y), z) == evaluate(law, x, evaluate(law, y, z))
        assert evaluate(law, e, x) == x
        assert evaluate(law, x, inverse(law, x)) == e
        if isinstance(law, Bilinear):
            fx, fy = isomorphism_image(law, x), isomorphism_image(law, y)
            assert isomorphism_image(law, evaluate(law, x, y)) == fx * fy
            assert evaluate(law, x, ann) == ann


@settings(max_examples=60, deadline=None)
@given(st.integers(-50, 50), st.integers(-50, 50), st.randoms(use_true_random=False))
def test_solved_laws_are_groups(u, v, rng):
    res = solve(u, v)
    assert len(res.laws) <= 3
    assert (res.field_radicand is None) == all(is_rational_law(l) for l in res.laws)
    for law in res.laws:
        assert evaluate(law, 1, 1) == u
        assert evaluate(law, 2, 2) == v
        _check_group_axioms(law, rng, points=5)


@given(st.integers(-200, 200))
def test_near_diagonal_always_true(u):
    assert is_true_over_Q(u, u)
    assert is_true_over_Q(u, u + 2)
    assert is_true_over_Q(u, u, bilinear_only=True)
    assert is_true_over_Q(u, u + 2, bilinear_only=True)


@given(st.integers(-100, 100), st.integers(-100, 100))
def test_bilinear_count(u, v):
    res = solve(u, v)
    bil = [l for l in res.laws if isinstance(l, Bilinear)]
    aff = [l for l in res.laws if isinstance(l, Affine)]
    assert len(aff) == (1 if v - u == 2 else 0)
    if res.discriminant < 0:
        assert bil == []
    elif res.discriminant == 0 or v - u == 2 or u == v:
        # u == v: the minus root is a = 0, b = 0 (a constant map, not a group)
        assert len(bil) == 1
    else:
        assert len(bil) == 2


def test_law_ordering_plus_root_first():
    plus, minus = solve(11, 22).laws
    assert minus.a < plus.a


def test_quadratic_law_group_axioms():
    _check_group_axioms(solve(11, 22).laws[0], random.Random(5), points=10)
