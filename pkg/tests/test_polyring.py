import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oracles import discriminant_by_roots, irreducible_by_trial_division, root_product
from wedgelab.field import field_create, field_from_order, rationals
from wedgelab.polyring import (
    IrrPoly,
    Poly,
    count_irreducibles,
    discriminant,
    distinct_degree_factorization,
    enumerate_irreducibles,
    factor_squarefree,
    format_poly,
    is_irreducible,
    monic_polys,
    parse_poly,
    poly_gcd,
    resultant,
    shift,
    sigma_apply,
)

F3, F5 = field_create(3), field_create(5)
Q = rationals()


def P(ctx, s):
    return parse_poly(ctx, s)


def rand_poly(ctx, rng, deg, monic=False):
    cs = [ctx.random(rng) for _ in range(deg)] + [ctx.one if monic else ctx.random(rng, nonzero=True)]
    return Poly(ctx, cs)


def rand_irreducible(ctx, rng, deg):
    while True:
        f = rand_poly(ctx, rng, deg, monic=True)
        if is_irreducible(f):
            return IrrPoly(f, check=False)


def test_basic_operations():
    assert P(F3, "x^2+1") % P(F3, "x-1") == Poly.const(F3, 2)
    assert P(Q, "x^2+1").compose(P(Q, "x^2")) == P(Q, "x^4+1")
    assert P(F5, "x^4+x+4").derivative() == P(F5, "4*x^3+1")
    assert Poly(F3).degree == float("-inf")
    with pytest.raises(ZeroDivisionError):
        divmod(P(F3, "x"), Poly(F3))


def test_format_and_parse():
    assert format_poly(P(Q, "x^4-x+1")) == "x^4-x+1"
    assert format_poly(P(F3, "x^2+2*x+2")) == "x^2+2*x+2"
    assert P(F3, "2,1,1") == P(F3, "x^2+x+2")
    F9 = field_create(3, 2)
    f = P(F9, "(t+1)*x^2+t")
    assert P(F9, format_poly(f)) == f


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 9])
def test_divmod_round_trip(q):
    F = field_from_order(q)
    rng = random.Random(q)
    for _ in range(1000):
        a = rand_poly(F, rng, rng.randrange(0, 8))
        b = rand_poly(F, rng, rng.randrange(0, 5))
        quo, rem = divmod(a, b)
        assert quo * b + rem == a
        assert rem.degree < b.degree


def test_gcd_is_monic():
    f = P(F5, "2*x^2+4*x+2")  # 2 (x+1)^2
    g = P(F5, "3*x+3")
    assert poly_gcd(f, g) == P(F5, "x+1")


def test_discriminant_examples():
    assert discriminant(P(F3, "x^2+1")) == 2
    assert discriminant(P(F3, "x^2+x+2")) == 2
    f = P(F3, "x^3+x^2+2")
    assert discriminant(f) == discriminant_by_roots(f)


def test_resultant_examples():
    rng = random.Random(0)
    for _ in range(20):
        f = rand_poly(F5, rng, 3)
        a = F5.random(rng)
        assert resultant(Poly(F5, (F5.neg(a), 1)), f) == f.eval(a)
    g = P(F3, "x^2+1")
    assert resultant(g, g) == 0
    assert resultant(g, P(F3, "x^2+x+2")) == root_product(g, P(F3, "x^2+x+2"))
    with pytest.raises(ValueError):
        resultant(Poly(F3), g)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_resultant_and_discriminant_against_roots(q):
    F = field_from_order(q)
    rng = random.Random(100 + q)
    for _ in range(15):
        g = rand_irreducible(F, rng, rng.randrange(1, 5))
        f = rand_poly(F, rng, rng.randrange(0, 6))
        assert resultant(g, f) == root_product(g, f)
        assert discriminant(g) == discriminant_by_roots(g)


def test_resultant_multiplicative():
    rng = random.Random(9)
    for _ in range(100):
        g = rand_poly(F5, rng, 3)
        f1, f2 = rand_poly(F5, rng, 2), rand_poly(F5, rng, 3)
        assert resultant(g, f1 * f2) == F5.mul(resultant(g, f1), resultant(g, f2))


def test_irreducibility_examples():
    assert is_irreducible(P(F3, "x^2+1"))
    assert not is_irreducible(P(F5, "x^2+1"))
    assert is_irreducible(P(Q, "x^4-x+1"))
    assert not is_irreducible(P(Q, "x^4+4"))  # Sophie Germain
    with pytest.raises(ValueError):
        is_irreducible(Poly.const(F3, 1))


@pytest.mark.parametrize("q,n", [(q, n) for q in (2, 3, 4, 5) for n in (1, 2, 3, 4) if q**n <= 625])
def test_irreducibility_against_trial_division(q, n):
    F = field_from_order(q)
    for f in monic_polys(F, n):
        assert is_irreducible(f) == irreducible_by_trial_division(f)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_enumeration_counts(q):
    F = field_from_order(q)
    for n in range(1, 7):
        polys = list(enumerate_irreducibles(F, n))
        assert len(polys) == count_irreducibles(q, n)
        assert polys == sorted(polys, key=Poly.key)
        assert len(set(polys)) == len(polys)


def test_enumeration_examples():
    assert [format_poly(f) for f in enumerate_irreducibles(F3, 2)] == ["x^2+1", "x^2+x+2", "x^2+2*x+2"]
    assert count_irreducibles(5, 4) == 150
    assert len(list(enumerate_irreducibles(field_create(2), 3))) == 2
    assert count_irreducibles(3, 2) == 3
    assert count_irreducibles(3, 7) == 312
    assert count_irreducibles(2, 12) == 335
    with pytest.raises(ValueError):
        next(enumerate_irreducibles(Q, 2))


def test_enumerated_polys_are_irreducible_spot_check():
    F = field_create(7)
    polys = list(enumerate_irreducibles(F, 3))
    rng = random.Random(1)
    for f in rng.sample(polys, 30):
        assert irreducible_by_trial_division(f)


_int_poly = st.lists(st.integers(-6, 6), min_size=2, max_size=8).map(lambda cs: cs[:-1] + [1])


@settings(max_examples=300)
@given(_int_poly)
def test_rational_irreducibility_against_sympy(cs):
    f = Poly.from_ints(Q, cs)
    x = sympy.Symbol("x")
    expected = sympy.Poly(list(reversed(cs)), x, domain="QQ").is_irreducible
    assert is_irreducible(f) == expected


def test_rational_degree_cap():
    with pytest.raises(ValueError):
        is_irreducible(Poly.from_ints(Q, [1] + [0] * 8 + [1]))


def test_ddf_and_edf():
    rng = random.Random(3)
    for q in (3, 5, 7, 9):
        F = field_from_order(q)
        for _ in range(10):
            parts = [rand_irreducible(F, rng, d) for d in (1, 2, 2, 3)]
            if len(set(parts)) < 4:
                continue
            f = parts[0] * parts[1] * parts[2] * parts[3]
            ddf = dict(distinct_degree_factorization(f))
            assert ddf[2] == parts[1] * parts[2]
            assert sorted(factor_squarefree(f, rng), key=Poly.key) == sorted(parts, key=Poly.key)


def test_irrpoly_validation():
    with pytest.raises(ValueError):
        IrrPoly(P(F5, "x^2+1"))
    with pytest.raises(ValueError):
        IrrPoly(P(F3, "2*x^2+2"))
    assert IrrPoly(P(F3, "x^2+1")).disc == 2


def test_shift_and_sigma_examples():
    assert shift(P(F3, "x^2+1"), 1) == P(F3, "x^2+2*x+2")
    f = IrrPoly(P(F5, "x^2+2"))
    assert sigma_apply(1, 0, f) == f
    assert isinstance(sigma_apply(2, 1, f), IrrPoly)
    with pytest.raises(ValueError):
        sigma_apply(0, 1, f)
    g = sigma_apply(2, 0, f)
    assert F5.mul(discriminant(g), F5.pow(2, 2)) == discriminant(f)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 9, 11, 13])
def test_sigma_action_laws(q):
    F = field_from_order(q)
    rng = random.Random(q)
    for _ in range(80):
        n = rng.randrange(1, 5)
        f = rand_poly(F, rng, n, monic=True)
        a, c = F.random(rng, nonzero=True), F.random(rng, nonzero=True)
        b, d = F.random(rng), F.random(rng)
        # composition: sigma_{c,d} after sigma_{a,b} is sigma_{ac, ad+b}
        lhs = sigma_apply(c, d, sigma_apply(a, b, f))
        assert lhs == sigma_apply(F.mul(a, c), F.add(F.mul(a, d), b), f)
        # discriminant scaling
        assert F.mul(discriminant(sigma_apply(a, b, f)), F.pow(a, n * (n - 1))) == discriminant(f)
        assert sigma_apply(a, b, f).is_monic()
