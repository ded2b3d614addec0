import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goldengates.rings import (
    INT,
    PHI,
    SQRT2,
    QuadInt,
    canonical_unit_rep,
    euclidean_gcd,
    factor,
    factor_int,
    fundamental_unit,
    is_probable_prime,
    is_totally_positive,
    legendre,
    parse_quadint,
    sqrt_minus_one_mod,
    sqrt_mod,
    unit_power,
)

RINGS = (INT, SQRT2, PHI)


def q(a, b, ring):
    return QuadInt(a, b, ring)


# -- frozen arithmetic facts -------------------------------------------


def test_conj_examples():
    assert q(7, 5, PHI).conj() == q(12, -5, PHI)
    assert q(5, -1, SQRT2).conj() == q(5, 1, SQRT2)
    assert q(-3, 0, INT).conj() == q(-3, 0, INT)


def test_norm_examples():
    assert q(5, -1, SQRT2).norm() == 23
    assert q(3, -1, SQRT2).norm() == 7
    assert q(2, -1, SQRT2).norm() == 2
    assert q(4, -1, PHI).norm() == 11
    assert q(7, 5, PHI).norm() == 59
    assert q(-1, 2, PHI).norm() == -5
    assert q(-6, 0, INT).norm() == -6


def test_total_positivity_examples():
    assert is_totally_positive(q(5, -1, SQRT2))
    assert not is_totally_positive(q(1, 1, SQRT2))  # sigma2 < 0
    assert not is_totally_positive(q(0, 1, SQRT2))
    assert is_totally_positive(q(1, 1, PHI))  # phi^2
    assert not is_totally_positive(q(0, 1, PHI))
    assert is_totally_positive(q(3, 0, INT))
    assert not is_totally_positive(q(0, 0, INT))


def test_exact_embedding_signs_near_zero():
    # 7 - 5*sqrt(2) is negative but only by 0.07; casework must get it right
    assert q(7, -5, SQRT2).sign_sigma1() == -1
    assert q(7, -5, SQRT2).sign_sigma2() == 1
    # 985 - 696*sqrt(2) ~ 0.0005
    assert q(985, -696, SQRT2).sign_sigma1() == 1
    # fibonacci-style near-zero cases for phi
    assert q(89, -55, PHI).sign_sigma1() == 1
    assert q(55, -34, PHI).sign_sigma1() == -1


def test_gcd_examples():
    assert euclidean_gcd(q(6, 0, INT), q(4, 0, INT)) == q(2, 0, INT)
    assert euclidean_gcd(q(0, 1, SQRT2), q(2, 0, SQRT2)) == q(0, 1, SQRT2)
    g = euclidean_gcd(q(4, -1, PHI), q(3, 1, PHI))
    assert g == q(1, 0, PHI)


def test_canonical_unit_rep():
    # units collapse to one
    assert canonical_unit_rep(q(1, 1, SQRT2)) == q(1, 0, SQRT2)
    assert canonical_unit_rep(q(0, -1, PHI)) == q(1, 0, PHI)
    # sqrt(2) is already the flattest associate in its class
    assert canonical_unit_rep(q(0, 1, SQRT2)) == q(0, 1, SQRT2)
    assert canonical_unit_rep(q(-5, 0, INT)) == q(5, 0, INT)
    # idempotent and stable under unit multiplication
    rng = random.Random(7)
    for _ in range(200):
        ring = rng.choice((SQRT2, PHI))
        x = q(rng.randint(-30, 30), rng.randint(-30, 30), ring)
        if not x:
            continue
        r = canonical_unit_rep(x)
        assert canonical_unit_rep(r) == r
        m = rng.randint(-3, 3)
        y = x * unit_power(ring, m)
        if rng.random() < 0.5:
            y = -y
        assert canonical_unit_rep(y) == r


def test_unit_power_inverse():
    for ring in (SQRT2, PHI):
        for m in range(-6, 7):
            u = unit_power(ring, m)
            v = unit_power(ring, -m)
            assert u * v == q(1, 0, ring)
            assert abs(u.norm()) == 1


def test_factor_examples():
    f7 = factor(q(7, 0, SQRT2))
    assert len(f7.factors) == 2
    assert sorted(abs(p.norm()) for p, _ in f7.factors) == [7, 7]
    assert all(e == 1 for _, e in f7.factors)
    assert f7.value() == q(7, 0, SQRT2)

    f11 = factor(q(11, 0, PHI))
    assert sorted(abs(p.norm()) for p, _ in f11.factors) == [11, 11]
    assert f11.value() == q(11, 0, PHI)

    # ramified: 2 = unit * sqrt(2)^2
    f2 = factor(q(2, 0, SQRT2))
    assert f2.factors == ((q(0, 1, SQRT2), 2),)

    # inert: 3 stays prime in Z[phi]; its flattest associate is 6-3*phi
    f3 = factor(q(3, 0, PHI))
    assert f3.factors == ((canonical_unit_rep(q(3, 0, PHI)), 1),)
    assert abs(f3.factors[0][0].norm()) == 9
    assert f3.value() == q(3, 0, PHI)

    fz = factor(q(-12, 0, INT))
    assert fz.unit == q(-1, 0, INT)
    assert fz.factors == ((q(2, 0, INT), 2), (q(3, 0, INT), 1))


def test_sqrt_minus_one_examples():
    assert sqrt_minus_one_mod(5) in (2, 3)
    assert sqrt_minus_one_mod(13) in (5, 8)
    assert sqrt_minus_one_mod(2) == 1
    with pytest.raises(ValueError):
        sqrt_minus_one_mod(7)
    with pytest.raises(ValueError):
        sqrt_minus_one_mod(9)


def test_parse_round_trip():
    x = parse_quadint("5-1*w@sqrt2")
    assert x == q(5, -1, SQRT2)
    assert parse_quadint(str(x)) == x
    assert parse_quadint("7@int") == q(7, 0, INT)
    assert parse_quadint("-2+13*w@phi") == q(-2, 13, PHI)
    with pytest.raises(ValueError):
        parse_quadint("1+2*w@gauss")


# -- spec invariants as property tests ---------------------------------


def test_norm_multiplicative_bulk():
    rng = random.Random(0)
    for _ in range(10_000):
        ring = rng.choice(RINGS)
        hi = 10**6
        x = q(rng.randint(-hi, hi), 0 if ring is INT else rng.randint(-hi, hi), ring)
        y = q(rng.randint(-hi, hi), 0 if ring is INT else rng.randint(-hi, hi), ring)
        assert (x * y).norm() == x.norm() * y.norm()


@settings(max_examples=300, deadline=None)
@given(
    st.sampled_from((SQRT2, PHI)),
    st.integers(-50, 50),
    st.integers(-50, 50),
    st.integers(-50, 50),
    st.integers(-50, 50),
)
def test_conj_is_ring_hom(ring, a, b, c, d):
    x, y = q(a, b, ring), q(c, d, ring)
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()
    assert x * x.conj() == q(x.norm(), 0, ring)


def test_euclidean_remainder_shrinks():
    rng = random.Random(1)
    for _ in range(2000):
        ring = rng.choice((SQRT2, PHI))
        x = q(rng.randint(-500, 500), rng.randint(-500, 500), ring)
        y = q(rng.randint(-40, 40), rng.randint(-40, 40), ring)
        if not y:
            continue
        quo, rem = x.divmod(y)
        assert quo * y + rem == x
        assert abs(rem.norm()) < abs(y.norm())


def test_gcd_contract_brute_force():
    rng = random.Random(2)
    divisors = {}
    for ring in (SQRT2, PHI):
        divisors[ring] = [
            q(a, b, ring) for a in range(-20, 21) for b in range(-20, 21) if a or b
        ]
    for _ in range(40):
        ring = rng.choice((SQRT2, PHI))
        x = q(rng.randint(-20, 20), rng.randint(-20, 20), ring)
        y = q(rng.randint(-20, 20), rng.randint(-20, 20), ring)
        if not x and not y:
            continue
        g = euclidean_gcd(x, y)
        assert g.divides(x) and g.divides(y)
        assert canonical_unit_rep(g) == g
        for d in divisors[ring]:
            if d.divides(x) and d.divides(y):
                assert d.divides(g)


def test_factor_round_trip_bulk():
    rng = random.Random(3)
    for _ in range(1000):
        ring = rng.choice(RINGS)
        x = q(
            rng.randint(-200, 200),
            0 if ring is INT else rng.randint(-200, 200),
            ring,
        )
        if not x:
            continue
        f = factor(x)
        assert f.value() == x
        assert abs(f.unit.norm()) == 1
        for p, e in f.factors:
            assert e >= 1
            assert canonical_unit_rep(p) == p
            np = abs(p.norm())
            if ring is INT:
                assert is_probable_prime(np)
            else:
                # split/ramified primes have prime norm, inert ones p^2
                assert is_probable_prime(np) or (
                    math.isqrt(np) ** 2 == np and is_probable_prime(math.isqrt(np))
                )


def test_sqrt_minus_one_all_small_primes():
    for p in range(5, 10_000):
        if p % 4 == 1 and is_probable_prime(p):
            v = sqrt_minus_one_mod(p, seed=p)
            assert v * v % p == p - 1


def test_factor_int_against_sympy_style_oracle():
    rng = random.Random(4)
    for _ in range(300):
        n = rng.randint(2, 10**9)
        fs = factor_int(n)
        m = 1
        for p, e in fs.items():
            assert is_probable_prime(p)
            m *= p**e
        assert m == n


def test_sqrt_mod_quadratic_residues():
    for p in (3, 5, 7, 11, 13, 23, 59, 10007):
        for a in range(1, min(p, 40)):
            if legendre(a, p) == 1:
                r = sqrt_mod(a, p)
                assert r * r % p == a % p


def test_ordering_matches_first_embedding():
    rng = random.Random(5)
    for _ in range(500):
        ring = rng.choice((SQRT2, PHI))
        x = q(rng.randint(-50, 50), rng.randint(-50, 50), ring)
        y = q(rng.randint(-50, 50), rng.randint(-50, 50), ring)
        assert (x < y) == (x.sigma1() < y.sigma1() and x != y)


def test_fundamental_units_have_norm_minus_one():
    assert fundamental_unit(SQRT2).norm() == -1
    assert fundamental_unit(PHI).norm() == -1


def test_exact_div_all_rings():
    assert q(6, 0, INT).exact_div(q(2, 0, INT)) == q(3, 0, INT)
    assert q(6, 0, INT).exact_div(q(4, 0, INT)) is None
    assert q(-4, 0, INT).exact_div(2) == q(-2, 0, INT)
    assert q(2, 0, SQRT2).exact_div(q(0, 1, SQRT2)) == q(0, 1, SQRT2)
    assert q(1, 1, SQRT2).exact_div(q(0, 1, SQRT2)) is None
    rng = random.Random(6)
    for _ in range(500):
        ring = rng.choice(RINGS)
        x = q(rng.randint(-60, 60), 0 if ring is INT else rng.randint(-60, 60), ring)
        d = q(rng.randint(-9, 9), 0 if ring is INT else rng.randint(-9, 9), ring)
        if not d:
            continue
        quot = (x * d).exact_div(d)
        assert quot == x
