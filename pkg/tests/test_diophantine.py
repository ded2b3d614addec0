"""Two- and four-square solvers and the cap-region enumerator."""

import math
import random

import numpy as np
import pytest

from goldengates.diophantine import (
    CapConstraint,
    FourSquareSolution,
    approx_four_squares,
    cap_enumerate,
    cornacchia,
    four_squares,
    two_squares,
)
from goldengates.rings import INT, PHI, SQRT2, QuadInt, factor_int


def qi(a, b=0, ring=INT):
    return QuadInt(a, b, ring)


# -- oracles ---------------------------------------------------------------


def int_two_square_criterion(n: int) -> bool:
    """Classical criterion: no prime 3 mod 4 to an odd power."""
    return all(
        e % 2 == 0 for p, e in factor_int(n, 0).items() if p % 4 == 3
    )


def r4_counts(limit: int) -> np.ndarray:
    """r4[n] = number of signed ordered quadruples with sum of squares n."""
    v = np.zeros(limit + 1, dtype=np.int64)
    v[0] = 1
    for x in range(1, math.isqrt(limit) + 1):
        v[x * x] = 2
    r2 = np.convolve(v, v)[: limit + 1]
    return np.convolve(r2, r2)[: limit + 1]


def ring_box(bound1: float, bound2: float, ring):
    """All ring elements with |sigma1| <= bound1 and |sigma2| <= bound2."""
    w = QuadInt(0, 1, ring)
    w1, w2 = w.sigma1(), w.sigma2()
    out = []
    b_max = int((bound1 + bound2) / abs(w1 - w2)) + 2
    for b in range(-b_max, b_max + 1):
        a_lo = math.ceil(max(-bound1 - b * w1, -bound2 - b * w2) - 1e-9)
        a_hi = math.floor(min(bound1 - b * w1, bound2 - b * w2) + 1e-9)
        for a in range(a_lo, a_hi + 1):
            x = QuadInt(a, b, ring)
            if abs(x.sigma1()) <= bound1 + 1e-9 and abs(x.sigma2()) <= bound2 + 1e-9:
                out.append(x)
    return out


def brute_two_squares_ring(n: QuadInt):
    s1 = math.sqrt(n.sigma1())
    s2 = math.sqrt(n.sigma2())
    box = ring_box(s1, s2, n.ring)
    for x in box:
        for y in box:
            if x * x + y * y == n:
                return (x, y)
    return None


def brute_cap(c: CapConstraint):
    """Complete region list straight from the membership predicate."""
    if c.n.ring is INT:
        n = c.n.a
        root = math.isqrt(n)
        pts = [
            (qi(a), qi(b))
            for a in range(-root, root + 1)
            for b in range(-root, root + 1)
            if c.contains(qi(a), qi(b))
        ]
    else:
        box = ring_box(
            math.sqrt(c.n.sigma1()), math.sqrt(c.n.sigma2()), c.n.ring
        )
        pts = [(x, y) for x in box for y in box if c.contains(x, y)]
    return {(x.a, x.b, y.a, y.b) for x, y in pts}


# -- cornacchia ------------------------------------------------------------


class TestCornacchia:
    def test_frozen_examples(self):
        assert cornacchia(2) == (1, 1)
        assert cornacchia(13) == (2, 3)
        assert cornacchia(29) == (2, 5)

    def test_rejects_3_mod_4(self):
        with pytest.raises(ValueError):
            cornacchia(7)
        with pytest.raises(ValueError):
            cornacchia(19)

    def test_exhaustive_small_primes(self):
        for p in range(5, 2000, 4):
            if all(p % q for q in range(2, math.isqrt(p) + 1)):
                x, y = cornacchia(p)
                assert 0 < x <= y
                assert x * x + y * y == p


class TestTwoSquaresInt:
    def test_frozen_examples(self):
        assert two_squares(5) == (qi(1), qi(2))
        assert two_squares(21) is None
        assert two_squares(2) == (qi(1), qi(1))

    def test_matches_criterion(self):
        for n in range(1, 2000):
            got = two_squares(n)
            if int_two_square_criterion(n):
                assert got is not None
                x, y = got
                assert x.a * x.a + y.a * y.a == n
            else:
                assert got is None

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            two_squares(0)


class TestTwoSquaresRing:
    def test_unit_square_example(self):
        x, y = two_squares(qi(3, 2, SQRT2))
        assert (x, y) == (qi(1, 1, SQRT2), qi(0, 0, SQRT2))

    def test_ramified_sqrt2_obstruction(self):
        # valuation of sqrt2 exactly one: no representation exists
        assert two_squares(qi(2, 1, SQRT2)) is None
        assert two_squares(qi(2, -1, SQRT2)) is None
        assert brute_two_squares_ring(qi(2, -1, SQRT2)) is None
        assert two_squares(qi(6, 1, SQRT2)) is None
        assert brute_two_squares_ring(qi(6, 1, SQRT2)) is None

    def test_split_3_mod_4_obstruction(self):
        # 3+sqrt2 has norm 7; 4-phi has norm 11; both split, both 3 mod 4
        assert two_squares(qi(3, 1, SQRT2)) is None
        assert brute_two_squares_ring(qi(3, 1, SQRT2)) is None
        assert two_squares(qi(4, -1, PHI)) is None
        assert brute_two_squares_ring(qi(4, -1, PHI)) is None

    def test_inert_and_ramified_success(self):
        for n in (qi(2, 0, PHI), qi(3, -1, PHI), qi(3, 0, SQRT2),
                  qi(7, 0, PHI), qi(14, 5, PHI), qi(4, 2, SQRT2),
                  qi(20, 14, SQRT2)):
            got = two_squares(n)
            assert got is not None, f"expected a solution for {n}"
            x, y = got
            assert x * x + y * y == n

    def test_random_constructed_instances(self):
        rng = random.Random(99)
        for ring in (SQRT2, PHI):
            for _ in range(40):
                x = QuadInt(rng.randrange(-9, 10), rng.randrange(-4, 5), ring)
                y = QuadInt(rng.randrange(-9, 10), rng.randrange(-4, 5), ring)
                n = x * x + y * y
                if not n:
                    continue
                got = two_squares(n)
                assert got is not None
                gx, gy = got
                assert gx * gx + gy * gy == n

    def test_brute_force_agreement_small(self):
        # every small totally positive element of either ring
        for ring in (SQRT2, PHI):
            for a in range(1, 8):
                for b in range(-3, 4):
                    n = QuadInt(a, b, ring)
                    if not n.is_totally_positive():
                        continue
                    ours = two_squares(n)
                    brute = brute_two_squares_ring(n)
                    assert (ours is None) == (brute is None), f"mismatch at {n}"
                    if ours is not None:
                        x, y = ours
                        assert x * x + y * y == n

    def test_rejects_not_totally_positive(self):
        with pytest.raises(ValueError):
            two_squares(qi(1, 2, SQRT2))


class TestFourSquares:
    def test_small_values(self):
        s3 = four_squares(3)
        assert sorted(abs(x.a) for x in s3) == [0, 1, 1, 1]
        s7 = four_squares(7)
        assert sorted(abs(x.a) for x in s7) == [1, 1, 1, 2]

    def test_solution_count_9(self):
        count = 0
        for x1 in range(-3, 4):
            for x2 in range(-3, 4):
                for x3 in range(-3, 4):
                    for x4 in range(-3, 4):
                        if x1**2 + x2**2 + x3**2 + x4**2 == 9:
                            count += 1
        assert count == 104
        assert r4_counts(9)[9] == 104

    def test_jacobi_odd_small(self):
        r4 = r4_counts(99)
        for n in range(1, 100, 2):
            sigma = sum(d for d in range(1, n + 1) if n % d == 0)
            assert r4[n] == 8 * sigma

    def test_large_random(self):
        for n in (10**9 + 7, 2**40 + 9, 999_983):
            sol = four_squares(n, random.Random(5))
            assert sum(x.a * x.a for x in sol) == n

    def test_stubborn_prime_free_case(self):
        # every remainder n - x3^2 - x4^2 misses {0,1,2} and the primes
        # 1 mod 4, so this exercises the factoring fallback
        sol = four_squares(112, random.Random(1))
        assert sum(x.a * x.a for x in sol) == 112

    def test_deterministic(self):
        a = four_squares(123_456_789, random.Random(42))
        b = four_squares(123_456_789, random.Random(42))
        assert list(a) == list(b)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            four_squares(0)


class TestCapEnumerate:
    def test_boundary_point(self):
        c = CapConstraint(1.0, 0.0, 0.02, qi(25))
        assert list(cap_enumerate(c, 10)) == [(qi(5), qi(0))]

    def test_power_of_three_region(self):
        c = CapConstraint(1.0, 0.0, 0.3, qi(6561))
        got = list(cap_enumerate(c, 10**6))
        assert got, "region should not be empty"
        for x1, x2 in got:
            assert x1.a >= 78
            assert x1.a * x1.a + x2.a * x2.a <= 6561
        assert {(x.a, x.b, y.a, y.b) for x, y in got} == brute_cap(c)

    def test_scores_non_increasing_and_budget(self):
        c = CapConstraint(0.6, 0.8, 0.7, qi(3000))
        full = list(cap_enumerate(c, 10**6))
        scores = [c.score(x, y) for x, y in full]
        assert scores == sorted(scores, reverse=True)
        assert list(cap_enumerate(c, 7)) == full[:7]

    def test_full_disk_ring_example(self):
        c = CapConstraint(1.0, 0.0, 2.0, qi(5, -1, SQRT2))
        got = list(cap_enumerate(c, 10**6))
        assert {(x.a, x.b, y.a, y.b) for x, y in got} == brute_cap(c)

    def test_ring_cap_completeness(self):
        cases = [
            CapConstraint(1.0, 0.0, 0.8, qi(4, -1, PHI)),
            CapConstraint(0.0, 1.0, 1.2, qi(12, 1, PHI)),
            CapConstraint(0.6, -0.8, 0.9, qi(9, 2, SQRT2)),
            CapConstraint(-1.0, 0.0, 2.0, qi(7, 1, SQRT2)),
        ]
        for c in cases:
            got = list(cap_enumerate(c, 10**6))
            keys = {(x.a, x.b, y.a, y.b) for x, y in got}
            assert len(keys) == len(got)
            assert keys == brute_cap(c)

    def test_slab_prefix_consistency(self):
        # wide region, tight budget: the slab shortcut must agree with
        # a larger-budget call on the shared prefix
        c = CapConstraint(0.0, 1.0, 2.0, qi(10**8 + 7))
        small = list(cap_enumerate(c, 40))
        large = list(cap_enumerate(c, 400))
        assert small == large[:40]
        assert len(small) == 40
        for x1, x2 in small:
            assert c.contains(x1, x2)

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            CapConstraint(1.0, 1.0, 0.5, qi(25))
        with pytest.raises(ValueError):
            CapConstraint(1.0, 0.0, 0.0, qi(25))
        with pytest.raises(ValueError):
            CapConstraint(1.0, 0.0, 2.5, qi(25))
        with pytest.raises(ValueError):
            CapConstraint(1.0, 0.0, 0.5, qi(1, 2, SQRT2))
        with pytest.raises(ValueError):
            next(cap_enumerate(CapConstraint(1.0, 0.0, 1.0, qi(25)), 0))


class TestApproxFourSquares:
    def test_exact_boundary(self):
        c = CapConstraint(1.0, 0.0, 0.02, qi(25))
        sol = approx_four_squares(c)
        assert sol is not None
        assert [x.a for x in sol] == [5, 0, 0, 0]

    def test_unsatisfiable_cap(self):
        # the cap around (0,1) at this radius excludes every lattice
        # point of the n=13 disk, so no solution can exist
        c = CapConstraint(0.0, 1.0, 0.3, qi(13))
        assert brute_cap(c) == set()
        assert approx_four_squares(c) is None

    def test_narrow_cap_score(self):
        c = CapConstraint(math.cos(0.7), math.sin(0.7), 0.1, qi(729))
        sol = approx_four_squares(c)
        assert sol is not None
        assert sol.total() == qi(729)
        assert c.score(sol.x1, sol.x2) / 27.0 > 0.95

    def test_prime_only_mode(self):
        c = CapConstraint(1.0, 0.0, 0.3, qi(6561))
        sol = approx_four_squares(c, mode="prime-only")
        assert sol is not None
        assert sol.total() == qi(6561)
        m = sol.x3.a ** 2 + sol.x4.a ** 2
        assert m == 0 or (m % 4 == 1)

    def test_ring_instance(self):
        n = qi(5, -1, SQRT2) ** 2
        c = CapConstraint(0.6, 0.8, 1.0, n)
        sol = approx_four_squares(c)
        # cross-check reachability with the brute oracle
        reachable = any(
            brute_two_squares_ring(n - qi(a, b, SQRT2) ** 2 - qi(cc, d, SQRT2) ** 2)
            is not None
            or n == qi(a, b, SQRT2) ** 2 + qi(cc, d, SQRT2) ** 2
            for (a, b, cc, d) in brute_cap(c)
        )
        assert (sol is not None) == reachable
        if sol is not None:
            assert sol.total() == n
            assert c.contains(sol.x1, sol.x2)

    def test_deterministic(self):
        c = CapConstraint(math.cos(0.7), math.sin(0.7), 0.1, qi(729))
        a = approx_four_squares(c, rng=random.Random(3))
        b = approx_four_squares(c, rng=random.Random(3))
        assert a == b

    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError):
            approx_four_squares(
                CapConstraint(1.0, 0.0, 0.5, qi(25)), mode="quick"
            )
