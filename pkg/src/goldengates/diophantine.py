"""Sums of two and four squares, unconstrained and cap-constrained.

Everything here decides representability exactly and verifies every
solution before returning it; randomness only affects how fast a
verified answer is found, never whether it is correct.

The cap constraint describes the planar region used by approximate
synthesis: pairs (x1, x2) whose first embedding lands in a spherical
cap around a target direction while staying inside the norm disk at
every embedding.  Enumeration is complete up to the stated budget and
ordered by decreasing inner product with the target.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from goldengates.rings import (
    INT,
    PHI,
    QuadInt,
    RingId,
    SQRT2,
    factor,
    factor_int,
    fundamental_unit,
    is_probable_prime,
    sqrt_minus_one_mod,
    unit_exponent,
    unit_power,
)

__all__ = [
    "CapConstraint",
    "FourSquareSolution",
    "cornacchia",
    "two_squares",
    "four_squares",
    "cap_enumerate",
    "approx_four_squares",
]

DEFAULT_BUDGET = 10_000


# -- types ----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class CapConstraint:
    """Target direction (xi1, xi2), cap radius epsilon, and norm n.

    The encoded region is
        (xi1*x1 + xi2*x2) / sqrt(sigma1(n)) > 1 - epsilon^2 / 2
    together with x1^2 + x2^2 <= n at every embedding; epsilon is the
    chordal radius on the unit sphere, so epsilon = 2 admits everything
    but the antipode.
    """

    xi1: float
    xi2: float
    epsilon: float
    n: QuadInt

    def __post_init__(self) -> None:
        if abs(self.xi1 * self.xi1 + self.xi2 * self.xi2 - 1.0) > 1e-12:
            raise ValueError("target direction must be unit length")
        if not (0.0 < self.epsilon <= 2.0):
            raise ValueError("epsilon must lie in (0, 2]")
        if not self.n or not self.n.is_totally_positive():
            raise ValueError("norm must be totally positive")

    def threshold(self) -> float:
        """Minimal admissible xi1*x1 + xi2*x2 (strict, first embedding)."""
        return (1.0 - self.epsilon * self.epsilon / 2.0) * math.sqrt(
            self.n.sigma1()
        )

    def score(self, x1: QuadInt, x2: QuadInt) -> float:
        return self.xi1 * x1.sigma1() + self.xi2 * x2.sigma1()

    def contains(self, x1: QuadInt, x2: QuadInt) -> bool:
        """The exact membership predicate shared with all oracles."""
        r = self.n - x1 * x1 - x2 * x2
        if r.sign_sigma1() < 0 or r.sign_sigma2() < 0:
            return False
        return self.score(x1, x2) > self.threshold()


@dataclass(frozen=True, slots=True)
class FourSquareSolution:
    x1: QuadInt
    x2: QuadInt
    x3: QuadInt
    x4: QuadInt

    def total(self) -> QuadInt:
        return (
            self.x1 * self.x1 + self.x2 * self.x2
            + self.x3 * self.x3 + self.x4 * self.x4
        )

    def __iter__(self):
        return iter((self.x1, self.x2, self.x3, self.x4))

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self) + ")"


# -- two squares over Z ---------------------------------------------------


def cornacchia(p: int, seed: int = 0) -> tuple[int, int]:
    """x^2 + y^2 = p for p = 2 or a prime p = 1 mod 4, with 0 < x <= y."""
    if p == 2:
        return (1, 1)
    if p % 4 != 1:
        raise ValueError(f"{p} is not 2 or 1 mod 4")
    nu = sqrt_minus_one_mod(p, seed)
    nu = min(nu, p - nu)
    a, b = p, nu
    bound = math.isqrt(p)
    while b > bound:
        a, b = b, a % b
    x = b
    y = math.isqrt(p - x * x)
    if x * x + y * y != p:
        raise ArithmeticError(f"descent failed for {p}")
    return (min(x, y), max(x, y))


def _two_squares_int(n: int, seed: int) -> Optional[tuple[int, int]]:
    if n < 0:
        return None
    if n == 0:
        return (0, 0)
    zr, zi = 1, 0
    for p, e in sorted(factor_int(n, seed).items()):
        if p == 2:
            for _ in range(e):
                zr, zi = zr - zi, zr + zi  # multiply by 1+i
        elif p % 4 == 1:
            half, odd = divmod(e, 2)
            zr, zi = zr * p**half, zi * p**half
            if odd:
                x, y = cornacchia(p, seed)
                zr, zi = zr * x - zi * y, zr * y + zi * x
        else:
            if e % 2:
                return None
            zr, zi = zr * p ** (e // 2), zi * p ** (e // 2)
    x, y = sorted((abs(zr), abs(zi)))
    if x * x + y * y != n:
        raise ArithmeticError(f"two-square combination failed for {n}")
    return (x, y)


# -- two squares over the quadratic rings ---------------------------------
#
# Arithmetic in O_K[i] uses (real, imag) pairs of QuadInt with the
# i -> -i conjugation only; the ring conjugation never enters.


def _gauss_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _unit_balance(pair):
    """Scale a pair by a unit power so its norm has comparable embeddings.

    Coordinate rounding only tracks one embedding at a time, so the
    descent stalls on skewed elements unless they are rebalanced first.
    The scaling multiplies the Gaussian norm by an even unit power,
    which callers absorb during verification.
    """
    x, y = pair
    if not (x or y):
        return pair
    n = x * x + y * y
    s1, s2 = n.sigma1(), n.sigma2()
    if not (0 < s1 < math.inf and 0 < s2 < math.inf):
        return pair
    eps = fundamental_unit(x.ring)
    k = round(math.log(s2 / s1) / (4.0 * math.log(eps.sigma1())))
    if k == 0:
        return pair
    u = unit_power(x.ring, max(-64, min(64, k)))
    return (x * u, y * u)


def _gauss_gcd(a, b, max_iter: int = 96):
    """Euclidean-style gcd in O_K[i] with quotient search; may fail.

    Neither order is norm-Euclidean under coordinate rounding, so each
    step scans the rounded quotient's neighbours and keeps the remainder
    of smallest absolute norm, demanding strict descent. Any quotient
    choice preserves the gcd, so only termination is at stake; the
    caller verifies the result. The gcd is determined up to units.
    """
    a = _unit_balance(a)
    deltas = None
    for _ in range(max_iter):
        if not (b[0] or b[1]):
            return a
        b = _unit_balance(b)
        nb = b[0] * b[0] + b[1] * b[1]
        bound = abs(nb.norm())
        num = _gauss_mul(a, (b[0], -b[1]))
        q = (num[0].divmod(nb)[0], num[1].divmod(nb)[0])
        if deltas is None:
            ring = b[0].ring
            units = (QuadInt(0, 0, ring), QuadInt(1, 0, ring),
                     QuadInt(-1, 0, ring), QuadInt(0, 1, ring),
                     QuadInt(0, -1, ring), QuadInt(1, 1, ring),
                     QuadInt(-1, -1, ring), QuadInt(1, -1, ring),
                     QuadInt(-1, 1, ring))
            deltas = units
        best_v, best_r = None, None
        for d0 in deltas:
            for d1 in deltas:
                qb = _gauss_mul((q[0] + d0, q[1] + d1), b)
                r = (a[0] - qb[0], a[1] - qb[1])
                nr = r[0] * r[0] + r[1] * r[1]
                v = abs(nr.norm())
                if best_v is None or v < best_v:
                    best_v, best_r = v, r
        if best_v >= bound:
            return None  # stalled: no neighbour shrinks the norm
        a, b = b, best_r
    return None


def _ramified_rational_prime(pi: QuadInt) -> Optional[int]:
    ring = pi.ring
    if ring is SQRT2 and abs(pi.norm()) == 2:
        return 2
    if ring is PHI and abs(pi.norm()) == 5:
        return 5
    return None


def _fp2_sqrt_minus_one(p: int, ring: RingId, seed: int) -> QuadInt:
    """nu = a + b*w with nu^2 = -1 in O_K / p for inert p = 3 mod 4."""
    c0, c1 = {RingId.SQRT2: (2, 0), RingId.PHI: (1, 1)}[ring]

    def mul(x, y):
        bd = x[1] * y[1]
        return (
            (x[0] * y[0] + c0 * bd) % p,
            (x[0] * y[1] + x[1] * y[0] + c1 * bd) % p,
        )

    e = (p * p - 1) // 4
    rng = random.Random(seed ^ (p * 0x9E3779B1))
    for _ in range(128):
        x = (rng.randrange(p), rng.randrange(p))
        if x == (0, 0):
            continue
        r, base, k = (1, 0), x, e
        while k:
            if k & 1:
                r = mul(r, base)
            base = mul(base, base)
            k >>= 1
        if mul(r, r) == (p - 1, 0):
            return QuadInt(r[0], r[1], ring)
    raise ArithmeticError(f"no sqrt(-1) found in F_{p}^2")


def _gaussian_prime_above(pi: QuadInt, p: int, seed: int):
    """g in O_K[i] with g * conj(g) a unit multiple of pi, verified."""
    ring = pi.ring
    zero = QuadInt(0, 0, ring)
    one = QuadInt(1, 0, ring)
    rng = random.Random(seed ^ 0x6A09E667)
    for attempt in range(32):
        if p == 2:
            nu = one  # char 2: -1 = 1 is its own square root
        elif p % 4 == 1:
            base = sqrt_minus_one_mod(p, seed)
            nu = QuadInt(base if attempt % 2 == 0 else p - base, 0, ring)
        else:
            nu = _fp2_sqrt_minus_one(p, ring, seed + attempt)
        if attempt >= 2:
            # same residue class, different lattice point: the rounded
            # descent is trajectory sensitive, so reseed its start
            shift = QuadInt(rng.randrange(-3, 4), rng.randrange(-3, 4), ring)
            nu = nu + shift * pi
        g = _gauss_gcd((pi, zero), (nu, one))
        if g is None:
            continue
        ng = g[0] * g[0] + g[1] * g[1]
        cof = ng.exact_div(pi)
        if cof is not None and abs(cof.norm()) == 1:
            return g
    raise ArithmeticError(f"gcd descent failed above {pi}")


def _two_squares_ring(n: QuadInt, seed: int):
    ring = n.ring
    fac = factor(n, seed)
    plan = []
    for pi, e in fac.factors:
        p_ram = _ramified_rational_prime(pi)
        if p_ram == 2:
            # x = y (mod sqrt2) forces valuation 0 or >= 2, so exactly
            # one sqrt2 is unreachable; three of them are the norm of
            # (1+sqrt2) + i, so any odd power >= 3 works
            if e == 1:
                return None
            p = 2
        elif p_ram == 5:
            p = 5
        else:
            napi = abs(pi.norm())
            root = math.isqrt(napi)
            if root * root == napi:
                p = root  # inert: residue field F_{p^2}, always solvable
            else:
                p = napi  # split: residue field F_p
                if e % 2 and p % 4 == 3:
                    return None
        plan.append((pi, e, p, p_ram))
    z = (QuadInt(1, 0, ring), QuadInt(0, 0, ring))
    for pi, e, p, p_ram in plan:
        if p_ram == 2 and e % 2:
            # norm sqrt2^3 * (1+sqrt2), absorbing three of the e factors
            z = _gauss_mul(z, (QuadInt(1, 1, ring), QuadInt(1, 0, ring)))
            z = _gauss_mul(z, (pi ** ((e - 3) // 2), QuadInt(0, 0, ring)))
            continue
        half, odd = divmod(e, 2)
        z = _gauss_mul(z, (pi**half, QuadInt(0, 0, ring)))
        if odd:
            z = _gauss_mul(z, _gaussian_prime_above(pi, p, seed))
    zz = z[0] * z[0] + z[1] * z[1]
    w = n.exact_div(zz)
    if w is None:
        raise ArithmeticError("combined solution does not divide the norm")
    k = unit_exponent(w)
    if k is None or k % 2:
        raise ArithmeticError(f"unit cofactor {w} is not an even power")
    eta = unit_power(ring, k // 2)
    x, y = z[0] * eta, z[1] * eta
    if x.sign_sigma1() < 0:
        x = -x
    if y.sign_sigma1() < 0:
        y = -y
    if x * x + y * y != n:
        raise ArithmeticError(f"two-square verification failed for {n}")
    return (x, y)


def two_squares(
    n: Union[QuadInt, int], seed: int = 0
) -> Optional[tuple[QuadInt, QuadInt]]:
    """(x, y) with x^2 + y^2 = n, or None when no representation exists.

    Over Z this is decided by the classical prime criterion; over the
    rings n must be totally positive and the answer is assembled from
    per-prime gcd descents, then verified exactly.
    """
    if isinstance(n, int):
        n = QuadInt(n, 0, INT)
    if not n:
        raise ValueError("n must be nonzero")
    if n.ring is INT:
        res = _two_squares_int(n.a, seed)
        if res is None:
            return None
        return (QuadInt(res[0], 0, INT), QuadInt(res[1], 0, INT))
    if not n.is_totally_positive():
        raise ValueError("ring argument must be totally positive")
    return _two_squares_ring(n, seed)


# -- four squares over Z ---------------------------------------------------


def _as_rng(rng) -> random.Random:
    if rng is None:
        return random.Random(0)
    if isinstance(rng, int):
        return random.Random(rng)
    return rng


def four_squares(n: int, rng=None) -> FourSquareSolution:
    """A random representation n = x1^2 + x2^2 + x3^2 + x4^2 over Z.

    Draws (x3, x4) and accepts when the remainder is 0, 1, 2, or a
    prime congruent to 1 mod 4; after enough misses the acceptance
    widens to any two-square remainder, so termination never depends
    on the prime heuristic.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    rng = _as_rng(rng)

    def pack(x1: int, x2: int, x3: int, x4: int) -> FourSquareSolution:
        if x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4 != n:
            raise ArithmeticError("four-square verification failed")
        return FourSquareSolution(
            QuadInt(x1, 0, INT), QuadInt(x2, 0, INT),
            QuadInt(x3, 0, INT), QuadInt(x4, 0, INT),
        )

    if n < 100:
        for x1 in range(math.isqrt(n) + 1):
            for x2 in range(x1, math.isqrt(n - x1 * x1) + 1):
                for x3 in range(x2, math.isqrt(n - x1 * x1 - x2 * x2) + 1):
                    rem = n - x1 * x1 - x2 * x2 - x3 * x3
                    x4 = math.isqrt(rem)
                    if x4 * x4 == rem and x4 >= x3:
                        return pack(x1, x2, x3, x4)
        raise ArithmeticError("unreachable: Lagrange guarantees a solution")

    root = math.isqrt(n)
    for attempt in range(100_000):
        x3 = rng.randint(0, root)
        x4 = rng.randint(0, math.isqrt(n - x3 * x3))
        m = n - x3 * x3 - x4 * x4
        if m == 0:
            return pack(0, 0, x3, x4)
        if m == 1:
            return pack(0, 1, x3, x4)
        if m == 2:
            return pack(1, 1, x3, x4)
        if m % 4 == 1 and is_probable_prime(m):
            x, y = cornacchia(m)
            return pack(x, y, x3, x4)
        if attempt >= 256:
            pair = _two_squares_int(m, 0)
            if pair is not None:
                return pack(pair[0], pair[1], x3, x4)
    raise ArithmeticError(f"no representation found for {n} within budget")


# -- cap enumeration -------------------------------------------------------


def _cos_interval(lo: float, hi: float) -> tuple[float, float]:
    """Range of cos over [lo, hi] (radians, hi - lo <= 2*pi)."""
    cands = [math.cos(lo), math.cos(hi)]
    k_lo = math.ceil(lo / math.pi)
    k_hi = math.floor(hi / math.pi)
    for k in range(k_lo, k_hi + 1):
        cands.append(1.0 if k % 2 == 0 else -1.0)
    return (min(cands), max(cands))


def _scan_int(c: CapConstraint, s_cut: float) -> list:
    """All integer pairs in the region with score > s_cut, checked exactly."""
    n = c.n.a
    root = math.isqrt(n)
    r1 = math.sqrt(n)
    if s_cut <= -r1:
        x_lo, x_hi = -root, root
    else:
        alpha = math.atan2(c.xi2, c.xi1)
        theta = math.acos(max(-1.0, min(1.0, s_cut / r1)))
        c_min, c_max = _cos_interval(alpha - theta, alpha + theta)
        radii = (max(s_cut, 0.0), r1)
        prods = [r * co for r in radii for co in (c_min, c_max)]
        x_lo = max(-root, math.floor(min(prods)) - 1)
        x_hi = min(root, math.ceil(max(prods)) + 1)
    out = []
    thr = c.threshold()
    for x1 in range(x_lo, x_hi + 1):
        y_max = math.isqrt(n - x1 * x1)
        lo, hi = -y_max, y_max
        rhs = s_cut - c.xi1 * x1
        if c.xi2 > 1e-15:
            lo = max(lo, math.floor(rhs / c.xi2) - 1)
        elif c.xi2 < -1e-15:
            hi = min(hi, math.ceil(rhs / c.xi2) + 1)
        elif c.xi1 * x1 <= s_cut:
            continue
        q1 = QuadInt(x1, 0, INT)
        for x2 in range(lo, hi + 1):
            if x1 * x1 + x2 * x2 > n:
                continue
            q2 = QuadInt(x2, 0, INT)
            s = c.xi1 * x1 + c.xi2 * x2
            if s > s_cut and s > thr:
                out.append((q1, q2))
    return out


def _lll_reduce(cols: list[list[float]]) -> list[list[int]]:
    """Integer combinations forming an LLL-reduced basis of the columns."""
    d = len(cols)
    b = [list(col) for col in cols]
    u = [[1 if i == j else 0 for j in range(d)] for i in range(d)]

    def dot(x, y):
        return sum(p * q for p, q in zip(x, y))

    def gs():
        star = []
        mu = [[0.0] * d for _ in range(d)]
        for i in range(d):
            v = list(b[i])
            for j in range(i):
                mu[i][j] = dot(b[i], star[j]) / dot(star[j], star[j])
                v = [x - mu[i][j] * y for x, y in zip(v, star[j])]
            star.append(v)
        return star, mu

    star, mu = gs()
    k = 1
    guard = 0
    while k < d and guard < 1000:
        guard += 1
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                u[k] = [x - q * y for x, y in zip(u[k], u[j])]
                star, mu = gs()
        if dot(star[k], star[k]) >= (0.99 - mu[k][k - 1] ** 2) * dot(
            star[k - 1], star[k - 1]
        ):
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            u[k], u[k - 1] = u[k - 1], u[k]
            star, mu = gs()
            k = max(k - 1, 1)
    return u


def _sphere_points(
    cols: list[list[float]], center: list[float], radius: float
) -> Iterator[list[int]]:
    """All integer combinations z with ||cols . z - center|| <= radius."""
    d = len(cols)
    star = []
    mu = [[0.0] * d for _ in range(d)]
    for i in range(d):
        v = list(cols[i])
        for j in range(i):
            mu[i][j] = sum(
                p * q for p, q in zip(cols[i], star[j])
            ) / sum(p * p for p in star[j])
            v = [x - mu[i][j] * y for x, y in zip(v, star[j])]
        star.append(v)
    norms = [sum(p * p for p in s) for s in star]
    if min(norms) <= 0:
        raise ArithmeticError("degenerate lattice basis")
    # center coordinates in the GS frame
    cstar = [
        sum(p * q for p, q in zip(center, star[i])) / norms[i] for i in range(d)
    ]
    r2 = radius * radius
    z = [0] * d

    def walk(level: int, remaining: float) -> Iterator[list[int]]:
        # offset along star[level] is z[level] + sum mu[j][level] z[j] - cstar
        shift = sum(mu[j][level] * z[j] for j in range(level + 1, d))
        mid = cstar[level] - shift
        half = math.sqrt(max(0.0, remaining / norms[level]))
        lo = math.ceil(mid - half - 1e-9)
        hi = math.floor(mid + half + 1e-9)
        for v in range(lo, hi + 1):
            z[level] = v
            used = (v + shift - cstar[level]) ** 2 * norms[level]
            if used > remaining + 1e-9:
                continue
            if level == 0:
                yield list(z)
            else:
                yield from walk(level - 1, remaining - used)
        z[level] = 0

    yield from walk(d - 1, r2)


def _scan_ring(c: CapConstraint, s_cut: float) -> list:
    """Region points over a quadratic ring via lattice sphere decoding."""
    ring = c.n.ring
    w = QuadInt(0, 1, ring)
    w1, w2 = w.sigma1(), w.sigma2()
    r1 = math.sqrt(c.n.sigma1())
    r2 = math.sqrt(c.n.sigma2())
    # y = (s, t, u, v): rotated first embedding, then second embedding
    gens = [
        [c.xi1, -c.xi2, 1.0, 0.0],          # x1 += 1
        [c.xi1 * w1, -c.xi2 * w1, w2, 0.0],  # x1 += w
        [c.xi2, c.xi1, 0.0, 1.0],            # x2 += 1
        [c.xi2 * w1, c.xi1 * w1, 0.0, w2],   # x2 += w
    ]
    s_lo = max(s_cut, -r1)
    t_max = r1 if s_lo <= 0 else math.sqrt(max(0.0, r1 * r1 - s_lo * s_lo))
    center = [(s_lo + r1) / 2.0, 0.0, 0.0, 0.0]
    halves = [
        max((r1 - s_lo) / 2.0, 1e-9 * max(r1, 1.0)),
        max(t_max, 1e-9 * max(r1, 1.0)),
        r2,
        r2,
    ]
    scaled = [[g[i] / halves[i] for i in range(4)] for g in gens]
    combos = _lll_reduce(scaled)
    red = [
        [sum(cmb[k] * scaled[k][i] for k in range(4)) for i in range(4)]
        for cmb in combos
    ]
    scent = [center[i] / halves[i] for i in range(4)]
    out = []
    for z in _sphere_points(red, scent, 2.0 + 1e-6):
        coeff = [sum(z[k] * combos[k][i] for k in range(4)) for i in range(4)]
        x1 = QuadInt(coeff[0], coeff[1], ring)
        x2 = QuadInt(coeff[2], coeff[3], ring)
        if not c.contains(x1, x2):
            continue
        if c.score(x1, x2) > s_cut:
            out.append((x1, x2))
    return out


def _segment_area(r: float, d: float) -> float:
    """Area of the disk segment {x in disk(r): x . e > d}."""
    if d <= -r:
        return math.pi * r * r
    if d >= r:
        return 0.0
    return r * r * math.acos(d / r) - d * math.sqrt(r * r - d * d)


def cap_enumerate(
    c: CapConstraint, budget: int
) -> Iterator[tuple[QuadInt, QuadInt]]:
    """Region points in decreasing score order, at most `budget` of them.

    When the region holds far more points than the budget, enumeration
    is restricted to a score slab chosen by area estimate; the slab is
    widened (ultimately to the whole region) whenever it fails to
    contain `budget` points, so the emitted prefix always matches the
    full enumeration.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    ring = c.n.ring
    scan = _scan_int if ring is INT else _scan_ring
    r1 = math.sqrt(c.n.sigma1())
    thr = c.threshold()
    if ring is INT:
        density = 1.0
    else:
        w = QuadInt(0, 1, ring)
        covol2 = abs(w.sigma2() - w.sigma1())
        r2 = math.sqrt(c.n.sigma2())
        density = (math.pi * r2 * r2) / (covol2 * covol2)

    def estimate(cut: float) -> float:
        return _segment_area(r1, cut) * density

    target = 4.0 * (budget + 16)
    s_cut = thr
    if estimate(thr) > 2 * target:
        lo, hi = thr, r1
        for _ in range(60):
            mid = (lo + hi) / 2.0
            if estimate(mid) > target:
                lo = mid
            else:
                hi = mid
        s_cut = lo
    points = None
    while True:
        points = scan(c, s_cut)
        if len(points) >= budget or s_cut <= thr:
            break
        s_cut = max(thr, s_cut - (s_cut - thr) * 0.75 - 1e-12)
    points.sort(
        key=lambda p: (-c.score(p[0], p[1]), p[0].a, p[0].b, p[1].a, p[1].b)
    )
    seen = set()
    emitted = 0
    for x1, x2 in points:
        key = (x1.a, x1.b, x2.a, x2.b)
        if key in seen:
            continue
        seen.add(key)
        yield (x1, x2)
        emitted += 1
        if emitted >= budget:
            return


# -- cap-constrained four squares ------------------------------------------


def approx_four_squares(
    c: CapConstraint,
    mode: str = "factoring",
    budget: int = DEFAULT_BUDGET,
    rng=None,
) -> Optional[FourSquareSolution]:
    """First cap candidate whose remainder splits into two squares.

    In "prime-only" mode a remainder is attempted only when it is (or
    has rational norm) a prime congruent to 1 mod 4, mirroring the fast
    heuristic; "factoring" mode tries every remainder.  Returns None
    when `budget` candidates are exhausted.
    """
    if mode not in ("factoring", "prime-only"):
        raise ValueError(f"unknown mode: {mode}")
    rng = _as_rng(rng)
    seed = rng.randrange(1 << 32)
    ring = c.n.ring
    zero = QuadInt(0, 0, ring)
    for x1, x2 in cap_enumerate(c, budget):
        m = c.n - x1 * x1 - x2 * x2
        if not m:
            return _checked(c.n, FourSquareSolution(x1, x2, zero, zero))
        if mode == "prime-only":
            nm = m.norm() if ring is not INT else m.a
            if not (nm % 4 == 1 and is_probable_prime(nm)):
                continue
        pair = two_squares(m, seed)
        if pair is None:
            continue
        return _checked(c.n, FourSquareSolution(x1, x2, pair[0], pair[1]))
    return None


def _checked(n: QuadInt, sol: FourSquareSolution) -> FourSquareSolution:
    if sol.total() != n:
        raise ArithmeticError("four-square verification failed")
    return sol
