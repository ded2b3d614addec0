"""Exact arithmetic in the quadratic integer rings behind the gate catalog.

Three rings are supported: the rational integers, Z[sqrt(2)], and the
golden ratio ring Z[phi] with phi = (1 + sqrt(5))/2.  Elements are stored
as integer pairs a + b*w where w is the ring generator, and every
decision (signs, divisibility, total positivity, Euclidean steps) is made
with integer casework rather than floating point.
"""

from __future__ import annotations

import enum
import functools
import math
import random
import re
from dataclasses import dataclass
from typing import Iterator, Optional, Union

__all__ = [
    "RingId",
    "INT",
    "SQRT2",
    "PHI",
    "QuadInt",
    "PrimeFactorization",
    "conj",
    "norm",
    "is_totally_positive",
    "euclidean_gcd",
    "unit_exponent",
    "factor",
    "sqrt_minus_one_mod",
    "fundamental_unit",
    "unit_power",
    "parse_quadint",
    "is_probable_prime",
    "factor_int",
    "sqrt_mod",
    "legendre",
]


class RingId(enum.Enum):
    """Identifier of a supported coefficient ring."""

    INT = "int"
    SQRT2 = "sqrt2"
    PHI = "phi"

    def __repr__(self) -> str:
        return f"RingId.{self.name}"


INT = RingId.INT
SQRT2 = RingId.SQRT2
PHI = RingId.PHI

# w satisfies w^2 = W2_CONST + W2_LIN * w
_W2 = {RingId.INT: (0, 0), RingId.SQRT2: (2, 0), RingId.PHI: (1, 1)}

# float value of w at the two real embeddings
_W_EMBED = {
    RingId.INT: (0.0, 0.0),
    RingId.SQRT2: (math.sqrt(2.0), -math.sqrt(2.0)),
    RingId.PHI: ((1.0 + math.sqrt(5.0)) / 2.0, (1.0 - math.sqrt(5.0)) / 2.0),
}


@dataclass(frozen=True, slots=True)
class QuadInt:
    """a + b*w in the ring named by ``ring``.

    Instances are immutable and hashable.  Arithmetic accepts plain ints,
    which are coerced into the same ring.
    """

    a: int
    b: int
    ring: RingId

    def __post_init__(self) -> None:
        if self.ring is RingId.INT and self.b != 0:
            raise ValueError("rational integers have no w component")

    # -- construction ------------------------------------------------

    @classmethod
    def from_int(cls, n: int, ring: RingId) -> "QuadInt":
        return cls(n, 0, ring)

    def _coerce(self, other: Union["QuadInt", int]) -> "QuadInt":
        if isinstance(other, QuadInt):
            if other.ring is not self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return QuadInt(other, 0, self.ring)
        return NotImplemented  # type: ignore[return-value]

    # -- ring operations ---------------------------------------------

    def __add__(self, other: Union["QuadInt", int]) -> "QuadInt":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadInt(self.a + o.a, self.b + o.b, self.ring)

    __radd__ = __add__

    def __sub__(self, other: Union["QuadInt", int]) -> "QuadInt":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadInt(self.a - o.a, self.b - o.b, self.ring)

    def __rsub__(self, other: Union["QuadInt", int]) -> "QuadInt":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadInt(o.a - self.a, o.b - self.b, self.ring)

    def __mul__(self, other: Union["QuadInt", int]) -> "QuadInt":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        c0, c1 = _W2[self.ring]
        bd = self.b * o.b
        return QuadInt(
            self.a * o.a + c0 * bd,
            self.a * o.b + self.b * o.a + c1 * bd,
            self.ring,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.a, -self.b, self.ring)

    def __pow__(self, exp: int) -> "QuadInt":
        if exp < 0:
            raise ValueError("negative powers are not ring elements in general")
        result = QuadInt(1, 0, self.ring)
        base = self
        e = exp
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    # -- embeddings and signs ----------------------------------------

    def conj(self) -> "QuadInt":
        """Galois conjugate (identity on rational integers)."""
        if self.ring is RingId.INT:
            return self
        if self.ring is RingId.SQRT2:
            return QuadInt(self.a, -self.b, self.ring)
        return QuadInt(self.a + self.b, -self.b, self.ring)

    def norm(self) -> int:
        """Field norm to Z.  For the rational integers this is the value itself."""
        if self.ring is RingId.INT:
            return self.a
        if self.ring is RingId.SQRT2:
            return self.a * self.a - 2 * self.b * self.b
        return self.a * self.a + self.a * self.b - self.b * self.b

    def trace(self) -> int:
        if self.ring is RingId.PHI:
            return 2 * self.a + self.b
        return 2 * self.a

    def sigma1(self) -> float:
        w1, _ = _W_EMBED[self.ring]
        return self.a + self.b * w1

    def sigma2(self) -> float:
        _, w2 = _W_EMBED[self.ring]
        return self.a + self.b * w2

    def sign_sigma1(self) -> int:
        """Exact sign of the first embedding: -1, 0, or 1."""
        return _sign_embed(self.a, self.b, self.ring, first=True)

    def sign_sigma2(self) -> int:
        return _sign_embed(self.a, self.b, self.ring, first=False)

    def is_totally_positive(self) -> bool:
        return self.sign_sigma1() > 0 and self.sign_sigma2() > 0

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    # -- division ----------------------------------------------------

    def divmod(self, other: Union["QuadInt", int]) -> tuple["QuadInt", "QuadInt"]:
        """Euclidean division by nearest-coordinate rounding.

        Both supported quadratic rings are norm-Euclidean, so the
        remainder always satisfies ``|norm(r)| < |norm(d)|``.
        """
        d = self._coerce(other)
        if not d:
            raise ZeroDivisionError("division by zero")
        if self.ring is RingId.INT:
            q = self.a // d.a
            r = self.a - q * d.a
            # bias toward |r| <= |d|/2 to keep the Euclidean bound tight
            if 2 * abs(r) > abs(d.a):
                q += 1 if (r > 0) == (d.a > 0) else -1
                r = self.a - q * d.a
            return QuadInt(q, 0, self.ring), QuadInt(r, 0, self.ring)
        nd = d.norm()
        num = self * d.conj()
        qa = _round_div(num.a, nd)
        qb = _round_div(num.b, nd)
        q = QuadInt(qa, qb, self.ring)
        r = self - q * d
        return q, r

    def __mod__(self, other: Union["QuadInt", int]) -> "QuadInt":
        return self.divmod(other)[1]

    def exact_div(self, other: Union["QuadInt", int]) -> Optional["QuadInt"]:
        """Quotient self/other when the division is exact, else None."""
        d = self._coerce(other)
        if not d:
            raise ZeroDivisionError("division by zero")
        if self.ring is RingId.INT:
            if self.a % d.a:
                return None
            return QuadInt(self.a // d.a, 0, self.ring)
        nd = d.norm()
        num = self * d.conj()
        if num.a % nd or num.b % nd:
            return None
        return QuadInt(num.a // nd, num.b // nd, self.ring)

    def divides(self, other: "QuadInt") -> bool:
        return other.exact_div(self) is not None

    # -- ordering by first embedding ----------------------------------

    def __lt__(self, other: Union["QuadInt", int]) -> bool:
        o = self._coerce(other)
        return (self - o).sign_sigma1() < 0

    def __le__(self, other: Union["QuadInt", int]) -> bool:
        o = self._coerce(other)
        return (self - o).sign_sigma1() <= 0

    def __gt__(self, other: Union["QuadInt", int]) -> bool:
        o = self._coerce(other)
        return (self - o).sign_sigma1() > 0

    def __ge__(self, other: Union["QuadInt", int]) -> bool:
        o = self._coerce(other)
        return (self - o).sign_sigma1() >= 0

    # -- text --------------------------------------------------------

    def __repr__(self) -> str:
        return f"QuadInt({self.a}, {self.b}, {self.ring!r})"

    def __str__(self) -> str:
        if self.ring is RingId.INT:
            return f"{self.a}@int"
        return f"{self.a}{self.b:+d}*w@{self.ring.value}"


def _sign_embed(a: int, b: int, ring: RingId, first: bool) -> int:
    """Exact sign of a + b*w at one real embedding."""
    if ring is RingId.INT:
        return (a > 0) - (a < 0)
    if ring is RingId.PHI:
        # a + b*phi = ((2a + b) + b*sqrt(5)) / 2
        a, b, d = 2 * a + b, b, 5
    else:
        d = 2
    if not first:
        b = -b
    if a == 0 and b == 0:
        return 0
    if a >= 0 and b >= 0:
        return 1
    if a <= 0 and b <= 0:
        return -1
    # opposite signs: compare a^2 with d*b^2
    lhs, rhs = a * a, d * b * b
    if a > 0:
        return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
    return -1 if lhs > rhs else (1 if lhs < rhs else 0)


def _round_div(n: int, d: int) -> int:
    """Nearest integer to n/d, half away from zero, exact."""
    if d < 0:
        n, d = -n, -d
    if n >= 0:
        return (2 * n + d) // (2 * d)
    return -((-2 * n + d) // (2 * d))


# -- module-level wrappers (the functional surface) --------------------


def conj(x: QuadInt) -> QuadInt:
    return x.conj()


def norm(x: QuadInt) -> int:
    return x.norm()


def is_totally_positive(x: QuadInt) -> bool:
    return x.is_totally_positive()


@functools.lru_cache(maxsize=None)
def fundamental_unit(ring: RingId) -> QuadInt:
    """1 + sqrt(2) or phi; both have norm -1.  For Z returns 1."""
    if ring is RingId.SQRT2:
        return QuadInt(1, 1, ring)
    if ring is RingId.PHI:
        return QuadInt(0, 1, ring)
    return QuadInt(1, 0, ring)


@functools.lru_cache(maxsize=None)
def unit_power(ring: RingId, m: int) -> QuadInt:
    """The unit eps^m for any integer m (eps the fundamental unit)."""
    if ring is RingId.INT:
        return QuadInt(1, 0, ring)
    if m == 0:
        return QuadInt(1, 0, ring)
    eps = fundamental_unit(ring)
    if m < 0:
        # norm(eps) = -1 in both rings, so eps^-1 = -conj(eps)
        eps = -eps.conj()
        m = -m
    return eps ** m


def _abs_log_cmp(u: QuadInt, v: QuadInt) -> int:
    """Compare |log sigma1(u)| with |log sigma1(v)| exactly.

    Requires sigma1 > 0 for both.  Returns -1, 0, or 1.  The trick:
    |log t| <= |log s| iff max(t, 1/t) <= max(s, 1/s), and products of
    ring elements against 1 have exact signs.
    """
    one = QuadInt(1, 0, u.ring)
    u_big = (u - one).sign_sigma1() >= 0  # sigma1(u) >= 1
    v_big = (v - one).sign_sigma1() >= 0
    # candidates for max(t, 1/t): t if t >= 1 else 1/t
    if u_big and v_big:
        return (u - v).sign_sigma1()
    if u_big and not v_big:
        # compare u with 1/v: sign of u*v - 1
        return (u * v - one).sign_sigma1()
    if not u_big and v_big:
        return (one - u * v).sign_sigma1()
    return (v - u).sign_sigma1()


def canonical_unit_rep(x: QuadInt) -> QuadInt:
    """Associate of x with minimal |log sigma1| and positive sigma1.

    This is the normalization applied to gcd results, factor output
    primes, and any other representative-of-an-ideal choice.
    """
    if not x:
        return x
    if x.ring is RingId.INT:
        return QuadInt(abs(x.a), 0, x.ring)
    if x.sign_sigma1() < 0:
        x = -x
    log_eps = math.log(fundamental_unit(x.ring).sigma1())
    s1 = x.sigma1()
    if s1 > 0 and math.isfinite(s1):
        guess = -round(math.log(abs(s1)) / log_eps)
    else:
        # coordinates too large for float: walk from 0
        guess = 0
    best = x * unit_power(x.ring, guess)
    if best.sign_sigma1() < 0:
        best = -best
    while True:
        moved = False
        for step in (1, -1):
            cand = best * unit_power(x.ring, step)
            if cand.sign_sigma1() < 0:
                cand = -cand
            if _abs_log_cmp(cand, best) < 0:
                best = cand
                moved = True
        if not moved:
            return best


def unit_exponent(x: QuadInt) -> Optional[int]:
    """The k with x == eps^k, or None when x is not such a power.

    Units with negative first embedding are -eps^k and return None;
    callers wanting those can negate first.
    """
    ring = x.ring
    if ring is RingId.INT:
        return 0 if x == QuadInt(1, 0, ring) else None
    if abs(x.norm()) != 1 or x.sign_sigma1() <= 0:
        return None
    log_eps = math.log(fundamental_unit(ring).sigma1())
    s1 = x.sigma1()
    if s1 > 0 and math.isfinite(s1):
        guess = round(math.log(s1) / log_eps)
        for k in (guess, guess - 1, guess + 1):
            if x == unit_power(ring, k):
                return k
    # float guess failed (huge coordinates): walk exactly
    one = QuadInt(1, 0, ring)
    step = -1 if (x - one).sign_sigma1() > 0 else 1
    k, v = 0, x
    while v != one:
        v = v * unit_power(ring, step)
        k -= step
        if abs(k) > 100_000:
            return None
    return k


def euclidean_gcd(x: QuadInt, y: QuadInt) -> QuadInt:
    """Greatest common divisor, canonical-unit normalized.

    Both quadratic rings are norm-Euclidean so the remainder loop
    terminates; a zero gcd means both inputs were zero.
    """
    if x.ring is not y.ring:
        raise ValueError("ring mismatch")
    while y:
        x, y = y, x % y
    return canonical_unit_rep(x)


# -- rational integer machinery ----------------------------------------

_MR_ROUNDS = 64
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_probable_prime(n: int, seed: int = 0x5EED) -> bool:
    """Miller-Rabin with 64 seeded witness rounds."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    rng = random.Random(seed ^ n)
    for _ in range(_MR_ROUNDS):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int:
    """One nontrivial factor of composite odd n (Brent's cycle finding)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_int(n: int, seed: int = 0x5EED) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; 0 and ±1 give {}."""
    n = abs(n)
    out: dict[int, int] = {}
    if n < 2:
        return out
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    rng = random.Random(seed)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m, seed):
            out[m] = out.get(m, 0) + 1
            continue
        # try a short trial-division sweep before rho
        d = 0
        lim = 10_000
        f = 49
        p = 53
        while p * p <= m and p < lim:
            if m % p == 0:
                d = p
                break
            p += 2
        if not d:
            d = _pollard_rho(m, rng)
        stack.append(d)
        stack.append(m // d)
    return out


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for odd prime p: 1, -1, or 0."""
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def sqrt_mod(a: int, p: int, seed: int = 0x5EED) -> int:
    """A square root of a modulo odd prime p (Tonelli-Shanks).

    Raises ValueError when a is a non-residue.
    """
    a %= p
    if p == 2 or a == 0:
        return a
    if legendre(a, p) != 1:
        raise ValueError(f"{a} is not a square modulo {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    rng = random.Random(seed ^ p)
    z = 2
    while legendre(z, p) != -1:
        z = rng.randrange(2, p)
    m, c = s, pow(z, q, p)
    t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def sqrt_minus_one_mod(p: int, seed: int = 0) -> int:
    """A square root of -1 modulo p, for p = 2 or a prime p = 1 (mod 4).

    Randomized: raises a^((p-1)/4) for seeded random a until the square
    is -1 (each draw succeeds with probability 1/2).
    """
    if p == 2:
        return 1
    if p < 2 or p % 4 != 1 or not is_probable_prime(p):
        raise ValueError(f"-1 is not a square modulo {p}")
    rng = random.Random(seed)
    e = (p - 1) // 4
    while True:
        a = rng.randrange(2, p - 1)
        v = pow(a, e, p)
        if v * v % p == p - 1:
            return v


# -- factorization over the quadratic rings -----------------------------


@dataclass(frozen=True)
class PrimeFactorization:
    """unit * prod(prime^exp) == the factored element, exactly."""

    unit: QuadInt
    factors: tuple[tuple[QuadInt, int], ...]

    def value(self) -> QuadInt:
        out = self.unit
        for p, e in self.factors:
            out = out * p ** e
        return out

    def __iter__(self) -> Iterator[tuple[QuadInt, int]]:
        return iter(self.factors)


def _ramified_prime(ring: RingId) -> tuple[int, QuadInt]:
    if ring is RingId.SQRT2:
        return 2, QuadInt(0, 1, ring)
    return 5, QuadInt(-1, 2, ring)  # 2*phi - 1 = sqrt(5)


def _splits(p: int, ring: RingId) -> bool:
    d = 2 if ring is RingId.SQRT2 else 5
    if p == 2:
        return d % 8 == 1  # never for these two rings
    return legendre(d % p, p) == 1


def _prime_above(p: int, ring: RingId, seed: int) -> QuadInt:
    """A prime dividing the split rational prime p, via gcd(p, s - w)."""
    if ring is RingId.SQRT2:
        s = sqrt_mod(2, p, seed)
        cand = QuadInt(s, -1, ring)
    else:
        r = sqrt_mod(5, p, seed)
        # roots of x^2 - x - 1 are (1 ± r)/2 mod p
        s = (1 + r) * pow(2, p - 2, p) % p
        cand = QuadInt(s, -1, ring)
    return euclidean_gcd(QuadInt(p, 0, ring), cand)


def factor(x: QuadInt, seed: int = 0x5EED) -> PrimeFactorization:
    """Factor a nonzero element into canonical-normalized primes.

    The leftover unit is returned as-is so that
    ``unit * prod(p^e) == x`` holds exactly.
    """
    if not x:
        raise ValueError("cannot factor zero")
    ring = x.ring
    if ring is RingId.INT:
        fs = factor_int(x.a, seed)
        unit = QuadInt(1 if x.a > 0 else -1, 0, ring)
        factors = tuple(
            (QuadInt(p, 0, ring), e) for p, e in sorted(fs.items())
        )
        return PrimeFactorization(unit, factors)

    n = abs(x.norm())
    rational = factor_int(n, seed)
    rem = x
    found: list[tuple[QuadInt, int]] = []
    ram_p, ram_pi = _ramified_prime(ring)
    for p in sorted(rational):
        if p == ram_p:
            pi = canonical_unit_rep(ram_pi)
            e = 0
            q = rem.exact_div(pi)
            while q is not None:
                rem, e = q, e + 1
                q = rem.exact_div(pi)
            if e:
                found.append((pi, e))
        elif _splits(p, ring):
            pi = _prime_above(p, ring, seed)
            for cand in (pi, canonical_unit_rep(pi.conj())):
                e = 0
                q = rem.exact_div(cand)
                while q is not None:
                    rem, e = q, e + 1
                    q = rem.exact_div(cand)
                if e:
                    found.append((cand, e))
        else:
            pi = canonical_unit_rep(QuadInt(p, 0, ring))
            e = 0
            q = rem.exact_div(pi)
            while q is not None:
                rem, e = q, e + 1
                q = rem.exact_div(pi)
            if e:
                found.append((pi, e))
    if abs(rem.norm()) != 1:
        raise ArithmeticError(f"factorization left non-unit cofactor {rem}")
    return PrimeFactorization(rem, tuple(found))


# -- text round trip ----------------------------------------------------

_QUADINT_RE = re.compile(
    r"^\s*(?P<a>[+-]?\d+)\s*(?:(?P<b>[+-]\s*\d+)\s*\*\s*w)?\s*@(?P<ring>int|sqrt2|phi)\s*$"
)


def parse_quadint(text: str) -> QuadInt:
    """Parse 'a+b*w@ring' (the format produced by str)."""
    m = _QUADINT_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse ring element: {text!r}")
    ring = RingId(m.group("ring"))
    a = int(m.group("a"))
    b = int(m.group("b").replace(" ", "")) if m.group("b") else 0
    return QuadInt(a, b, ring)
