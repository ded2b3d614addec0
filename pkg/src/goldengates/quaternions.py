"""Quaternions over the supported rings, their arithmetic orders, and
the PU(2) geometry used everywhere else.

A quaternion is stored as four exact ring coordinates over a common
denominator of 1 or 2, which is enough for every order in the catalog:
half-integer coordinates cover the Hurwitz and icosian elements, and
sqrt(2)-denominator elements embed with denominator 2 after multiplying
through by sqrt(2).

The projective side: s(q) is the standard splitting matrix
[[x0+i*x1, x2+i*x3], [-x2+i*x3, x0-i*x1]], and two nonzero quaternions
define the same PU(2) element exactly when they differ by a ring scalar.
"""

from __future__ import annotations

import enum
import functools
import math
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import mpmath
import numpy as np

from goldengates import _unitdata
from goldengates.rings import (
    INT,
    PHI,
    SQRT2,
    QuadInt,
    RingId,
    canonical_unit_rep,
    euclidean_gcd,
    fundamental_unit,
    unit_exponent,
    unit_power,
)

__all__ = [
    "Quaternion",
    "OrderId",
    "Order",
    "UnitaryMatrix",
    "get_order",
    "multiply",
    "reduced_norm",
    "unit_group",
    "unit_classes",
    "to_su2",
    "pu2_distance",
    "canonicalize",
    "parse_quaternion",
]

UnitaryMatrix = np.ndarray


@dataclass(frozen=True, slots=True)
class Quaternion:
    """x0 + x1*i + x2*j + x3*k over a common denominator of 1 or 2."""

    x0: QuadInt
    x1: QuadInt
    x2: QuadInt
    x3: QuadInt
    denom: int = 1

    def __post_init__(self) -> None:
        ring = self.x0.ring
        if any(c.ring is not ring for c in (self.x1, self.x2, self.x3)):
            raise ValueError("mixed coordinate rings")
        if self.denom not in (1, 2):
            raise ValueError("denominator must be 1 or 2")
        if self.denom == 2:
            halves = [c.exact_div(2) for c in self.coords]
            if all(h is not None for h in halves):
                object.__setattr__(self, "x0", halves[0])
                object.__setattr__(self, "x1", halves[1])
                object.__setattr__(self, "x2", halves[2])
                object.__setattr__(self, "x3", halves[3])
                object.__setattr__(self, "denom", 1)

    # -- construction helpers -----------------------------------------

    @classmethod
    def from_ints(
        cls,
        ring: RingId,
        x0: Union[int, tuple[int, int]],
        x1: Union[int, tuple[int, int]],
        x2: Union[int, tuple[int, int]],
        x3: Union[int, tuple[int, int]],
        denom: int = 1,
    ) -> "Quaternion":
        def mk(v):
            if isinstance(v, tuple):
                return QuadInt(v[0], v[1], ring)
            return QuadInt(v, 0, ring)

        return cls(mk(x0), mk(x1), mk(x2), mk(x3), denom)

    @classmethod
    def scalar(cls, value: QuadInt) -> "Quaternion":
        zero = QuadInt(0, 0, value.ring)
        return cls(value, zero, zero, zero)

    @classmethod
    def with_denominator(cls, coords: Sequence[QuadInt], den: QuadInt) -> "Quaternion":
        """Build (sum coords)/den for a ring denominator such as sqrt(2).

        The denominator is cleared by multiplying through with its
        conjugate; only results with final denominator 1 or 2 are
        representable.
        """
        n = den.norm()
        sign = 1 if n > 0 else -1
        num = [c * den.conj() * sign for c in coords]
        n = abs(n)
        while n % 2 == 0 and all(c.exact_div(2) is not None for c in num):
            num = [c.exact_div(2) for c in num]
            n //= 2
        if n not in (1, 2):
            raise ValueError(f"denominator {den} is not representable")
        return cls(num[0], num[1], num[2], num[3], n)

    # -- basic structure ----------------------------------------------

    @property
    def ring(self) -> RingId:
        return self.x0.ring

    @property
    def coords(self) -> tuple[QuadInt, QuadInt, QuadInt, QuadInt]:
        return (self.x0, self.x1, self.x2, self.x3)

    def doubled(self) -> tuple[QuadInt, QuadInt, QuadInt, QuadInt]:
        """Integer coordinates of 2*self (exact for both denominators)."""
        if self.denom == 2:
            return self.coords
        return tuple(c * 2 for c in self.coords)

    def __bool__(self) -> bool:
        return any(self.coords)

    # -- arithmetic ----------------------------------------------------

    def __mul__(self, other: Union["Quaternion", QuadInt, int]) -> "Quaternion":
        if isinstance(other, int):
            other = QuadInt(other, 0, self.ring)
        if isinstance(other, QuadInt):
            return Quaternion(
                self.x0 * other, self.x1 * other, self.x2 * other,
                self.x3 * other, self.denom,
            )
        if not isinstance(other, Quaternion):
            return NotImplemented
        if other.ring is not self.ring:
            raise ValueError("ring mismatch")
        p0, p1, p2, p3 = self.coords
        q0, q1, q2, q3 = other.coords
        r = (
            p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
            p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
            p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
            p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0,
        )
        d = self.denom * other.denom
        if d == 4:
            halves = [c.exact_div(2) for c in r]
            if any(h is None for h in halves):
                raise ArithmeticError("product leaves the half-integer lattice")
            r, d = tuple(halves), 2
        return Quaternion(r[0], r[1], r[2], r[3], d)

    def __rmul__(self, other: Union[QuadInt, int]) -> "Quaternion":
        if isinstance(other, int):
            other = QuadInt(other, 0, self.ring)
        if isinstance(other, QuadInt):
            return self * other
        return NotImplemented

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        if self.denom == other.denom:
            a, b = self.coords, other.coords
            return Quaternion(
                a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], self.denom
            )
        a, b = self.doubled(), other.doubled()
        return Quaternion(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], 2)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return self + (-other)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3, self.denom)

    def conj(self) -> "Quaternion":
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3, self.denom)

    def reduced_norm(self) -> QuadInt:
        s = (
            self.x0 * self.x0 + self.x1 * self.x1
            + self.x2 * self.x2 + self.x3 * self.x3
        )
        if self.denom == 2:
            q = s.exact_div(4)
            if q is None:
                raise ArithmeticError("reduced norm is not integral")
            return q
        return s

    def scalar_div(self, s: QuadInt) -> "Quaternion":
        """Exact division by a ring scalar; raises if not exact."""
        out = [c.exact_div(s) for c in self.coords]
        if any(c is None for c in out):
            raise ArithmeticError(f"coordinates not divisible by {s}")
        return Quaternion(out[0], out[1], out[2], out[3], self.denom)

    # -- ordering and text ----------------------------------------------

    def sort_key(self) -> tuple:
        k = [self.denom]
        for c in self.coords:
            k.extend((c.a, c.b))
        return tuple(k)

    def __str__(self) -> str:
        def coord(c: QuadInt) -> str:
            if self.ring is INT or c.b == 0:
                return str(c.a)
            return f"{c.a}{c.b:+d}*w"

        body = ",".join(coord(c) for c in self.coords)
        return f"{body}/{self.denom}@{self.ring.value}"

    def __repr__(self) -> str:
        return f"Quaternion<{self}>"


_COORD_RE = re.compile(r"^(?P<a>[+-]?\d+)(?:(?P<b>[+-]\d+)\*w)?$")


def parse_quaternion(text: str) -> Quaternion:
    """Parse 'x0,x1,x2,x3/denom@ring' as produced by str()."""
    try:
        body, ring_name = text.strip().rsplit("@", 1)
        coords_text, denom_text = body.rsplit("/", 1)
        parts = coords_text.split(",")
        if len(parts) != 4:
            raise ValueError
        ring = RingId(ring_name)
        denom = int(denom_text)
        coords = []
        for p in parts:
            m = _COORD_RE.match(p.strip())
            if not m:
                raise ValueError
            b = int(m.group("b")) if m.group("b") else 0
            coords.append(QuadInt(int(m.group("a")), b, ring))
    except (ValueError, KeyError) as exc:
        raise ValueError(f"cannot parse quaternion: {text!r}") from exc
    return Quaternion(coords[0], coords[1], coords[2], coords[3], denom)


def multiply(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q


def reduced_norm(q: Quaternion) -> QuadInt:
    return q.reduced_norm()


# -- projective geometry -------------------------------------------------


def to_su2(q: Quaternion, precision_bits: int = 53) -> UnitaryMatrix:
    """SU(2) image of a nonzero quaternion: s(q)/sqrt(sigma1(nr(q))).

    Intermediate work runs in mpmath at the larger of ``precision_bits``
    and twice the coordinate bit length plus guard bits, then rounds to
    complex128.
    """
    nr = q.reduced_norm()
    if nr.sign_sigma1() <= 0:
        raise ValueError("quaternion has no positive-definite norm")
    num = q.doubled()
    bits = max(abs(c.a).bit_length() + abs(c.b).bit_length() for c in num)
    prec = max(precision_bits, 2 * bits + 64)
    with mpmath.workprec(prec):
        w1 = {
            RingId.INT: mpmath.mpf(0),
            RingId.SQRT2: mpmath.sqrt(2),
            RingId.PHI: (1 + mpmath.sqrt(5)) / 2,
        }[q.ring]
        x = [c.a + c.b * w1 for c in num]
        scale = 1 / (2 * mpmath.sqrt(nr.a + nr.b * w1))
        entries = [
            mpmath.mpc(x[0], x[1]) * scale,
            mpmath.mpc(x[2], x[3]) * scale,
            mpmath.mpc(-x[2], x[3]) * scale,
            mpmath.mpc(x[0], -x[1]) * scale,
        ]
    out = np.array(
        [[complex(entries[0]), complex(entries[1])],
         [complex(entries[2]), complex(entries[3])]],
        dtype=np.complex128,
    )
    return out


def pu2_distance(m: UnitaryMatrix, n: UnitaryMatrix) -> float:
    """sqrt(1 - |tr(M^dag N)|/2), clamped into [0, 1]."""
    t = abs(np.trace(m.conj().T @ n)) / 2.0
    return math.sqrt(min(1.0, max(0.0, 1.0 - t)))


# -- numpy batch arithmetic (doubled integer coordinates) ---------------


def np_ring_mul(x: np.ndarray, y: np.ndarray, ring: RingId) -> np.ndarray:
    """Componentwise ring product on trailing (a, b) pairs."""
    c0, c1 = {RingId.INT: (0, 0), RingId.SQRT2: (2, 0), RingId.PHI: (1, 1)}[ring]
    a1, b1 = x[..., 0], x[..., 1]
    a2, b2 = y[..., 0], y[..., 1]
    bd = b1 * b2
    return np.stack((a1 * a2 + c0 * bd, a1 * b2 + b1 * a2 + c1 * bd), axis=-1)


def np_quat_mul(p: np.ndarray, q: np.ndarray, ring: RingId) -> np.ndarray:
    """Quaternion product in doubled coords [..., 4, 2]; divides by 2 exactly."""
    r = np.empty(np.broadcast_shapes(p.shape, q.shape), dtype=np.int64)
    pi = [p[..., i, :] for i in range(4)]
    qi = [q[..., i, :] for i in range(4)]
    rm = lambda x, y: np_ring_mul(x, y, ring)
    r[..., 0, :] = rm(pi[0], qi[0]) - rm(pi[1], qi[1]) - rm(pi[2], qi[2]) - rm(pi[3], qi[3])
    r[..., 1, :] = rm(pi[0], qi[1]) + rm(pi[1], qi[0]) + rm(pi[2], qi[3]) - rm(pi[3], qi[2])
    r[..., 2, :] = rm(pi[0], qi[2]) - rm(pi[1], qi[3]) + rm(pi[2], qi[0]) + rm(pi[3], qi[1])
    r[..., 3, :] = rm(pi[0], qi[3]) + rm(pi[1], qi[2]) - rm(pi[2], qi[1]) + rm(pi[3], qi[0])
    if (r & 1).any():
        raise ArithmeticError("batch product leaves the half-integer lattice")
    return r >> 1


# -- orders ---------------------------------------------------------------


class OrderId(enum.Enum):
    LIPSCHITZ = "lipschitz"
    HURWITZ = "hurwitz"
    OCTA_SQRT2 = "octa_sqrt2"
    ICOSIAN = "icosian"

    def __repr__(self) -> str:
        return f"OrderId.{self.name}"


def _det3(m) -> QuadInt:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _det4(m) -> QuadInt:
    total = None
    for col in range(4):
        minor = [[m[r][c] for c in range(4) if c != col] for r in range(1, 4)]
        term = m[0][col] * _det3(minor)
        if col % 2:
            term = -term
        total = term if total is None else total + term
    return total


def _adjugate4(m) -> list[list[QuadInt]]:
    adj = [[None] * 4 for _ in range(4)]
    for r in range(4):
        for c in range(4):
            minor = [
                [m[i][j] for j in range(4) if j != c] for i in range(4) if i != r
            ]
            cof = _det3(minor)
            if (r + c) % 2:
                cof = -cof
            adj[c][r] = cof  # transpose
    return adj


class Order:
    """An arithmetic order: a rank-4 O_K-lattice closed under multiplication.

    Coordinates are taken with respect to the stored basis; membership,
    content, and residue computations all go through the exact adjugate
    of the doubled basis matrix.
    """

    def __init__(self, order_id: OrderId, ring: RingId, basis_doubled, units_doubled):
        self.id = order_id
        self.ring = ring
        self.basis = tuple(
            Quaternion.from_ints(ring, *row, denom=2) for row in basis_doubled
        )
        # columns of A are the doubled basis coordinate vectors
        self._A = [
            [self.basis[c].doubled()[r] for c in range(4)] for r in range(4)
        ]
        self._detA = _det4(self._A)
        if not self._detA:
            raise ValueError("singular order basis")
        self._adjA = _adjugate4(self._A)
        self._units_doubled = tuple(tuple(c) for c in units_doubled)
        self._units: Optional[tuple[Quaternion, ...]] = None

    def __repr__(self) -> str:
        return f"Order({self.id!r})"

    # -- membership ---------------------------------------------------

    def coords(self, q: Quaternion) -> Optional[tuple[QuadInt, ...]]:
        """Basis coordinates when q lies in the order, else None."""
        if q.ring is not self.ring:
            return None
        v = q.doubled()
        out = []
        for r in range(4):
            num = (
                self._adjA[r][0] * v[0] + self._adjA[r][1] * v[1]
                + self._adjA[r][2] * v[2] + self._adjA[r][3] * v[3]
            )
            c = num.exact_div(self._detA)
            if c is None:
                return None
            out.append(c)
        return tuple(out)

    def contains(self, q: Quaternion) -> bool:
        return self.coords(q) is not None

    def from_coords(self, coords: Sequence[QuadInt]) -> Quaternion:
        v = []
        for r in range(4):
            v.append(
                self._A[r][0] * coords[0] + self._A[r][1] * coords[1]
                + self._A[r][2] * coords[2] + self._A[r][3] * coords[3]
            )
        return Quaternion(v[0], v[1], v[2], v[3], 2)

    def content(self, q: Quaternion) -> QuadInt:
        """O_K-gcd of the basis coordinates (canonical-unit normalized)."""
        cs = self.coords(q)
        if cs is None:
            raise ValueError(f"{q} is not in order {self.id.value}")
        g = None
        for c in cs:
            if c:
                g = c if g is None else euclidean_gcd(g, c)
        if g is None:
            raise ValueError("zero quaternion has no content")
        return canonical_unit_rep(g)

    # -- units ----------------------------------------------------------

    @property
    def units(self) -> tuple[Quaternion, ...]:
        """All reduced-norm-1 units, re-validated on first access."""
        if self._units is None:
            us = tuple(
                Quaternion.from_ints(self.ring, *row, denom=2)
                for row in self._units_doubled
            )
            self._validate_units(us)
            self._units = us
        return self._units

    def _validate_units(self, us: tuple[Quaternion, ...]) -> None:
        one = QuadInt(1, 0, self.ring)
        keys = set()
        for u in us:
            if u.reduced_norm() != one:
                raise AssertionError(f"stored unit {u} has norm != 1")
            if not self.contains(u):
                raise AssertionError(f"stored unit {u} outside the order")
            keys.add(u.sort_key())
        if len(keys) != len(us):
            raise AssertionError("duplicate stored units")
        arr = np.array(
            [[(c.a, c.b) for c in u.doubled()] for u in us], dtype=np.int64
        )
        prod = np_quat_mul(arr[:, None], arr[None, :], self.ring)
        want = {tuple(map(int, r)) for r in arr.reshape(-1, 8)}
        got = {tuple(map(int, r)) for r in prod.reshape(-1, 8)}
        if not got <= want:
            raise AssertionError("stored unit list is not closed under product")

    def unit_classes(self) -> tuple[Quaternion, ...]:
        """One representative per +-pair, sign-normalized, sorted."""
        reps = {}
        for u in self.units:
            r = _sign_normalize(u)
            reps[r.sort_key()] = r
        return tuple(reps[k] for k in sorted(reps))


def _sign_normalize(q: Quaternion) -> Quaternion:
    for c in q.coords:
        s = c.sign_sigma1()
        if s:
            return q if s > 0 else -q
    return q


_ORDER_SPECS = {
    OrderId.LIPSCHITZ: (
        INT,
        ((2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2)),
        _unitdata._LIPSCHITZ_UNITS,
    ),
    OrderId.HURWITZ: (
        INT,
        ((2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (1, 1, 1, 1)),
        _unitdata._HURWITZ_UNITS,
    ),
    OrderId.OCTA_SQRT2: (
        SQRT2,
        (
            ((2, 0), (0, 0), (0, 0), (0, 0)),
            ((0, 1), (0, 1), (0, 0), (0, 0)),
            ((0, 1), (0, 0), (0, 1), (0, 0)),
            ((1, 0), (1, 0), (1, 0), (1, 0)),
        ),
        _unitdata._OCTA_UNITS,
    ),
    OrderId.ICOSIAN: (
        PHI,
        (
            ((1, 0), (1, 0), (1, 0), (1, 0)),
            ((0, 0), (1, 0), (-1, 1), (0, 1)),
            ((0, 0), (0, 0), (4, -2), (2, -2)),
            ((0, 0), (0, 0), (0, 0), (2, 0)),
        ),
        _unitdata._ICOSIAN_UNITS,
    ),
}


@functools.lru_cache(maxsize=None)
def get_order(order_id: OrderId) -> Order:
    ring, basis, units = _ORDER_SPECS[order_id]
    return Order(order_id, ring, basis, units)


def unit_group(order: Union[Order, OrderId]) -> tuple[Quaternion, ...]:
    """The finite list of reduced-norm-1 units of the order."""
    if isinstance(order, OrderId):
        order = get_order(order)
    return order.units


def unit_classes(order: Union[Order, OrderId]) -> tuple[Quaternion, ...]:
    if isinstance(order, OrderId):
        order = get_order(order)
    return order.unit_classes()


# -- canonical projective representatives --------------------------------


def canonicalize(
    q: Quaternion, pi: QuadInt, order: Union[Order, OrderId]
) -> Quaternion:
    """Canonical representative of the PU(2) class of q within its order.

    Content (the O_K-gcd of the order coordinates) is divided out, the
    reduced norm is brought into the fixed unit coset {1, eps} times a
    power of pi, and the sign is fixed so the first nonzero storage
    coordinate has positive first embedding.  Over Z the norm cofactor
    may retain prime factors other than pi (scaled catalog generators);
    over the quadratic rings a non-unit cofactor is an error.
    """
    if isinstance(order, OrderId):
        order = get_order(order)
    if not q:
        raise ValueError("cannot canonicalize zero")
    g = order.content(q)
    if not g.is_unit():
        # divide in order coordinates: storage coordinates of a
        # half-integer element need not themselves be divisible
        q = _scalar_div_in_order(q, g, order)
    nr = q.reduced_norm()
    if q.ring is not INT:
        t = 0
        rem = nr
        nxt = rem.exact_div(pi)
        while nxt is not None:
            rem, t = nxt, t + 1
            nxt = rem.exact_div(pi)
        # rem must be eps^(2m) or eps^(2m+1); strip eps^m
        eps = fundamental_unit(q.ring)
        u = rem if rem.is_totally_positive() else rem.exact_div(eps)
        if u is None:
            raise ArithmeticError(f"norm cofactor {rem} has unexpected sign")
        m = _even_unit_exponent(u)
        if m is None:
            raise ArithmeticError(f"norm cofactor {rem} is not a unit times pi^t")
        q = q * unit_power(q.ring, -m)
    return _sign_normalize(q)


def _scalar_div_in_order(q: Quaternion, g: QuadInt, order: Order) -> Quaternion:
    cs = order.coords(q)
    out = [c.exact_div(g) for c in cs]
    if any(c is None for c in out):
        raise ArithmeticError("content does not divide")
    return order.from_coords(out)


def _even_unit_exponent(u: QuadInt) -> Optional[int]:
    """m with u == eps^(2m), or None.  u must be a totally positive unit."""
    if not u.is_totally_positive():
        return None
    k = unit_exponent(u)
    if k is None or k % 2:
        return None
    return k // 2
