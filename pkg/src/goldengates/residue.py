"""Residue fields of quadratic-ring primes and mod-prime edge invariants.

For a prime ``pi`` of the coefficient ring, the quotient of an order by
``pi`` is a 2x2 matrix algebra over the residue field.  Elements whose
reduced norm has pi-valuation one become rank-one matrices there, and
their left ideal is the combinatorial shadow of a tree edge at the
origin: two such elements label the same edge exactly when their left
ideals agree.  This module computes the residue field arithmetic and a
canonical key for that left ideal, without ever writing down an
explicit matrix splitting.
"""

from __future__ import annotations

import math
from typing import Optional

from goldengates.quaternions import Order, Quaternion
from goldengates.rings import QuadInt, RingId, is_probable_prime

__all__ = ["ResidueField", "edge_key"]


_W_SQUARE = {RingId.INT: (0, 0), RingId.SQRT2: (2, 0), RingId.PHI: (1, 1)}


class ResidueField:
    """The field O_K/(pi), with elements stored as pairs (x, y) mod p.

    A pair encodes x + y*w.  For an inert rational prime the field has
    p^2 elements and both coordinates survive; for a split or ramified
    prime the generator w collapses to a scalar omega = -u/v mod p
    (writing pi = u + v*w), so every element reduces to (x, 0).
    """

    def __init__(self, pi: QuadInt):
        if not pi:
            raise ValueError("zero is not a prime")
        ring = pi.ring
        n = abs(pi.a) if ring is RingId.INT else abs(pi.norm())
        root = math.isqrt(n)
        if ring is not RingId.INT and root * root == n and is_probable_prime(root):
            self.p = root
            self.size = n
            self.omega: Optional[int] = None
        else:
            if not is_probable_prime(n):
                raise ValueError(f"{pi} has non-prime norm {n}")
            self.p = n
            self.size = n
            if ring is RingId.INT:
                self.omega = 0
            else:
                v = pi.b % n
                if v == 0:
                    raise ValueError(f"{pi} is rational but its norm is not square")
                self.omega = (-pi.a * pow(v, -1, n)) % n
        self.ring = ring
        self.pi = pi
        c0, c1 = _W_SQUARE[ring]
        self._c0, self._c1 = c0 % self.p, c1 % self.p

    def __repr__(self) -> str:
        return f"ResidueField({self.pi!r}, size={self.size})"

    # -- element arithmetic (pairs of ints mod p) ----------------------

    @property
    def zero(self) -> tuple[int, int]:
        return (0, 0)

    @property
    def one(self) -> tuple[int, int]:
        return (1, 0)

    def reduce(self, x: QuadInt) -> tuple[int, int]:
        if x.ring is not self.ring:
            raise ValueError("ring mismatch")
        if self.omega is None:
            return (x.a % self.p, x.b % self.p)
        return ((x.a + x.b * self.omega) % self.p, 0)

    def add(self, a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def sub(self, a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
        return ((a[0] - b[0]) % self.p, (a[1] - b[1]) % self.p)

    def mul(self, a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
        bd = a[1] * b[1]
        return (
            (a[0] * b[0] + self._c0 * bd) % self.p,
            (a[0] * b[1] + a[1] * b[0] + self._c1 * bd) % self.p,
        )

    def neg(self, a: tuple[int, int]) -> tuple[int, int]:
        return ((-a[0]) % self.p, (-a[1]) % self.p)

    def inv(self, a: tuple[int, int]) -> tuple[int, int]:
        if a == (0, 0):
            raise ZeroDivisionError("inverting zero residue")
        r, base, k = self.one, a, self.size - 2
        while k:
            if k & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            k >>= 1
        return r


def _rref(field: ResidueField, rows: list[list[tuple[int, int]]]) -> tuple:
    """Reduced row echelon form over the residue field; canonical key."""
    rows = [list(r) for r in rows]
    lead = 0
    for col in range(4):
        pivot = next(
            (r for r in range(lead, len(rows)) if rows[r][col] != (0, 0)), None
        )
        if pivot is None:
            continue
        rows[lead], rows[pivot] = rows[pivot], rows[lead]
        scale = field.inv(rows[lead][col])
        rows[lead] = [field.mul(scale, x) for x in rows[lead]]
        for r in range(len(rows)):
            if r != lead and rows[r][col] != (0, 0):
                factor = rows[r][col]
                rows[r] = [
                    field.sub(x, field.mul(factor, y))
                    for x, y in zip(rows[r], rows[lead])
                ]
        lead += 1
    return tuple(tuple(r) for r in rows[:lead])


def edge_key(q: Quaternion, order: Order, field: ResidueField) -> tuple:
    """Canonical form of the left ideal (O/pi)*q, for valuation-one q.

    The key is the reduced row echelon basis of the span of the order
    basis times q, written in order coordinates over the residue field.
    It is unchanged under left multiplication by anything invertible mod
    pi, so elements label the same tree edge at the origin exactly when
    their keys agree.  Right ideals would not do here: right unit
    multiples q*u reach distinct edges but generate the same right ideal.
    """
    rows = []
    for b in order.basis:
        co = order.coords(b * q)
        if co is None:
            raise ValueError("basis times element left the order")
        rows.append([field.reduce(c) for c in co])
    key = _rref(field, rows)
    if len(key) != 2:
        raise ValueError(
            f"left ideal has rank {len(key)}, not 2: norm valuation is not one"
        )
    return key
