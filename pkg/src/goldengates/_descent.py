"""Flat-integer engine behind exact synthesis and word evaluation.

The public synthesis API works on :class:`~goldengates.quaternions.
Quaternion` objects, whose exactness comes with per-operation object
overhead.  A word round trip at T-count 30 needs hundreds of multiply,
reduce, and divide steps, so this module runs the descent loop on bare
integer coordinate vectors instead: one precomputed 4x4 matrix per
generator applies a whole right-multiplication in a handful of machine
integer products, the edge of the running element is read off from its
residue mod pi through reduced structure constants, and quaternion
objects are rebuilt only at entry and exit.

Everything here is private to the package; the semantics (and the
regression tests) live in :mod:`goldengates.synthesis`.
"""

from __future__ import annotations

import functools
from typing import Callable, Optional

from .gatesets import GateKind, GateSet
from .quaternions import (
    Order,
    Quaternion,
    _even_unit_exponent,
    _sign_normalize,
    canonicalize,
    get_order,
    reduced_norm,
)
from .residue import ResidueField, _rref, edge_key
from .rings import (
    INT,
    QuadInt,
    RingId,
    factor_int,
    fundamental_unit,
    unit_power,
)


class NotInGroupError(ValueError):
    """The quaternion does not represent an element of the gate group."""


class UnsupportedGateSetError(ValueError):
    """The gate set lacks the structure this routine needs."""


# -- ring arithmetic on (a, b) integer pairs --------------------------------
#
# Coordinate vectors are flat lists [a0, b0, a1, b1, a2, b2, a3, b3] and
# the step matrices are flat 32-tuples, entry (r, c) at offset r*8 + c*2.
# Each matvec below computes out[r] = sum_c x[c] * M[r][c] with the ring
# product written out inline.


def _matvec_int(m: tuple, x: list) -> list:
    x0, x1, x2, x3 = x[0], x[2], x[4], x[6]
    out = [0] * 8
    for r in range(4):
        base = r * 8
        out[base >> 2] = (
            x0 * m[base] + x1 * m[base + 2] + x2 * m[base + 4] + x3 * m[base + 6]
        )
    return out


def _matvec_sqrt2(m: tuple, x: list) -> list:
    out = [0] * 8
    x0a, x0b, x1a, x1b, x2a, x2b, x3a, x3b = x
    for r in range(4):
        base = r * 8
        ma, mb = m[base], m[base + 1]
        acc_a = x0a * ma + 2 * x0b * mb
        acc_b = x0a * mb + x0b * ma
        ma, mb = m[base + 2], m[base + 3]
        acc_a += x1a * ma + 2 * x1b * mb
        acc_b += x1a * mb + x1b * ma
        ma, mb = m[base + 4], m[base + 5]
        acc_a += x2a * ma + 2 * x2b * mb
        acc_b += x2a * mb + x2b * ma
        ma, mb = m[base + 6], m[base + 7]
        acc_a += x3a * ma + 2 * x3b * mb
        acc_b += x3a * mb + x3b * ma
        out[base >> 2] = acc_a
        out[(base >> 2) + 1] = acc_b
    return out


def _matvec_phi(m: tuple, x: list) -> list:
    out = [0] * 8
    x0a, x0b, x1a, x1b, x2a, x2b, x3a, x3b = x
    for r in range(4):
        base = r * 8
        ma, mb = m[base], m[base + 1]
        t = x0b * mb
        acc_a = x0a * ma + t
        acc_b = x0a * mb + x0b * ma + t
        ma, mb = m[base + 2], m[base + 3]
        t = x1b * mb
        acc_a += x1a * ma + t
        acc_b += x1a * mb + x1b * ma + t
        ma, mb = m[base + 4], m[base + 5]
        t = x2b * mb
        acc_a += x2a * ma + t
        acc_b += x2a * mb + x2b * ma + t
        ma, mb = m[base + 6], m[base + 7]
        t = x3b * mb
        acc_a += x3a * ma + t
        acc_b += x3a * mb + x3b * ma + t
        out[base >> 2] = acc_a
        out[(base >> 2) + 1] = acc_b
    return out


_MATVEC = {RingId.INT: _matvec_int, RingId.SQRT2: _matvec_sqrt2, RingId.PHI: _matvec_phi}


def _make_pair_div(d: QuadInt) -> Callable[[int, int], Optional[tuple[int, int]]]:
    """Exact division of an (a, b) pair by the fixed ring element d."""
    ring = d.ring
    if ring is RingId.INT:
        u = d.a

        def div_int(a: int, b: int) -> Optional[tuple[int, int]]:
            q, r = divmod(a, u)
            return (q, 0) if r == 0 else None

        return div_int
    u, v = d.a, d.b
    nd = d.norm()
    if ring is RingId.SQRT2:

        def div_sqrt2(a: int, b: int) -> Optional[tuple[int, int]]:
            na = a * u - 2 * b * v
            nb = b * u - a * v
            qa, ra = divmod(na, nd)
            if ra:
                return None
            qb, rb = divmod(nb, nd)
            return (qa, qb) if rb == 0 else None

        return div_sqrt2

    def div_phi(a: int, b: int) -> Optional[tuple[int, int]]:
        # conj(u + v*phi) = (u + v) - v*phi
        na = a * (u + v) - b * v
        nb = b * u - a * v
        qa, ra = divmod(na, nd)
        if ra:
            return None
        qb, rb = divmod(nb, nd)
        return (qa, qb) if rb == 0 else None

    return div_phi


def pi_valuation(n: QuadInt, pi: QuadInt) -> tuple[int, QuadInt]:
    """(t, remainder) with n = remainder * pi^t and pi not dividing it."""
    t = 0
    rem = n
    nxt = rem.exact_div(pi)
    while nxt is not None:
        rem, t = nxt, t + 1
        nxt = rem.exact_div(pi)
    return t, rem


class DescentEngine:
    """Per-gate-set tables and the coordinate-level descent loop."""

    def __init__(self, gs: GateSet):
        if gs.kind is not GateKind.SUPER:
            raise UnsupportedGateSetError(
                f"{gs.name} has no involution; synthesis needs a super set"
            )
        self.gs = gs
        self.order: Order = get_order(gs.order_id)
        self.field = ResidueField(gs.pi)
        self.matvec = _MATVEC[gs.ring]
        self.pi_div = _make_pair_div(gs.pi)

        # edge table: canonical left-ideal key of T*c -> generator index
        self.edges: dict[tuple, int] = {}
        for i, c in enumerate(gs.C):
            key = edge_key(canonicalize(gs.T * c, gs.pi, self.order), self.order, self.field)
            if key in self.edges:
                raise UnsupportedGateSetError(
                    f"{gs.name}: edge keys collide, C does not act simply "
                    "transitively on the neighbours"
                )
            self.edges[key] = i
        self.classes = {
            canonicalize(c, gs.pi, self.order): i for i, c in enumerate(gs.C)
        }

        # scale primes of non-unit generators (Z catalog only): they may
        # show up both in word norms and as content mid-descent
        cof: set[int] = set()
        for c in gs.C:
            _, rem = pi_valuation(reduced_norm(c), gs.pi)
            if rem.is_unit():
                continue
            if gs.ring is not INT:
                raise UnsupportedGateSetError(
                    f"{gs.name}: generator norm {rem} is neither a unit "
                    "nor an integer scale"
                )
            cof.update(factor_int(rem.a))
        self.cofactor_primes = tuple(sorted(cof))
        self.cof_divs = tuple(
            _make_pair_div(QuadInt(p, 0, INT)) for p in self.cofactor_primes
        )

        self.has_pauli_classes = True
        for axis in range(1, 4):
            coords = [0, 0, 0, 0]
            coords[axis] = 1
            p = Quaternion.from_ints(gs.ring, *coords)
            if canonicalize(p, gs.pi, self.order) not in self.classes:
                self.has_pauli_classes = False
                break

        # step matrices: right multiplication by conj(T*c_i) (descent)
        # and by T*c_i (evaluation), in order coordinates
        self.step_mats = tuple(
            self._right_mult_matrix((gs.T * c).conj()) for c in gs.C
        )
        self.eval_mats = tuple(self._right_mult_matrix(gs.T * c) for c in gs.C)

        # reduced structure constants for left multiplication by the
        # basis: lam[s][r] = field image of coords(b_s * b_r)
        self.lam = tuple(
            tuple(
                tuple(
                    self.field.reduce(e)
                    for e in self.order.coords(self.order.basis[s] * self.order.basis[r])
                )
                for r in range(4)
            )
            for s in range(4)
        )

    def _right_mult_matrix(self, k: Quaternion) -> tuple:
        flat = []
        cols = []
        for c in range(4):
            cc = self.order.coords(self.order.basis[c] * k)
            if cc is None:
                raise AssertionError("order is not closed under the step element")
            cols.append(cc)
        for r in range(4):
            for c in range(4):
                e = cols[c][r]
                flat.extend((e.a, e.b))
        return tuple(flat)

    # -- coordinate helpers -------------------------------------------

    def _strip_scale(self, x: list) -> None:
        """Divide out powers of the cofactor primes shared by all coords."""
        for div in self.cof_divs:
            while True:
                nxt = [div(x[i], x[i + 1]) for i in range(0, 8, 2)]
                if any(p is None for p in nxt):
                    break
                x[:] = [v for pair in nxt for v in pair]

    def _strip_pi_content(self, x: list) -> None:
        while True:
            nxt = [self.pi_div(x[i], x[i + 1]) for i in range(0, 8, 2)]
            if any(p is None for p in nxt):
                return
            x[:] = [v for pair in nxt for v in pair]

    def _to_quaternion(self, x: list) -> Quaternion:
        ring = self.gs.ring
        return self.order.from_coords(
            [QuadInt(x[i], x[i + 1], ring) for i in range(0, 8, 2)]
        )

    def _flat_coords(self, q: Quaternion) -> Optional[list]:
        cs = self.order.coords(q)
        if cs is None:
            return None
        out = []
        for c in cs:
            out.extend((c.a, c.b))
        return out

    def remainder_or_raise(self, nr: QuadInt) -> int:
        """pi-valuation of nr; raises unless the cofactor is allowed."""
        t, rem = pi_valuation(nr, self.gs.pi)
        for p in self.cofactor_primes:
            d = rem.exact_div(p)
            while d is not None:
                rem, d = d, d.exact_div(p)
        if not rem.is_unit():
            raise NotInGroupError(
                f"reduced norm {nr} is not a unit times a power of {self.gs.pi}"
                + (
                    f" (times the scale primes {self.cofactor_primes})"
                    if self.cofactor_primes
                    else ""
                )
            )
        return t

    def entry(self, q: Quaternion) -> tuple[list, int]:
        """Flat primitive coordinates and T-count of an arbitrary member."""
        if not q:
            raise ValueError("zero quaternion")
        if q.ring is not self.gs.ring:
            raise NotInGroupError(
                f"{q} lives over the wrong ring for {self.gs.name}"
            )
        x = self._flat_coords(q)
        if x is None:
            raise NotInGroupError(f"{q} is not in the {self.order.id.value} order")
        t, rem = pi_valuation(reduced_norm(q), self.gs.pi)
        for p in self.cofactor_primes:
            d = rem.exact_div(p)
            while d is not None:
                rem, d = d, d.exact_div(p)
        if not rem.is_unit():
            # a scalar outside pi and the scale primes (e.g. 7*q): only a
            # full content computation can strip it
            try:
                q = canonicalize(q, self.gs.pi, self.order)
            except ArithmeticError as exc:
                raise NotInGroupError(str(exc)) from None
            x = self._flat_coords(q)
        self._strip_pi_content(x)
        self._strip_scale(x)
        return x, self.remainder_or_raise(reduced_norm(self._to_quaternion(x)))

    def edge_index(self, x: list) -> int:
        """Index of the unique T*c sharing the running element's edge."""
        fld = self.field
        p = fld.p
        omega = fld.omega
        if omega is None:
            red = [(x[i] % p, x[i + 1] % p) for i in range(0, 8, 2)]
        else:
            red = [((x[i] + x[i + 1] * omega) % p, 0) for i in range(0, 8, 2)]
        c0, c1 = fld._c0, fld._c1
        rows = []
        for s in range(4):
            lam_s = self.lam[s]
            row = []
            for k in range(4):
                acc_a = acc_b = 0
                for r in range(4):
                    xa, xb = red[r]
                    va, vb = lam_s[r][k]
                    bd = xb * vb
                    acc_a += xa * va + c0 * bd
                    acc_b += xa * vb + xb * va + c1 * bd
                row.append((acc_a % p, acc_b % p))
            rows.append(row)
        return self.edges[_rref(fld, rows)]

    def step(self, x: list, idx: int) -> list:
        """x * conj(T*c_idx) / pi, with generator scale primes stripped."""
        y = self.matvec(self.step_mats[idx], x)
        nxt = [self.pi_div(y[i], y[i + 1]) for i in range(0, 8, 2)]
        if any(pair is None for pair in nxt):
            raise AssertionError("descent step is not divisible by pi")
        y = [v for pair in nxt for v in pair]
        if self.cof_divs:
            self._strip_scale(y)
        return y

    def synthesize(self, q: Quaternion) -> list[int]:
        """C indices of the unique reduced word for q, leftmost first."""
        x, t = self.entry(q)
        peeled = []
        for _ in range(t):
            idx = self.edge_index(x)
            x = self.step(x, idx)
            peeled.append(idx)
        head = self.classes.get(canonicalize(self._to_quaternion(x), self.gs.pi, self.order))
        if head is None:
            raise NotInGroupError(
                f"descent terminated outside C; {q} is in the order but "
                f"not in the group generated by {self.gs.name}"
            )
        return [head, *reversed(peeled)]

    def evaluate(self, indices: list[int]) -> Quaternion:
        """Canonical product c_{i0} * (T c_{i1}) * ... * (T c_{it})."""
        x = self._flat_coords(self.gs.C[indices[0]])
        for idx in indices[1:]:
            x = self.matvec(self.eval_mats[idx], x)
            if self.cof_divs:
                self._strip_scale(x)
        return self._normalize_primitive(self._to_quaternion(x))

    def _normalize_primitive(self, q: Quaternion) -> Quaternion:
        """canonicalize() for inputs whose content is already trivial.

        Word products have content supported on pi and the scale primes
        only, and those were divided out along the way, so the general
        coordinate-gcd pass would be wasted work here.  Must stay in
        lockstep with quaternions.canonicalize.
        """
        nr = q.reduced_norm()
        if q.ring is not INT:
            _, rem = pi_valuation(nr, self.gs.pi)
            eps = fundamental_unit(q.ring)
            u = rem if rem.is_totally_positive() else rem.exact_div(eps)
            if u is None:
                raise ArithmeticError(f"norm cofactor {rem} has unexpected sign")
            m = _even_unit_exponent(u)
            if m is None:
                raise ArithmeticError(f"norm cofactor {rem} is not a unit times pi^t")
            q = q * unit_power(q.ring, -m)
        return _sign_normalize(q)

    def division_candidates(self, q: Quaternion) -> list[int]:
        """Indices i with pi dividing q * conj(T*c_i); test support.

        This is the valuation-descent condition checked the slow way,
        one actual division per generator, used to assert that exactly
        one candidate exists at each step.
        """
        x = self._flat_coords(q)
        if x is None:
            raise ValueError("not in the order")
        out = []
        for i in range(len(self.gs.C)):
            y = self.matvec(self.step_mats[i], x)
            if all(
                self.pi_div(y[j], y[j + 1]) is not None for j in range(0, 8, 2)
            ):
                out.append(i)
        return out


@functools.lru_cache(maxsize=None)
def get_engine(gs: GateSet) -> DescentEngine:
    return DescentEngine(gs)
