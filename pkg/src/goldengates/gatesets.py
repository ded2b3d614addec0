"""Catalog of super-golden and golden gate sets with validation.

A super set pairs a finite subgroup C of PU(2), realized as quaternion
classes from an arithmetic order, with an involution T whose reduced
norm generates the active prime.  A golden set is a plain generator
list closed under inverses.  Validation checks the algebraic axioms and
verifies simple transitivity on tree edges through residue arithmetic,
cross-checked against an independent lattice enumeration.
"""

from __future__ import annotations

import enum
import functools
import math
import types
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from goldengates import _unitdata
from goldengates.quaternions import (
    Order,
    OrderId,
    Quaternion,
    canonicalize,
    get_order,
    np_ring_mul,
    reduced_norm,
    to_su2,
    unit_classes,
)
from goldengates.residue import ResidueField, edge_key
from goldengates.rings import INT, PHI, QuadInt, RingId, SQRT2

__all__ = [
    "GateKind",
    "GateSet",
    "Word",
    "CheckResult",
    "ValidationReport",
    "catalog",
    "nonexamples",
    "validate",
    "derive_golden_set",
    "make_word",
]


class GateKind(enum.Enum):
    SUPER = "super"
    GOLDEN = "golden"


@dataclass(frozen=True)
class GateSet:
    """One named gate set: either Super(C, T) or Golden(generators)."""

    name: str
    kind: GateKind
    ring: RingId
    order_id: OrderId
    pi: QuadInt
    k: int
    C: tuple[Quaternion, ...] = ()
    T: Optional[Quaternion] = None
    generators: tuple[Quaternion, ...] = ()

    def __post_init__(self) -> None:
        if self.k != abs(self.pi.norm()):
            raise ValueError(
                f"{self.name}: k={self.k} but |N(pi)|={abs(self.pi.norm())}"
            )
        if self.kind is GateKind.SUPER:
            if self.T is None or not self.C or self.generators:
                raise ValueError(f"{self.name}: super sets need C and T only")
            if len(self.C) != self.k + 1:
                raise ValueError(f"{self.name}: |C|={len(self.C)} != k+1={self.k + 1}")
        else:
            if self.T is not None or self.C or not self.generators:
                raise ValueError(f"{self.name}: golden sets need generators only")

    @functools.cached_property
    def gens_matrices(self) -> tuple[np.ndarray, ...]:
        """SU(2) images of the generators; for super sets C first, then T."""
        if self.kind is GateKind.SUPER:
            return tuple(to_su2(c) for c in self.C) + (to_su2(self.T),)
        return tuple(to_su2(g) for g in self.generators)

    @functools.cached_property
    def identity_index(self) -> int:
        for idx, c in enumerate(self.C):
            if not any(c.coords[1:]):
                return idx
        raise ValueError(f"{self.name}: C does not contain the identity class")


@dataclass(frozen=True)
class Word:
    """An alternating circuit c_t T c_(t-1) T ... T c_0 over one gate set."""

    gateset: str
    letters: tuple[str, ...]
    tcount: int

    def __post_init__(self) -> None:
        if len(self.letters) % 2 == 0 or not self.letters:
            raise ValueError("word must alternate c, T, c, ..., T, c")
        for pos, letter in enumerate(self.letters):
            if pos % 2 == 1:
                if letter != "T":
                    raise ValueError(f"odd positions must be T, got {letter!r}")
            elif not (letter.startswith("c") and letter[1:].isdigit()):
                raise ValueError(f"even positions must be c<index>, got {letter!r}")
        if self.tcount != len(self.letters) // 2:
            raise ValueError("tcount does not match the number of T letters")

    def c_indices(self) -> tuple[int, ...]:
        return tuple(int(letter[1:]) for letter in self.letters[0::2])

    def to_json(self) -> dict:
        return {
            "gateset": self.gateset,
            "word": list(self.letters),
            "tcount": self.tcount,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Word":
        return cls(data["gateset"], tuple(data["word"]), data["tcount"])


def make_word(gs: GateSet, indices: Sequence[int]) -> Word:
    """Build the word c_t T ... T c_0 from C indices, leftmost first.

    Interior letters may not be the identity class; the two ends may.
    """
    if gs.kind is not GateKind.SUPER:
        raise ValueError("words are defined over super gate sets")
    if not indices:
        raise ValueError("a word needs at least one letter")
    for i in indices:
        if not 0 <= i < len(gs.C):
            raise ValueError(f"C index {i} out of range")
    for i in indices[1:-1]:
        if i == gs.identity_index:
            raise ValueError("interior letters must not be the identity")
    letters = []
    for i in indices:
        letters.extend((f"c{i}", "T"))
    return Word(gs.name, tuple(letters[:-1]), len(indices) - 1)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    gateset: str
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def __str__(self) -> str:
        lines = [f"{self.gateset}:"]
        for c in self.checks:
            mark = "pass" if c.passed else "FAIL"
            suffix = f" ({c.detail})" if c.detail else ""
            lines.append(f"  {mark}  {c.name}{suffix}")
        return "\n".join(lines)


# -- catalog construction --------------------------------------------------


def _from_doubled(ring: RingId, entries, pi: QuadInt, order: Order):
    quats = [Quaternion.from_ints(ring, *row, denom=2) for row in entries]
    canon = {canonicalize(q, pi, order) for q in quats}
    return tuple(sorted(canon, key=Quaternion.sort_key))


def _super(
    name: str,
    ring: RingId,
    order_id: OrderId,
    pi: QuadInt,
    k: int,
    c_quats: Iterable[Quaternion],
    t_quat: Quaternion,
) -> GateSet:
    order = get_order(order_id)
    canon = {canonicalize(q, pi, order) for q in c_quats}
    return GateSet(
        name=name,
        kind=GateKind.SUPER,
        ring=ring,
        order_id=order_id,
        pi=pi,
        k=k,
        C=tuple(sorted(canon, key=Quaternion.sort_key)),
        T=t_quat,
    )


@functools.lru_cache(maxsize=1)
def _catalog() -> Mapping[str, GateSet]:
    octa = get_order(OrderId.OCTA_SQRT2)
    icosian = get_order(OrderId.ICOSIAN)
    qi = Quaternion.from_ints

    sets = [
        _super(
            "pauli_t", INT, OrderId.LIPSCHITZ, QuadInt(3, 0, INT), 3,
            unit_classes(OrderId.LIPSCHITZ), qi(INT, 0, 1, 1, 1),
        ),
        _super(
            "hurwitz_t", INT, OrderId.HURWITZ, QuadInt(11, 0, INT), 11,
            unit_classes(OrderId.HURWITZ), qi(INT, 0, 3, 1, 1),
        ),
        _super(
            "clifford_t", SQRT2, OrderId.OCTA_SQRT2, QuadInt(5, -1, SQRT2), 23,
            unit_classes(OrderId.OCTA_SQRT2),
            qi(SQRT2, (0, 0), (2, 1), (0, 1), (2, -2), denom=2),
        ),
        _super(
            "octa8", SQRT2, OrderId.OCTA_SQRT2, QuadInt(3, -1, SQRT2), 7,
            _from_doubled(SQRT2, _unitdata._C_OCTA8, QuadInt(3, -1, SQRT2), octa),
            qi(SQRT2, (0, 0), (2, -1), (2, 0), (0, 1), denom=2),
        ),
        _super(
            "three_t", SQRT2, OrderId.OCTA_SQRT2, QuadInt(0, 1, SQRT2), 2,
            _from_doubled(SQRT2, _unitdata._C_THREE, QuadInt(0, 1, SQRT2), octa),
            qi(SQRT2, (0, 0), (0, 0), (2, -1), (0, 1), denom=2),
        ),
        _super(
            "hybrid6", INT, OrderId.LIPSCHITZ, QuadInt(5, 0, INT), 5,
            _from_doubled(
                INT, _unitdata._C_HYBRID6, QuadInt(5, 0, INT),
                get_order(OrderId.LIPSCHITZ),
            ),
            qi(INT, 0, 0, 1, 2),
        ),
        _super(
            "icosa60", PHI, OrderId.ICOSIAN, QuadInt(7, 5, PHI), 59,
            unit_classes(OrderId.ICOSIAN),
            qi(PHI, (0, 0), (2, 1), (1, 0), (1, 0)),
        ),
        _super(
            "icosa12p", PHI, OrderId.ICOSIAN, QuadInt(4, -1, PHI), 11,
            _from_doubled(PHI, _unitdata._C_ICOSA12P, QuadInt(4, -1, PHI), icosian),
            qi(PHI, (0, 0), (-1, 1), (1, 0), (1, 0)),
        ),
        _super(
            "icosa5", PHI, OrderId.ICOSIAN, QuadInt(2, 0, PHI), 4,
            _from_doubled(PHI, _unitdata._C_ICOSA5, QuadInt(2, 0, PHI), icosian),
            qi(PHI, 0, 0, 1, 1),
        ),
        GateSet(
            name="v_gates",
            kind=GateKind.GOLDEN,
            ring=INT,
            order_id=OrderId.LIPSCHITZ,
            pi=QuadInt(5, 0, INT),
            k=5,
            generators=tuple(
                sorted(
                    (
                        qi(INT, 1, 2, 0, 0), qi(INT, 1, -2, 0, 0),
                        qi(INT, 1, 0, 2, 0), qi(INT, 1, 0, -2, 0),
                        qi(INT, 1, 0, 0, 2), qi(INT, 1, 0, 0, -2),
                    ),
                    key=Quaternion.sort_key,
                )
            ),
        ),
        GateSet(
            name="p3_involutions",
            kind=GateKind.GOLDEN,
            ring=INT,
            order_id=OrderId.LIPSCHITZ,
            pi=QuadInt(3, 0, INT),
            k=3,
            generators=tuple(
                sorted(
                    (
                        qi(INT, 0, 1, 1, 1), qi(INT, 0, 1, 1, -1),
                        qi(INT, 0, 1, -1, 1), qi(INT, 0, 1, -1, -1),
                    ),
                    key=Quaternion.sort_key,
                )
            ),
        ),
    ]
    return types.MappingProxyType({gs.name: gs for gs in sets})


def catalog() -> Mapping[str, GateSet]:
    """All shipped gate sets, keyed by name.  Immutable."""
    return _catalog()


@functools.lru_cache(maxsize=1)
def nonexamples() -> Mapping[str, GateSet]:
    """Unit subgroups of the icosians that fail simple transitivity.

    Both have the right size for their prime (|C| = k+1) and a genuine
    edge-inverting involution, so every axiom except transitivity holds.
    """
    icosian = get_order(OrderId.ICOSIAN)
    qi = Quaternion.from_ints
    sqrt5 = QuadInt(-1, 2, PHI)
    sets = [
        _super(
            "sym3_ramified5", PHI, OrderId.ICOSIAN, sqrt5, 5,
            _from_doubled(PHI, _unitdata._C_SYM3, sqrt5, icosian),
            qi(PHI, (0, 0), (1, 0), (0, 1), (0, 0)),
        ),
        _super(
            "dih5_inert3", PHI, OrderId.ICOSIAN, QuadInt(3, 0, PHI), 9,
            _from_doubled(PHI, _unitdata._C_DIH5, QuadInt(3, 0, PHI), icosian),
            qi(PHI, 0, 1, 1, 1),
        ),
    ]
    return types.MappingProxyType({gs.name: gs for gs in sets})


# -- lattice enumeration of fixed reduced norm -----------------------------


def _z_generators(order: Order) -> list[Quaternion]:
    gens = list(order.basis)
    if order.ring is not INT:
        w = Quaternion.scalar(QuadInt(0, 1, order.ring))
        gens.extend(w * b for b in order.basis)
    return gens


def _quat_dot(p: Quaternion, q: Quaternion) -> QuadInt:
    """4 * (coordinatewise real inner product), exact."""
    total = QuadInt(0, 0, p.ring)
    for a, b in zip(p.doubled(), q.doubled()):
        total = total + a * b
    return total


def elements_of_norm(order: Order, n0: QuadInt) -> tuple[Quaternion, ...]:
    """Every nonzero order element with reduced norm exactly n0.

    Enumerates the trace-form sphere with a Fincke-Pohst search and then
    filters by the exact norm.  Trace-form values on the order are
    integers, so a slack of one half loses no boundary point to float
    error.
    """
    gens = _z_generators(order)
    rank = len(gens)
    gram = np.empty((rank, rank))
    for r in range(rank):
        for s in range(r, rank):
            val = _quat_dot(gens[r], gens[s]).trace() / 4.0
            gram[r, s] = gram[s, r] = val
    target = float(n0.trace())
    upper = np.linalg.cholesky(gram).T
    dbl = np.array(
        [[[c.a, c.b] for c in g.doubled()] for g in gens], dtype=np.int64
    )

    blocks: list[tuple[int, int, np.ndarray]] = []
    x = np.zeros(rank, dtype=np.int64)

    def descend(level: int, room: float, shifts: np.ndarray) -> None:
        u = upper[level, level]
        base = shifts[level]
        rad = math.sqrt(max(room, 0.0))
        lo = math.ceil((-base - rad) / u)
        hi = math.floor((-base + rad) / u)
        if level == 0:
            if lo <= hi:
                blocks.append((lo, hi, x[1:].copy()))
            return
        for v in range(lo, hi + 1):
            step = u * v + base
            left = room - step * step
            if left < -0.49:
                continue
            x[level] = v
            descend(level - 1, left, shifts + upper[:, level] * v)
        x[level] = 0

    descend(rank - 1, target + 0.49, np.zeros(rank))
    if not blocks:
        return ()

    rows = []
    for lo, hi, rest in blocks:
        span = np.empty((hi - lo + 1, rank), dtype=np.int64)
        span[:, 0] = np.arange(lo, hi + 1)
        span[:, 1:] = rest
        rows.append(span)
    vecs = np.concatenate(rows)
    vecs = vecs[vecs.any(axis=1)]
    coords = np.tensordot(vecs, dbl, axes=(1, 0))
    squares = np_ring_mul(coords, coords, order.ring)
    norms = squares.sum(axis=1)
    want = np.array([4 * n0.a, 4 * n0.b], dtype=np.int64)
    mask = (norms == want).all(axis=1)
    out = []
    for co in coords[mask]:
        out.append(
            Quaternion.from_ints(
                order.ring, *(tuple(pair) for pair in co.tolist()), denom=2
            )
        )
    return tuple(out)


# -- validation -------------------------------------------------------------


def _is_ring_scalar(q: Quaternion) -> bool:
    return not any(q.coords[1:])


def _is_unit_multiple(x: QuadInt, pi: QuadInt) -> bool:
    d = x.exact_div(pi)
    return d is not None and d.is_unit()


def _transitivity_checks(gs: GateSet, order: Order) -> list[CheckResult]:
    field = ResidueField(gs.pi)
    keys = []
    for c in gs.C:
        edge = canonicalize(gs.T * c, gs.pi, order)
        keys.append(edge_key(edge, order, field))
    distinct = len(set(keys)) == gs.k + 1
    results = [
        CheckResult(
            "transitivity",
            distinct,
            f"{len(set(keys))} of {gs.k + 1} edges reached by T*C",
        )
    ]
    if abs(gs.pi.norm()) <= 60:
        n0 = reduced_norm(canonicalize(gs.T, gs.pi, order))
        elems = elements_of_norm(order, n0)
        # one key per left-unit orbit; orbit mates generate the same ideal
        units = order.units
        seen: set[Quaternion] = set()
        ekeys = set()
        for e in elems:
            if e in seen:
                continue
            ekeys.add(edge_key(e, order, field))
            seen.update(u * e for u in units)
        results.append(
            CheckResult(
                "edge_cover",
                set(keys) == ekeys and len(ekeys) == gs.k + 1,
                f"{len(elems)} norm-n0 elements span {len(ekeys)} edges",
            )
        )
    return results


def validate(gs: GateSet) -> ValidationReport:
    """Check every axiom of a gate set; transitivity must fail for the
    nonexample entries and hold for the catalog."""
    order = get_order(gs.order_id)
    checks: list[CheckResult] = []

    def add(name: str, passed: bool, detail: str = "") -> None:
        checks.append(CheckResult(name, bool(passed), detail))

    if gs.kind is GateKind.SUPER:
        add(
            "size",
            len(gs.C) == gs.k + 1,
            f"|C|={len(gs.C)}, k+1={gs.k + 1}",
        )
        add("membership", all(order.contains(c) for c in gs.C) and order.contains(gs.T))
        canon = {canonicalize(c, gs.pi, order) for c in gs.C}
        add("identity", any(_is_ring_scalar(c) for c in gs.C))
        closed = all(
            canonicalize(a * b, gs.pi, order) in canon for a in gs.C for b in gs.C
        )
        add("closure", closed, "C is a group modulo scalars")
        add("involution", _is_ring_scalar(gs.T * gs.T))
        add("t_norm", _is_unit_multiple(reduced_norm(gs.T), gs.pi))
        checks.extend(_transitivity_checks(gs, order))
    else:
        add(
            "size",
            len(gs.generators) == gs.k + 1,
            f"{len(gs.generators)} generators on a {gs.k + 1}-regular tree",
        )
        add("membership", all(order.contains(g) for g in gs.generators))
        canon = {canonicalize(g, gs.pi, order) for g in gs.generators}
        inv_closed = all(
            canonicalize(g.conj(), gs.pi, order) in canon for g in gs.generators
        )
        add("inverse_closed", inv_closed)
        add(
            "gen_norms",
            all(_is_unit_multiple(reduced_norm(g), gs.pi) for g in gs.generators),
        )
        order_ok = True
        detail = []
        for g in gs.generators:
            if _is_ring_scalar(g * g):
                detail.append("involution")
                continue
            power = g
            scalar_power = False
            for _ in range(7):
                power = power * g
                if _is_ring_scalar(power):
                    scalar_power = True
                    break
            order_ok = order_ok and not scalar_power
            detail.append("infinite")
        add("gen_orders", order_ok, ",".join(detail))
    return ValidationReport(gs.name, tuple(checks))


def derive_golden_set(gs: GateSet) -> GateSet:
    """The golden set of conjugated involutions {c T c^-1 : c in C}."""
    if gs.kind is not GateKind.SUPER:
        raise ValueError("only super sets have a derived golden set")
    order = get_order(gs.order_id)
    invs = {
        canonicalize(c * gs.T * c.conj(), gs.pi, order) for c in gs.C
    }
    if len(invs) != len(gs.C):
        raise ValueError("conjugated involutions collapsed; set is degenerate")
    return GateSet(
        name=f"{gs.name}_golden",
        kind=GateKind.GOLDEN,
        ring=gs.ring,
        order_id=gs.order_id,
        pi=gs.pi,
        k=gs.k,
        generators=tuple(sorted(invs, key=Quaternion.sort_key)),
    )
