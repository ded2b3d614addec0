"""Exact and approximate single-qubit synthesis over a super gate set.

Exact synthesis peels one ``T . c`` block per step: the residue of the
running element mod pi picks out the unique rightmost generator, and the
conjugate of that block divides it off, dropping the T-count by exactly
one.  Approximate synthesis searches, level by level, for a quaternion
of reduced norm pi^t whose projective image lands within ``eps`` of the
target, using the spherical-cap enumerator from :mod:`.diophantine` for
two coordinates and a two-square solve for the remaining pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ._descent import (
    NotInGroupError,
    UnsupportedGateSetError,
    get_engine,
    pi_valuation,
)
from .diophantine import CapConstraint, cap_enumerate, two_squares
from .gatesets import GateSet, Word, make_word
from .quaternions import (
    Quaternion,
    canonicalize,
    pu2_distance,
    reduced_norm,
    to_su2,
)
from .rings import INT, QuadInt, RingId, fundamental_unit, unit_power

__all__ = [
    "NotInGroupError",
    "SynthesisError",
    "UnsupportedGateSetError",
    "SynthOptions",
    "SynthesisResult",
    "t_count",
    "evaluate",
    "exact_synthesize",
    "approx_diagonal",
    "approx_general",
]


class SynthesisError(RuntimeError):
    """Search exhausted without reaching the requested accuracy."""

    def __init__(self, message: str, best_distance: float, searched_tcounts: range):
        super().__init__(message)
        self.best_distance = best_distance
        self.searched_tcounts = searched_tcounts


@dataclass(frozen=True)
class SynthOptions:
    """Tuning knobs shared by the approximate synthesis routines.

    ``max_tcount=None`` lets each call derive a bound from eps and the
    growth rate of the set.  ``budget`` caps the candidates drawn from
    the cap enumerator per level and sign.
    """

    max_tcount: Optional[int] = None
    budget: int = 10_000
    seed: int = 0
    precision_bits: int = 128


@dataclass(frozen=True)
class SynthesisResult:
    word: Word
    element: Quaternion
    achieved_distance: float
    searched_tcounts: range


def t_count(q: Quaternion, gs: GateSet) -> int:
    """T-count of the group element represented by q.

    Raises :class:`NotInGroupError` when q is not equivalent to an
    order element whose reduced norm is a unit times pi^t (times the
    scale primes of non-unit generators, for sets that have them).
    """
    return get_engine(gs).entry(q)[1]


def evaluate(word: Word, gs: GateSet) -> Quaternion:
    """Canonical quaternion for the product of the word's letters."""
    if word.gateset != gs.name:
        raise ValueError(f"word is over {word.gateset!r}, not {gs.name!r}")
    return get_engine(gs).evaluate(list(word.c_indices()))


def exact_synthesize(q: Quaternion, gs: GateSet) -> Word:
    """The unique reduced word over gs evaluating to the class of q.

    One T is peeled per step: the residue of the running element mod pi
    names the unique generator c whose T*c block divides it on the
    right, and the quotient's T-count drops by exactly one.  At T-count
    zero the remainder must be a C class; anything else means q never
    was in the group (this doubles as the membership oracle).
    """
    return make_word(gs, get_engine(gs).synthesize(q))


# -- approximate synthesis -------------------------------------------------


def _tp_power(gs: GateSet, t: int) -> QuadInt:
    """pi^t made totally positive; the reduced norm canonicalize leaves."""
    n = gs.pi**t
    if n.ring is INT:
        return n
    if n.sign_sigma1() < 0:
        n = -n
    if not n.is_totally_positive():
        n = n * fundamental_unit(n.ring)
    if not n.is_totally_positive():
        raise AssertionError(f"could not adjust {gs.pi}^{t} to be totally positive")
    return n


def _level_norm(gs: GateSet, t: int) -> QuadInt:
    """Search norm for level t: totally positive, embeddings balanced.

    Balancing by an even unit power keeps both archimedean images of
    the norm comparable, so neither embedding starves the cap search of
    lattice points.  The embedding ratio is accumulated in log space
    from pi and the unit alone, so no large coordinate ever has to be
    converted to a float.
    """
    n = _tp_power(gs, t)
    if n.ring is INT:
        return n
    log_eps = math.log(fundamental_unit(n.ring).sigma1())
    log_ratio = t * (
        math.log(abs(gs.pi.sigma2())) - math.log(abs(gs.pi.sigma1()))
    )
    if n != gs.pi**t and n != -(gs.pi**t):
        # a single fundamental-unit factor made n totally positive
        log_ratio -= 2.0 * log_eps
    j = round(log_ratio / (4.0 * log_eps))
    if j:
        n = n * unit_power(n.ring, 2 * j)
        if not n.is_totally_positive():
            raise AssertionError("balancing broke total positivity")
    return n


def _default_max_tcount(eps: float, k: int) -> int:
    return math.ceil(12.0 * math.log(1.0 / eps) / math.log(k)) + 24


def _su2_coords(m: np.ndarray) -> tuple[float, float, float, float]:
    return (
        (m[0, 0] + m[1, 1]).real / 2.0,
        (m[0, 0] - m[1, 1]).imag / 2.0,
        (m[0, 1] - m[1, 0]).real / 2.0,
        (m[0, 1] + m[1, 0]).imag / 2.0,
    )


_SLOT_ORDERS = {(0, 1): (0, 1, 2, 3), (0, 2): (0, 2, 1, 3)}


def _lift_solution(
    gs: GateSet, slots: tuple[int, int], parts: Sequence[QuadInt]
) -> Quaternion:
    coords = [None] * 4
    order = _SLOT_ORDERS[slots]
    for pos, val in zip(order, parts):
        coords[pos] = val
    return Quaternion(coords[0], coords[1], coords[2], coords[3], 1)


def _best_generator(
    gs: GateSet, target: np.ndarray
) -> tuple[int, float, Quaternion]:
    eng = get_engine(gs)
    best_i, best_d = 0, math.inf
    mats = gs.gens_matrices
    for i in range(len(gs.C)):
        d = pu2_distance(mats[i], target)
        if d < best_d:
            best_i, best_d = i, d
    return best_i, best_d, canonicalize(gs.C[best_i], gs.pi, eng.order)


def _cap_synthesize(
    gs: GateSet,
    target: np.ndarray,
    xi: tuple[float, float],
    slots: tuple[int, int],
    eps: float,
    opts: SynthOptions,
) -> SynthesisResult:
    """Shared cap-search core: two coordinates pinned near xi, the other
    two filled by a two-square solve at each level's norm."""
    eng = get_engine(gs)
    best_i, best_d, best_q = _best_generator(gs, target)
    if best_d <= eps:
        return SynthesisResult(make_word(gs, [best_i]), best_q, best_d, range(0, 1))

    max_t = opts.max_tcount
    if max_t is None:
        max_t = _default_max_tcount(eps, gs.k)
    chord = math.sqrt(2.0) * eps
    scale = math.hypot(*xi)
    if not math.isclose(scale, 1.0, rel_tol=0, abs_tol=1e-9):
        raise ValueError(f"xi must be a unit vector, got |xi| = {scale}")

    for level in range(1, max_t + 1):
        n = _level_norm(gs, level)
        for sgn in (1.0, -1.0):
            cap = CapConstraint(sgn * xi[0], sgn * xi[1], min(chord, 2.0), n)
            seed = (opts.seed << 8) ^ (level * 4 + (2 if sgn < 0 else 1))
            for x1, x2 in cap_enumerate(cap, opts.budget):
                m = n - x1 * x1 - x2 * x2
                if not m:
                    pair = (QuadInt(0, 0, n.ring), QuadInt(0, 0, n.ring))
                else:
                    if m.ring is INT:
                        if m.a < 0:
                            continue
                    elif not m.is_totally_positive():
                        continue
                    pair = two_squares(m, seed)
                    if pair is None:
                        continue
                q = _lift_solution(gs, slots, (x1, x2, pair[0], pair[1]))
                if not eng.order.contains(q):
                    continue
                d = pu2_distance(to_su2(q, opts.precision_bits), target)
                if d < best_d:
                    best_d = d
                if d > eps:
                    continue
                try:
                    word = exact_synthesize(q, gs)
                except NotInGroupError:
                    # order element outside the group: non-maximal sets
                    continue
                return SynthesisResult(
                    word,
                    canonicalize(q, gs.pi, eng.order),
                    d,
                    range(0, level + 1),
                )
    raise SynthesisError(
        f"no word within {eps} of the target using T-count <= {max_t} "
        f"(best distance {best_d:.6g})",
        best_d,
        range(0, max_t + 1),
    )


def _zrot(theta: float) -> np.ndarray:
    h = theta / 2.0
    return np.array(
        [
            [complex(math.cos(h), -math.sin(h)), 0.0],
            [0.0, complex(math.cos(h), math.sin(h))],
        ]
    )


def approx_diagonal(
    theta: float, eps: float, gs: GateSet, opts: Optional[SynthOptions] = None
) -> SynthesisResult:
    """Word within eps of the z-rotation diag(e^{-i theta/2}, e^{i theta/2}).

    Levels are scanned in increasing T-count, so the returned word is
    the shortest the candidate enumeration could certify.
    """
    if not 0.0 < eps <= 1.0:
        raise ValueError("eps must be in (0, 1]")
    opts = opts or SynthOptions()
    target = _zrot(theta)
    xi = (math.cos(theta / 2.0), -math.sin(theta / 2.0))
    return _cap_synthesize(gs, target, xi, (0, 1), eps, opts)


# -- exact recognition of floating-point targets ---------------------------


def _ring_candidates(v: float, bound: float, ring: RingId) -> list[QuadInt]:
    """Ring elements x with sigma1(x) ~ v and |sigma2(x)| <= bound."""
    out = []
    if ring is INT:
        r = round(v)
        if abs(v - r) <= 1e-6:
            out.append(QuadInt(r, 0, ring))
        return out
    w = QuadInt(0, 1, ring)
    s1, s2 = w.sigma1(), w.sigma2()
    lo = math.ceil((v - bound) / (s1 - s2))
    hi = math.floor((v + bound) / (s1 - s2))
    for b in range(lo, hi + 1):
        a = round(v - b * s1)
        if abs(v - (a + b * s1)) <= 1e-6:
            out.append(QuadInt(a, b, ring))
    return out


def _recognize(
    m: np.ndarray, gs: GateSet, opts: SynthOptions, t_max: int = 4
) -> Optional[Quaternion]:
    """Group element whose image matches m, if one exists with T-count
    at most t_max.  Coordinates are reconstructed by rounding the
    doubled, norm-scaled entries into the ring.  The distance gate sits
    at 1e-7: pu2_distance is a square root, so even a bit-exact match
    floats around 1e-8, while distinct exact elements sit macroscopically
    apart."""
    eng = get_engine(gs)
    for t in range(0, t_max + 1):
        n = _tp_power(gs, t)
        scale = 2.0 * math.sqrt(n.sigma1())
        bound = 2.0 * math.sqrt(max(n.sigma2(), 0.0)) + 0.6
        for mat in (m, -m):
            xs = _su2_coords(mat)
            cands = [_ring_candidates(x * scale, bound, gs.ring) for x in xs]
            if any(not c for c in cands):
                continue
            total = 1
            for c in cands:
                total *= len(c)
            if total > 4096:
                continue
            for d0 in cands[0]:
                for d1 in cands[1]:
                    for d2 in cands[2]:
                        for d3 in cands[3]:
                            s = d0 * d0 + d1 * d1 + d2 * d2 + d3 * d3
                            if s != n * 4:
                                continue
                            q = Quaternion(d0, d1, d2, d3, 2)
                            if not eng.order.contains(q):
                                continue
                            if (
                                pu2_distance(
                                    to_su2(q, opts.precision_bits), m
                                )
                                <= 1e-7
                            ):
                                return q
    return None


def approx_general(
    target: np.ndarray,
    eps: float,
    gs: GateSet,
    opts: Optional[SynthOptions] = None,
) -> SynthesisResult:
    """Word within eps of an arbitrary PU(2) target.

    The target is split as z-rotation * y-rotation * z-rotation; the
    y-factor reuses the cap search with the pinned coordinate pair
    moved to slots (x0, x2).  Requires the three Pauli classes in C so
    the Euler factors all stay inside the group.
    """
    if not 0.0 < eps <= 1.0:
        raise ValueError("eps must be in (0, 1]")
    opts = opts or SynthOptions()
    eng = get_engine(gs)
    if not eng.has_pauli_classes:
        raise UnsupportedGateSetError(
            f"{gs.name} does not contain the Pauli classes; the Euler "
            "factors of a general target would leave the group"
        )
    u = np.asarray(target, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError("target must be a 2x2 matrix")
    det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
    if abs(det) < 1e-12:
        raise ValueError("target is singular")
    u = u / complex(det) ** 0.5
    herm = u.conj().T @ u
    if not np.allclose(herm, np.eye(2), atol=1e-9):
        raise ValueError("target is not proportional to a unitary matrix")

    exact = _recognize(u, gs, opts)
    if exact is not None:
        try:
            word = exact_synthesize(exact, gs)
        except NotInGroupError:
            word = None
        if word is not None:
            d = pu2_distance(to_su2(exact, opts.precision_bits), u)
            return SynthesisResult(
                word,
                canonicalize(exact, gs.pi, eng.order),
                d,
                range(0, word.tcount + 1),
            )

    x0, x1, x2, x3 = _su2_coords(u)
    cos_b = math.hypot(x0, x1)
    sin_b = math.hypot(x2, x3)
    if sin_b <= 1e-12:
        # budget the dropped off-diagonal mass so the verified total
        # still lands under eps
        res = approx_diagonal(-2.0 * math.atan2(x1, x0), eps - 2.0 * sin_b, gs, opts)
        d = pu2_distance(to_su2(res.element, opts.precision_bits), u)
        return SynthesisResult(res.word, res.element, d, res.searched_tcounts)
    if cos_b <= 1e-12:
        # target = s(j) * diag: peel the exact j and approximate the rest
        a = math.atan2(x3, x2)
        res = approx_diagonal(2.0 * a, eps - 2.0 * cos_b, gs, opts)
        j_quat = Quaternion.from_ints(gs.ring, 0, 0, 1, 0)
        elem = canonicalize(j_quat * res.element, gs.pi, eng.order)
        word = exact_synthesize(elem, gs)
        d = pu2_distance(to_su2(elem, opts.precision_bits), u)
        if d > eps:
            raise AssertionError("j-twisted diagonal drifted past eps")
        return SynthesisResult(word, elem, d, res.searched_tcounts)

    s = math.atan2(x1, x0)
    dd = math.atan2(x3, x2)
    alpha = (s + dd) / 2.0
    gamma = (s - dd) / 2.0
    beta = math.atan2(sin_b, cos_b)
    # absolute slack absorbs the unitarity tolerance of the input; the
    # relative floor keeps sub positive for extreme eps
    sub = max(eps / 3.0 - 1e-9, eps / 3.0 * 0.9)

    r1 = approx_diagonal(-2.0 * alpha, sub, gs, opts)
    y_target = np.array(
        [
            [complex(math.cos(beta)), complex(math.sin(beta))],
            [complex(-math.sin(beta)), complex(math.cos(beta))],
        ]
    )
    r2 = _cap_synthesize(
        gs, y_target, (math.cos(beta), math.sin(beta)), (0, 2), sub, opts
    )
    r3 = approx_diagonal(-2.0 * gamma, sub, gs, opts)

    elem = canonicalize(
        r1.element * r2.element * r3.element, gs.pi, eng.order
    )
    word = exact_synthesize(elem, gs)
    d = pu2_distance(to_su2(elem, opts.precision_bits), u)
    if d > eps:
        raise AssertionError(
            f"triangle bound violated: assembled distance {d} > {eps}"
        )
    hi = max(
        r1.searched_tcounts.stop, r2.searched_tcounts.stop, r3.searched_tcounts.stop
    )
    return SynthesisResult(word, elem, d, range(0, hi))
