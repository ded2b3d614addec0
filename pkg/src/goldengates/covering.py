"""Word enumeration and covering-quality statistics on PU(2).

This module measures how well the words of a super gate set spread
over the group: it enumerates all canonical elements of a given
T-count, samples Haar-random targets, and reports nearest-point
distance statistics together with empty-ball (hole) probes.

Enumeration runs on integer coordinate arrays (numpy) rather than on
quaternion objects; layers are produced breadth-first and every layer
is checked against the exact count |C|^2 (|C|-1)^(t-1), so a failure
of freeness would surface as an ArithmeticError here.
"""

from __future__ import annotations

import dataclasses
import functools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence, Union

import numpy as np

from ._descent import get_engine
from .gatesets import GateSet
from .quaternions import Quaternion, canonicalize, reduced_norm
from .rings import INT, PHI, QuadInt, RingId, SQRT2, unit_power

__all__ = [
    "CoverReport",
    "ball_volume",
    "covering_stats",
    "enumerate_words",
    "hole_probe",
    "identity_gap",
    "identity_gap_bound",
]

ENUMERATION_GUARD = 10**6
DEFAULT_QUANTILES = (0.0, 0.05, 0.25, 0.5, 0.75, 0.95, 0.99, 1.0)

_BRUTE_LIMIT = 10**5
_SAMPLE_CHUNK = 4096

# (a-part, b-part) of w^2, per ring; this is all the numpy kernels
# need to know about the ring arithmetic
_W_SQ = {INT: (0, 0), SQRT2: (2, 0), PHI: (1, 1)}

# (x, y, d) with sigma(a + b*w) = (x + y*sqrt(d)) * positive, per
# embedding; used for exact integer sign tests
_SIGMA_XYD = {
    SQRT2: (lambda a, b: (a, b), lambda a, b: (a, -b), 2),
    PHI: (lambda a, b: (2 * a + b, b), lambda a, b: (2 * a + b, -b), 5),
}

_W1_FLOAT = {
    INT: 0.0,
    SQRT2: math.sqrt(2.0),
    PHI: (1.0 + math.sqrt(5.0)) / 2.0,
}


def _thread_count() -> int:
    raw = os.environ.get("SGF_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _expected_count(size: int, t: int) -> int:
    return size if t == 0 else size * size * (size - 1) ** (t - 1)


# -- integer batch kernels ---------------------------------------------------


def _pair_mul(w2: tuple[int, int], aa, ab, ba, bb):
    """Componentwise product (aa + ab*w)(ba + bb*w) under w^2 = w2."""
    pa = aa * ba + w2[0] * ab * bb
    pb = aa * bb + ab * ba + w2[1] * ab * bb
    return pa, pb


def _entry_block(w2: tuple[int, int], e: QuadInt) -> np.ndarray:
    """2x2 integer block so that row-vector (a, b) @ block = (a, b) * e."""
    return np.array(
        [[e.a, e.b], [w2[0] * e.b, e.a + w2[1] * e.b]], dtype=np.int64
    )


def _exact_sign(x: np.ndarray, y: np.ndarray, d: int) -> np.ndarray:
    """Sign of x + y*sqrt(d) for integer arrays, without floats."""
    norm_sign = np.sign(x * x - d * y * y)
    mixed = np.where(x > 0, norm_sign, -norm_sign)
    s = np.where(
        (x >= 0) & (y >= 0),
        np.sign(x + y),
        np.where((x <= 0) & (y <= 0), -np.sign(-x - y), mixed),
    )
    return s.astype(np.int64)


def _pair_divide(
    pi: QuadInt, a: np.ndarray, b: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(quotient_a, quotient_b, exact_mask) for division by pi."""
    u, v = pi.a, pi.b
    if pi.ring is INT:
        return a // u, b // u, (a % u == 0) & (b % u == 0)
    if pi.ring is SQRT2:
        norm = u * u - 2 * v * v
        na = a * u - 2 * b * v
        nb = b * u - a * v
    else:
        norm = u * u + u * v - v * v
        na = a * (u + v) - b * v
        nb = b * u - a * v
    ok = (na % norm == 0) & (nb % norm == 0)
    return na // norm, nb // norm, ok


class _BatchTables:
    """Numpy mirrors of the descent-engine tables for one gate set."""

    def __init__(self, gs: GateSet):
        eng = get_engine(gs)
        self.gs = gs
        self.ring: RingId = gs.ring
        self.w2 = _W_SQ[gs.ring]
        self.size = len(gs.C)

        # right-multiplication by T*c_i, acting on order coordinates
        # (rows are coordinate vectors, so the product is X @ mat)
        self.step = np.empty((self.size, 8, 8), dtype=np.int64)
        for g, flat in enumerate(eng.eval_mats):
            for r in range(4):
                for c in range(4):
                    e = QuadInt(flat[r * 8 + c * 2], flat[r * 8 + c * 2 + 1], gs.ring)
                    self.step[g, 2 * c : 2 * c + 2, 2 * r : 2 * r + 2] = _entry_block(
                        self.w2, e
                    )

        # order coordinates -> doubled storage coordinates
        order = eng.order
        self.to_storage = np.zeros((8, 8), dtype=np.int64)
        for i, basis in enumerate(order.basis):
            for j, e in enumerate(basis.doubled()):
                self.to_storage[2 * i : 2 * i + 2, 2 * j : 2 * j + 2] = _entry_block(
                    self.w2, e
                )

        # Gram data of the reduced norm in order coordinates:
        # nr(sum x_i b_i) = sum_i D_i x_i^2 + sum_{i<j} T_ij x_i x_j
        self.gram_diag = tuple(reduced_norm(b) for b in order.basis)
        self.gram_off = {}
        for i in range(4):
            for j in range(i + 1, 4):
                full = reduced_norm(order.basis[i] + order.basis[j])
                self.gram_off[(i, j)] = (
                    full - self.gram_diag[i] - self.gram_diag[j]
                )

        self.scale_primes = eng.cofactor_primes
        rows = np.array(
            [
                [v for e in order.coords(canonicalize(c, gs.pi, order)) for v in (e.a, e.b)]
                for c in gs.C
            ],
            dtype=np.int64,
        )
        self.layer0 = self._canonicalize(rows, 0)

    # -- canonical form, batched ----------------------------------------

    def _reduced_norms(self, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        p = x.reshape(len(x), 4, 2)
        na = np.zeros(len(x), dtype=np.int64)
        nb = np.zeros(len(x), dtype=np.int64)
        for i in range(4):
            sa, sb = _pair_mul(self.w2, p[:, i, 0], p[:, i, 1], p[:, i, 0], p[:, i, 1])
            ca, cb = _pair_mul(
                self.w2,
                np.int64(self.gram_diag[i].a),
                np.int64(self.gram_diag[i].b),
                sa,
                sb,
            )
            na += ca
            nb += cb
        for (i, j), coeff in self.gram_off.items():
            sa, sb = _pair_mul(self.w2, p[:, i, 0], p[:, i, 1], p[:, j, 0], p[:, j, 1])
            ca, cb = _pair_mul(self.w2, np.int64(coeff.a), np.int64(coeff.b), sa, sb)
            na += ca
            nb += cb
        return na, nb

    def _strip_rational(self, x: np.ndarray, p: int) -> None:
        while True:
            mask = (x % p == 0).all(axis=1)
            if not mask.any():
                return
            x[mask] //= p

    def _unit_normalize(self, x: np.ndarray, t: int) -> None:
        """Bring every reduced norm into the coset {pi^t, eps*pi^t}."""
        na, nb = self._reduced_norms(x)
        for _ in range(t):
            na, nb, ok = _pair_divide(self.gs.pi, na, nb)
            if not ok.all():
                raise ArithmeticError("norm lost its pi valuation")
        for p in self.scale_primes:
            while True:
                mask = (na % p == 0) & (nb % p == 0)
                if not mask.any():
                    break
                na[mask] //= p
                nb[mask] //= p
        if self.ring is INT:
            if not (na == 1).all():
                raise ArithmeticError("integer norm cofactor is not 1")
            return
        sig1, sig2, d = _SIGMA_XYD[self.ring]
        tp = (_exact_sign(*sig1(na, nb), d) > 0) & (
            _exact_sign(*sig2(na, nb), d) > 0
        )
        if not tp.all():
            eps = unit_power(self.ring, -1)
            qa, qb = _pair_mul(
                self.w2, na[~tp], nb[~tp], np.int64(eps.a), np.int64(eps.b)
            )
            na[~tp] = qa
            nb[~tp] = qb
        # remaining cofactor is eps^(2m); read m off the first embedding
        val = na.astype(np.float64) + nb.astype(np.float64) * _W1_FLOAT[self.ring]
        eps1 = unit_power(self.ring, 1)
        log_eps = math.log(_sigma1_scalar(self.ring, eps1.a, eps1.b))
        ks = np.rint(np.log(val) / log_eps).astype(np.int64)
        for k in np.unique(ks):
            rows = ks == k
            want = unit_power(self.ring, int(k))
            if not ((na[rows] == want.a).all() and (nb[rows] == want.b).all()):
                raise ArithmeticError("norm cofactor is not a unit power")
            if k % 2:
                raise ArithmeticError("norm cofactor has odd unit exponent")
            if k:
                s = unit_power(self.ring, -int(k) // 2)
                block = _entry_block(self.w2, s)
                x[rows] = (
                    x[rows].reshape(-1, 4, 2) @ block
                ).reshape(-1, 8)

    def _sign_normalize(self, x: np.ndarray) -> None:
        st = (x @ self.to_storage).reshape(len(x), 4, 2)
        nonzero = (st[:, :, 0] != 0) | (st[:, :, 1] != 0)
        first = np.argmax(nonzero, axis=1)
        rows = np.arange(len(x))
        a = st[rows, first, 0]
        b = st[rows, first, 1]
        if self.ring is INT:
            s = np.sign(a)
        else:
            sig1, _, d = _SIGMA_XYD[self.ring]
            s = _exact_sign(*sig1(a, b), d)
        x *= s[:, None]

    def _canonicalize(self, x: np.ndarray, t: int) -> np.ndarray:
        self._unit_normalize(x, t)
        self._sign_normalize(x)
        out = np.unique(x, axis=0)
        if len(out) != len(x):
            raise ArithmeticError(
                f"{self.gs.name}: T-count {t} words are not all distinct"
            )
        return out

    def next_layer(self, prev: np.ndarray, t: int) -> np.ndarray:
        cand = np.concatenate([prev @ self.step[g] for g in range(self.size)])
        for p in self.scale_primes:
            self._strip_rational(cand, p)
        # a product that falls back into T-count t-2 is exactly one that
        # picked up pi as content; genuinely new elements are primitive
        qa = cand[:, 0::2]
        qb = cand[:, 1::2]
        _, _, ok = _pair_divide(self.gs.pi, qa, qb)
        cand = cand[~ok.all(axis=1)]
        out = self._canonicalize(cand, t)
        # integer kernels square coordinates, so keep them well inside int64
        if np.abs(out).max(initial=0) > 2**31:
            raise ArithmeticError("coordinates grew past the safe range")
        return out


@functools.lru_cache(maxsize=None)
def _tables(gs: GateSet) -> _BatchTables:
    return _BatchTables(gs)


@functools.lru_cache(maxsize=None)
def _layer(gs: GateSet, t: int) -> np.ndarray:
    tab = _tables(gs)
    if t == 0:
        out = tab.layer0
    else:
        out = tab.next_layer(_layer(gs, t - 1), t)
    expected = _expected_count(tab.size, t)
    if len(out) != expected:
        raise ArithmeticError(
            f"{gs.name}: found {len(out)} elements at T-count {t}, "
            f"expected {expected}"
        )
    out.flags.writeable = False
    return out


def _check_guard(gs: GateSet, t: int) -> None:
    if t < 0:
        raise ValueError("T-count must be nonnegative")
    if _expected_count(len(gs.C), t) > ENUMERATION_GUARD:
        raise ValueError(
            f"{gs.name}: T-count {t} has more than {ENUMERATION_GUARD} words"
        )


def enumerate_words(gs: GateSet, t: int) -> list[Quaternion]:
    """All distinct canonical elements of T-count exactly t.

    The result has exactly |C|^2 (|C|-1)^(t-1) entries (|C| at t = 0);
    enumeration refuses to start past the 10^6-element guard.
    """
    get_engine(gs)
    _check_guard(gs, t)
    tab = _tables(gs)
    rows = _layer(gs, t) @ tab.to_storage
    halved = (rows % 2 == 0).all(axis=1)
    ring = gs.ring

    qi_new = QuadInt.__new__
    q_new = Quaternion.__new__
    setattr_ = object.__setattr__
    cache: dict = {}

    def quadint(a: int, b: int) -> QuadInt:
        key = (a, b)
        v = cache.get(key)
        if v is None:
            v = qi_new(QuadInt)
            setattr_(v, "a", a)
            setattr_(v, "b", b)
            setattr_(v, "ring", ring)
            cache[key] = v
        return v

    out = []
    for row, half in zip(rows.tolist(), halved.tolist()):
        if half:
            row = [v // 2 for v in row]
            denom = 1
        else:
            denom = 2
        q = q_new(Quaternion)
        setattr_(q, "x0", quadint(row[0], row[1]))
        setattr_(q, "x1", quadint(row[2], row[3]))
        setattr_(q, "x2", quadint(row[4], row[5]))
        setattr_(q, "x3", quadint(row[6], row[7]))
        setattr_(q, "denom", denom)
        out.append(q)
    return out


# -- float geometry ----------------------------------------------------------


def _sigma1_scalar(ring: RingId, a: float, b: float) -> float:
    if ring is INT:
        return a
    if ring is SQRT2:
        return a + b * math.sqrt(2.0)
    return a + b * (1.0 + math.sqrt(5.0)) / 2.0


def _unit_vectors(gs: GateSet, t_max: int) -> np.ndarray:
    """One unit 4-vector per class across all T-counts up to t_max."""
    tab = _tables(gs)
    parts = []
    for t in range(t_max + 1):
        _check_guard(gs, t)
        rows = (_layer(gs, t) @ tab.to_storage).astype(np.float64)
        if gs.ring is SQRT2:
            v = rows[:, 0::2] + rows[:, 1::2] * math.sqrt(2.0)
        elif gs.ring is PHI:
            v = rows[:, 0::2] + rows[:, 1::2] * ((1.0 + math.sqrt(5.0)) / 2.0)
        else:
            v = rows[:, 0::2]
        parts.append(v)
    pts = np.concatenate(parts)
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    return pts


def _haar_unit_vectors(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar samples on SU(2) as unit quaternions, by the subgroup algorithm.

    The S^1 subgroup angle, the coset angle, and the latitude are drawn
    independently; this is the standard three-uniform construction.
    """
    u = rng.random((n, 3))
    r1 = np.sqrt(1.0 - u[:, 0])
    r2 = np.sqrt(u[:, 0])
    t1 = 2.0 * math.pi * u[:, 1]
    t2 = 2.0 * math.pi * u[:, 2]
    return np.stack(
        [r1 * np.sin(t1), r1 * np.cos(t1), r2 * np.sin(t2), r2 * np.cos(t2)],
        axis=1,
    )


def _dist_from_dot(best: np.ndarray) -> np.ndarray:
    return np.sqrt(np.clip(1.0 - best, 0.0, None))


class _VPTree:
    """Vantage-point tree under d(x, y) = sqrt(1 - |x.y|).

    That function is the projective chordal distance scaled by 1/sqrt(2),
    hence a metric, which is what the triangle-inequality pruning needs.
    """

    _LEAF = 24

    def __init__(self, points: np.ndarray):
        self.points = points
        order = np.arange(len(points))
        self.nodes: list[tuple] = []
        self.root = self._build(order)

    def _dist(self, idx: np.ndarray, x: np.ndarray) -> np.ndarray:
        return _dist_from_dot(np.abs(self.points[idx] @ x))

    def _build(self, idx: np.ndarray) -> int:
        node = len(self.nodes)
        self.nodes.append(())
        if len(idx) <= self._LEAF:
            self.nodes[node] = (None, idx)
            return node
        vp = idx[0]
        rest = idx[1:]
        d = self._dist(rest, self.points[vp])
        mid = len(rest) // 2
        part = np.argpartition(d, mid)
        radius = d[part[mid]]
        inner = self._build(rest[part[:mid]])
        outer = self._build(rest[part[mid:]])
        self.nodes[node] = (vp, radius, inner, outer)
        return node

    def nearest(self, x: np.ndarray, skip: int = -1) -> float:
        best = math.inf
        stack = [self.root]
        while stack:
            entry = self.nodes[stack.pop()]
            if entry[0] is None:
                idx = entry[1]
                d = self._dist(idx, x)
                if skip >= 0:
                    d = d[idx != skip]
                if len(d):
                    best = min(best, float(d.min()))
                continue
            vp, radius, inner, outer = entry
            d = math.sqrt(max(0.0, 1.0 - abs(float(self.points[vp] @ x))))
            if vp != skip and d < best:
                best = d
            if d - best <= radius:
                stack.append(inner)
            if d + best >= radius:
                stack.append(outer)
        return best


def _nearest_distances(
    samples: np.ndarray, points: np.ndarray, use_tree: Optional[bool]
) -> np.ndarray:
    if use_tree is None:
        use_tree = len(points) > _BRUTE_LIMIT
    if use_tree:
        tree = _VPTree(points)
        return np.array([tree.nearest(s) for s in samples], dtype=np.float64)
    out = np.empty(len(samples), dtype=np.float64)
    chunks = range(0, len(samples), _SAMPLE_CHUNK)

    def work(start: int) -> None:
        block = samples[start : start + _SAMPLE_CHUNK]
        best = np.abs(block @ points.T).max(axis=1)
        out[start : start + len(block)] = _dist_from_dot(best)

    workers = _thread_count()
    if workers > 1 and len(samples) > _SAMPLE_CHUNK:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(work, chunks))
    else:
        for start in chunks:
            work(start)
    return out


def _nearest_mates(points: np.ndarray, idx: np.ndarray) -> np.ndarray:
    """Index of the nearest distinct point for each of points[idx]."""
    best = np.full(len(idx), -1.0)
    mate = np.zeros(len(idx), dtype=np.int64)
    sub = points[idx]
    for start in range(0, len(points), _SAMPLE_CHUNK):
        seg = np.abs(sub @ points[start : start + _SAMPLE_CHUNK].T)
        inside = (idx >= start) & (idx < start + seg.shape[1])
        seg[np.nonzero(inside)[0], idx[inside] - start] = -1.0
        seg_best = seg.max(axis=1)
        upd = seg_best > best
        best[upd] = seg_best[upd]
        mate[upd] = seg[upd].argmax(axis=1) + start
    return mate


def _self_nearest(points: np.ndarray) -> np.ndarray:
    """Distance from each point to its nearest distinct neighbour."""
    m = len(points)
    if m > _BRUTE_LIMIT:
        tree = _VPTree(points)
        return np.array(
            [tree.nearest(points[i], skip=i) for i in range(m)], dtype=np.float64
        )
    out = np.empty(m, dtype=np.float64)
    for start in range(0, m, _SAMPLE_CHUNK):
        block = points[start : start + _SAMPLE_CHUNK]
        dots = np.abs(block @ points.T)
        rows = np.arange(len(block))
        dots[rows, start + rows] = -1.0
        out[start : start + len(block)] = _dist_from_dot(dots.max(axis=1))
    return out


@dataclasses.dataclass(frozen=True)
class CoverReport:
    """Covering-quality summary for all words up to a T-count bound."""

    gateset: str
    tcount: int
    num_points: int
    sample_count: int
    distance_quantiles: tuple[tuple[float, float], ...]
    max_sampled_hole: float
    min_pairwise_distance: float


def covering_stats(
    gs: GateSet,
    t_max: int,
    samples: int,
    rng: Union[np.random.Generator, int, None] = None,
    *,
    quantiles: Sequence[float] = DEFAULT_QUANTILES,
    use_tree: Optional[bool] = None,
) -> CoverReport:
    """Sample Haar-random targets and measure nearest-word distances.

    The point set is every canonical element with T-count at most
    t_max.  Results are deterministic for a fixed seed; the sample
    loop parallelizes over chunks when SGF_THREADS is set, with
    a reduction that does not depend on the thread count.
    """
    if samples < 0:
        raise ValueError("sample count must be nonnegative")
    points = _unit_vectors(gs, t_max)
    gen = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    if samples:
        draws = _haar_unit_vectors(gen, samples)
        dists = _nearest_distances(draws, points, use_tree)
        qpairs = tuple(
            (float(q), float(v))
            for q, v in zip(quantiles, np.quantile(dists, list(quantiles)))
        )
        max_hole = float(dists.max())
    else:
        qpairs = ()
        max_hole = 0.0
    return CoverReport(
        gateset=gs.name,
        tcount=t_max,
        num_points=len(points),
        sample_count=samples,
        distance_quantiles=qpairs,
        max_sampled_hole=max_hole,
        min_pairwise_distance=float(_self_nearest(points).min()),
    )


def identity_gap(gs: GateSet, t_max: int) -> float:
    """Distance from the identity class to the nearest other word."""
    points = _unit_vectors(gs, t_max)
    dots = np.abs(points[:, 0])
    dots = dots[dots < 1.0 - 1e-12]  # the identity itself sits at dot 1
    return float(_dist_from_dot(np.array([dots.max()]))[0])


def identity_gap_bound(gs: GateSet, t_max: int) -> float:
    """Integrality lower bound for the identity gap at T-count t_max.

    The squared gap is (4 nr - v0^2) / (2 sqrt(s) (2 sqrt(s) + |v0|))
    in the first embedding s of the reduced norm, and 4 nr - v0^2 is a
    nonzero totally positive integer of the coordinate ring.  Over Z
    that numerator is at least 1, giving 1/(8 nr) with nr at worst
    pi^t times the generator norm cofactors.  Over the quadratic rings
    small totally positive elements exist, so only the field norm
    bounds the numerator: the gap squared is at least 1/(32 k^t).
    """
    if gs.ring is INT:
        cof = 1
        for c in gs.C:
            _, rem = _pi_valuation_int(reduced_norm(c).a, gs.pi.a)
            cof = max(cof, rem)
        s1 = gs.pi.a**t_max * cof ** (t_max + 1)
        return 0.5 / math.sqrt(2.0 * s1)
    return 0.25 / math.sqrt(2.0 * float(gs.k) ** t_max)


def _pi_valuation_int(n: int, p: int) -> tuple[int, int]:
    n = abs(n)
    t = 0
    while n % p == 0:
        n //= p
        t += 1
    return t, n


def ball_volume(radius: float) -> float:
    """Normalized volume of a metric ball in PU(2).

    Both spherical caps {|<x, c>| >= 1 - r^2} contribute; the angular
    zone integral gives (2/pi) (alpha - sin alpha cos alpha) with
    alpha = arccos(1 - r^2).
    """
    c = min(1.0, max(-1.0, 1.0 - radius * radius))
    alpha = math.acos(c)
    return (2.0 / math.pi) * (alpha - math.sin(alpha) * math.cos(alpha))


def hole_probe(
    gs: GateSet,
    t: int,
    direction_samples: int,
    rng: Union[np.random.Generator, int, None] = None,
) -> float:
    """Largest empty-ball radius found around a set of probe centers.

    Probes sit at the identity, at midpoints of the closest point
    pairs, and at Haar-random centers; the returned radius is the
    maximum nearest-point distance over all probes.  Exploratory: a
    larger probe budget can only grow the result.
    """
    if direction_samples < 0:
        raise ValueError("probe count must be nonnegative")
    points = _unit_vectors(gs, t)
    centers = [np.array([[1.0, 0.0, 0.0, 0.0]])]

    near = _self_nearest(points)
    take = min(200, len(points))
    closest = np.argsort(near, kind="stable")[:take]
    partner = _nearest_mates(points, closest)
    mates = points[partner]
    signs = np.sign(np.sum(points[closest] * mates, axis=1))
    signs[signs == 0] = 1.0
    mid = points[closest] + signs[:, None] * mates
    mid /= np.linalg.norm(mid, axis=1, keepdims=True)
    centers.append(mid)

    if direction_samples:
        gen = (
            rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
        )
        centers.append(_haar_unit_vectors(gen, direction_samples))

    probe = np.concatenate(centers)
    return float(_nearest_distances(probe, points, None).max())
