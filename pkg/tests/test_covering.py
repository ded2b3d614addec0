"""Word enumeration counts, covering statistics, and hole probes."""

import math

import numpy as np
import pytest

from goldengates.covering import (
    CoverReport,
    _expected_count,
    _haar_unit_vectors,
    _nearest_distances,
    _unit_vectors,
    ball_volume,
    covering_stats,
    enumerate_words,
    hole_probe,
    identity_gap,
    identity_gap_bound,
)
from goldengates.gatesets import catalog
from goldengates.quaternions import Quaternion, canonicalize, get_order
from goldengates.synthesis import UnsupportedGateSetError, t_count

CAT = catalog()


def slow_layer(gs, t):
    """Reference enumeration: plain products plus full canonicalize."""
    order = get_order(gs.order_id)
    layer = {canonicalize(c, gs.pi, order) for c in gs.C}
    seen = set(layer)
    for _ in range(t):
        nxt = set()
        for q in layer:
            for c in gs.C:
                r = canonicalize(q * (gs.T * c), gs.pi, order)
                if r not in seen:
                    nxt.add(r)
        seen |= nxt
        layer = nxt
    return layer


@pytest.mark.parametrize(
    "name,tmax",
    [
        ("pauli_t", 4),
        ("three_t", 4),
        ("octa8", 3),
        ("hybrid6", 3),
        ("icosa5", 3),
        ("hurwitz_t", 2),
        ("clifford_t", 2),
        ("icosa12p", 2),
        ("icosa60", 1),
    ],
)
def test_counts_match_formula(name, tmax):
    gs = CAT[name]
    size = len(gs.C)
    for t in range(tmax + 1):
        words = enumerate_words(gs, t)
        assert len(words) == _expected_count(size, t)
        assert len(set(words)) == len(words)


@pytest.mark.parametrize(
    "name,t",
    [
        ("pauli_t", 0),
        ("pauli_t", 1),
        ("pauli_t", 2),
        ("pauli_t", 3),
        ("three_t", 3),
        ("hybrid6", 2),
        ("octa8", 2),
        ("icosa5", 2),
        ("icosa12p", 1),
        ("clifford_t", 1),
    ],
)
def test_matches_slow_enumeration(name, t):
    gs = CAT[name]
    assert set(enumerate_words(gs, t)) == slow_layer(gs, t)


@pytest.mark.parametrize(
    "name,t", [("clifford_t", 3), ("hurwitz_t", 3), ("icosa60", 2), ("three_t", 5)]
)
def test_outputs_are_canonical_with_right_tcount(name, t):
    gs = CAT[name]
    order = get_order(gs.order_id)
    words = enumerate_words(gs, t)
    step = max(1, len(words) // 17)
    for q in words[::step]:
        assert canonicalize(q, gs.pi, order) == q
        assert t_count(q, gs) == t


def test_identity_class_is_a_zero_count_word():
    for name in ("pauli_t", "clifford_t", "icosa5"):
        gs = CAT[name]
        order = get_order(gs.order_id)
        one = canonicalize(Quaternion.from_ints(gs.ring, 1, 0, 0, 0), gs.pi, order)
        assert one in set(enumerate_words(gs, 0))


@pytest.mark.parametrize("name,t", [("pauli_t", 2), ("three_t", 2), ("octa8", 2)])
def test_closed_under_inverse(name, t):
    gs = CAT[name]
    order = get_order(gs.order_id)
    words = set(enumerate_words(gs, t))
    assert {canonicalize(q.conj(), gs.pi, order) for q in words} == words


def test_guard_rejects_oversized_enumerations():
    with pytest.raises(ValueError):
        enumerate_words(CAT["icosa60"], 3)
    with pytest.raises(ValueError):
        enumerate_words(CAT["pauli_t"], -1)


def test_golden_sets_are_rejected():
    with pytest.raises(UnsupportedGateSetError):
        enumerate_words(CAT["v_gates"], 1)


def test_haar_sampler_moments():
    rng = np.random.default_rng(11)
    n = 40_000
    v = _haar_unit_vectors(rng, n)
    assert np.allclose(np.linalg.norm(v, axis=1), 1.0, atol=1e-12)
    trace = 2.0 * v[:, 0]
    # Var(trace) = 1 and Var(trace^2) = 1 under Haar
    assert abs(trace.mean()) < 3.0 / math.sqrt(n)
    assert abs((trace**2).mean() - 1.0) < 3.0 / math.sqrt(n)


def test_cover_report_fields_and_determinism():
    gs = CAT["pauli_t"]
    rep = covering_stats(gs, 2, 800, 3)
    assert isinstance(rep, CoverReport)
    assert rep.gateset == "pauli_t"
    assert rep.tcount == 2
    assert rep.num_points == 4 + 16 + 48
    assert rep.sample_count == 800
    qs = dict(rep.distance_quantiles)
    assert qs[1.0] == rep.max_sampled_hole
    assert 0.0 < rep.min_pairwise_distance < 1.0
    assert all(0.0 <= d <= 1.0 for d in qs.values())
    assert covering_stats(gs, 2, 800, 3) == rep


def test_cover_report_no_samples():
    rep = covering_stats(CAT["three_t"], 1, 0, 0)
    assert rep.distance_quantiles == ()
    assert rep.max_sampled_hole == 0.0
    assert rep.sample_count == 0
    assert rep.num_points == 3 + 9


def test_threads_do_not_change_the_report(monkeypatch):
    gs = CAT["pauli_t"]
    base = covering_stats(gs, 3, 20_000, 17)
    monkeypatch.setenv("SGF_THREADS", "4")
    assert covering_stats(gs, 3, 20_000, 17) == base


def test_vptree_agrees_with_brute_force():
    rng = np.random.default_rng(23)
    points = _haar_unit_vectors(rng, 700)
    samples = _haar_unit_vectors(rng, 300)
    brute = _nearest_distances(samples, points, False)
    tree = _nearest_distances(samples, points, True)
    # same nearest neighbours; dot products may differ in the last ulp
    # because the summation grouping differs between the two paths
    assert np.abs(brute - tree).max() < 1e-14


@pytest.mark.parametrize(
    "name,t",
    [
        ("pauli_t", 4),
        ("pauli_t", 6),
        ("three_t", 4),
        ("octa8", 3),
        ("clifford_t", 2),
        ("hurwitz_t", 2),
        ("hybrid6", 2),
        ("icosa5", 2),
        ("icosa12p", 2),
        ("icosa60", 1),
    ],
)
def test_identity_gap_respects_bound(name, t):
    gs = CAT[name]
    assert identity_gap(gs, t) >= identity_gap_bound(gs, t)


def test_hole_probe_positive_and_deterministic():
    gs = CAT["pauli_t"]
    r0 = hole_probe(gs, 0, 0)
    assert r0 > 0.1  # four classes cannot cover PU(2)
    a = hole_probe(gs, 3, 500, 9)
    b = hole_probe(gs, 3, 500, 9)
    assert a == b
    assert 0.0 < a < 1.0


def test_hole_radius_shrinks_with_nested_points():
    gs = CAT["pauli_t"]
    probes = np.concatenate(
        [np.array([[1.0, 0.0, 0.0, 0.0]]), _haar_unit_vectors(np.random.default_rng(3), 250)]
    )
    radii = [
        _nearest_distances(probes, _unit_vectors(gs, t), None).max() for t in range(5)
    ]
    for earlier, later in zip(radii, radii[1:]):
        assert later <= earlier


def test_ball_volume_limits():
    assert ball_volume(1.0) == pytest.approx(1.0)
    assert ball_volume(0.0) == 0.0
    r = 1e-3
    assert ball_volume(r) / r**3 == pytest.approx(8.0 * math.sqrt(2.0) / (3.0 * math.pi), rel=1e-4)
    vals = [ball_volume(x) for x in np.linspace(0.0, 1.0, 20)]
    assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_hole_volume_window_recorded():
    # exploratory per the design notes: recorded, sanity-checked loosely
    gs = CAT["pauli_t"]
    r = hole_probe(gs, 6, 1000, 7)
    n = float(_expected_count(4, 6))
    assert n**-1.5 < ball_volume(r) < n**-0.5
