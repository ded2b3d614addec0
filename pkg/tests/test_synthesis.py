"""Exact word recovery, T-counts, and cap-search approximation.

The exhaustive oracle at the bottom enumerates every group element with
T-count at most 6 for the smallest catalog set, so optimality claims
are checked against ground truth rather than against the search's own
level bound.
"""

import math
import random

import numpy as np
import pytest

from goldengates._descent import get_engine
from goldengates.gatesets import catalog, make_word
from goldengates.quaternions import (
    Quaternion,
    canonicalize,
    pu2_distance,
    reduced_norm,
    to_su2,
)
from goldengates.rings import INT
from goldengates.synthesis import (
    NotInGroupError,
    SynthesisError,
    SynthOptions,
    UnsupportedGateSetError,
    approx_diagonal,
    approx_general,
    evaluate,
    exact_synthesize,
    t_count,
)

SUPER_NAMES = (
    "pauli_t",
    "hurwitz_t",
    "clifford_t",
    "octa8",
    "three_t",
    "hybrid6",
    "icosa60",
    "icosa12p",
    "icosa5",
)


def random_word(gs, rng, tmax=30):
    """Uniform random reduced word; ends may be the identity class."""
    idx_id = gs.identity_index
    n_c = len(gs.C)
    t = rng.randrange(0, tmax + 1)
    idxs = [rng.randrange(n_c)]
    for _ in range(t):
        nxt = rng.randrange(n_c)
        while nxt == idx_id:
            nxt = rng.randrange(n_c)
        idxs.append(nxt)
    if t > 0 and rng.random() < 0.25:
        idxs[-1] = idx_id
    return make_word(gs, idxs)


def zrot(theta):
    h = theta / 2.0
    return np.array(
        [[np.exp(-1j * h), 0.0], [0.0, np.exp(1j * h)]], dtype=complex
    )


# -- t_count ---------------------------------------------------------------


def test_t_count_units_and_involution():
    gs = catalog()["pauli_t"]
    i = Quaternion.from_ints(INT, 0, 1, 0, 0)
    ijk = Quaternion.from_ints(INT, 0, 1, 1, 1)
    assert t_count(i, gs) == 0
    assert t_count(ijk, gs) == 1
    assert t_count(ijk * i * ijk, gs) == 2


def test_t_count_rejects_foreign_norms():
    gs = catalog()["pauli_t"]
    with pytest.raises(NotInGroupError):
        t_count(Quaternion.from_ints(INT, 1, 2, 1, 3), gs)  # norm 15


def test_t_count_zero_rejected():
    gs = catalog()["pauli_t"]
    with pytest.raises(ValueError):
        t_count(Quaternion.from_ints(INT, 0, 0, 0, 0), gs)


def test_t_count_wrong_ring():
    gs = catalog()["clifford_t"]
    with pytest.raises(NotInGroupError):
        t_count(Quaternion.from_ints(INT, 0, 1, 0, 0), gs)


def test_golden_sets_unsupported():
    gs = catalog()["v_gates"]
    with pytest.raises(UnsupportedGateSetError):
        t_count(Quaternion.from_ints(INT, 1, 0, 0, 0), gs)


def test_t_count_scalar_invariant():
    gs = catalog()["pauli_t"]
    q = evaluate(make_word(gs, [0, 1, 2]), gs)
    assert t_count(q * 7, gs) == t_count(q, gs) == 2


# -- exact synthesis -------------------------------------------------------


def test_involution_word_is_identity_framed():
    for name in SUPER_NAMES:
        gs = catalog()[name]
        w = exact_synthesize(gs.T, gs)
        e = f"c{gs.identity_index}"
        assert w.letters == (e, "T", e), name


def test_norm_fifteen_not_a_member():
    gs = catalog()["pauli_t"]
    with pytest.raises(NotInGroupError):
        exact_synthesize(Quaternion.from_ints(INT, 1, 2, 1, 3), gs)


@pytest.mark.parametrize("name", SUPER_NAMES)
def test_round_trips(name):
    gs = catalog()[name]
    rng = random.Random(hash(name) & 0xFFFF)
    for _ in range(60):
        w = random_word(gs, rng)
        q = evaluate(w, gs)
        assert exact_synthesize(q, gs) == w


def test_entry_accepts_non_canonical_representatives():
    gs = catalog()["pauli_t"]
    w = make_word(gs, [1, 2, 0, 3])
    q = evaluate(w, gs)
    assert exact_synthesize(q * 21, gs) == w
    assert exact_synthesize(q * -3, gs) == w


def test_evaluate_checks_gateset_name():
    gs = catalog()["pauli_t"]
    w = make_word(gs, [0])
    with pytest.raises(ValueError):
        evaluate(w, catalog()["hurwitz_t"])


@pytest.mark.parametrize("name", SUPER_NAMES)
def test_fast_evaluation_matches_plain_product(name):
    gs = catalog()[name]
    eng = get_engine(gs)
    rng = random.Random(hash(name) & 0xFFF)
    for _ in range(12):
        w = random_word(gs, rng, tmax=9)
        prod = None
        for letter in w.letters:
            g = gs.T if letter == "T" else gs.C[int(letter[1:])]
            prod = g if prod is None else prod * g
        assert evaluate(w, gs) == canonicalize(prod, gs.pi, eng.order)


@pytest.mark.parametrize("name", SUPER_NAMES)
def test_descent_uniqueness(name):
    """Exactly one generator's T*c block divides at every T-count level."""
    gs = catalog()[name]
    eng = get_engine(gs)
    rng = random.Random(0xD5)
    for _ in range(8):
        w = random_word(gs, rng, tmax=8)
        x, t = eng.entry(evaluate(w, gs))
        for _ in range(t):
            cands = eng.division_candidates(eng._to_quaternion(x))
            assert len(cands) == 1
            x = eng.step(x, cands[0])


def test_word_element_bijection_small():
    """Distinct canonical elements per T-count follow |C|^2 (|C|-1)^(t-1)."""
    gs = catalog()["pauli_t"]
    eng = get_engine(gs)
    size = len(gs.C)
    tc = [gs.T * c for c in gs.C]
    layer = {canonicalize(c, gs.pi, eng.order) for c in gs.C}
    assert len(layer) == size
    seen = set(layer)
    for t in range(1, 4):
        layer = {
            canonicalize(q * step, gs.pi, eng.order)
            for q in layer
            for step in tc
        }
        layer -= seen
        assert len(layer) == size * size * (size - 1) ** (t - 1)
        for q in layer:
            assert t_count(q, gs) == t
        seen |= layer


# -- approximate synthesis: diagonal targets --------------------------------


def test_diagonal_identity_angle():
    gs = catalog()["pauli_t"]
    res = approx_diagonal(0.0, 1e-3, gs)
    assert res.achieved_distance == 0.0
    assert res.word.tcount == 0
    assert res.word.letters == (f"c{gs.identity_index}",)


def test_diagonal_eps_one_needs_no_t():
    gs = catalog()["pauli_t"]
    res = approx_diagonal(2.1, 1.0, gs)
    assert res.word.tcount == 0
    assert res.achieved_distance <= 1.0


def test_diagonal_eps_out_of_range():
    gs = catalog()["pauli_t"]
    with pytest.raises(ValueError):
        approx_diagonal(0.3, 0.0, gs)
    with pytest.raises(ValueError):
        approx_diagonal(0.3, 1.5, gs)


@pytest.mark.parametrize("name", ["pauli_t", "clifford_t", "three_t"])
def test_diagonal_verified_accuracy(name):
    gs = catalog()[name]
    rng = random.Random(99)
    for _ in range(6):
        theta = rng.uniform(-math.pi, math.pi)
        res = approx_diagonal(theta, 1e-3, gs)
        assert res.achieved_distance <= 1e-3
        d = pu2_distance(to_su2(res.element, 128), zrot(theta))
        assert d <= 1e-3
        assert evaluate(res.word, gs) == res.element


def test_diagonal_deterministic():
    gs = catalog()["clifford_t"]
    a = approx_diagonal(0.83, 1e-3, gs)
    b = approx_diagonal(0.83, 1e-3, gs)
    assert a.word == b.word
    assert a.achieved_distance == b.achieved_distance


def test_diagonal_failure_reports_best_distance():
    gs = catalog()["pauli_t"]
    opts = SynthOptions(max_tcount=1)
    with pytest.raises(SynthesisError) as exc:
        approx_diagonal(0.42, 1e-4, gs, opts)
    assert 0.0 < exc.value.best_distance <= 1.0
    assert exc.value.searched_tcounts == range(0, 2)


def all_elements_by_tcount(gs, tmax):
    """Canonical elements keyed by exact T-count, via breadth-first words."""
    eng = get_engine(gs)
    tc = [gs.T * c for c in gs.C]
    out = {0: {canonicalize(c, gs.pi, eng.order) for c in gs.C}}
    seen = set(out[0])
    for t in range(1, tmax + 1):
        nxt = {
            canonicalize(q * step, gs.pi, eng.order)
            for q in out[t - 1]
            for step in tc
        }
        out[t] = nxt - seen
        seen |= nxt
    return out


def oracle_min_tcount(gs, target, eps, elements):
    for t in sorted(elements):
        for q in elements[t]:
            if pu2_distance(to_su2(q, 64), target) <= eps:
                return t
    return None


def test_diagonal_small_scale_optimality():
    gs = catalog()["pauli_t"]
    elements = all_elements_by_tcount(gs, 6)
    rng = random.Random(2024)
    angles = [0.7] + [rng.uniform(-math.pi, math.pi) for _ in range(4)]
    for theta in angles:
        best = oracle_min_tcount(gs, zrot(theta), 0.25, elements)
        assert best is not None, "0.25 ball should be reachable by t <= 6"
        res = approx_diagonal(theta, 0.25, gs)
        assert res.word.tcount == best, theta


# -- approximate synthesis: general targets ---------------------------------


def haar_su2(rng):
    z = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def test_general_diag_target_reduces():
    gs = catalog()["pauli_t"]
    res = approx_general(zrot(0.8), 1e-3, gs)
    assert res.achieved_distance <= 1e-3
    d = pu2_distance(to_su2(res.element, 128), zrot(0.8))
    assert d <= 1e-3


def test_general_exact_hit_on_involution():
    gs = catalog()["pauli_t"]
    res = approx_general(to_su2(gs.T, 128), 1e-3, gs)
    assert res.word.tcount == 1
    assert res.achieved_distance <= 1e-6


def test_general_exact_hit_on_longer_word():
    gs = catalog()["pauli_t"]
    w = make_word(gs, [0, 2, 1, 3])
    res = approx_general(to_su2(evaluate(w, gs), 128), 1e-3, gs)
    assert res.word == w


def test_general_unsupported_sets():
    for name in ("three_t", "hybrid6", "icosa5"):
        gs = catalog()[name]
        with pytest.raises(UnsupportedGateSetError):
            approx_general(zrot(0.4), 1e-2, gs)


def test_general_rejects_bad_targets():
    gs = catalog()["pauli_t"]
    with pytest.raises(ValueError):
        approx_general(np.array([[1.0, 1.0], [1.0, 1.0]]), 1e-2, gs)
    with pytest.raises(ValueError):
        approx_general(np.array([[1.0, 0.7], [0.0, 1.0]]), 1e-2, gs)


def test_general_j_twisted_degenerate():
    gs = catalog()["pauli_t"]
    target = np.array([[0, np.exp(0.3j)], [-np.exp(-0.3j), 0]])
    res = approx_general(target, 1e-3, gs)
    assert res.achieved_distance <= 1e-3


@pytest.mark.parametrize("name", ["clifford_t", "hurwitz_t"])
def test_general_haar_targets_verified(name):
    gs = catalog()[name]
    rng = np.random.default_rng(7)
    for _ in range(5):
        u = haar_su2(rng)
        res = approx_general(u, 1e-2, gs)
        assert res.achieved_distance <= 1e-2
        assert evaluate(res.word, gs) == res.element


def test_result_word_evaluates_to_element():
    gs = catalog()["clifford_t"]
    res = approx_diagonal(1.9, 1e-3, gs)
    assert evaluate(res.word, gs) == res.element
    assert res.searched_tcounts.start == 0
    assert res.word.tcount < res.searched_tcounts.stop
