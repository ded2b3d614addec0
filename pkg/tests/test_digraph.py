"""Finite-quotient digraphs: splittings, spectra, and norm bounds."""

import dataclasses
import math

import numpy as np
import pytest

from goldengates import catalog
from goldengates.digraph import (
    CayleyDigraph,
    InvalidModulusError,
    Spectrum,
    UnsupportedModulusError,
    build_cayley,
    numeric_w_s_r,
    ramanujan_check,
    spectrum,
    split_mod_q,
    w_s_r,
)
from goldengates.quaternions import OrderId, get_order
from goldengates.synthesis import UnsupportedGateSetError

CATALOG = catalog()


def check_relations(i_img, j_img, q):
    one = np.eye(2, dtype=np.int64)
    assert not ((i_img @ i_img + one) % q).any()
    assert not ((j_img @ j_img + one) % q).any()
    assert not ((i_img @ j_img + j_img @ i_img) % q).any()


def test_reference_matrices_mod_23_satisfy_relations():
    # a known-good splitting pair; ours may differ by conjugation but
    # must satisfy the same relations
    i_img = np.array([[0, 11], [2, 0]], dtype=np.int64)
    j_img = np.array([[15, 1], [4, 8]], dtype=np.int64)
    check_relations(i_img, j_img, 23)


@pytest.mark.parametrize(
    "order_id,q",
    [
        (OrderId.LIPSCHITZ, 5),
        (OrderId.LIPSCHITZ, 11),
        (OrderId.LIPSCHITZ, 23),
        (OrderId.HURWITZ, 7),
        (OrderId.OCTA_SQRT2, 7),
        (OrderId.OCTA_SQRT2, 23),
        (OrderId.ICOSIAN, 11),
        (OrderId.ICOSIAN, 19),
    ],
)
def test_splitting_satisfies_relations(order_id, q):
    split = split_mod_q(order_id, q)
    one, i_img, j_img, k_img = split.units
    assert (one == np.eye(2, dtype=np.int64)).all()
    check_relations(i_img, j_img, q)
    assert (k_img == (i_img @ j_img) % q).all()


def test_lipschitz_mod_five_pair():
    split = split_mod_q(OrderId.LIPSCHITZ, 5)
    j_img = split.units[2]
    a, b = int(j_img[0, 0]), int(j_img[0, 1])
    assert (a * a + b * b) % 5 == 4


@pytest.mark.parametrize(
    "order_id,q,check",
    [
        (OrderId.OCTA_SQRT2, 17, lambda r: r * r % 17 == 2),
        (OrderId.ICOSIAN, 11, lambda r: (r * r - r - 1) % 11 == 0),
        (OrderId.LIPSCHITZ, 13, lambda r: r is None),
    ],
)
def test_omega_root_solves_minimal_polynomial(order_id, q, check):
    split = split_mod_q(order_id, q)
    assert check(split.omega_root)


def test_basis_image_dets_match_reduced_norms():
    for order_id, q in [
        (OrderId.HURWITZ, 5),
        (OrderId.OCTA_SQRT2, 7),
        (OrderId.ICOSIAN, 11),
    ]:
        split = split_mod_q(order_id, q)
        for bq in get_order(order_id).basis:
            img = split.image(bq)
            det = int(img[0, 0] * img[1, 1] - img[0, 1] * img[1, 0]) % q
            nr = bq.reduced_norm()
            assert det == split.scalar(nr.a, nr.b)


def test_image_is_multiplicative():
    for gs, q in [(CATALOG["pauli_t"], 13), (CATALOG["clifford_t"], 7)]:
        split = split_mod_q(gs.order_id, q)
        elems = [gs.T] + list(gs.C[:4])
        for x in elems:
            for y in elems:
                lhs = split.image(x * y)
                rhs = (split.image(x) @ split.image(y)) % q
                assert (lhs == rhs).all()


def test_unsupported_and_invalid_moduli():
    with pytest.raises(UnsupportedModulusError):
        split_mod_q(OrderId.OCTA_SQRT2, 3)  # 2 is not a square mod 3
    with pytest.raises(UnsupportedModulusError):
        split_mod_q(OrderId.ICOSIAN, 7)  # 5 is not a square mod 7
    with pytest.raises(UnsupportedModulusError):
        split_mod_q(OrderId.ICOSIAN, 5)  # ramified
    with pytest.raises(ValueError):
        split_mod_q(OrderId.LIPSCHITZ, 9)
    with pytest.raises(ValueError):
        split_mod_q(OrderId.LIPSCHITZ, 2)
    with pytest.raises(InvalidModulusError):
        build_cayley(CATALOG["pauli_t"], 3)  # q divides the T norm
    with pytest.raises(UnsupportedGateSetError):
        build_cayley(CATALOG["v_gates"], 11)


def test_cayley_y3_11_shape():
    d = build_cayley(CATALOG["pauli_t"], 11)
    assert d.size == 660
    assert d.group_tag == "PSL"
    assert d.k == 3
    assert d.adjacency.shape == (660, 3)
    assert len(set(d.vertices)) == 660
    assert d.vertices[0] == (1, 0, 0, 1)
    indeg = np.bincount(d.adjacency.reshape(-1), minlength=660)
    assert (indeg == 3).all()


def test_cayley_group_tags_and_counts():
    # 3 is not a square mod 5, so the quotient is the full PGL
    d = build_cayley(CATALOG["pauli_t"], 5)
    assert d.group_tag == "PGL"
    assert d.size == 5 * 24
    # 11 = 1 mod 5 is a square, landing in PSL
    d2 = build_cayley(CATALOG["hurwitz_t"], 5)
    assert d2.group_tag == "PSL"
    assert d2.size == 60
    assert d2.k == 11


def test_cayley_is_deterministic():
    a = build_cayley(CATALOG["pauli_t"], 11)
    b = build_cayley(CATALOG["pauli_t"], 11)
    assert a.vertices == b.vertices
    assert (a.adjacency == b.adjacency).all()


def exact_two_walk_trace(d):
    succ = [set(row) for row in d.adjacency.tolist()]
    return sum(
        1 for u, row in enumerate(d.adjacency.tolist()) for v in row if u in succ[v]
    )


def test_spectrum_trace_checks():
    for gs_name, q in [("pauli_t", 11), ("pauli_t", 5)]:
        d = build_cayley(CATALOG[gs_name], q)
        s = spectrum(d)
        n = d.size
        assert len(s.eigenvalues) == n
        total = sum(s.eigenvalues)
        assert abs(total - d.self_loops()) <= 1e-4 * n
        sq = sum(v * v for v in s.eigenvalues)
        assert abs(sq - exact_two_walk_trace(d)) <= 1e-4 * n


def test_spectrum_is_reproducible():
    d = build_cayley(CATALOG["pauli_t"], 11)
    a = spectrum(d).eigenvalues
    b = spectrum(d).eigenvalues
    assert max(abs(x - y) for x, y in zip(a, b)) <= 1e-6


def test_y3_11_eigenvalues_in_expected_classes():
    d = build_cayley(CATALOG["pauli_t"], 11)
    s = spectrum(d)
    root3 = math.sqrt(3.0)
    for v in s.eigenvalues:
        ok = (
            abs(v - 3) <= 1e-6
            or (abs(v.imag) <= 1e-6 and min(abs(v.real - 1), abs(v.real + 1)) <= 1e-6)
            or abs(v) <= root3 + 1e-6
        )
        assert ok, v
    assert not any(abs(v + 3) <= 1e-6 for v in s.eigenvalues)
    rep = ramanujan_check(s, 3)
    assert rep.is_ramanujan
    assert rep.margin >= 0.0
    assert len(rep.trivial) == 1 and abs(rep.trivial[0] - 3) <= 1e-6
    assert rep.bulk_count > 0
    assert rep.max_bulk <= root3 + 1e-6


def complete_digraph(k):
    n = k + 1
    adjacency = np.array(
        [[v for v in range(n) if v != u] for u in range(n)], dtype=np.int64
    )
    vertices = tuple((u, 0, 0, 1) for u in range(n))
    return CayleyDigraph(
        gateset="complete",
        q=0,
        k=k,
        group_tag="PGL",
        vertices=vertices,
        adjacency=adjacency,
    )


def test_complete_digraph_spectrum():
    k = 4
    s = spectrum(complete_digraph(k))
    rep = ramanujan_check(s, k)
    assert len(rep.trivial) == 1 and abs(rep.trivial[0] - k) <= 1e-9
    assert len(rep.exceptional) == k
    assert all(abs(v + 1) <= 1e-9 for v in rep.exceptional)
    assert rep.bulk_count == 0
    assert rep.is_ramanujan


def test_rewired_edge_breaks_the_bound():
    d = build_cayley(CATALOG["pauli_t"], 11)
    adj = d.adjacency.copy()
    adj[0, 0] = 0  # reroute one edge into a self-loop
    bad = dataclasses.replace(d, adjacency=adj)
    rep = ramanujan_check(spectrum(bad), 3)
    assert not rep.is_ramanujan
    assert rep.violations
    assert rep.margin < 0.0


def test_self_loop_counting_feeds_trace_check():
    d = build_cayley(CATALOG["pauli_t"], 11)
    adj = d.adjacency.copy()
    adj[0, 0] = 0
    bad = dataclasses.replace(d, adjacency=adj)
    assert bad.self_loops() == 1
    s = spectrum(bad)
    assert abs(sum(s.eigenvalues) - 1) <= 1e-4 * bad.size


def test_uniform_expansion_inequality():
    # with B = {e} and uniform mass, missing mass is at most W^2 / mu(B)
    # where W is the operator norm of the normalized adjacency on
    # mean-zero functions
    d = build_cayley(CATALOG["pauli_t"], 11)
    n = d.size
    a = d.adjacency_matrix() / d.k
    p = np.eye(n) - np.ones((n, n)) / n
    w = np.linalg.norm(p @ a @ p, ord=2)
    covered = len(set(d.adjacency[0].tolist()))
    missing = 1.0 - covered / n
    assert missing <= w * w * n + 1e-12


def test_spectrum_size_cap():
    n = 7015
    adjacency = np.zeros((n, 1), dtype=np.int64)
    vertices = tuple((u, 0, 0, 1) for u in range(n))
    big = CayleyDigraph(
        gateset="cap",
        q=0,
        k=1,
        group_tag="PGL",
        vertices=vertices,
        adjacency=adjacency,
    )
    with pytest.raises(ValueError):
        spectrum(big)


def test_ramanujan_check_tolerance_comes_from_spectrum():
    s = Spectrum(eigenvalues=(complex(3.0), complex(1.8)), tolerance=0.2)
    rep = ramanujan_check(s, 3)
    assert rep.tolerance == 0.2
    assert rep.is_ramanujan  # 1.8 <= sqrt(3) + 0.2


@pytest.mark.parametrize("k", [2, 3, 4, 7, 11, 23, 59])
def test_w_s_r_matches_numeric(k):
    for r in range(1, 11):
        closed = w_s_r(k, r)
        numeric = numeric_w_s_r(k, r, grid=2048)
        assert abs(closed - numeric) < 1e-6


@pytest.mark.parametrize("k", [2, 3, 4, 7, 11, 23, 59])
def test_w_s_r_at_one_step_is_exactly_one(k):
    assert w_s_r(k, 1) == 1.0


def test_w_s_r_three_two_value():
    assert abs(w_s_r(3, 2) - 0.8940752566770661) < 1e-12
    assert abs(w_s_r(3, 2) - numeric_w_s_r(3, 2, grid=10**4)) < 1e-4


def test_w_s_r_decay_rate_is_bounded():
    ratios = [w_s_r(3, r) * 3.0 ** (r / 2.0) / r for r in range(1, 51)]
    assert max(ratios) <= 2.0
    assert min(ratios) >= 1.0


def test_w_s_r_rejects_bad_arguments():
    with pytest.raises(ValueError):
        w_s_r(1, 3)
    with pytest.raises(ValueError):
        w_s_r(3, 0)
    with pytest.raises(ValueError):
        numeric_w_s_r(3, 2, grid=4)


@pytest.mark.slow
def test_y3_23_spectrum_matches_figure():
    d = build_cayley(CATALOG["pauli_t"], 23)
    assert d.size == 6072
    assert d.group_tag == "PSL"  # 3 = 16^2 mod 23 is a residue
    s = spectrum(d)
    root3 = math.sqrt(3.0)
    for v in s.eigenvalues:
        ok = (
            abs(v - 3) <= 1e-6
            or (abs(v.imag) <= 1e-6 and min(abs(v.real - 1), abs(v.real + 1)) <= 1e-6)
            or abs(v) <= root3 + 1e-6
        )
        assert ok, v
    assert not any(abs(v + 3) <= 1e-6 for v in s.eigenvalues)
    rep = ramanujan_check(s, 3)
    assert rep.is_ramanujan
    # the off-axis bulk hugs the sqrt(3) circle seen in the plot
    bulk = [
        v
        for v in s.eigenvalues
        if abs(v.imag) > 1e-6 and abs(v - 3) > 1e-6
    ]
    radii = [abs(v) for v in bulk]
    assert max(radii) <= root3 + 1e-6
    assert max(radii) >= root3 - 0.05
