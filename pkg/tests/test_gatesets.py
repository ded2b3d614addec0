"""Catalog integrity, validation axioms, and published matrix forms.

Matrix fixtures are integer or golden-ratio matrices quoted from the
construction tables; each is a scalar multiple of a unitary, so tests
compare against the catalog in PU(2): normalize by sqrt(|det|), then
align the global phase and require entrywise agreement to 1e-10.
"""

import math

import numpy as np
import pytest

from goldengates.gatesets import (
    GateKind,
    GateSet,
    Word,
    catalog,
    derive_golden_set,
    elements_of_norm,
    make_word,
    nonexamples,
    validate,
)
from goldengates.quaternions import (
    OrderId,
    Quaternion,
    canonicalize,
    get_order,
    to_su2,
)
from goldengates.rings import INT, PHI, QuadInt, SQRT2

F = (1 + math.sqrt(5)) / 2  # golden ratio, float


def as_unitary(rows):
    m = np.array(rows, dtype=complex)
    return m / math.sqrt(abs(np.linalg.det(m)))


def phase_aligned(a, b, tol=1e-10):
    """True when a = (phase) * b entrywise within tol."""
    tr = np.trace(a.conj().T @ b)
    if abs(tr) < 1e-6:
        return False
    return bool(np.max(np.abs(a - b * (abs(tr) / tr))) <= tol)


def match_in_c(gs, rows):
    """Index of the unique C element representing the given matrix."""
    target = as_unitary(rows)
    hits = [
        i for i, c in enumerate(gs.C) if phase_aligned(to_su2(c), target)
    ]
    assert len(hits) == 1, f"{gs.name}: expected one match, got {hits}"
    return hits[0]


def closure_size(gs, seeds):
    """Number of PU(2) classes generated by the given C elements."""
    order = get_order(gs.order_id)

    def canon(q):
        return canonicalize(q, gs.pi, order)

    gens = [canon(g) for g in seeds]
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        fresh = []
        for f in frontier:
            for g in gens:
                h = canon(f * g)
                if h not in seen:
                    seen.add(h)
                    fresh.append(h)
        frontier = fresh
    return len(seen)


# -- catalog shape ----------------------------------------------------------


EXPECTED = {
    "pauli_t": (GateKind.SUPER, INT, 3, 4),
    "hurwitz_t": (GateKind.SUPER, INT, 11, 12),
    "clifford_t": (GateKind.SUPER, SQRT2, 23, 24),
    "octa8": (GateKind.SUPER, SQRT2, 7, 8),
    "three_t": (GateKind.SUPER, SQRT2, 2, 3),
    "hybrid6": (GateKind.SUPER, INT, 5, 6),
    "icosa60": (GateKind.SUPER, PHI, 59, 60),
    "icosa12p": (GateKind.SUPER, PHI, 11, 12),
    "icosa5": (GateKind.SUPER, PHI, 4, 5),
    "v_gates": (GateKind.GOLDEN, INT, 5, 6),
    "p3_involutions": (GateKind.GOLDEN, INT, 3, 4),
}


def test_catalog_inventory():
    cat = catalog()
    assert set(cat) == set(EXPECTED)
    for name, (kind, ring, k, count) in EXPECTED.items():
        gs = cat[name]
        assert gs.kind is kind and gs.ring is ring and gs.k == k
        gates = gs.C if kind is GateKind.SUPER else gs.generators
        assert len(gates) == count, name


def test_catalog_is_immutable():
    cat = catalog()
    with pytest.raises(TypeError):
        cat["pauli_t"] = None


def test_gens_matrices_are_unitary():
    for gs in list(catalog().values()) + list(nonexamples().values()):
        mats = gs.gens_matrices
        expected = len(gs.C) + 1 if gs.kind is GateKind.SUPER else len(gs.generators)
        assert len(mats) == expected
        for m in mats:
            assert np.max(np.abs(m.conj().T @ m - np.eye(2))) < 1e-12


def test_identity_index():
    for gs in catalog().values():
        if gs.kind is not GateKind.SUPER:
            continue
        c = gs.C[gs.identity_index]
        assert not any(c.coords[1:])


# -- published matrices -----------------------------------------------------


T_MATRICES = {
    "pauli_t": [[1, 1 - 1j], [1 + 1j, -1]],
    "hurwitz_t": [[3, 1 - 1j], [1 + 1j, -3]],
    "clifford_t": [
        [-1 - math.sqrt(2), 2 - math.sqrt(2) + 1j],
        [2 - math.sqrt(2) - 1j, 1 + math.sqrt(2)],
    ],
    "octa8": [
        [math.sqrt(2) - 1, 1 - math.sqrt(2) * 1j],
        [1 + math.sqrt(2) * 1j, 1 - math.sqrt(2)],
    ],
    "three_t": [[0, math.sqrt(2)], [1 + 1j, 0]],
    "hybrid6": [[0, 2 - 1j], [2 + 1j, 0]],
    "icosa60": [[2 + F, 1 - 1j], [1 + 1j, -2 - F]],
    "icosa12p": [[F - 1, 1 - 1j], [1 + 1j, 1 - F]],
    "icosa5": [[0, 1], [1j, 0]],
}

C_GENERATORS = {
    "pauli_t": [[[1j, 0], [0, -1j]], [[0, 1], [-1, 0]], [[0, 1j], [1j, 0]]],
    "hurwitz_t": [[[1j, 0], [0, -1j]], [[1, 1], [1j, -1j]]],
    "clifford_t": [[[1, 0], [0, 1j]], [[1, 1], [1j, -1j]]],
    "octa8": [[[0, 1], [1, 0]], [[1, 0], [0, 1j]]],
    "three_t": [[[1, 1], [1j, -1j]]],
    "hybrid6": [[[1, 1], [1j, -1j]], [[0, 1j], [1, 0]]],
    "icosa60": [[[1, 1], [1j, -1j]], [[1, F - 1j / F], [F + 1j / F, -1]]],
    "icosa12p": [[[1, 1], [1j, -1j]], [[1, F + 1j / F], [F - 1j / F, -1]]],
    "icosa5": [[[1 + F + 1j, F], [-F, 1 + F - 1j]]],
}


@pytest.mark.parametrize("name", sorted(T_MATRICES))
def test_involution_matrix(name):
    gs = catalog()[name]
    assert phase_aligned(to_su2(gs.T), as_unitary(T_MATRICES[name]))


@pytest.mark.parametrize("name", sorted(C_GENERATORS))
def test_c_generators_generate(name):
    gs = catalog()[name]
    seeds = [gs.C[match_in_c(gs, rows)] for rows in C_GENERATORS[name]]
    assert closure_size(gs, seeds) == len(gs.C)


def test_v_gate_matrices():
    gs = catalog()["v_gates"]
    mats = [to_su2(g) for g in gs.generators]
    for rows in (
        [[1 + 2j, 0], [0, 1 - 2j]],
        [[1, 2], [-2, 1]],
        [[1, 2j], [2j, 1]],
    ):
        target = as_unitary(rows)
        assert sum(phase_aligned(m, target) for m in mats) == 1


# -- validation -------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_catalog_validates(name):
    report = validate(catalog()[name])
    assert report.ok, str(report)


@pytest.mark.parametrize("name", ["sym3_ramified5", "dih5_inert3"])
def test_nonexamples_fail_only_transitivity(name):
    report = validate(nonexamples()[name])
    assert not report.ok
    failed = {c.name for c in report.failed()}
    assert "transitivity" in failed
    assert failed <= {"transitivity", "edge_cover"}


def test_validation_report_str():
    report = validate(catalog()["pauli_t"])
    text = str(report)
    assert "pauli_t" in text and "transitivity" in text


# -- norm spheres -----------------------------------------------------------


# counts are (k+1) * |unit group|, confirmed by four-square counts
# where the order is Lipschitz or Hurwitz
SPHERE_COUNTS = {
    "pauli_t": 32,
    "hurwitz_t": 288,
    "clifford_t": 1152,
    "octa8": 384,
    "three_t": 144,
    "hybrid6": 48,
    "icosa12p": 1440,
    "icosa5": 600,
    "sym3_ramified5": 720,
    "dih5_inert3": 1200,
}


@pytest.mark.parametrize("name", sorted(SPHERE_COUNTS))
def test_norm_sphere_counts(name):
    gs = {**catalog(), **nonexamples()}[name]
    order = get_order(gs.order_id)
    n0 = canonicalize(gs.T, gs.pi, order).reduced_norm()
    elems = elements_of_norm(order, n0)
    assert len(elems) == SPHERE_COUNTS[name]
    assert len(elems) == (gs.k + 1) * len(order.units)


def test_norm_sphere_icosa60():
    gs = catalog()["icosa60"]
    order = get_order(gs.order_id)
    n0 = canonicalize(gs.T, gs.pi, order).reduced_norm()
    assert len(elements_of_norm(order, n0)) == 7200


# -- derived golden sets ----------------------------------------------------


def test_pauli_derives_p3():
    derived = derive_golden_set(catalog()["pauli_t"])
    assert derived.kind is GateKind.GOLDEN
    assert derived.generators == catalog()["p3_involutions"].generators
    assert validate(derived).ok


def test_three_t_derives_involutions():
    derived = derive_golden_set(catalog()["three_t"])
    assert len(derived.generators) == 3
    for g in derived.generators:
        assert not any((g * g).coords[1:])
    assert validate(derived).ok


def test_derive_rejects_golden_input():
    with pytest.raises(ValueError):
        derive_golden_set(catalog()["v_gates"])


# -- free products and trees ------------------------------------------------


def reduced_word_counts(gs, depth):
    """Class counts per word length; the group acts on a tree iff these
    follow the regular-tree growth pattern."""
    order = get_order(gs.order_id)

    def canon(q):
        return canonicalize(q, gs.pi, order)

    gens = [canon(g) for g in gs.generators]
    levels = []
    one = canon(Quaternion.scalar(QuadInt(1, 0, gs.ring)))
    known = {one}
    frontier = [one]
    for _ in range(depth):
        nxt = []
        for f in frontier:
            for g in gens:
                h = canon(f * g)
                if h not in known:
                    known.add(h)
                    nxt.append(h)
        levels.append(len(nxt))
        frontier = nxt
    return levels


def test_p3_word_growth():
    gs = catalog()["p3_involutions"]
    assert reduced_word_counts(gs, 6) == [4 * 3 ** i for i in range(6)]


def test_v_gates_word_growth():
    gs = catalog()["v_gates"]
    assert reduced_word_counts(gs, 4) == [6 * 5 ** i for i in range(4)]


# -- words ------------------------------------------------------------------


def test_make_word_and_json():
    gs = catalog()["pauli_t"]
    idx = [i for i in range(4) if i != gs.identity_index]
    word = make_word(gs, [idx[0], idx[1], idx[0]])
    assert word.tcount == 2
    assert word.letters[1::2] == ("T", "T")
    again = Word.from_json(word.to_json())
    assert again == word


def test_word_rejects_bad_shapes():
    with pytest.raises(ValueError):
        Word("pauli_t", ("c1", "T"), 1)
    with pytest.raises(ValueError):
        Word("pauli_t", ("c1", "c2", "c3"), 1)
    with pytest.raises(ValueError):
        Word("pauli_t", ("c1", "T", "c2"), 2)
    with pytest.raises(ValueError):
        Word("pauli_t", ("T",), 1)


def test_make_word_rejects_interior_identity():
    gs = catalog()["pauli_t"]
    other = (gs.identity_index + 1) % 4
    with pytest.raises(ValueError):
        make_word(gs, [other, gs.identity_index, other])
    # ends may be the identity
    make_word(gs, [gs.identity_index, other, gs.identity_index])


def test_gateset_constructor_guards():
    qi = Quaternion.from_ints
    with pytest.raises(ValueError):
        GateSet(
            name="bad",
            kind=GateKind.SUPER,
            ring=INT,
            order_id=OrderId.LIPSCHITZ,
            pi=QuadInt(3, 0, INT),
            k=5,
            C=(qi(INT, 1, 0, 0, 0),),
            T=qi(INT, 0, 1, 1, 1),
        )
    with pytest.raises(ValueError):
        GateSet(
            name="bad",
            kind=GateKind.GOLDEN,
            ring=INT,
            order_id=OrderId.LIPSCHITZ,
            pi=QuadInt(3, 0, INT),
            k=3,
            T=qi(INT, 0, 1, 1, 1),
            generators=(qi(INT, 0, 1, 1, 1),),
        )
