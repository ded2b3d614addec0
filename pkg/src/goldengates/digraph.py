"""Finite quotients of the gate group and their Cayley digraphs.

Reducing the quaternion order modulo a split rational prime q gives
2x2 matrices over F_q; the involution-times-generator products then
act on PGL2(F_q) (or its PSL2 subgroup, depending on whether the
generator determinants are squares) as a k-out-regular digraph.  This
module builds those digraphs, computes their full adjacency spectra,
certifies the Ramanujan bound, and checks the closed-form operator
norm of the r-step generator sum against direct numeric maximization.
"""

from __future__ import annotations

import dataclasses
import math
from collections import deque
from typing import Optional, Union

import numpy as np

from ._descent import UnsupportedGateSetError
from .gatesets import GateKind, GateSet
from .quaternions import Order, OrderId, Quaternion, get_order
from .rings import INT, PHI, RingId, SQRT2

__all__ = [
    "CayleyDigraph",
    "InvalidModulusError",
    "ModQSplitting",
    "RamanujanReport",
    "Spectrum",
    "UnsupportedModulusError",
    "build_cayley",
    "numeric_w_s_r",
    "ramanujan_check",
    "spectrum",
    "split_mod_q",
    "w_s_r",
]

MAX_SPECTRUM_SIZE = 7000


class UnsupportedModulusError(ValueError):
    """The residue field does not split the coordinate ring."""


class InvalidModulusError(ValueError):
    """A generator image is singular modulo the chosen prime."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _mat(rows) -> np.ndarray:
    return np.array(rows, dtype=np.int64)


@dataclasses.dataclass(frozen=True, eq=False)
class ModQSplitting:
    """2x2 matrix images of the quaternion units and one order basis."""

    q: int
    order_id: OrderId
    ring: RingId
    omega_root: Optional[int]
    units: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    basis: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]

    def scalar(self, a: int, b: int) -> int:
        """Image of a + b*w in F_q."""
        if self.ring is INT:
            return a % self.q
        return (a + b * self.omega_root) % self.q

    def image(self, qtn: Quaternion) -> np.ndarray:
        """Image of a quaternion of the order, as a 2x2 matrix mod q."""
        inv2 = pow(2, self.q - 2, self.q)
        total = np.zeros((2, 2), dtype=np.int64)
        for coeff, unit in zip(qtn.doubled(), self.units):
            total += self.scalar(coeff.a, coeff.b) * unit
        return (total * inv2) % self.q


def split_mod_q(order: Union[Order, OrderId], q: int) -> ModQSplitting:
    """Split the order over F_q, sending i, j to explicit matrices.

    The pair (a, b) with a^2 + b^2 = -1 is found by search, and w goes
    to the smallest root of its minimal polynomial mod q, so the
    splitting is deterministic.  Primes where the ring stays inert or
    ramifies are rejected.
    """
    if isinstance(order, OrderId):
        order = get_order(order)
    if q == 2 or not _is_prime(q):
        raise ValueError(f"modulus {q} is not an odd prime")

    ring = order.ring
    root: Optional[int] = None
    if ring is not INT:
        if ring is PHI and q == 5:
            raise UnsupportedModulusError("5 ramifies in the coordinate ring")
        poly = (lambda x: x * x - 2) if ring is SQRT2 else (lambda x: x * x - x - 1)
        root = next((x for x in range(q) if poly(x) % q == 0), None)
        if root is None:
            raise UnsupportedModulusError(
                f"the coordinate ring is inert mod {q}; only split primes work"
            )

    # a^2 + b^2 = -1 always has solutions mod an odd prime; take the
    # lexicographically first
    squares: dict[int, int] = {}
    for x in range(q):
        squares.setdefault(x * x % q, x)
    found = None
    for a in range(q):
        b = squares.get((-1 - a * a) % q)
        if b is not None:
            found = (a, b)
            break
    assert found is not None
    a, b = found

    i_img = _mat([[0, -1], [1, 0]]) % q
    j_img = _mat([[a, b], [b, -a]]) % q
    k_img = (i_img @ j_img) % q
    one = _mat([[1, 0], [0, 1]])
    if ((i_img @ i_img + one) % q).any() or ((j_img @ j_img + one) % q).any():
        raise AssertionError("splitting images fail the defining relations")
    if ((i_img @ j_img + j_img @ i_img) % q).any():
        raise AssertionError("splitting images fail anticommutation")

    split = ModQSplitting(
        q=q,
        order_id=order.id,
        ring=ring,
        omega_root=root,
        units=(one, i_img, j_img, k_img),
        basis=(one, one, one, one),
    )
    basis_imgs = tuple(split.image(bq) for bq in order.basis)
    object.__setattr__(split, "basis", basis_imgs)
    return split


def _canon_flat(m: np.ndarray, q: int) -> tuple[int, int, int, int]:
    """Scale so the first nonzero row-major entry is 1; PGL2 key."""
    flat = (int(m[0, 0]), int(m[0, 1]), int(m[1, 0]), int(m[1, 1]))
    for v in flat:
        if v:
            inv = pow(v, q - 2, q)
            return (
                flat[0] * inv % q,
                flat[1] * inv % q,
                flat[2] * inv % q,
                flat[3] * inv % q,
            )
    raise ValueError("zero matrix has no projective class")


@dataclasses.dataclass(frozen=True, eq=False)
class CayleyDigraph:
    """Cayley digraph of the mod-q quotient over S = {T c, c != 1}."""

    gateset: str
    q: int
    k: int
    group_tag: str
    vertices: tuple[tuple[int, int, int, int], ...]
    adjacency: np.ndarray  # shape (n, k), successor indices

    @property
    def size(self) -> int:
        return len(self.vertices)

    def self_loops(self) -> int:
        return int((self.adjacency == np.arange(self.size)[:, None]).sum())

    def adjacency_matrix(self) -> np.ndarray:
        n = self.size
        a = np.zeros((n, n), dtype=np.float64)
        src = np.repeat(np.arange(n), self.k)
        np.add.at(a, (src, self.adjacency.reshape(-1)), 1.0)
        return a


def build_cayley(gs: GateSet, q: int) -> CayleyDigraph:
    """Breadth-first closure of the generator images from the identity.

    The vertex order is the BFS discovery order, so the construction
    is deterministic; edge slot g of a vertex is its product with the
    g-th generator image.
    """
    if gs.kind is not GateKind.SUPER:
        raise UnsupportedGateSetError(f"{gs.name} has no involution generators")
    split = split_mod_q(gs.order_id, q)

    gens = []
    dets = []
    for idx, c in enumerate(gs.C):
        if idx == gs.identity_index:
            continue
        img = split.image(gs.T * c)
        det = int(img[0, 0] * img[1, 1] - img[0, 1] * img[1, 0]) % q
        if det == 0:
            raise InvalidModulusError(
                f"generator image is singular mod {q}; pick a prime away "
                "from the gate set's norms"
            )
        gens.append(img)
        dets.append(det)

    tag = "PSL" if all(pow(d, (q - 1) // 2, q) == 1 for d in dets) else "PGL"

    start = _canon_flat(np.eye(2, dtype=np.int64), q)
    index = {start: 0}
    verts = [start]
    rows: list[list[int]] = []
    queue = deque([start])
    while queue:
        flat = queue.popleft()
        m = _mat([[flat[0], flat[1]], [flat[2], flat[3]]])
        row = []
        for g in gens:
            key = _canon_flat(m @ g % q, q)
            nxt = index.get(key)
            if nxt is None:
                nxt = len(verts)
                index[key] = nxt
                verts.append(key)
                queue.append(key)
            row.append(nxt)
        rows.append(row)

    n = len(verts)
    expected = q * (q * q - 1) // (2 if tag == "PSL" else 1)
    if n != expected:
        raise ArithmeticError(
            f"quotient has {n} elements, expected {expected} for {tag}"
        )
    adjacency = np.array(rows, dtype=np.int64)
    indeg = np.bincount(adjacency.reshape(-1), minlength=n)
    if not (indeg == len(gens)).all():
        raise ArithmeticError("digraph is not in-regular")
    adjacency.flags.writeable = False
    return CayleyDigraph(
        gateset=gs.name,
        q=q,
        k=len(gens),
        group_tag=tag,
        vertices=tuple(verts),
        adjacency=adjacency,
    )


@dataclasses.dataclass(frozen=True)
class Spectrum:
    """All adjacency eigenvalues, sorted by real then imaginary part."""

    eigenvalues: tuple[complex, ...]
    tolerance: float = 1e-6


def spectrum(d: CayleyDigraph) -> Spectrum:
    """Dense nonsymmetric eigendecomposition of the adjacency matrix."""
    n = d.size
    if n > MAX_SPECTRUM_SIZE:
        raise ValueError(f"{n} vertices exceeds the {MAX_SPECTRUM_SIZE} cap")
    a = d.adjacency_matrix()
    try:
        vals = np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise ArithmeticError(
            "eigenvalue iteration did not converge; the dense solver "
            "returns no partial results"
        ) from exc
    vals = np.sort_complex(vals)
    out = Spectrum(eigenvalues=tuple(complex(v) for v in vals))
    total = sum(out.eigenvalues)
    if abs(total - d.self_loops()) > out.tolerance * max(1, n):
        raise ArithmeticError("eigenvalue sum drifted away from the trace")
    return out


@dataclasses.dataclass(frozen=True)
class RamanujanReport:
    """Partition of a digraph spectrum against the sqrt(k) bound."""

    k: int
    bound: float
    tolerance: float
    trivial: tuple[complex, ...]
    exceptional: tuple[complex, ...]
    bulk_count: int
    max_bulk: float
    violations: tuple[complex, ...]

    @property
    def margin(self) -> float:
        """Slack left under the tolerance-padded bound; >= 0 means pass."""
        return self.bound + self.tolerance - self.max_bulk

    @property
    def is_ramanujan(self) -> bool:
        return not self.violations


def ramanujan_check(s: Spectrum, k: int) -> RamanujanReport:
    """Classify eigenvalues as trivial, exceptional real, or bulk.

    Trivial means +-k; exceptional means the real points +-1 that the
    one-dimensional pieces of the quotient contribute; everything else
    must sit inside modulus sqrt(k) for the digraph to be Ramanujan.
    """
    tol = s.tolerance
    bound = math.sqrt(k)
    trivial = []
    exceptional = []
    bulk = []
    for v in s.eigenvalues:
        if min(abs(v - k), abs(v + k)) <= tol:
            trivial.append(v)
        elif abs(v.imag) <= tol and min(abs(v.real - 1), abs(v.real + 1)) <= tol:
            exceptional.append(v)
        else:
            bulk.append(v)
    max_bulk = max((abs(v) for v in bulk), default=0.0)
    violations = tuple(v for v in bulk if abs(v) > bound + tol)
    return RamanujanReport(
        k=k,
        bound=bound,
        tolerance=tol,
        trivial=tuple(trivial),
        exceptional=tuple(exceptional),
        bulk_count=len(bulk),
        max_bulk=max_bulk,
        violations=violations,
    )


def w_s_r(k: int, r: int) -> float:
    """Closed-form operator norm of the r-step generator average.

    At r = 1 the discriminant collapses to (k+1)^2 and the value is
    exactly 1; for larger r it decays like r / k^(r/2).
    """
    if k < 2 or r < 1:
        raise ValueError("need k >= 2 and r >= 1")
    disc = r * r * (k - 1) ** 2 + 4 * k
    num = (k - 1) * r * math.sqrt(disc) + r * r * (k - 1) ** 2 + 2 * k
    return math.sqrt(num / (2.0 * float(k) ** (r + 1)))


def numeric_w_s_r(k: int, r: int, grid: int = 4096) -> float:
    """Grid maximization oracle for the closed form above.

    Sweeps unit-modulus s and takes the largest spectral norm of the
    r-th power of [[s/sqrt(k), 0], [(k-1)s/k, 1/(s sqrt(k))]].
    """
    if k < 2 or r < 1:
        raise ValueError("need k >= 2 and r >= 1")
    if grid < 8:
        raise ValueError("grid too coarse")
    theta = np.linspace(0.0, 2.0 * math.pi, grid, endpoint=False)
    s = np.exp(1j * theta)
    rk = math.sqrt(k)
    m = np.zeros((grid, 2, 2), dtype=np.complex128)
    m[:, 0, 0] = s / rk
    m[:, 1, 0] = (k - 1) * s / k
    m[:, 1, 1] = 1.0 / (s * rk)
    p = m.copy()
    for _ in range(r - 1):
        p = p @ m
    frob = (np.abs(p) ** 2).sum(axis=(1, 2))
    det = np.abs(p[:, 0, 0] * p[:, 1, 1] - p[:, 0, 1] * p[:, 1, 0]) ** 2
    sing = np.sqrt((frob + np.sqrt(np.maximum(frob * frob - 4.0 * det, 0.0))) / 2.0)
    return float(sing.max())
