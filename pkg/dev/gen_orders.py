"""Dev-time generation of unit-group literals and order bases.

Outputs Python literal blocks to paste into goldengates.quaternions /
goldengates.gatesets.  Quaternions are handled in DOUBLED coordinates:
a quaternion q is stored as the integer-coordinate vector of 2q, so
half-integer and sqrt2-denominator elements stay exact.
"""

import sys
from itertools import product

sys.path.insert(0, "/root/pkg/src")

from goldengates.rings import INT, PHI, SQRT2, QuadInt, euclidean_gcd

def qi(ring, a, b=0):
    return QuadInt(a, b, ring)

def qmul(p, q):
    p0, p1, p2, p3 = p
    q0, q1, q2, q3 = q
    return (
        p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
        p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
        p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
        p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0,
    )

def dmul(p, q):
    """Product in doubled coords: (2p)(2q)/2 = 2(pq)."""
    r = qmul(p, q)
    out = []
    for c in r:
        h = c.exact_div(2)
        assert h is not None, ("product left the half-integer lattice", p, q, r)
        out.append(h)
    return tuple(out)

def dconj(p):
    return (p[0], -p[1], -p[2], -p[3])

def dnr(p):
    """Reduced norm of p given doubled coords (norm of 2p is 4 nr(p))."""
    s = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]
    q = s.exact_div(4)
    assert q is not None
    return q

def key(p):
    return tuple((c.a, c.b) for c in p)

def sign_norm(p):
    """Flip sign so the first nonzero coordinate has positive sigma1."""
    for c in p:
        s = c.sign_sigma1()
        if s:
            return p if s > 0 else tuple(-x for x in p)
    return p

def bfs_units(gens):
    """Closure of gens (reduced norm 1, doubled coords) under multiplication."""
    seen = {}
    frontier = [tuple(g) for g in gens]
    neg = tuple(-x for x in frontier[0])
    for g in frontier:
        seen[key(g)] = g
    while frontier:
        nxt = []
        for a in frontier:
            for g in list(seen.values()):
                for p in (dmul(a, g), dmul(g, a)):
                    k = key(p)
                    if k not in seen:
                        seen[k] = p
                        nxt.append(p)
        frontier = nxt
        if len(seen) > 1000:
            raise RuntimeError("unit closure exploded")
    return list(seen.values())

def bfs_classes(gens, ring):
    """Closure under multiplication modulo scalars (projective classes)."""

    def class_key(p):
        # remove O_K content, then sign-normalize
        g = None
        for c in p:
            if c:
                g = c if g is None else euclidean_gcd(g, c)
        assert g is not None
        q = tuple(c.exact_div(g) for c in p)
        assert all(c is not None for c in q)
        return key(sign_norm(q))

    id_el = (qi(ring, 2), qi(ring, 0), qi(ring, 0), qi(ring, 0))
    seen = {class_key(id_el): id_el}
    frontier = list(gens)
    for g in frontier:
        seen.setdefault(class_key(g), g)
    while frontier:
        nxt = []
        for a in frontier:
            for g in list(seen.values()):
                p = dmul(a, g)
                k = class_key(p)
                if k not in seen:
                    seen[k] = p
                    nxt.append(p)
        frontier = nxt
        if len(seen) > 2000:
            raise RuntimeError("class closure exploded")
    return list(seen.values())


def hnf_basis(rows, ring):
    """Z[w]-row HNF of a full-rank stack of O_K^4 vectors (doubled coords).

    Returns 4 triangular basis rows.  Euclidean size reduction with the
    ring's divmod; correctness is certified afterwards by membership of
    every input row.
    """
    rows = [list(r) for r in rows]
    basis = []
    for col in range(4):
        # gather all rows with leading nonzero at col
        pool = [r for r in rows if any(r[c] for c in range(col, 4))]
        rows = pool
        while True:
            live = [r for r in rows if r[col]]
            if not live:
                raise RuntimeError("rank defect")
            live.sort(key=lambda r: abs(r[col].norm()))
            piv = live[0]
            done = True
            for r in rows:
                if r is piv or not r[col]:
                    continue
                q, _ = r[col].divmod(piv[col])
                for c in range(4):
                    r[c] = r[c] - q * piv[c]
                if r[col]:
                    done = False
            if done:
                break
        basis.append(tuple(piv))
        rows = [r for r in rows if r is not piv and any(r[c] for c in range(4))]
        for r in rows:
            assert not any(r[c] for c in range(col)), "lost triangularity"
        rows = [r for r in rows if any(r[c] for c in range(col + 1, 4))] + [
            r for r in rows if r[col] and not any(r[c] for c in range(col + 1, 4))
        ]
    return basis


def det4(m):
    """Exact 4x4 determinant over QuadInt (cofactor expansion)."""

    def det3(a):
        return (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )

    total = None
    for col in range(4):
        minor = [[m[r][c] for c in range(4) if c != col] for r in range(1, 4)]
        term = m[0][col] * det3(minor)
        if col % 2:
            term = -term
        total = term if total is None else total + term
    return total


def solve4(basis, v, ring):
    """Exact coefficients c with v = sum c_i basis_i, or None (Cramer)."""
    m = [[basis[i][c] for i in range(4)] for c in range(4)]  # columns = basis
    d = det4(m)
    assert d, "basis is singular"
    coeffs = []
    for i in range(4):
        mi = [row[:] for row in m]
        for c in range(4):
            mi[c][i] = v[c]
        num = det4(mi)
        c_ = num.exact_div(d)
        if c_ is None:
            return None
        coeffs.append(c_)
    return coeffs


def in_span(v, basis, ring):
    return solve4(basis, list(v), ring)


def fmt(p):
    return "(" + ", ".join(f"({c.a}, {c.b})" for c in p) + ")"


def dump(name, plist):
    plist = sorted(plist, key=key)
    print(f"{name} = (  # {len(plist)} entries, doubled coordinates")
    for p in plist:
        print(f"    {fmt(p)},")
    print(")")
    return plist


def main() -> None:
    # ---- Hurwitz units (ring Z) ----
    one = lambda ring: qi(ring, 1)
    zero = lambda ring: qi(ring, 0)

    r = INT
    i_el = (qi(r, 0), qi(r, 2), qi(r, 0), qi(r, 0))
    om = (qi(r, 1), qi(r, 1), qi(r, 1), qi(r, 1))
    hur = bfs_units([i_el, om])
    assert len(hur) == 24, len(hur)
    print(f"# hurwitz: {len(hur)} units")

    lip = bfs_units([i_el, (qi(r, 0), qi(r, 0), qi(r, 2), qi(r, 0))])
    assert len(lip) == 8, len(lip)
    print(f"# lipschitz: {len(lip)} units")

    # ---- octahedral sqrt2 order units ----
    r = SQRT2
    s_el = (qi(r, 0, 1), qi(r, 0, 1), qi(r, 0), qi(r, 0))  # sqrt2*(1+i)/2
    om2 = (qi(r, 1), qi(r, 1), qi(r, 1), qi(r, 1))
    octa = bfs_units([s_el, om2])
    assert len(octa) == 48, len(octa)
    print(f"# octa: {len(octa)} units")

    # ---- icosian units ----
    r = PHI
    om5 = (qi(r, 1), qi(r, 1), qi(r, 1), qi(r, 1))
    iota = (qi(r, 0), qi(r, 1), qi(r, -1, 1), qi(r, 0, 1))
    ico = bfs_units([om5, iota])
    assert len(ico) == 120, len(ico)
    print(f"# icosian: {len(ico)} units")

    # check the advertised coordinate shapes: 8 + 16 + 96
    shapes = {}
    for p in ico:
        n_int = sum(1 for c in p if c.b == 0 and c.a % 2 == 0)
        shapes[n_int] = shapes.get(n_int, 0) + 1
    print("# icosian coordinate shapes (count of even-integer doubled coords):", shapes)

    # ---- icosian Z[phi]-basis via HNF ----
    basis = hnf_basis([list(p) for p in ico], PHI)
    print("# icosian HNF basis rows (doubled):")
    for b in basis:
        print("#   ", fmt(b))
    for p in ico:
        assert in_span(p, basis, PHI) is not None, ("unit outside span", p)
    # closure of the basis under multiplication
    for a in basis:
        for b2 in basis:
            assert in_span(dmul(a, b2), basis, PHI) is not None, "basis not closed"
    # catalog T elements must lie in the order
    t60 = (qi(r, 0), qi(r, 4, 2), qi(r, 2), qi(r, 2))  # doubled (2+phi)i+j+k
    t12 = (qi(r, 0), qi(r, -2, 2), qi(r, 2), qi(r, 2))  # doubled (phi-1)i+j+k
    t5 = (qi(r, 0), qi(r, 0), qi(r, 2), qi(r, 2))  # doubled j+k
    tsym3 = (qi(r, 0), qi(r, 2), qi(r, 0, 2), qi(r, 0))  # doubled i + phi j
    for t, nm in ((t60, "t60"), (t12, "t12"), (t5, "t5"), (tsym3, "tsym3")):
        assert in_span(t, basis, PHI) is not None, nm
        print(f"#   nr({nm}) = {dnr(t)}")
    # scalar phi
    assert in_span((qi(r, 0, 2), qi(r, 0), qi(r, 0), qi(r, 0)), basis, PHI)

    # octa order: verify the displayed basis spans the BFS-closure lattice
    ob = [
        (qi(SQRT2, 2), qi(SQRT2, 0), qi(SQRT2, 0), qi(SQRT2, 0)),
        (qi(SQRT2, 0, 1), qi(SQRT2, 0, 1), qi(SQRT2, 0), qi(SQRT2, 0)),
        (qi(SQRT2, 0, 1), qi(SQRT2, 0), qi(SQRT2, 0, 1), qi(SQRT2, 0)),
        (qi(SQRT2, 1), qi(SQRT2, 1), qi(SQRT2, 1), qi(SQRT2, 1)),
    ]
    for p in octa:
        assert in_span(p, ob, SQRT2) is not None
    for a in ob:
        for b2 in ob:
            assert in_span(dmul(a, b2), ob, SQRT2) is not None
    t24 = (qi(SQRT2, 0), qi(SQRT2, 2, 1), qi(SQRT2, 0, 1), qi(SQRT2, 2, -2))
    t8 = (qi(SQRT2, 0), qi(SQRT2, 2, -1), qi(SQRT2, 2), qi(SQRT2, 0, 1))
    t3 = (qi(SQRT2, 0), qi(SQRT2, 0), qi(SQRT2, 2, -1), qi(SQRT2, 0, 1))
    for t, nm in ((t24, "t24"), (t8, "t8"), (t3, "t3")):
        assert in_span(t, ob, SQRT2) is not None, nm
        print(f"#   nr({nm}) = {dnr(t)}")

    print()
    dump("_HURWITZ_UNITS", hur)
    print()
    dump("_OCTA_UNITS", octa)
    print()
    dump("_ICOSIAN_UNITS", ico)

    # ---- gate set C lists (projective classes, doubled coords) ----
    print()
    r = SQRT2
    c8 = bfs_classes(
        [
            (qi(r, 0), qi(r, 0), qi(r, 0), qi(r, 2)),  # k
            (qi(r, 0, 1), qi(r, 0, -1), qi(r, 0), qi(r, 0)),  # (1-i)/sqrt2
        ],
        r,
    )
    assert len(c8) == 8, len(c8)
    dump("_C_OCTA8", c8)

    c3 = bfs_classes([(qi(r, 1), qi(r, 1), qi(r, 1), qi(r, 1))], r)
    assert len(c3) == 3, len(c3)
    dump("_C_THREE", c3)

    r = INT
    c6 = bfs_classes(
        [
            (qi(r, 2), qi(r, 2), qi(r, 2), qi(r, 2)),  # 1+i+j+k (doubled)
            (qi(r, 0), qi(r, 2), qi(r, -2), qi(r, 0)),  # i-j
        ],
        r,
    )
    assert len(c6) == 6, len(c6)
    dump("_C_HYBRID6", c6)

    r = PHI
    c12p = bfs_classes([om5, (qi(r, 0), qi(r, 1), qi(r, 1, -1), qi(r, 0, 1))], r)
    assert len(c12p) == 12, len(c12p)
    dump("_C_ICOSA12P", c12p)

    u5 = (qi(r, 0, 1), qi(r, -1, 1), qi(r, 1), qi(r, 0))
    c5 = bfs_classes([u5], r)
    assert len(c5) == 5, len(c5)
    dump("_C_ICOSA5", c5)

    sym3 = bfs_classes([om5, (qi(r, 0), qi(r, 1), qi(r, -1, 1), qi(r, 0, -1))], r)
    assert len(sym3) == 6, len(sym3)
    dump("_C_SYM3", sym3)

    dih5 = bfs_classes([u5, (qi(r, 0), qi(r, 0), qi(r, 0), qi(r, 2))], r)
    assert len(dih5) == 10, len(dih5)
    dump("_C_DIH5", dih5)


if __name__ == "__main__":
    main()
