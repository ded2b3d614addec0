"""Frozen unit-group and projective-class literals for the quaternion orders.

Doubled coordinates: each row stores the integer coordinates of 2q as
(a, b) pairs meaning a + b*w.  Regenerate with dev/gen_orders.py; the
loaders re-validate closure, so a bad edit here fails fast.
"""

_LIPSCHITZ_UNITS = (  # 8 entries, doubled coordinates
    ((-2, 0), (0, 0), (0, 0), (0, 0)),
    ((0, 0), (-2, 0), (0, 0), (0, 0)),
    ((0, 0), (0, 0), (-2, 0), (0, 0)),
    ((0, 0), (0, 0), (0, 0), (-2, 0)),
    ((0, 0), (0, 0), (0, 0), (2, 0)),
    ((0, 0), (0, 0), (2, 0), (0, 0)),
    ((0, 0), (2, 0), (0, 0), (0, 0)),
    ((2, 0), (0, 0), (0, 0), (0, 0)),
)

_HURWITZ_UNITS = (  # 24 entries, doubled coordinates
    ((-2, 0), (0, 0), (0, 0), (0, 0)),
    ((-1, 0), (-1, 0), (-1, 0), (-1, 0)),
    ((-1, 0), (-1, 0), (-1, 0), (1, 0)),
    ((-1, 0), (-1, 0), (1, 0), (-1, 0)),
    ((-1, 0), (-1, 0), (1, 0), (1, 0)),
    ((-1, 0), (1, 0), (-1, 0), (-1, 0)),
    ((-1, 0), (1, 0), (-1, 0), (1, 0)),
    ((-1, 0), (1, 0), (1, 0), (-1, 0)),
    ((-1, 0), (1, 0), (1, 0), (1, 0)),
    ((0, 0), (-2, 0), (0, 0), (0, 0)),
    ((0, 0), (0, 0), (-2, 0), (0, 0)),
    ((0, 0), (0, 0), (0, 0), (-2, 0)),
    ((0, 0), (0, 0), (0, 0), (2, 0)),
    ((0, 0), (0, 0), (2, 0), (0, 0)),
    ((0, 0), (2, 0), (0, 0), (0, 0)),
    ((1, 0), (-1, 0), (-1, 0), (-1, 0)),
    ((1, 0), (-1, 0), (-1, 0), (1, 0)),
    ((1, 0), (-1, 0), (1, 0), (-1, 0)),
    ((1, 0), (-1, 0), (1, 0), (1, 0)),
    ((1, 0), (1, 0), (-1, 0), (-1, 0)),
    ((1, 0), (1, 0), (-1, 0), (1, 0)),
    ((1, 0), (1, 0), (1, 0), (-1, 0)),
    ((1, 0), (1, 0), (1, 0), (1, 0)),
    ((2, 0), (0, 0), (0, 0), (0, 0)),
)

_OCTA_UNITS = (  # 48 entries, doubled coordinates
    ((-2, 0), (0, 0), (0, 0), (0, 0)),
    ((-1, 0), (-1, 0), (-1, 0), (-1, 0)),
    ((-1, 0), (-1, 0), (-1, 0), (1, 0)),
    ((-1, 0), (-1, 0), (1, 0), (-1, 0)),
    ((-1, 0), (-1, 0), (1, 0), (1, 0)),
    ((-1, 0), (1, 0), (-1, 0), (-1, 0)),
    ((-1, 0), (1, 0), (-1, 0), (1, 0)),
    ((-1, 0), (1, 0), (1, 0), (-1, 0)),
    ((-1, 0), (1, 0), (1, 0), (1, 0)),
    ((0, -1), (0, -1), (0, 0), (0, 0)),
    ((0, -1), (0, 0), (0, -1), (0, 0)),
    ((0, -1), (0, 0), (0, 0), (0, -1)),
    ((0, -1), (0, 0), (0, 0), (0, 1)),
    ((0, -1), (0, 0), (0, 1), (0, 0)),
    ((0, -1), (0, 1), (0, 0), (0, 0)),
    ((0, 0), (-2, 0), (0, 0), (0, 0)),
    ((0, 0), (0, -1), (0, -1), (0, 0)),
    ((0, 0), (0, -1), (0, 0), (0, -1)),
    ((0, 0), (0, -1), (0, 0), (0, 1)),
    ((0, 0), (0, -1), (0, 1), (0, 0)),
    ((0, 0), (0, 0), (-2, 0), (0, 0)),
    ((0, 0), (0, 0), (0, -1), (0, -1)),
    ((0, 0), (0, 0), (0, -1), (0, 1)),
    ((0, 0), (0, 0), (0, 0), (-2, 0)),
    ((0, 0), (0, 0), (0, 0), (2, 0)),
    ((0, 0), (0, 0), (0, 1), (0, -1)),
    ((0, 0), (0, 0), (0, 1), (0, 1)),
    ((0, 0), (0, 0), (2, 0), (0, 0)),
    ((0, 0), (0, 1), (0, -1), (0, 0)),
    ((0, 0), (0, 1), (0, 0), (0, -1)),
    ((0, 0), (0, 1), (0, 0), (0, 1)),
    ((0, 0), (0, 1), (0, 1), (0, 0)),
    ((0, 0), (2, 0), (0, 0), (0, 0)),
    ((0, 1), (0, -1), (0, 0), (0, 0)),
    ((0, 1), (0, 0), (0, -1), (0, 0)),
    ((0, 1), (0, 0), (0, 0), (0, -1)),
    ((0, 1), (0, 0), (0, 0), (0, 1)),
    ((0, 1), (0, 0), (0, 1), (0, 0)),
    ((0, 1), (0, 1), (0, 0), (0, 0)),
    ((1, 0), (-1, 0), (-1, 0), (-1, 0)),
    ((1, 0), (-1, 0), (-1, 0), (1, 0)),
    ((1, 0), (-1, 0), (1, 0), (-1, 0)),
    ((1, 0), (-1, 0), (1, 0), (1, 0)),
    ((1, 0), (1, 0), (-1, 0), (-1, 0)),
    ((1, 0), (1, 0), (-1, 0), (1, 0)),
    ((1, 0), (1, 0), (1, 0), (-1, 0)),
    ((1, 0), (1, 0), (1, 0), (1, 0)),
    ((2, 0), (0, 0), (0, 0), (0, 0)),
)

_ICOSIAN_UNITS = (  # 120 entries, doubled coordinates
    ((-2, 0), (0, 0), (0, 0), (0, 0)),
    ((-1, 0), (-1, 0), (-1, 0), (-1, 0)),
    ((-1, 0), (-1, 0), (-1, 0), (1, 0)),
    ((-1, 0), (-1, 0), (1, 0), (-1, 0)),
    ((-1, 0), (-1, 0), (1, 0), (1, 0)),
    ((-1, 0), (-1, 1), (0, 0), (0, -1)),
    ((-1, 0), (-1, 1), (0, 0), (0, 1)),
    ((-1, 0), (0, -1), (-1, 1), (0, 0)),
    ((-1, 0), (0, -1), (1, -1), (0, 0)),
    ((-1, 0), (0, 0), (0, -1), (-1, 1)),
    ((-1, 0), (0, 0), (0, -1), (1, -1)),
    ((-1, 0), (0, 0), (0, 1), (-1, 1)),
    ((-1, 0), (0, 0), (0, 1), (1, -1)),
    ((-1, 0), (0, 1), (-1, 1), (0, 0)),
    ((-1, 0), (0, 1), (1, -1), (0, 0)),
    ((-1, 0), (1, -1), (0, 0), (0, -1)),
    ((-1, 0), (1, -1), (0, 0), (0, 1)),
    ((-1, 0), (1, 0), (-1, 0), (-1, 0)),
    ((-1, 0), (1, 0), (-1, 0), (1, 0)),
    ((-1, 0), (1, 0), (1, 0), (-1, 0)),
    ((-1, 0), (1, 0), (1, 0), (1, 0)),
    ((-1, 1), (-1, 0), (0, -1), (0, 0)),
    ((-1, 1), (-1, 0), (0, 1), (0, 0)),
    ((-1, 1), (0, -1), (0, 0), (-1, 0)),
    ((-1, 1), (0, -1), (0, 0), (1, 0)),
    ((-1, 1), (0, 0), (-1, 0), (0, -1)),
    ((-1, 1), (0, 0), (-1, 0), (0, 1)),
    ((-1, 1), (0, 0), (1, 0), (0, -1)),
    ((-1, 1), (0, 0), (1, 0), (0, 1)),
    ((-1, 1), (0, 1), (0, 0), (-1, 0)),
    ((-1, 1), (0, 1), (0, 0), (1, 0)),
    ((-1, 1), (1, 0), (0, -1), (0, 0)),
    ((-1, 1), (1, 0), (0, 1), (0, 0)),
    ((0, -1), (-1, 0), (0, 0), (-1, 1)),
    ((0, -1), (-1, 0), (0, 0), (1, -1)),
    ((0, -1), (-1, 1), (-1, 0), (0, 0)),
    ((0, -1), (-1, 1), (1, 0), (0, 0)),
    ((0, -1), (0, 0), (-1, 1), (-1, 0)),
    ((0, -1), (0, 0), (-1, 1), (1, 0)),
    ((0, -1), (0, 0), (1, -1), (-1, 0)),
    ((0, -1), (0, 0), (1, -1), (1, 0)),
    ((0, -1), (1, -1), (-1, 0), (0, 0)),
    ((0, -1), (1, -1), (1, 0), (0, 0)),
    ((0, -1), (1, 0), (0, 0), (-1, 1)),
    ((0, -1), (1, 0), (0, 0), (1, -1)),
    ((0, 0), (-2, 0), (0, 0), (0, 0)),
    ((0, 0), (-1, 0), (-1, 1), (0, -1)),
    ((0, 0), (-1, 0), (-1, 1), (0, 1)),
    ((0, 0), (-1, 0), (1, -1), (0, -1)),
    ((0, 0), (-1, 0), (1, -1), (0, 1)),
    ((0, 0), (-1, 1), (0, -1), (-1, 0)),
    ((0, 0), (-1, 1), (0, -1), (1, 0)),
    ((0, 0), (-1, 1), (0, 1), (-1, 0)),
    ((0, 0), (-1, 1), (0, 1), (1, 0)),
    ((0, 0), (0, -1), (-1, 0), (-1, 1)),
    ((0, 0), (0, -1), (-1, 0), (1, -1)),
    ((0, 0), (0, -1), (1, 0), (-1, 1)),
    ((0, 0), (0, -1), (1, 0), (1, -1)),
    ((0, 0), (0, 0), (-2, 0), (0, 0)),
    ((0, 0), (0, 0), (0, 0), (-2, 0)),
    ((0, 0), (0, 0), (0, 0), (2, 0)),
    ((0, 0), (0, 0), (2, 0), (0, 0)),
    ((0, 0), (0, 1), (-1, 0), (-1, 1)),
    ((0, 0), (0, 1), (-1, 0), (1, -1)),
    ((0, 0), (0, 1), (1, 0), (-1, 1)),
    ((0, 0), (0, 1), (1, 0), (1, -1)),
    ((0, 0), (1, -1), (0, -1), (-1, 0)),
    ((0, 0), (1, -1), (0, -1), (1, 0)),
    ((0, 0), (1, -1), (0, 1), (-1, 0)),
    ((0, 0), (1, -1), (0, 1), (1, 0)),
    ((0, 0), (1, 0), (-1, 1), (0, -1)),
    ((0, 0), (1, 0), (-1, 1), (0, 1)),
    ((0, 0), (1, 0), (1, -1), (0, -1)),
    ((0, 0), (1, 0), (1, -1), (0, 1)),
    ((0, 0), (2, 0), (0, 0), (0, 0)),
    ((0, 1), (-1, 0), (0, 0), (-1, 1)),
    ((0, 1), (-1, 0), (0, 0), (1, -1)),
    ((0, 1), (-1, 1), (-1, 0), (0, 0)),
    ((0, 1), (-1, 1), (1, 0), (0, 0)),
    ((0, 1), (0, 0), (-1, 1), (-1, 0)),
    ((0, 1), (0, 0), (-1, 1), (1, 0)),
    ((0, 1), (0, 0), (1, -1), (-1, 0)),
    ((0, 1), (0, 0), (1, -1), (1, 0)),
    ((0, 1), (1, -1), (-1, 0), (0, 0)),
    ((0, 1), (1, -1), (1, 0), (0, 0)),
    ((0, 1), (1, 0), (0, 0), (-1, 1)),
    ((0, 1), (1, 0), (0, 0), (1, -1)),
    ((1, -1), (-1, 0), (0, -1), (0, 0)),
    ((1, -1), (-1, 0), (0, 1), (0, 0)),
    ((1, -1), (0, -1), (0, 0), (-1, 0)),
    ((1, -1), (0, -1), (0, 0), (1, 0)),
    ((1, -1), (0, 0), (-1, 0), (0, -1)),
    ((1, -1), (0, 0), (-1, 0), (0, 1)),
    ((1, -1), (0, 0), (1, 0), (0, -1)),
    ((1, -1), (0, 0), (1, 0), (0, 1)),
    ((1, -1), (0, 1), (0, 0), (-1, 0)),
    ((1, -1), (0, 1), (0, 0), (1, 0)),
    ((1, -1), (1, 0), (0, -1), (0, 0)),
    ((1, -1), (1, 0), (0, 1), (0, 0)),
    ((1, 0), (-1, 0), (-1, 0), (-1, 0)),
    ((1, 0), (-1, 0), (-1, 0), (1, 0)),
    ((1, 0), (-1, 0), (1, 0), (-1, 0)),
    ((1, 0), (-1, 0), (1, 0), (1, 0)),
    ((1, 0), (-1, 1), (0, 0), (0, -1)),
    ((1, 0), (-1, 1), (0, 0), (0, 1)),
    ((1, 0), (0, -1), (-1, 1), (0, 0)),
    ((1, 0), (0, -1), (1, -1), (0, 0)),
    ((1, 0), (0, 0), (0, -1), (-1, 1)),
    ((1, 0), (0, 0), (0, -1), (1, -1)),
    ((1, 0), (0, 0), (0, 1), (-1, 1)),
    ((1, 0), (0, 0), (0, 1), (1, -1)),
    ((1, 0), (0, 1), (-1, 1), (0, 0)),
    ((1, 0), (0, 1), (1, -1), (0, 0)),
    ((1, 0), (1, -1), (0, 0), (0, -1)),
    ((1, 0), (1, -1), (0, 0), (0, 1)),
    ((1, 0), (1, 0), (-1, 0), (-1, 0)),
    ((1, 0), (1, 0), (-1, 0), (1, 0)),
    ((1, 0), (1, 0), (1, 0), (-1, 0)),
    ((1, 0), (1, 0), (1, 0), (1, 0)),
    ((2, 0), (0, 0), (0, 0), (0, 0)),
)

_C_OCTA8 = (  # 8 entries, doubled coordinates
    ((0, -1), (0, -1), (0, 0), (0, 0)),
    ((0, 0), (-2, 0), (0, 0), (0, 0)),
    ((0, 0), (0, 0), (-2, 0), (0, 0)),
    ((0, 0), (0, 0), (0, -1), (0, 1)),
    ((0, 0), (0, 0), (0, 0), (2, 0)),
    ((0, 0), (0, 0), (0, 1), (0, 1)),
    ((0, 1), (0, -1), (0, 0), (0, 0)),
    ((2, 0), (0, 0), (0, 0), (0, 0)),
)
_C_THREE = (  # 3 entries, doubled coordinates
    ((-1, 0), (1, 0), (1, 0), (1, 0)),
    ((1, 0), (1, 0), (1, 0), (1, 0)),
    ((2, 0), (0, 0), (0, 0), (0, 0)),
)
_C_HYBRID6 = (  # 6 entries, doubled coordinates
    ((-4, 0), (4, 0), (4, 0), (4, 0)),
    ((0, 0), (0, 0), (-4, 0), (4, 0)),
    ((0, 0), (2, 0), (-2, 0), (0, 0)),
    ((0, 0), (4, 0), (0, 0), (-4, 0)),
    ((2, 0), (0, 0), (0, 0), (0, 0)),
    ((2, 0), (2, 0), (2, 0), (2, 0)),
)
_C_ICOSA12P = (  # 12 entries, doubled coordinates
    ((-1, 0), (-1, 1), (0, 0), (0, -1)),
    ((-1, 0), (0, -1), (-1, 1), (0, 0)),
    ((-1, 0), (0, 0), (0, -1), (-1, 1)),
    ((-1, 0), (0, 0), (0, 1), (1, -1)),
    ((-1, 0), (0, 1), (1, -1), (0, 0)),
    ((-1, 0), (1, -1), (0, 0), (0, 1)),
    ((-1, 0), (1, 0), (1, 0), (1, 0)),
    ((0, 0), (-1, 1), (0, -1), (-1, 0)),
    ((0, 0), (0, -1), (-1, 0), (-1, 1)),
    ((0, 0), (1, 0), (1, -1), (0, 1)),
    ((1, 0), (1, 0), (1, 0), (1, 0)),
    ((2, 0), (0, 0), (0, 0), (0, 0)),
)
_C_ICOSA5 = (  # 5 entries, doubled coordinates
    ((-1, 1), (1, 0), (0, 1), (0, 0)),
    ((0, -1), (-1, 1), (1, 0), (0, 0)),
    ((0, 1), (-1, 1), (1, 0), (0, 0)),
    ((1, -1), (1, 0), (0, 1), (0, 0)),
    ((2, 0), (0, 0), (0, 0), (0, 0)),
)
_C_SYM3 = (  # 6 entries, doubled coordinates
    ((-1, 0), (1, 0), (1, 0), (1, 0)),
    ((0, 0), (0, 1), (-1, 0), (1, -1)),
    ((0, 0), (1, -1), (0, 1), (-1, 0)),
    ((0, 0), (1, 0), (-1, 1), (0, -1)),
    ((1, 0), (1, 0), (1, 0), (1, 0)),
    ((2, 0), (0, 0), (0, 0), (0, 0)),
)
_C_DIH5 = (  # 10 entries, doubled coordinates
    ((-1, 1), (1, 0), (0, 1), (0, 0)),
    ((0, -1), (-1, 1), (1, 0), (0, 0)),
    ((0, 0), (-1, 0), (-1, 1), (0, 1)),
    ((0, 0), (0, -1), (1, 0), (-1, 1)),
    ((0, 0), (0, 0), (0, 0), (2, 0)),
    ((0, 0), (0, 1), (-1, 0), (-1, 1)),
    ((0, 0), (1, 0), (1, -1), (0, 1)),
    ((0, 1), (-1, 1), (1, 0), (0, 0)),
    ((1, -1), (1, 0), (0, 1), (0, 0)),
    ((2, 0), (0, 0), (0, 0), (0, 0)),
)
