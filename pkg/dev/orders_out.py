# hurwitz: 24 units
# lipschitz: 8 units
# octa: 48 units
# icosian: 120 units
# icosian coordinate shapes (count of even-integer doubled coords): {0: 16, 1: 96, 4: 8}
# icosian HNF basis rows (doubled):
#    ((1, 0), (1, 0), (1, 0), (1, 0))
#    ((0, 0), (1, 0), (-1, 1), (0, 1))
#    ((0, 0), (0, 0), (4, -2), (2, -2))
#    ((0, 0), (0, 0), (0, 0), (-2, 0))
#   nr(t60) = 7+5*w@phi
#   nr(t12) = 4-1*w@phi
#   nr(t5) = 2+0*w@phi
#   nr(tsym3) = 2+1*w@phi
#   nr(t24) = 5-1*w@sqrt2
#   nr(t8) = 3-1*w@sqrt2
#   nr(t3) = 2-1*w@sqrt2

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
