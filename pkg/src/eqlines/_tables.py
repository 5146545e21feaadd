"""Frozen reference data.

Every value here is pinned so that builds are reproducible; the
construction code re-derives each item from scratch and raises
ConstructionMismatch when a derivation disagrees (see constructions.py).
"""

from __future__ import annotations

# --- the 90 octads whose g(E) vectors give the 90-line rank-20 set ------
# Ordered lexicographically; the first 18 contain point 3 and are the
# ones discarded by the 72-line restriction.

TAYLOR_OCTADS = (
    (1, 3, 4, 5, 9, 15, 18, 24),
    (1, 3, 4, 5, 10, 16, 17, 23),
    (1, 3, 4, 5, 11, 13, 20, 22),
    (1, 3, 4, 6, 9, 16, 20, 21),
    (1, 3, 4, 7, 11, 15, 17, 21),
    (1, 3, 4, 8, 9, 14, 17, 22),
    (1, 3, 4, 8, 11, 16, 19, 24),
    (1, 3, 4, 8, 12, 15, 20, 23),
    (1, 3, 5, 6, 14, 15, 17, 20),
    (1, 3, 5, 7, 9, 11, 14, 16),
    (1, 3, 5, 8, 9, 10, 19, 20),
    (1, 3, 5, 8, 11, 12, 17, 18),
    (1, 3, 5, 8, 15, 16, 21, 22),
    (1, 3, 6, 8, 9, 11, 13, 15),
    (1, 3, 7, 8, 13, 16, 17, 20),
    (1, 3, 9, 11, 17, 20, 23, 24),
    (1, 3, 9, 12, 15, 16, 17, 19),
    (1, 3, 10, 11, 15, 16, 18, 20),
    (1, 4, 5, 6, 10, 12, 18, 20),
    (1, 4, 5, 6, 13, 15, 21, 23),
    (1, 4, 5, 6, 14, 16, 22, 24),
    (1, 4, 5, 7, 9, 10, 21, 22),
    (1, 4, 5, 7, 11, 12, 23, 24),
    (1, 4, 5, 7, 13, 14, 17, 18),
    (1, 4, 6, 7, 9, 12, 14, 15),
    (1, 4, 6, 7, 10, 11, 13, 16),
    (1, 4, 6, 8, 9, 10, 23, 24),
    (1, 4, 6, 8, 11, 12, 21, 22),
    (1, 4, 6, 8, 13, 14, 19, 20),
    (1, 4, 7, 8, 10, 12, 17, 19),
    (1, 4, 7, 8, 13, 15, 22, 24),
    (1, 4, 7, 8, 14, 16, 21, 23),
    (1, 4, 9, 10, 14, 16, 18, 19),
    (1, 4, 9, 12, 17, 18, 21, 23),
    (1, 4, 9, 12, 19, 20, 22, 24),
    (1, 4, 10, 11, 17, 18, 22, 24),
    (1, 4, 10, 11, 19, 20, 21, 23),
    (1, 4, 11, 12, 13, 15, 18, 19),
    (1, 4, 13, 16, 17, 19, 21, 22),
    (1, 4, 13, 16, 18, 20, 23, 24),
    (1, 4, 14, 15, 17, 19, 23, 24),
    (1, 4, 14, 15, 18, 20, 21, 22),
    (1, 5, 6, 7, 9, 13, 20, 24),
    (1, 5, 6, 7, 12, 16, 17, 21),
    (1, 5, 6, 8, 9, 14, 18, 21),
    (1, 5, 6, 8, 10, 13, 17, 22),
    (1, 5, 6, 8, 12, 15, 19, 24),
    (1, 5, 7, 8, 10, 16, 18, 24),
    (1, 5, 7, 8, 11, 13, 19, 21),
    (1, 5, 7, 8, 12, 14, 20, 22),
    (1, 5, 9, 10, 11, 13, 18, 23),
    (1, 5, 9, 13, 14, 15, 19, 22),
    (1, 5, 9, 16, 19, 21, 23, 24),
    (1, 5, 10, 11, 12, 16, 19, 22),
    (1, 5, 10, 15, 17, 18, 19, 21),
    (1, 5, 10, 15, 20, 22, 23, 24),
    (1, 5, 11, 14, 17, 21, 22, 23),
    (1, 5, 11, 14, 18, 19, 20, 24),
    (1, 5, 12, 13, 17, 19, 20, 23),
    (1, 5, 12, 14, 15, 16, 18, 23),
    (1, 6, 7, 8, 10, 15, 20, 21),
    (1, 6, 7, 8, 11, 14, 17, 24),
    (1, 6, 9, 10, 11, 14, 20, 22),
    (1, 6, 9, 11, 12, 16, 18, 24),
    (1, 6, 9, 13, 14, 16, 17, 23),
    (1, 6, 9, 15, 17, 21, 22, 24),
    (1, 6, 10, 11, 12, 15, 17, 23),
    (1, 6, 10, 16, 17, 19, 20, 24),
    (1, 6, 11, 13, 17, 18, 20, 21),
    (1, 6, 11, 14, 15, 16, 19, 21),
    (1, 6, 12, 13, 15, 16, 20, 22),
    (1, 7, 9, 10, 11, 15, 19, 24),
    (1, 7, 9, 10, 12, 16, 20, 23),
    (1, 7, 9, 11, 12, 13, 17, 22),
    (1, 7, 9, 13, 15, 16, 18, 21),
    (1, 7, 9, 14, 17, 19, 20, 21),
    (1, 7, 10, 14, 15, 16, 17, 22),
    (1, 7, 11, 13, 14, 15, 20, 23),
    (1, 7, 11, 16, 20, 21, 22, 24),
    (1, 7, 12, 15, 17, 18, 20, 24),
    (1, 8, 9, 10, 12, 15, 18, 22),
    (1, 8, 9, 11, 12, 14, 19, 23),
    (1, 8, 9, 13, 17, 18, 19, 24),
    (1, 8, 9, 13, 20, 21, 22, 23),
    (1, 8, 10, 13, 15, 16, 19, 23),
    (1, 8, 10, 14, 17, 18, 20, 23),
    (1, 8, 11, 13, 14, 16, 18, 22),
    (1, 8, 11, 15, 18, 21, 23, 24),
    (1, 8, 12, 16, 17, 22, 23, 24),
    (1, 8, 12, 16, 18, 19, 20, 21),
)

# --- filter vectors in Z^24 (1-based coordinate positions) ---------------
# VEC_C = 4*e1 + (all-ones); VEC_C1 / VEC_C2 are 8-point indicators.

VEC_C = (5,) + (1,) * 23

_C1_POINTS = (2, 3, 10, 12, 13, 14, 21, 24)
_C2_POINTS = (2, 3, 6, 7, 18, 19, 22, 23)
VEC_C1 = tuple(1 if k in _C1_POINTS else 0 for k in range(1, 25))
VEC_C2 = tuple(1 if k in _C2_POINTS else 0 for k in range(1, 25))

E1_MINUS_E2 = (1, -1) + (0,) * 22
E1_MINUS_E3 = (1, 0, -1) + (0,) * 21

# --- known range of the maximum number of equiangular lines per dimension
# d -> (best known lower bound, best known upper bound), 2 <= d <= 43.

_BOUND_RANGES = (
    ((2, 2), 3, 3),
    ((3, 4), 6, 6),
    ((5, 5), 10, 10),
    ((6, 6), 16, 16),
    ((7, 13), 28, 28),
    ((14, 14), 28, 29),
    ((15, 15), 36, 36),
    ((16, 16), 40, 41),
    ((17, 17), 48, 49),
    ((18, 18), 56, 60),
    ((19, 19), 72, 75),
    ((20, 20), 90, 95),
    ((21, 21), 126, 126),
    ((22, 22), 176, 176),
    ((23, 41), 276, 276),
    ((42, 42), 276, 288),
    ((43, 43), 344, 344),
)

BOUNDS_TABLE: dict[int, tuple[int, int]] = {}
for (_lo_d, _hi_d), _lo, _hi in _BOUND_RANGES:
    for _d in range(_lo_d, _hi_d + 1):
        BOUNDS_TABLE[_d] = (_lo, _hi)

# --- layout of the 28-column rank-14 set ---------------------------------
# Each column has three entries of weight 1/5 (circle = +, bullet = -)
# among rows 1-7 and one entry of weight 2/5 in a row among 8-14 shared by
# groups of four consecutive columns.  Row r of the +/- tables lists the
# layout columns carrying a +1 (resp. -1) circle part in that row.

TREMAIN_PLUS_ROWS = {
    1: (1, 2, 17, 20, 25, 27),
    2: (1, 3, 5, 6, 21, 24),
    3: (5, 7, 9, 10, 25, 28),
    4: (1, 4, 9, 11, 13, 14),
    5: (5, 8, 13, 15, 17, 18),
    6: (9, 12, 17, 19, 21, 22),
    7: (13, 16, 21, 23, 25, 26),
}

TREMAIN_MINUS_ROWS = {
    1: (3, 4, 18, 19, 26, 28),
    2: (2, 4, 7, 8, 22, 23),
    3: (6, 8, 11, 12, 26, 27),
    4: (2, 3, 10, 12, 15, 16),
    5: (6, 7, 14, 16, 19, 20),
    6: (10, 11, 18, 20, 23, 24),
    7: (14, 15, 22, 24, 27, 28),
}


def tremain_star_row(layout_col: int) -> int:
    """Star row (8..14) of a layout column (1..28): fours share a row."""
    return 8 + (layout_col - 1) // 4


# Layout columns are emitted right-to-left (column 28 first).  With this
# ordering the even-index half {w2, w4, ..., w28} spans the full rank-14
# space; the mirrored (left-to-right) ordering leaves that half at rank 13.
TREMAIN_COLUMN_ORDER = tuple(range(28, 0, -1))
