"""Explicit equiangular line families and graph-based ingestion.

Every family is built from integer data only: Gram entries are exact
rationals computed as integer dot products divided by a known squared
norm, so no construction ever touches floating point.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import graph6 as _g6
from ._tables import (
    E1_MINUS_E2,
    E1_MINUS_E3,
    TAYLOR_OCTADS,
    TREMAIN_COLUMN_ORDER,
    TREMAIN_MINUS_ROWS,
    TREMAIN_PLUS_ROWS,
    VEC_C,
    VEC_C1,
    VEC_C2,
    tremain_star_row,
)
from .errors import ConstructionMismatch, EmptyResult, NotPSD
from .linalg import RatMatrix
from .lineset import LineSet, SignMatrix, from_sign_matrix

IntVector24 = tuple[int, ...]


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


# --------------------------------------------------------------------------
# Octad design on 24 points
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class OctadDesign:
    """759 eight-point blocks over {1,...,24}; bit k-1 of a mask = point k."""

    masks: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.masks)

    def points(self, i: int) -> tuple[int, ...]:
        """Sorted point tuple of block i."""
        m = self.masks[i]
        return tuple(k + 1 for k in range(24) if m >> k & 1)

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.points(i) for i in range(len(self.masks)))

    def count_containing(self, *points: int) -> int:
        """Number of blocks containing all the given points."""
        want = 0
        for p in points:
            want |= 1 << (p - 1)
        return sum(1 for m in self.masks if m & want == want)


@functools.cache
def generate_octads() -> OctadDesign:
    """Greedy lexicographic scan of all 8-subsets of {1,...,24}.

    A subset is kept iff it differs from every kept subset in at least 4
    points (intersection at most 4).  The scan keeps exactly 759 blocks,
    starting with {1,...,8}, and any two blocks meet in 0, 2, or 4 points.
    """
    kept: list[int] = []
    for combo in itertools.combinations(range(24), 8):
        m = 0
        for c in combo:
            m |= 1 << c
        for k in kept:
            if (m & k).bit_count() > 4:
                break
        else:
            kept.append(m)
    return OctadDesign(tuple(kept))


# --------------------------------------------------------------------------
# 28 lines in R^14 from a 7+7 row layout
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class TremainColumn:
    """One unit column: three entries of squared weight 1/5 among rows 1-7
    (circle = +1, bullet = -1) plus one entry of squared weight 2/5 in star
    block row star_row (1-7).  Inner products stay rational:
    <w_i, w_j> = (circle_i . circle_j + 2*[star_row_i == star_row_j]) / 5.
    """

    circle: tuple[int, ...]
    star_row: int

    def __post_init__(self):
        if len(self.circle) != 7:
            raise ValueError("circle part must have 7 entries")
        if any(x not in (-1, 0, 1) for x in self.circle):
            raise ValueError("circle entries must be -1, 0, or +1")
        if sum(abs(x) for x in self.circle) != 3:
            raise ValueError("exactly 3 circle entries must be nonzero")
        if not 1 <= self.star_row <= 7:
            raise ValueError("star row must lie in 1..7")

    def inner(self, other: "TremainColumn") -> Fraction:
        d = _dot(self.circle, other.circle)
        if self.star_row == other.star_row:
            d += 2
        return Fraction(d, 5)

    def int_coords(self) -> tuple[int, ...]:
        """Embedding in Z^21 whose standard dot product over squared norm 5
        reproduces inner(): the star coordinate is duplicated so that equal
        star rows contribute 2."""
        star = [0] * 14
        star[2 * (self.star_row - 1)] = 1
        star[2 * (self.star_row - 1) + 1] = 1
        return self.circle + tuple(star)


def tremain_columns() -> tuple[TremainColumn, ...]:
    """The 28 columns of the layout, in emission order (right-to-left)."""
    circle = {col: [0] * 7 for col in range(1, 29)}
    for row, cols in TREMAIN_PLUS_ROWS.items():
        for col in cols:
            circle[col][row - 1] = 1
    for row, cols in TREMAIN_MINUS_ROWS.items():
        for col in cols:
            circle[col][row - 1] = -1
    return tuple(
        TremainColumn(tuple(circle[col]), tremain_star_row(col) - 7)
        for col in TREMAIN_COLUMN_ORDER
    )


@functools.cache
def tremain_28() -> LineSet:
    """28 equiangular lines in R^14 with angle 1/5."""
    cols = tremain_columns()
    rows = [[a.inner(b) for b in cols] for a in cols]
    return LineSet.from_gram(
        RatMatrix.from_rows(rows),
        Fraction(1, 5),
        coords=[c.int_coords() for c in cols],
        coords_norm_sq=5,
    )


# --------------------------------------------------------------------------
# 90 lines in R^20 and 72 lines in R^19 from the octad design
# --------------------------------------------------------------------------


def g_vector(points: Sequence[int]) -> IntVector24:
    """Integer line vector of an octad E: 4 on E, minus 4 extra at point 1,
    minus 1 everywhere; squared norm 80 whenever 1 is in E."""
    s = frozenset(points)
    return tuple(4 * (k in s) - 4 * (k == 1) - 1 for k in range(1, 25))


def _lineset_from_g_vectors(vectors: Sequence[IntVector24]) -> LineSet:
    rows = [[Fraction(_dot(u, v), 80) for v in vectors] for u in vectors]
    return LineSet.from_gram(
        RatMatrix.from_rows(rows),
        Fraction(1, 5),
        coords=vectors,
        coords_norm_sq=80,
    )


@functools.cache
def taylor_90() -> LineSet:
    """90 equiangular lines in R^20 with angle 1/5.

    Keeps the octads E containing point 1 whose line vector g(E) has zero
    integer dot product with each of e1-e2, c, c1, c2, and checks the
    survivors against the frozen 90-row table.
    """
    design = generate_octads()
    constraints = (E1_MINUS_E2, VEC_C, VEC_C1, VEC_C2)
    chosen: list[tuple[int, ...]] = []
    vectors: list[IntVector24] = []
    for i in range(len(design)):
        if not design.masks[i] & 1:
            continue
        pts = design.points(i)
        g = g_vector(pts)
        if all(_dot(g, v) == 0 for v in constraints):
            chosen.append(pts)
            vectors.append(g)
    if len(chosen) != 90:
        raise ConstructionMismatch(
            f"expected 90 surviving octads, found {len(chosen)}"
        )
    if tuple(chosen) != TAYLOR_OCTADS:
        raise ConstructionMismatch(
            "surviving octads differ from the frozen table"
        )
    return _lineset_from_g_vectors(vectors)


@functools.cache
def asche_72() -> LineSet:
    """72 equiangular lines in R^19: the 90-line family minus the 18 blocks
    containing point 3; every kept line vector is orthogonal to e1-e3."""
    base = taylor_90()
    keep = [i for i, pts in enumerate(TAYLOR_OCTADS) if 3 not in pts]
    if len(keep) != 72:
        raise ConstructionMismatch(
            f"expected 72 octads avoiding point 3, found {len(keep)}"
        )
    assert base.coords is not None
    for i in keep:
        if _dot(base.coords[i], E1_MINUS_E3) != 0:
            raise ConstructionMismatch(
                f"kept line {i} is not orthogonal to e1-e3"
            )
    return base.restrict(keep)


def filter_orthogonal(
    source: LineSet, constraints: Sequence[Sequence[int]]
) -> LineSet:
    """Lines of source whose integer coordinate vectors are orthogonal to
    every constraint vector.  The source must carry coordinates."""
    if source.coords is None:
        raise ValueError("source line set carries no coordinate vectors")
    cons = [tuple(int(x) for x in v) for v in constraints]
    for v in cons:
        if len(v) != len(source.coords[0]):
            raise ValueError("constraint length must match coordinate length")
    keep = [
        i
        for i, g in enumerate(source.coords)
        if all(_dot(g, v) == 0 for v in cons)
    ]
    if not keep:
        raise EmptyResult("no line is orthogonal to every constraint")
    if len(keep) == source.n:
        return source
    return source.restrict(keep)


# --------------------------------------------------------------------------
# Seidel ingestion from graph6 adjacency data
# --------------------------------------------------------------------------


def from_graph6(data: bytes, angle: Fraction) -> LineSet:
    """Lines from a graph6-encoded graph: sign matrix S = J - I - 2A
    (adjacent pairs get -1), Gram = I + angle*S.

    Raises MalformedGraph6 on bad input and NotPSD when the Gram matrix of
    the requested angle is not positive semidefinite.
    """
    n, adj = _g6.parse_graph6(data)
    rows = []
    for i in range(n):
        row = [0] * n
        for j in range(n):
            if i != j:
                row[j] = -1 if adj[i] >> j & 1 else 1
        rows.append(tuple(row))
    ls = from_sign_matrix(SignMatrix(n, tuple(rows)), Fraction(angle))
    if not ls.is_psd:
        raise NotPSD(
            f"I + ({angle})*S is not positive semidefinite; "
            f"the angle is incompatible with this graph"
        )
    return ls


def srg_check(
    n: int, adj: Sequence[int]
) -> Optional[tuple[int, int, int, int]]:
    """(n, k, lambda, mu) if the graph is strongly regular, else None.

    Constant degree k, every adjacent pair has lambda common neighbours,
    every non-adjacent pair has mu.  Graphs with no adjacent pair or no
    non-adjacent pair (empty, complete) return None: a parameter would be
    undefined.
    """
    if n == 0:
        return None
    degrees = {row.bit_count() for row in adj}
    if len(degrees) != 1:
        return None
    k = degrees.pop()
    lam: Optional[int] = None
    mu: Optional[int] = None
    for i in range(n):
        for j in range(i + 1, n):
            common = (adj[i] & adj[j]).bit_count()
            if adj[i] >> j & 1:
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    if lam is None or mu is None:
        return None
    return (n, k, lam, mu)
