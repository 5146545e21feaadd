"""Equiangular line sets as exact rational Gram matrices.

A LineSet is the package's central value: n lines with common angle
arccos(alpha), stored as the n x n Gram matrix of unit representatives.
Optionally a LineSet carries the integer coordinate vectors it was built
from (all with one shared squared norm); searches use those to report
orthogonal complements.

Indexing: the library API is 0-based throughout.  The CLI and the JSON
files it reads and writes use 1-based indices for human readability.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from . import linalg
from .errors import HypothesisViolated, OutOfRange
from .linalg import RatMatrix, format_rational, parse_rational
from ._tables import BOUNDS_TABLE


@dataclass(frozen=True)
class SignMatrix:
    """Symmetric n x n sign pattern: 0 on the diagonal, +-1 elsewhere."""

    n: int
    signs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.signs) != self.n or any(len(r) != self.n for r in self.signs):
            raise ValueError("sign matrix has wrong shape")
        for i in range(self.n):
            if self.signs[i][i] != 0:
                raise ValueError(f"diagonal entry ({i},{i}) must be 0")
            for j in range(i + 1, self.n):
                if self.signs[i][j] not in (-1, 1):
                    raise ValueError(f"off-diagonal entry ({i},{j}) must be +-1")
                if self.signs[i][j] != self.signs[j][i]:
                    raise ValueError(f"sign matrix not symmetric at ({i},{j})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SignMatrix":
        return cls(len(rows), tuple(tuple(int(x) for x in r) for r in rows))


@dataclass(frozen=True)
class LineSet:
    """n equiangular lines with angle alpha, as an exact Gram matrix."""

    n: int
    angle: Fraction
    gram: RatMatrix
    rank: int
    coords: Optional[tuple[tuple[int, ...], ...]] = None
    coords_norm_sq: Optional[int] = None

    @classmethod
    def from_gram(
        cls,
        gram: RatMatrix,
        angle: Fraction,
        coords: Optional[Sequence[Sequence[int]]] = None,
        coords_norm_sq: Optional[int] = None,
    ) -> "LineSet":
        if gram.rows != gram.cols:
            raise ValueError("Gram matrix must be square")
        fixed = None
        if coords is not None:
            fixed = tuple(tuple(int(x) for x in row) for row in coords)
            if len(fixed) != gram.rows:
                raise ValueError("one coordinate row per line required")
        return cls(
            n=gram.rows,
            angle=Fraction(angle),
            gram=gram,
            rank=linalg.rank(gram),
            coords=fixed,
            coords_norm_sq=coords_norm_sq,
        )

    @cached_property
    def is_psd(self) -> bool:
        return linalg.is_psd(self.gram)

    def sign_matrix(self) -> SignMatrix:
        """Sign pattern of the off-diagonal entries (gram = I + alpha*S)."""
        rows = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                if i == j:
                    row.append(0)
                else:
                    x = self.gram[i, j]
                    if x == self.angle:
                        row.append(1)
                    elif x == -self.angle:
                        row.append(-1)
                    else:
                        raise ValueError(
                            f"entry ({i},{j}) = {x} is not +-{self.angle}"
                        )
            rows.append(tuple(row))
        return SignMatrix(self.n, tuple(rows))

    def restrict(self, indices: Sequence[int]) -> "LineSet":
        """Principal submatrix on the given line indices, rank recomputed."""
        idx = list(indices)
        if any(not 0 <= i < self.n for i in idx):
            raise IndexError("line index out of range")
        sub = self.gram.submatrix(idx, idx)
        coords = None
        if self.coords is not None:
            coords = [self.coords[i] for i in idx]
        return LineSet.from_gram(sub, self.angle, coords, self.coords_norm_sq)


def from_sign_matrix(s: SignMatrix, angle: Fraction) -> LineSet:
    """LineSet with gram = I + angle*S; rank computed, not yet validated."""
    angle = Fraction(angle)
    ents = []
    for i in range(s.n):
        for j in range(s.n):
            ents.append(Fraction(1) if i == j else angle * s.signs[i][j])
    return LineSet.from_gram(RatMatrix(s.n, s.n, ents), angle)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    n: int
    angle: Fraction
    rank: int
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "angle": format_rational(self.angle),
            "rank": self.rank,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def validate(ls: LineSet) -> ValidationReport:
    """Check every defining invariant; failures are reported, not raised."""
    checks = []
    g = ls.gram

    sym_ok, sym_detail = True, ""
    for i in range(ls.n):
        for j in range(i + 1, ls.n):
            if g[i, j] != g[j, i]:
                sym_ok, sym_detail = False, f"first asymmetry at ({i},{j})"
                break
        if not sym_ok:
            break
    checks.append(CheckResult("symmetric", sym_ok, sym_detail))

    diag_ok, diag_detail = True, ""
    for i in range(ls.n):
        if g[i, i] != 1:
            diag_ok, diag_detail = False, f"diagonal ({i},{i}) = {g[i, i]}"
            break
    checks.append(CheckResult("unit_diagonal", diag_ok, diag_detail))

    off_ok, off_detail = True, ""
    for i in range(ls.n):
        for j in range(i + 1, ls.n):
            if g[i, j] != ls.angle and g[i, j] != -ls.angle:
                off_ok = False
                off_detail = f"entry ({i},{j}) = {g[i, j]}, expected +-{ls.angle}"
                break
        if not off_ok:
            break
    checks.append(CheckResult("off_diagonal_pm_alpha", off_ok, off_detail))

    if sym_ok:
        psd_ok = ls.is_psd
        checks.append(
            CheckResult("positive_semidefinite", psd_ok, "" if psd_ok else
                        "Gram matrix is not PSD")
        )
    else:
        checks.append(CheckResult("positive_semidefinite", False,
                                  "skipped: matrix not symmetric"))

    rank_now = linalg.rank(g)
    rank_ok = rank_now == ls.rank
    checks.append(
        CheckResult("rank", rank_ok,
                    "" if rank_ok else f"cached {ls.rank}, recomputed {rank_now}")
    )

    return ValidationReport(ls.n, ls.angle, ls.rank, tuple(checks))


def relative_bound(r: int, angle: Fraction) -> Fraction:
    """Exact bound r(1 - a^2)/(1 - r a^2) on line counts at rank r."""
    angle = Fraction(angle)
    if r < 1:
        raise HypothesisViolated("rank must be at least 1")
    a2 = angle * angle
    if Fraction(r) >= 1 / a2:
        raise HypothesisViolated(
            f"bound requires r < 1/alpha^2 = {format_rational(1 / a2)}, got r = {r}"
        )
    return r * (1 - a2) / (1 - r * a2)


def relative_bound_floor(r: int, angle: Fraction) -> int:
    """Integer form of the bound (floor of the exact rational)."""
    value = relative_bound(r, angle)
    return value.numerator // value.denominator


@dataclass(frozen=True)
class BoundsEntry:
    d: int
    lower: int
    upper: int


def known_bounds(d: int) -> BoundsEntry:
    """Best known range for the maximum line count in dimension d."""
    if d not in BOUNDS_TABLE:
        raise OutOfRange(f"bounds registry covers dimensions 2..43, got {d}")
    lo, hi = BOUNDS_TABLE[d]
    return BoundsEntry(d, lo, hi)


def to_json_dict(ls: LineSet) -> dict:
    """Canonical JSON form: sign pattern + angle (1-based-friendly, compact)."""
    out = {
        "n": ls.n,
        "angle": format_rational(ls.angle),
        "signs": [list(row) for row in ls.sign_matrix().signs],
    }
    if ls.coords is not None:
        out["coords"] = [list(row) for row in ls.coords]
        out["coords_norm_sq"] = ls.coords_norm_sq
    return out


def from_json_dict(data: dict) -> LineSet:
    """Parse the canonical form; a "gram" field of "p/q" strings is also
    accepted (debugging aid for matrices that are not sign-constrained)."""
    angle = parse_rational(data["angle"])
    coords = data.get("coords")
    norm_sq = data.get("coords_norm_sq")
    if "signs" in data:
        s = SignMatrix.from_rows(data["signs"])
        ls = from_sign_matrix(s, angle)
        if coords is not None:
            ls = LineSet.from_gram(ls.gram, angle, coords, norm_sq)
        return ls
    if "gram" in data:
        rows = [[parse_rational(str(x)) for x in row] for row in data["gram"]]
        return LineSet.from_gram(RatMatrix.from_rows(rows), angle, coords, norm_sq)
    raise ValueError('expected a "signs" or "gram" field')


def dumps(ls: LineSet) -> str:
    return json.dumps(to_json_dict(ls), sort_keys=True)


def loads(text: str) -> LineSet:
    return from_json_dict(json.loads(text))


def save(ls: LineSet, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(ls))
        f.write("\n")


def load(path: str) -> LineSet:
    with open(path, "r", encoding="utf-8") as f:
        return loads(f.read())
