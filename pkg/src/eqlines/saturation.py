"""Saturation analysis for an equiangular line set.

Pipeline: pick a basis among the lines, enumerate every unit vector that
meets each basis line at +-alpha (sign-pattern search over 2^(d-1)
patterns), connect two candidates when their inner product is +-alpha,
and bound any equiangular extension of the basis by d + omega of that
compatibility graph.  The set is saturated when the bound equals its
own size.

All decisions are exact.  Patterns are indexed by m in [0, 2^(d-1)):
the first sign is +1 and sign t (t >= 1) is +1 iff bit (d-1-t) of m is
0, so ascending m is lexicographic order with + before -.  Indices into
line sets are 0-based throughout the API.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from . import _intops, linalg
from .errors import HypothesisViolated, NotABasis
from .lineset import LineSet
from .maxclique import CliqueResult, SimpleGraph, max_clique

ProgressSink = Callable[[int, int], None]

_PROGRESS_STEP = 1 << 16


@dataclass(frozen=True)
class Candidate:
    """One unit vector meeting every basis line at +-alpha.

    pattern_index: lexicographic index m of the sign pattern;
    signs: the pattern itself (first entry +1);
    coeffs: coordinates over the basis lines, c = alpha * G_B^(-1) * signs.
    """

    pattern_index: int
    signs: tuple[int, ...]
    coeffs: tuple[Fraction, ...]


@dataclass(frozen=True)
class SaturationReport:
    basis_indices: tuple[int, ...]
    candidate_count: int
    clique_number: int
    n_bound: int
    saturated: bool
    clique_witness: tuple[int, ...]
    clique_optimal: bool
    total_patterns: int

    def to_dict(self, one_based: bool = True) -> dict:
        off = 1 if one_based else 0
        return {
            "basis": [i + off for i in self.basis_indices],
            "candidate_count": self.candidate_count,
            "clique_number": self.clique_number,
            "N": self.n_bound,
            "saturated": self.saturated,
            "clique_witness": [i + off for i in self.clique_witness],
            "clique_optimal": self.clique_optimal,
            "total_patterns": self.total_patterns,
        }


def select_basis(
    ls: LineSet, override: Optional[Sequence[int]] = None
) -> list[int]:
    """Indices of rank(ls) lines whose Gram block is nonsingular.

    Default: greedy leftmost scan keeping each line that enlarges the
    span.  With override: the given indices are verified and returned.
    """
    r = ls.rank
    if override is not None:
        idx = [int(i) for i in override]
        if any(not 0 <= i < ls.n for i in idx):
            raise IndexError("basis index out of range")
        if len(idx) != r:
            raise NotABasis(f"basis needs {r} indices, got {len(idx)}")
        if len(set(idx)) != len(idx) or linalg.rank(
            ls.gram.submatrix(idx, idx)
        ) != r:
            raise NotABasis("override indices have rank-deficient Gram block")
        return idx

    m_rows, _ = _intops.integer_gram(ls.gram)
    engine = _intops.SpanEngine(m_rows)
    chosen: list[int] = []
    in_span: frozenset[int] = frozenset()
    while len(chosen) < r:
        nxt = next(
            j for j in range(ls.n) if j not in in_span and j not in chosen
        )
        chosen.append(nxt)
        if len(chosen) < r:
            got = engine.members(chosen)
            assert got is not None, "greedily chosen lines must stay independent"
            in_span = frozenset(got)
    return chosen


def _pattern_signs(m: int, d: int) -> tuple[int, ...]:
    return (1,) + tuple(
        -1 if m >> (d - 1 - t) & 1 else 1 for t in range(1, d)
    )


def _enumerate_worker(
    args: tuple[list[list[int]], int, int, int, str]
) -> list[int]:
    w, t_target, start, stop, engine = args
    if engine == "gray":
        return _intops.enumerate_range_gray(w, t_target, start, stop)
    return _intops.enumerate_range_batch(w, t_target, start, stop)


def enumerate_candidates(
    ls: LineSet,
    basis: Sequence[int],
    progress: Optional[ProgressSink] = None,
    threads: int = 1,
    engine: str = "batch",
) -> list[Candidate]:
    """All candidates over the basis, in sign-pattern lexicographic order.

    Each of the 2^(d-1) patterns eps (first sign +1) is kept iff the
    solution c of <v, b_k> = eps_k * alpha for all k has exact unit norm.
    engine chooses between the vectorized batch scan and the single-flip
    incremental scan; both are exact and return identical results.
    progress (if given) receives (patterns_done, patterns_total) about
    every 2^16 patterns.  threads > 1 splits the pattern range across
    processes; the output does not depend on the split.
    """
    if engine not in ("batch", "gray"):
        raise ValueError(f"unknown enumeration engine: {engine!r}")
    d = len(basis)
    w, scale, t_target = _intops.scaled_candidate_matrix(
        ls.gram, basis, ls.angle
    )
    total = 1 << (d - 1)

    if threads > 1 and total >= (1 << 16):
        bounds = [total * k // threads for k in range(threads + 1)]
        jobs = [
            (w, t_target, bounds[k], bounds[k + 1], engine)
            for k in range(threads)
            if bounds[k] < bounds[k + 1]
        ]
        kept: list[int] = []
        done = 0
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for job, part in zip(jobs, pool.map(_enumerate_worker, jobs)):
                kept.extend(part)
                done += job[3] - job[2]
                if progress is not None:
                    progress(done, total)
    else:
        if progress is None:
            gate = None
        else:
            last = [0]

            def gate(done_in_range: int) -> None:
                if done_in_range - last[0] >= _PROGRESS_STEP:
                    last[0] = done_in_range
                    progress(done_in_range, total)

        if engine == "gray":
            kept = _intops.enumerate_range_gray(w, t_target, 0, total, gate)
        else:
            kept = _intops.enumerate_range_batch(
                w, t_target, 0, total, progress=gate
            )
        if progress is not None:
            progress(total, total)

    cands = []
    for m in kept:
        signs = _pattern_signs(m, d)
        coeffs = tuple(
            Fraction(sum(w[i][j] * signs[j] for j in range(d)), scale)
            for i in range(d)
        )
        cands.append(Candidate(m, signs, coeffs))
    return cands


def build_compatibility_graph(
    cands: Sequence[Candidate], ls: LineSet, basis: Sequence[int]
) -> SimpleGraph:
    """Graph on the candidates; i ~ j iff their inner product is +-alpha.

    With c = alpha * G_B^(-1) * eps, the product c_i^T G_B c_j equals
    alpha * (eps_i^T W eps_j) / L, so edges are decided by the integer
    form against +-L.  A form of +-T would mean two patterns giving one
    line, which distinct unit-norm patterns cannot; this is asserted.
    """
    k = len(cands)
    d = len(basis)
    w, scale, t_target = _intops.scaled_candidate_matrix(
        ls.gram, basis, ls.angle
    )
    adj = [0] * k
    if k >= 2:
        e = _intops.patterns_from_indices(
            [c.pattern_index for c in cands], d
        )
        mat, exact, is_exact = _intops.pairwise_forms(e, w)
        if is_exact:
            dup = np.abs(mat) == t_target
            np.fill_diagonal(dup, False)
            if np.any(dup):
                i, j = map(int, np.argwhere(dup)[0])
                raise HypothesisViolated(
                    f"candidates {i} and {j} describe the same line"
                )
            ii, jj = np.nonzero(np.triu(np.abs(mat) == scale, 1))
            pairs = zip(ii.tolist(), jj.tolist())
        else:
            base = 1 << 40
            maybe = np.zeros(mat.shape, dtype=bool)
            for tgt in (scale, -scale, t_target, -t_target):
                maybe |= (mat - tgt) % base == 0
            ii, jj = np.nonzero(np.triu(maybe, 1))
            pairs = []
            for i, j in zip(ii.tolist(), jj.tolist()):
                value = abs(exact(i, j))
                if value == t_target:
                    raise HypothesisViolated(
                        f"candidates {i} and {j} describe the same line"
                    )
                if value == scale:
                    pairs.append((i, j))
        for i, j in pairs:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return SimpleGraph(k, tuple(adj))


def line_pattern_indices(ls: LineSet, basis: Sequence[int]) -> dict[int, int]:
    """Pattern index of each non-basis line's sign vector over the basis,
    normalized to first sign +1."""
    alpha = ls.angle
    d = len(basis)
    out: dict[int, int] = {}
    basis_set = set(basis)
    for j in range(ls.n):
        if j in basis_set:
            continue
        signs = []
        for k in basis:
            x = ls.gram[j, k]
            if x == alpha:
                signs.append(1)
            elif x == -alpha:
                signs.append(-1)
            else:
                raise HypothesisViolated(
                    f"line {j} meets basis line {k} at {x}, not +-{alpha}"
                )
        if signs[0] == -1:
            signs = [-s for s in signs]
        m = 0
        for t in range(1, d):
            if signs[t] == -1:
                m |= 1 << (d - 1 - t)
        out[j] = m
    return out


def verify_nonbasis_cover(
    ls: LineSet,
    basis: Sequence[int],
    cands: Sequence[Candidate],
    graph: SimpleGraph,
) -> None:
    """The non-basis lines must appear among the candidates (up to global
    sign) and be pairwise compatible, which forces N >= n."""
    where = {c.pattern_index: v for v, c in enumerate(cands)}
    vertices = []
    for j, m in line_pattern_indices(ls, basis).items():
        v = where.get(m)
        if v is None:
            raise HypothesisViolated(
                f"non-basis line {j} is missing from the candidate list"
            )
        vertices.append(v)
    for a in range(len(vertices)):
        for b in range(a + 1, len(vertices)):
            i, j = vertices[a], vertices[b]
            if not graph.adj[i] >> j & 1:
                raise HypothesisViolated(
                    f"non-basis lines map to incompatible candidates {i},{j}"
                )


def check_saturated(
    ls: LineSet,
    basis_override: Optional[Sequence[int]] = None,
    progress: Optional[ProgressSink] = None,
    threads: int = 1,
    engine: str = "batch",
    time_budget: Optional[float] = None,
    verify_cover: bool = True,
    graph_sink: Optional[Callable[[SimpleGraph], None]] = None,
) -> SaturationReport:
    """Full pipeline; saturated iff len(basis) + omega equals ls.n.

    verify_cover re-checks that the input's own non-basis lines appear
    among the candidates and are pairwise compatible (hence the bound
    can never fall below ls.n).  graph_sink (if given) receives the
    compatibility graph, e.g. for export.  If a time budget cut the
    clique search short, clique_optimal is False and the bound is only
    a lower bound.
    """
    basis = select_basis(ls, basis_override)
    cands = enumerate_candidates(
        ls, basis, progress=progress, threads=threads, engine=engine
    )
    graph = build_compatibility_graph(cands, ls, basis)
    if graph_sink is not None:
        graph_sink(graph)
    if verify_cover:
        verify_nonbasis_cover(ls, basis, cands, graph)
    clique: CliqueResult = max_clique(graph, time_budget)
    n_bound = len(basis) + clique.size
    return SaturationReport(
        basis_indices=tuple(basis),
        candidate_count=len(cands),
        clique_number=clique.size,
        n_bound=n_bound,
        saturated=n_bound == ls.n,
        clique_witness=clique.witness,
        clique_optimal=clique.optimal,
        total_patterns=1 << (len(basis) - 1),
    )
