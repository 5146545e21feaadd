"""Randomized rank-reduction search inside an equiangular line set.

Strategy: draw a subset of lines whose Gram block is nonsingular, take
its span-closure (every line of the parent set lying in the span), and
keep the largest closure seen.  Closures of d independent lines have
rank exactly d, so large closures are large lower-rank line sets.

The generator is SplitMix64, pinned here so that results reproduce
bit-for-bit: state advances by the golden-ratio increment and is
finalized by two xor-multiply rounds.  Run i of a search derives its
own seed as mix64(master + i*GOLDEN), so runs are independent of both
execution order and thread count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import _intops, linalg
from .errors import OutOfRange, RankDeficient
from .lineset import LineSet, validate

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

ProgressSink = Callable[[int, int], None]


def mix64(z: int) -> int:
    """SplitMix64 finalizer: two xor-shift-multiply rounds plus a shift."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic 64-bit generator; identical output on every platform."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform value in [0, bound) via rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        lim = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next64()
            if r < lim:
                return r % bound


def run_seed(master: int, index: int) -> int:
    """Per-run seed: decorrelates consecutive runs of one master seed."""
    return mix64((master + index * GOLDEN) & MASK64)


def sample_subset(rng: SplitMix64, n: int, k: int) -> list[int]:
    """Sorted uniform k-subset of range(n) (partial Fisher-Yates)."""
    idx = list(range(n))
    for i in range(k):
        j = i + rng.below(n - i)
        idx[i], idx[j] = idx[j], idx[i]
    return sorted(idx[:k])


@dataclass(frozen=True)
class SearchRun:
    """One draw: its subset and closure; rank 0 marks a rank-deficient
    draw, whose closure is not computed and counts as size 0."""

    index: int
    seed: int
    subset: tuple[int, ...]
    closure: tuple[int, ...]
    closure_size: int
    rank: int

    @property
    def rank_ok(self) -> bool:
        return self.rank > 0

    def to_dict(self, one_based: bool = True) -> dict:
        off = 1 if one_based else 0
        return {
            "run": self.index,
            "seed": self.seed,
            "subset": [i + off for i in self.subset],
            "closure": [i + off for i in self.closure],
            "closure_size": self.closure_size,
            "rank": self.rank,
            "rank_ok": self.rank_ok,
        }


@dataclass(frozen=True)
class SearchSummary:
    runs: int
    target_rank: int
    master_seed: int
    best: Optional[SearchRun]
    histogram: dict[int, int]
    run_log: tuple[SearchRun, ...]

    def to_dict(self, one_based: bool = True) -> dict:
        return {
            "runs": self.runs,
            "target_rank": self.target_rank,
            "seed": self.master_seed,
            "best": None if self.best is None else self.best.to_dict(one_based),
            "histogram": {
                str(k): self.histogram[k] for k in sorted(self.histogram)
            },
        }


def span_closure(ls: LineSet, subset: Sequence[int]) -> list[int]:
    """Ascending indices of every line lying in the span of the subset.

    Exact projection criterion: j is in the span iff
    G_jS (G_SS)^(-1) G_Sj == G_jj.  The subset itself is always included.
    Raises RankDeficient when the subset's Gram block is singular.
    """
    idx = [int(i) for i in subset]
    if any(not 0 <= i < ls.n for i in idx):
        raise IndexError("line index out of range")
    m_rows, _ = _intops.integer_gram(ls.gram)
    got = _intops.SpanEngine(m_rows).members(sorted(idx))
    if got is None:
        raise RankDeficient(
            f"Gram block on {len(idx)} lines is singular"
        )
    return got


def _run_one(
    engine: "_intops.SpanEngine",
    n: int,
    target_rank: int,
    master: int,
    index: int,
) -> SearchRun:
    seed = run_seed(master, index)
    subset = sample_subset(SplitMix64(seed), n, target_rank)
    members = engine.members(subset)
    if members is None:
        return SearchRun(index, seed, tuple(subset), (), 0, 0)
    return SearchRun(
        index, seed, tuple(subset), tuple(members), len(members), target_rank
    )


def _search_worker(
    args: tuple[list[list[int]], int, int, int, int, int]
) -> list[SearchRun]:
    m_rows, n, target_rank, master, lo, hi = args
    engine = _intops.SpanEngine(m_rows)
    return [_run_one(engine, n, target_rank, master, i) for i in range(lo, hi)]


def random_search(
    ls: LineSet,
    target_rank: int,
    runs: int,
    seed: int,
    threads: int = 1,
    progress: Optional[ProgressSink] = None,
) -> SearchSummary:
    """runs independent draws of target_rank lines; summary of closures.

    Deterministic in (ls, target_rank, runs, seed): each run's subset
    comes from its own derived seed, results merge in run order, and the
    best run is the smallest-index run of maximal closure size.  Draws
    with singular Gram blocks are recorded at histogram size 0.
    """
    if not 1 <= target_rank <= ls.rank:
        raise OutOfRange(
            f"target rank must lie in 1..{ls.rank}, got {target_rank}"
        )
    seed &= MASK64
    m_rows, _ = _intops.integer_gram(ls.gram)
    log: list[SearchRun] = []
    if threads > 1 and runs >= 64:
        bounds = [runs * k // threads for k in range(threads + 1)]
        jobs = [
            (m_rows, ls.n, target_rank, seed, bounds[k], bounds[k + 1])
            for k in range(threads)
            if bounds[k] < bounds[k + 1]
        ]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_search_worker, jobs):
                log.extend(part)
                if progress is not None:
                    progress(len(log), runs)
    else:
        engine = _intops.SpanEngine(m_rows)
        for i in range(runs):
            log.append(_run_one(engine, ls.n, target_rank, seed, i))
            if progress is not None and (
                len(log) % 256 == 0 or len(log) == runs
            ):
                progress(len(log), runs)

    histogram: dict[int, int] = {}
    best: Optional[SearchRun] = None
    for run in log:
        histogram[run.closure_size] = histogram.get(run.closure_size, 0) + 1
        if best is None or run.closure_size > best.closure_size:
            best = run
    return SearchSummary(
        runs=runs,
        target_rank=target_rank,
        master_seed=seed,
        best=best,
        histogram=histogram,
        run_log=tuple(log),
    )


def extract_sublineset(ls: LineSet, indices: Sequence[int]) -> LineSet:
    """Principal Gram submatrix as a new LineSet, rank recomputed and all
    invariants re-validated (a failed validation raises ValueError)."""
    sub = ls.restrict(indices)
    report = validate(sub)
    if not report.passed:
        failed = [c.name for c in report.checks if not c.passed]
        raise ValueError(f"extracted line set fails validation: {failed}")
    return sub


def orthogonal_complement(
    ls: LineSet, indices: Sequence[int]
) -> list[tuple[int, ...]]:
    """Primitive integer basis of the space orthogonal to the coordinate
    vectors of the indexed lines.  Requires a coordinate-carrying set."""
    if ls.coords is None:
        raise ValueError("line set carries no coordinate vectors")
    rows = [[int(x) for x in ls.coords[i]] for i in indices]
    kernel = linalg.kernel(linalg.RatMatrix.from_rows(rows))
    return [tuple(int(x) for x in vec) for vec in kernel]


def is_orthogonal_to_all(
    ls: LineSet, indices: Sequence[int], vector: Sequence[int]
) -> bool:
    """Whether the integer vector is orthogonal to every indexed line's
    coordinate vector (i.e. lies in the orthogonal complement)."""
    if ls.coords is None:
        raise ValueError("line set carries no coordinate vectors")
    vec = [int(x) for x in vector]
    return all(
        sum(a * b for a, b in zip(ls.coords[i], vec)) == 0 for i in indices
    )
