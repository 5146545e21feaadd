"""Exact maximum clique via branch and bound with greedy-coloring bounds.

Vertices are 0-based; adjacency rows are Python int bitsets, which keeps
the inner loops allocation-free (set intersection is a single AND).
Deterministic by construction: vertex ties always break toward the
lowest index, so identical inputs return identical witnesses.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph; adj[i] has bit j set iff ij is an edge."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} has bits beyond vertex {self.n - 1}")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.adj[i] >> j & 1) != (self.adj[j] >> i & 1):
                    raise ValueError(f"adjacency not symmetric at ({i},{j})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, tuple(adj))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: tuple[int, ...]
    optimal: bool


def _color_order(adj: Sequence[int], pool: int) -> list[tuple[int, int]]:
    """Greedy coloring of the vertices in pool, lowest index first.

    Returns (vertex, color) pairs; vertices appear grouped by color in
    increasing color order, so the last entries have the highest bound.
    """
    order = []
    remaining = pool
    color = 0
    while remaining:
        color += 1
        avail = remaining
        while avail:
            v = (avail & -avail).bit_length() - 1
            order.append((v, color))
            remaining &= ~(1 << v)
            avail &= ~adj[v]
            avail &= remaining
    return order


def greedy_coloring_bound(g: SimpleGraph, candidates: Optional[int] = None) -> int:
    """Number of greedy colors of the induced subgraph; an upper bound on
    its clique number.  candidates is a vertex bitset (default: all)."""
    pool = (1 << g.n) - 1 if candidates is None else candidates
    order = _color_order(g.adj, pool)
    return order[-1][1] if order else 0


def degeneracy_order(g: SimpleGraph) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (lowest index on ties)."""
    remaining = (1 << g.n) - 1
    order = []
    for _ in range(g.n):
        best_v = -1
        best_deg = g.n + 1
        pool = remaining
        while pool:
            v = (pool & -pool).bit_length() - 1
            pool &= pool - 1
            deg = (g.adj[v] & remaining).bit_count()
            if deg < best_deg:
                best_v, best_deg = v, deg
        order.append(best_v)
        remaining &= ~(1 << best_v)
    return order


class _Budget:
    __slots__ = ("deadline", "ticks")

    def __init__(self, seconds: Optional[float]):
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.ticks = 0

    def expired(self) -> bool:
        if self.deadline is None:
            return False
        self.ticks += 1
        if self.ticks & 2047:
            return False
        return time.monotonic() > self.deadline


class _TimeUp(Exception):
    pass


def max_clique(
    g: SimpleGraph, time_budget: Optional[float] = None
) -> CliqueResult:
    """Maximum clique size and one witness.

    Branch and bound: root vertices in degeneracy order, children pruned
    by greedy-coloring bounds.  With a time budget (seconds), the best
    clique found so far is returned with optimal=False once time is up.
    """
    if g.n == 0:
        return CliqueResult(0, (), True)
    adj = g.adj
    budget = _Budget(time_budget)
    best_size = 0
    best_witness: list[int] = []
    stack: list[int] = []

    def expand(pool: int) -> None:
        nonlocal best_size, best_witness
        if budget.expired():
            raise _TimeUp
        order = _color_order(adj, pool)
        for v, color in reversed(order):
            if len(stack) + color <= best_size:
                return
            pool &= ~(1 << v)
            stack.append(v)
            child = pool & adj[v]
            if child:
                expand(child)
            elif len(stack) > best_size:
                best_size = len(stack)
                best_witness = stack.copy()
            stack.pop()

    order = degeneracy_order(g)
    later = (1 << g.n) - 1
    optimal = True
    try:
        for v in order:
            later &= ~(1 << v)
            pool = adj[v] & later
            if 1 + pool.bit_count() <= best_size:
                continue
            stack.append(v)
            if pool:
                expand(pool)
            elif len(stack) > best_size:
                best_size = len(stack)
                best_witness = stack.copy()
            stack.pop()
    except _TimeUp:
        optimal = False
    return CliqueResult(best_size, tuple(sorted(best_witness)), optimal)


def to_dimacs(g: SimpleGraph, comment: str = "") -> str:
    """DIMACS .clq text (1-based vertices) for third-party solvers."""
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"c {part}")
    lines.append(f"p edge {g.n} {g.edge_count()}")
    for i in range(g.n):
        row = g.adj[i] >> (i + 1) << (i + 1)
        while row:
            j = (row & -row).bit_length() - 1
            row &= row - 1
            lines.append(f"e {i + 1} {j + 1}")
    return "\n".join(lines) + "\n"
