"""Exhaustive generation and combinatorial analysis of the finite lattices.

The lattice over {0..n-1} has C(n+1) + 1 elements (Catalan plus one for the
top). The generator lists them in constant amortized time per element by
growing antichains left to right; rank histograms and the exact poset width
(maximum antichain of the lattice itself, via minimum chain cover and
bipartite matching) are built on top of the stream.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .antichain import BOTTOM, TOP, Antichain
from .intervals import Interval
from .operators import rank

__all__ = [
    "enumerate_lattice",
    "cardinality",
    "LevelProfile",
    "level_profile",
    "width",
    "WIDTH_BOUND",
]

# exact width needs a maximum matching over all comparable pairs; beyond
# seven positions (1431 lattice elements) that stops being interactive
WIDTH_BOUND = 7


def enumerate_lattice(n: int) -> Iterator[Antichain]:
    """Yield every element of the lattice over {0..n-1}, top last.

    Proper antichains come out in the recursion order of the growing scan:
    each value is emitted before every extension obtained by appending an
    interval [i..j] whose extremes both exceed those of the current last
    member. No duplicates; the stream has cardinality(n) elements.
    """
    if n < 0:
        raise ValueError("universe size must be nonnegative")
    stack: list[Interval] = []

    def grow(lo: int, ro: int) -> Iterator[Antichain]:
        yield Antichain(tuple(stack))
        for i in range(lo, n):
            for j in range(max(i, ro), n):
                stack.append(Interval(i, j))
                yield from grow(i + 1, j + 1)
                stack.pop()

    yield from grow(0, 0)
    yield TOP


def cardinality(n: int) -> int:
    """C(n+1) + 1, the number of lattice elements over n positions."""
    if n < 0:
        raise ValueError("universe size must be nonnegative")
    k = n + 1
    return math.comb(2 * k, k) // (k + 1) + 1


@dataclass(frozen=True)
class LevelProfile:
    """Histogram of rank over the lattice on {0..n-1}; one entry per level."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != 2 + self.n * (self.n + 1) // 2:
            raise ValueError("profile length must equal the lattice height")

    @property
    def max_level(self) -> int:
        return max(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)


def level_profile(n: int) -> LevelProfile:
    if n < 1:
        raise ValueError("universe size must be positive")
    counts = [0] * (2 + n * (n + 1) // 2)
    for a in enumerate_lattice(n):
        counts[rank(a, n)] += 1
    return LevelProfile(n, tuple(counts))


def width(n: int, *, force: bool = False) -> int:
    """Exact maximum-antichain size of the lattice poset over {0..n-1}.

    Computed as |elements| minus a maximum matching of the comparability
    graph (minimum chain cover). Refuses n > WIDTH_BOUND unless forced,
    since cost grows with the square of the Catalan numbers.
    """
    if n < 0:
        raise ValueError("universe size must be nonnegative")
    if n == 0:
        return 1  # two-element chain
    if n > WIDTH_BOUND and not force:
        raise ValueError(f"width({n}) exceeds the supported bound {WIDTH_BOUND}; pass force=True")
    elements = list(enumerate_lattice(n))
    count = len(elements)
    masks = [_downset_mask(a, n) for a in elements]
    ranks = [rank(a, n) for a in elements]
    by_rank: dict[int, list[int]] = {}
    for idx, r in enumerate(ranks):
        by_rank.setdefault(r, []).append(idx)
    levels = sorted(by_rank)
    adjacency: list[list[int]] = [[] for _ in range(count)]
    for idx in range(count):
        mask = masks[idx]
        for r in levels:
            if r <= ranks[idx]:
                continue
            for other in by_rank[r]:
                if mask & ~masks[other] == 0:
                    adjacency[idx].append(other)
    return count - _hopcroft_karp(adjacency, count)


def _downset_mask(a: Antichain, n: int) -> int:
    """Bitmask over all intervals of {0..n-1}, plus a top bit, of the lower set."""
    num = n * (n + 1) // 2
    if a.is_top:
        return (1 << (num + 1)) - 1
    mask = 0
    for iv in a.intervals:
        for left in range(0, iv.left + 1):
            base = _interval_bit(left, n)
            lo, hi = max(iv.right, left), n - 1
            # contiguous run of bits for [left..lo] .. [left..hi]
            mask |= ((1 << (hi - lo + 1)) - 1) << (base + (lo - left))
    return mask


def _interval_bit(left: int, n: int) -> int:
    # intervals ordered [0..0],[0..1],..,[0..n-1],[1..1],..: start of the row
    return left * n - left * (left - 1) // 2


def _hopcroft_karp(adjacency: list[list[int]], count: int) -> int:
    """Maximum bipartite matching size; left and right are both 0..count-1."""
    INF = float("inf")
    match_left: list[int] = [-1] * count
    match_right: list[int] = [-1] * count
    dist: list[float] = [0.0] * count

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in range(count):
            if match_left[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        reachable_free = INF
        while queue:
            u = queue.popleft()
            if dist[u] >= reachable_free:
                continue
            for v in adjacency[u]:
                w = match_right[v]
                if w == -1:
                    if reachable_free == INF:
                        reachable_free = dist[u] + 1
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return reachable_free != INF

    def dfs(u: int) -> bool:
        for v in adjacency[u]:
            w = match_right[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_left[u] = v
                match_right[v] = u
                return True
        dist[u] = INF
        return False

    matched = 0
    while bfs():
        for u in range(count):
            if match_left[u] == -1 and dfs(u):
                matched += 1
    return matched
