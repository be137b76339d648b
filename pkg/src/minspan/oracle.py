"""Brute-force reference implementations over a bounded universe.

Everything here is computed straight from definitions: lower sets, set
inclusion, exhaustive scans over all intervals or all lattice elements.
Deliberately slow and deliberately independent of the closed-form
operators, so the two can check each other. Shares only the value types
with the rest of the library.
"""

from __future__ import annotations

from dataclasses import dataclass

from .antichain import Antichain, CriticalSet
from .intervals import EMPTY, ExtendedInterval, Interval

__all__ = [
    "all_intervals",
    "DownSet",
    "downset",
    "oracle_leq",
    "oracle_bound",
    "oracle_residual",
    "oracle_crit",
    "oracle_rank",
]


def all_intervals(n: int) -> list[Interval]:
    return [Interval(lo, hi) for lo in range(n) for hi in range(lo, n)]


@dataclass(frozen=True)
class DownSet:
    """All intervals of {0..n-1} lying below some member (i.e. containing it)."""

    n: int
    members: frozenset[Interval]


def downset(a: Antichain, n: int) -> DownSet:
    if a.is_top:
        raise ValueError("the lower set of the top element is not a set of intervals")
    found = frozenset(
        iv for iv in all_intervals(n) if any(iv.contains(m) for m in a.intervals)
    )
    return DownSet(n, found)


def oracle_leq(a: Antichain, b: Antichain, n: int) -> bool:
    if b.is_top:
        return True
    if a.is_top:
        return False
    return downset(a, n).members <= downset(b, n).members


def _minimal(intervals: set[Interval]) -> Antichain:
    keep = [
        iv
        for iv in intervals
        if not any(other != iv and iv.contains(other) for other in intervals)
    ]
    keep.sort(key=lambda iv: (iv.left, iv.right))
    return Antichain(keep)


def oracle_bound(a: Antichain, b: Antichain, n: int, kind: str) -> Antichain:
    """Join or meet computed through lower sets: union or intersection, then minimize."""
    if kind not in ("join", "meet"):
        raise ValueError(f"kind must be join or meet, not {kind!r}")
    if a.is_top or b.is_top:
        if kind == "join":
            return Antichain.top()
        return b if a.is_top else a
    da, db = downset(a, n).members, downset(b, n).members
    pool = set(da | db) if kind == "join" else set(da & db)
    return _minimal(pool)


def oracle_residual(a: Antichain, b: Antichain, n: int, kind: str) -> Antichain:
    """Residuals found by exhaustive search over every lattice element.

    ``implies`` is the join of all c with meet(a, c) <= b; ``minus`` the meet
    of all c with a <= join(b, c). Feasible only at desk scale.
    """
    from .enumeration import enumerate_lattice

    if kind not in ("implies", "minus"):
        raise ValueError(f"kind must be implies or minus, not {kind!r}")
    if kind == "implies":
        acc = Antichain.bottom()
        for c in enumerate_lattice(n):
            if oracle_leq(oracle_bound(a, c, n, "meet"), b, n):
                acc = oracle_bound(acc, c, n, "join")
        return acc
    acc = Antichain.top()
    for c in enumerate_lattice(n):
        if oracle_leq(a, oracle_bound(b, c, n, "join"), n):
            acc = oracle_bound(acc, c, n, "meet")
    return acc


def oracle_crit(a: Antichain, n: int) -> CriticalSet:
    """Scan every interval (including the empty one) for criticality.

    Keeps the candidates containing no member of a that have no strict
    superset among the candidates.
    """
    if a.is_top:
        return CriticalSet(())
    members = a.intervals
    candidates: list[ExtendedInterval] = [EMPTY]
    for iv in all_intervals(n):
        if not any(iv.contains(m) for m in members):
            candidates.append(ExtendedInterval.finite(iv.left, iv.right))
    keep = [
        c
        for c in candidates
        if not any(other != c and other.contains(c) for other in candidates)
    ]
    keep.sort(key=lambda e: (e.left if e.left is not None else -1, 1 if e.empty else 0))
    return CriticalSet(tuple(keep))


def oracle_rank(a: Antichain, n: int) -> int:
    """Number of join-irreducible elements dominated by a.

    These are the singleton antichains {I}, plus the top element itself
    when a is the top.
    """
    if a.is_top:
        return n * (n + 1) // 2 + 1
    return len(downset(a, n).members)
