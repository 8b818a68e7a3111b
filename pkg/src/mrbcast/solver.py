"""Minmax-regret broadcast center by centroid prune-and-search.

Each pass takes the centroid z of the surviving vertex set, computes z's
maximum regret on the ORIGINAL tree, and either stops (regret 0 means z
is itself a broadcast center under every scenario, hence optimal) or
prunes to z plus the survivors on z's side toward the witnessing rival
center: every vertex on the other sides has strictly larger maximum
regret, so the optimum is retained.  Sets at least halve (plus one) per
pass, so there are O(log n) passes; the leftover set of at most two
vertices is settled by direct comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, log2

from .scenario_regret import (ExtremeTables, max_regret_fast, max_regret_naive,
                              preprocess_extremes)
from .tree_core import Tree, bfs_structure, centroid_restricted


@dataclass(frozen=True)
class SolveResult:
    """center = a minmax-regret broadcast center; max_regret = its
    (recomputable) maximum regret; trace has one (size before, centroid,
    size after) entry per prune-and-search pass."""

    center: int
    max_regret: int
    iterations: int
    trace: tuple
    profile: tuple | None = None  # per-vertex regrets, naive solver only


def iteration_bound(n: int) -> int:
    return ceil(log2(n)) + 1 if n > 1 else 1


def solve(t: Tree, rho, tables: ExtremeTables | None = None) -> SolveResult:
    """Prune-and-search over centroids; the returned max_regret is the
    global minimum of the maximum regret."""
    if tables is None:
        tables = preprocess_extremes(t, rho)
    members = set(range(t.n))
    trace = []
    while len(members) >= 3:
        size_before = len(members)
        z = centroid_restricted(t, members)
        report = max_regret_fast(t, rho, z, tables)
        if report.max_regret == 0:
            trace.append((size_before, z, size_before))
            return SolveResult(center=z, max_regret=0,
                               iterations=len(trace), trace=tuple(trace))
        kappa = report.witness_center  # != z: z is not a center here
        members = _prune(t, members, z, kappa)
        trace.append((size_before, z, len(members)))
    best_v = None
    best_r = None
    for v in sorted(members):
        r = max_regret_fast(t, rho, v, tables).max_regret
        if best_r is None or r < best_r:
            best_v, best_r = v, r
    return SolveResult(center=best_v, max_regret=best_r,
                       iterations=len(trace), trace=tuple(trace))


def _prune(t: Tree, members: set, z: int, kappa: int) -> set:
    """{z} plus the survivors inside the open branch <z, kappa>."""
    _, parent, _ = bfs_structure(t, z)
    w = kappa
    while int(parent[w]) != z:
        w = int(parent[w])
    keep = {z}
    if w in members:
        stack = [w]
        seen = {w, z}
        while stack:
            v = stack.pop()
            if v in members:
                keep.add(v)
            for u, _e in t.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return keep


def solve_naive(t: Tree, rho, engine: str = "auto") -> SolveResult:
    """Reference solver: maximum regret of every vertex, argmin with the
    lowest-id tie-break; also yields the full regret profile."""
    profile = tuple(max_regret_naive(t, rho, v, engine=engine).max_regret
                    for v in range(t.n))
    best_v = min(range(t.n), key=lambda v: (profile[v], v))
    return SolveResult(center=best_v, max_regret=profile[best_v],
                       iterations=0, trace=(), profile=profile)
