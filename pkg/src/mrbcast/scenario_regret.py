"""Worst-case scenario search under interval edge-weight uncertainty.

For a query vertex x, the worst-case loss of choosing x as the broadcast
origin is realized by a scenario from a small structured family: for each
pivot y != x there is a base scenario (hi weights on the x-to-y path and
on y's far side, lo elsewhere) plus the scenarios obtained by resetting
the far side's neighbor subtrees to lo, one suffix at a time in the order
of their base-scenario keys.  ``max_regret_naive`` materializes and
evaluates every member of that family; ``max_regret_fast`` scores each
(pivot, j) pair with the equivalent objective

    d(x,y)*rho + pathw(x,y) + b_time(y, far side) - b_time(y, T)

evaluated incrementally across j via the bucket engine, after an
O(n log n) preprocessing of the two extreme scenarios (all-hi / all-lo).
Both return the same maximum regret; tie-breaks are fixed to the smallest
(pivot id, j), so reports are deterministic.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._succ import EvolvingBuckets, evolve_values
from .broadcast import Scenario, branch_times, btime, btime_all, make_exclusion, neighbor_keys, _check_rho
from .errors import IndexOutOfRange, SameVertex, StaleTables
from .tree_core import Tree, bfs_structure


@dataclass(frozen=True)
class ExtremeTables:
    """Preprocessed branch times under the all-hi (plus) and all-lo
    (minus) scenarios.

    branch_plus[p] / branch_minus[p], for the CSR position p of the
    directed pair (v -> u), hold b_time(u, B<u,v>) under the respective
    scenario: every directed edge in both directions.  total_* are the
    whole-tree times; order_plus[v] / order_minus[v] list v's CSR
    positions sorted by the corresponding key w(v,u) + branch(u away
    from v), nonincreasing, ties toward the lower neighbor id.
    """

    tree: Tree
    rho: int
    branch_plus: np.ndarray
    branch_minus: np.ndarray
    total_plus: np.ndarray
    total_minus: np.ndarray
    order_plus: tuple
    order_minus: tuple

    def branch_time(self, u: int, v: int, hi: bool) -> int:
        """b_time of u over B<u,v> under s+ (hi=True) or s-."""
        p = self.tree.position(v, u)
        arr = self.branch_plus if hi else self.branch_minus
        return int(arr[p])

    @property
    def sorted_neighbors(self) -> tuple:
        """Per-vertex neighbor ordering by all-hi key, nonincreasing."""
        return self.order_plus


def preprocess_extremes(t: Tree, rho) -> ExtremeTables:
    """Branch times and neighbor orderings for s+ and s-, O(n log n)."""
    rho = _check_rho(rho)
    bp = branch_times(t, t.hi, rho)
    bm = branch_times(t, t.lo, rho)
    order_plus = tuple(tuple(p for _, _, p in row) for row in bp.rows)
    order_minus = tuple(tuple(p for _, _, p in row) for row in bm.rows)
    return ExtremeTables(
        tree=t, rho=rho,
        branch_plus=bp.away, branch_minus=bm.away,
        total_plus=bp.total, total_minus=bm.total,
        order_plus=order_plus, order_minus=order_minus)


def _check_tables(t: Tree, rho: int, tables: ExtremeTables) -> None:
    if tables.rho != rho or not (tables.tree is t or tables.tree == t):
        raise StaleTables("tables were built for a different tree or rho")


@dataclass(frozen=True)
class CandidateScenario:
    """Tag identifying one candidate worst-case scenario for query x.

    pivot/j name the scenario that keeps the first j far-side neighbor
    subtrees of `pivot` at hi and resets the rest to lo (j = h_i is the
    base scenario itself).  pivot=None, j=None is the family's fixed
    fallback member, the all-lo scenario."""

    x: int
    pivot: int | None
    j: int | None

    @property
    def is_baseline(self) -> bool:
        return self.pivot is None

    def materialize(self, t: Tree, rho) -> Scenario:
        if self.is_baseline:
            return Scenario.all_lo(t)
        return beta_scenario(t, rho, self.x, self.pivot, self.j)


@dataclass(frozen=True)
class RegretReport:
    """Maximum regret of x with a witnessing scenario and rival center.

    Recomputable from scratch: under worst_scenario materialized,
    b_time(x,T) - b_time(witness_center,T) equals max_regret, and
    witness_center attains the minimum broadcast time."""

    x: int
    max_regret: int
    worst_scenario: CandidateScenario
    witness_center: int


# ------------------------------------------------------------------ #
# Scenario constructions                                               #
# ------------------------------------------------------------------ #

def alpha_scenario(t: Tree, x: int, pivot: int) -> Scenario:
    """Base scenario for (x, pivot): hi on the x-to-pivot path and on
    every edge of pivot's far side B<pivot, x>, lo elsewhere."""
    t.check_vertex(x)
    t.check_vertex(pivot)
    if x == pivot:
        raise SameVertex("alpha_scenario needs pivot != x")
    w = t.lo.copy()
    _, parent, ppos = bfs_structure(t, x)
    v = pivot
    while v != x:
        w[t.eid[ppos[v]]] = t.hi[t.eid[ppos[v]]]
        v = int(parent[v])
    far_order, _, far_ppos = bfs_structure(t, pivot, cut=int(parent[pivot]))
    for v in far_order[1:]:
        e = t.eid[far_ppos[v]]
        w[e] = t.hi[e]
    return Scenario(t, w)


def _far_neighbor_order(t: Tree, rho: int, x: int, pivot: int, alpha: Scenario):
    """Pivot's far-side neighbors ordered by base-scenario key (desc, id)."""
    _, parent, _ = bfs_structure(t, x)
    toward_x = int(parent[pivot])
    return toward_x, neighbor_keys(t, alpha, rho, pivot, excluded=toward_x)


def beta_scenario(t: Tree, rho, x: int, pivot: int, j: int) -> Scenario:
    """The base scenario with the far-side subtrees ranked after j reset
    to lo (subtree edges and the connecting edge); j = h_i reproduces the
    base scenario exactly."""
    rho = _check_rho(rho)
    alpha = alpha_scenario(t, x, pivot)  # validates x, pivot
    toward_x, order = _far_neighbor_order(t, rho, x, pivot, alpha)
    h = len(order)
    if not (1 <= j <= h):
        raise IndexOutOfRange(f"j must be in 1..{h}, got {j}")
    w = alpha.weights.copy()
    for u, _key in order[j:]:
        sub_order, _, sub_ppos = bfs_structure(t, u, cut=pivot)
        w[t.eid[t.position(pivot, u)]] = t.lo[t.eid[t.position(pivot, u)]]
        for v in sub_order[1:]:
            e = t.eid[sub_ppos[v]]
            w[e] = t.lo[e]
    return Scenario(t, w)


def relative_regret(t: Tree, s: Scenario, rho, x: int, y: int) -> int:
    """b_time(x,T) - b_time(y,T) under s; antisymmetric in (x, y)."""
    return btime(t, s, rho, x) - btime(t, s, rho, y)


# ------------------------------------------------------------------ #
# Fast path: per-query context over the preprocessed tables            #
# ------------------------------------------------------------------ #

class _QueryContext:
    """Per-query data for x: BFS structure, hop counts, hi path weights,
    and the fixed key of each vertex's near-side neighbor (the `mu` key),
    whose branch mixes hi path edges with lo everywhere else."""

    def __init__(self, t: Tree, rho: int, x: int, tables: ExtremeTables):
        self.t = t
        self.rho = rho
        self.x = x
        self.tables = tables
        order, parent, ppos = bfs_structure(t, x)
        self.order = order
        self.parent = parent
        self.ppos = ppos
        n = t.n
        eid, nbr = t.eid, t.nbr
        hi, lo = t.hi, t.lo
        depth = np.zeros(n, dtype=np.int64)
        pathw = np.zeros(n, dtype=np.int64)
        for v in order[1:]:
            p = int(parent[v])
            depth[v] = depth[p] + 1
            pathw[v] = pathw[p] + hi[eid[ppos[v]]]
        self.depth = depth
        self.pathw = pathw

        # up_mixed[v] = b_time(parent(v), B<parent(v), v>) under the
        # scenario "x-to-parent(v) path at hi, all other edges at lo".
        up_mixed = np.zeros(n, dtype=np.int64)
        bmin = tables.branch_minus
        for v in order:
            v = int(v)
            pp = ppos[v]
            row = [(-(int(lo[eid[p]]) + int(bmin[p])), int(nbr[p]), int(p))
                   for p in tables.order_minus[v] if p != pp]
            if v != x:
                pk = int(hi[eid[pp]]) + int(up_mixed[v])
                insort(row, (-pk, int(nbr[pp]), int(pp)))
            oracle = make_exclusion([-k for k, _, _ in row], rho)
            for idx, (_, u, p) in enumerate(row):
                if p != pp:
                    up_mixed[u] = oracle.exclude(idx)
        self.up_mixed = up_mixed

    def mu_key(self, pivot: int) -> int:
        """Key of pivot's neighbor toward x under any (pivot, j) candidate."""
        pp = self.ppos[pivot]
        return int(self.t.hi[self.t.eid[pp]]) + int(self.up_mixed[pivot])

    def pivot_keys(self, pivot: int):
        """(far-side CSR positions by hi-key desc, plus keys, minus keys)."""
        tb = self.tables
        t = self.t
        pp = self.ppos[pivot]
        pos = [p for p in tb.order_plus[pivot] if p != pp]
        plus = [int(t.hi[t.eid[p]]) + int(tb.branch_plus[p]) for p in pos]
        minus = [int(t.lo[t.eid[p]]) + int(tb.branch_minus[p]) for p in pos]
        return pos, plus, minus

    def offset(self, pivot: int) -> int:
        return int(self.depth[pivot]) * self.rho + int(self.pathw[pivot])


def candidate_objective(t: Tree, rho, x: int, pivot: int, j: int,
                        tables: ExtremeTables) -> int:
    """The scoring objective of candidate (pivot, j):
    d(x,pivot)*rho + hi-path-weight + b_time(pivot, far side) -
    b_time(pivot, T), evaluated directly by sorting the candidate's keys.
    Its maximum over all (pivot, j) is max_regret(x) whenever that is
    positive, attained at a worst-case scenario."""
    rho = _check_rho(rho)
    _check_tables(t, rho, tables)
    t.check_vertex(x)
    t.check_vertex(pivot)
    if x == pivot:
        raise SameVertex("candidate_objective needs pivot != x")
    ctx = _QueryContext(t, rho, x, tables)
    return _objective_direct(ctx, pivot, j)


def _objective_direct(ctx: _QueryContext, pivot: int, j: int) -> int:
    _, plus, minus = ctx.pivot_keys(pivot)
    h = len(plus)
    if not (1 <= j <= h):
        raise IndexOutOfRange(f"j must be in 1..{h}, got {j}")
    keys = plus[:j] + minus[j:]
    keys.sort(reverse=True)
    val_far = _opt_sorted(keys, ctx.rho)
    keys_t = sorted(keys + [ctx.mu_key(pivot)], reverse=True)
    val_t = _opt_sorted(keys_t, ctx.rho)
    return ctx.offset(pivot) + val_far - val_t


def _opt_sorted(keys_desc, rho: int) -> int:
    best = 0
    for i, k in enumerate(keys_desc, start=1):
        v = i * rho + k
        if v > best:
            best = v
    return best


def max_regret_fast(t: Tree, rho, x: int, tables: ExtremeTables) -> RegretReport:
    """Maximum regret of x in O(n log log n) after preprocessing.

    Scores every (pivot, j) candidate through the incremental bucket
    engine; when no candidate scores positive, max_regret is 0 and the
    all-lo fallback scenario witnesses it (x is then itself a broadcast
    center under every scenario)."""
    rho = _check_rho(rho)
    _check_tables(t, rho, tables)
    t.check_vertex(x)
    ctx = _QueryContext(t, rho, x, tables)
    best_val = None
    best_pivot = -1
    best_j = -1
    for pivot in range(t.n):
        if pivot == x:
            continue
        pos, plus, minus = ctx.pivot_keys(pivot)
        h = len(plus)
        if h == 0:
            continue
        vals_far = evolve_values(plus, minus, [], rho)
        vals_t = evolve_values(plus, minus, [ctx.mu_key(pivot)], rho)
        base = ctx.offset(pivot)
        for j in range(1, h + 1):
            g = base + vals_far[j] - vals_t[j]
            if best_val is None or g > best_val:
                best_val, best_pivot, best_j = g, pivot, j
    if best_val is None or best_val <= 0:
        witness = int(np.argmin(tables.total_minus))
        return RegretReport(x=x, max_regret=0,
                            worst_scenario=CandidateScenario(x, None, None),
                            witness_center=witness)
    return RegretReport(x=x, max_regret=int(best_val),
                        worst_scenario=CandidateScenario(x, best_pivot, best_j),
                        witness_center=best_pivot)


def pivot_engine_states(t: Tree, rho, x: int, pivot: int, tables: ExtremeTables,
                        with_mu: bool):
    """Recorded engine states for one pivot (testing hook): the evolving
    succ/Delta snapshots across j, for the far-side or whole-tree keys."""
    rho = _check_rho(rho)
    _check_tables(t, rho, tables)
    ctx = _QueryContext(t, rho, x, tables)
    _, plus, minus = ctx.pivot_keys(pivot)
    statics = [ctx.mu_key(pivot)] if with_mu else []
    if rho == 0 or not plus:
        return None, plus, minus, statics
    eng = EvolvingBuckets(plus, minus, statics, rho)
    eng.run(record=True)
    return eng, plus, minus, statics


# ------------------------------------------------------------------ #
# Naive path: materialize and evaluate the whole candidate family      #
# ------------------------------------------------------------------ #

def max_regret_naive(t: Tree, rho, x: int, engine: str = "auto") -> RegretReport:
    """Maximum regret of x by evaluating every candidate scenario with a
    fresh all-vertices broadcast-time sweep: r = b_time(x,T) - min over y
    of b_time(y,T), maximized over the family, first maximizer in
    (pivot asc, j asc) order with the all-lo fallback last.

    engine="python" materializes each scenario through the public
    constructions (auditable, O(n^2 log n)); "compiled" runs the same
    sweep as flat-array numba code; "auto" prefers compiled when
    available.  Both produce identical reports."""
    rho = _check_rho(rho)
    t.check_vertex(x)
    if engine == "auto":
        engine = "compiled" if _kernels.AVAILABLE else "python"
    if engine == "compiled":
        val, pivot, j, bt = _kernels.naive_sweep(t, rho, x)
    elif engine == "python":
        val, pivot, j, bt = _naive_sweep_python(t, rho, x)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    witness = int(np.argmin(bt))
    worst = CandidateScenario(x, None, None) if pivot < 0 else CandidateScenario(x, pivot, j)
    return RegretReport(x=x, max_regret=int(val), worst_scenario=worst,
                        witness_center=witness)


def _naive_sweep_python(t: Tree, rho: int, x: int):
    best = None  # (value, pivot, j, btime table)
    for pivot in range(t.n):
        if pivot == x:
            continue
        if t.degree(pivot) < 2:
            continue  # far side has no neighbors: empty candidate set
        alpha = alpha_scenario(t, x, pivot)
        _, order = _far_neighbor_order(t, rho, x, pivot, alpha)
        h = len(order)
        for j in range(1, h + 1):
            sc = beta_scenario(t, rho, x, pivot, j)
            bt = btime_all(t, sc, rho)
            r = int(bt[x]) - int(bt.min())
            if best is None or r > best[0] or (
                    r == best[0] and (pivot, j) < (best[1], best[2])):
                best = (r, pivot, j, bt)
    bt = btime_all(t, Scenario.all_lo(t), rho)
    r = int(bt[x]) - int(bt.min())
    if best is None or r > best[0]:
        return r, -1, -1, bt
    return best[0], best[1], best[2], best[3]
