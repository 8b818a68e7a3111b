"""Postal-model broadcast times on a tree under a fixed scenario.

Model: a sender spends rho time units establishing each connection, one
receiver at a time, but transmissions overlap; the k-th receiver in the
sender's order gets the message at k*rho + w(edge) after the sender has
it.  The minimum broadcast time of v over a region follows the classic
optimal-sequence rule: sort the region-neighbors u of v by
key(u) = w(v,u) + b_time(u, branch away from v), nonincreasing, and the
makespan is max_k (k*rho + key_k).

Implements single-vertex and all-vertices broadcast times (the latter by
an O(n log n) rerooting sweep whose per-child exclusions run in O(1) via
bucket arrays with per-bucket second minima and prefix/suffix maxima),
broadcast centers, prime broadcast centers, explicit optimal schedules,
and the width-rho bucket structure itself.

All ties (equal keys anywhere) break toward the lower vertex id, so every
result is deterministic.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass

import numpy as np

from .errors import InvariantViolation, NotNeighbor, ZeroRho
from .tree_core import Tree, bfs_structure


class Scenario:
    """A concrete weight for every edge, each within its edge's interval.

    Coordinates follow edge ids, i.e. the input order of the edge list
    (the coordinate convention is fixed here once and for all since the
    weight tuple by itself would be ambiguous under relabeling).
    """

    __slots__ = ("tree", "weights")

    def __init__(self, tree: Tree, weights):
        w = np.asarray(weights, dtype=np.int64)
        if w.shape != (tree.n - 1,):
            raise ValueError(f"need {tree.n - 1} weights, got shape {w.shape}")
        if np.any(w < tree.lo) or np.any(w > tree.hi):
            bad = int(np.argmax((w < tree.lo) | (w > tree.hi)))
            raise ValueError(
                f"weight {int(w[bad])} of edge {bad} outside "
                f"[{int(tree.lo[bad])}, {int(tree.hi[bad])}]")
        w.setflags(write=False)
        self.tree = tree
        self.weights = w

    @classmethod
    def all_hi(cls, tree: Tree) -> "Scenario":
        return cls(tree, tree.hi.copy())

    @classmethod
    def all_lo(cls, tree: Tree) -> "Scenario":
        return cls(tree, tree.lo.copy())

    @classmethod
    def from_bits(cls, tree: Tree, bits: int) -> "Scenario":
        """Extremal scenario: edge e at hi if bit e of `bits` is set, else lo."""
        w = tree.lo.copy()
        for e in range(tree.n - 1):
            if bits >> e & 1:
                w[e] = tree.hi[e]
        return cls(tree, w)

    def __eq__(self, other):
        if not isinstance(other, Scenario):
            return NotImplemented
        return self.tree == other.tree and np.array_equal(self.weights, other.weights)

    def __repr__(self):
        return f"Scenario({list(map(int, self.weights))})"


@dataclass(frozen=True)
class Schedule:
    """An explicit broadcast schedule from `sender`.

    connect_rank[v] is the position (1-based) at which v's parent in the
    broadcast tree connects to v, counted from the parent's own arrival;
    0 for the sender.  arrival[v] is the time v holds the message.
    """

    sender: int
    connect_rank: tuple
    arrival: tuple

    @property
    def makespan(self) -> int:
        return max(self.arrival)


def _check_rho(rho) -> int:
    if not isinstance(rho, (int, np.integer)) or rho < 0:
        raise ValueError(f"rho must be a nonnegative integer, got {rho!r}")
    return int(rho)


def opt_time(keys_desc, rho: int) -> int:
    """max_k (k*rho + key_k) over keys sorted nonincreasing; 0 for no keys."""
    best = 0
    t = rho
    for k in keys_desc:
        v = t + k
        if v > best:
            best = v
        t += rho
    return best


# ------------------------------------------------------------------ #
# Exclusion oracles: btime over a sorted key multiset minus one entry  #
# ------------------------------------------------------------------ #

class SortedExclusion:
    """Position-based exclusion: prefix/suffix maxima of (pos+1)*rho + key.

    Exact for every rho >= 0; removing the entry at sorted position e
    leaves the prefix untouched and shifts the suffix down one slot.
    """

    __slots__ = ("rho", "pref", "suf2", "_full")

    def __init__(self, keys_desc, rho: int):
        m = len(keys_desc)
        pref = [0] * m
        best = None
        for i, k in enumerate(keys_desc):
            v = (i + 1) * rho + k
            best = v if best is None or v > best else best
            pref[i] = best
        suf2 = [0] * (m + 1)
        best = 0
        for i in range(m - 1, -1, -1):
            v = i * rho + keys_desc[i]
            best = max(best, v)
            suf2[i] = best
        self.rho = rho
        self.pref = pref
        self.suf2 = suf2
        self._full = pref[-1] if m else 0

    def full(self) -> int:
        return self._full

    def exclude(self, e: int) -> int:
        left = self.pref[e - 1] if e > 0 else 0
        return max(left, self.suf2[e + 1])


class BucketExclusion:
    """Bucket-array exclusion with per-bucket second minima and
    prefix/suffix maxima (pi-/pi+), constant time per non-anchor entry.

    Buckets have width rho and are anchored at the largest key; entries
    whose offset from the anchor reaches h*rho sit in no bucket (they can
    never realize the makespan while the anchor is present).  Excluding
    the anchor itself would shift every bucket, so that single case falls
    back to a direct scan, done once.
    """

    __slots__ = ("rho", "keys", "h", "anchor", "bucket_of", "cnt", "min1",
                 "min2", "acc", "pre", "suf", "_full", "_excl0")

    def __init__(self, keys_desc, rho: int):
        if rho <= 0:
            raise ZeroRho("bucket arrays need rho > 0")
        h = len(keys_desc)
        self.rho = rho
        self.keys = keys_desc
        self.h = h
        self.anchor = keys_desc[0] if h else 0
        limit = h * rho
        bucket_of = [0] * h           # 1-based bucket index; 0 = out of buckets
        cnt = [0] * (h + 2)
        min1 = [None] * (h + 2)
        min2 = [None] * (h + 2)
        for i, k in enumerate(keys_desc):
            off = self.anchor - k
            if off >= limit:
                continue
            b = off // rho + 1
            bucket_of[i] = b
            cnt[b] += 1
            if min1[b] is None or k < min1[b]:
                min2[b] = min1[b]
                min1[b] = k
            elif min2[b] is None or k < min2[b]:
                min2[b] = k
        acc = [0] * (h + 2)
        run = 0
        for b in range(1, h + 1):
            run += cnt[b]
            acc[b] = run
        # pre[b] = max value over nonempty buckets < b; suf[b] = over (b, h-1]
        pre = [None] * (h + 3)
        best = None
        for b in range(1, h + 2):
            pre[b] = best
            if b <= h and cnt[b]:
                v = min1[b] + acc[b] * rho
                best = v if best is None or v > best else best
        suf = [None] * (h + 2)
        best = None
        for b in range(h, 0, -1):
            suf[b] = best
            if b <= h - 1 and cnt[b]:
                v = min1[b] + acc[b] * rho
                best = v if best is None or v > best else best
        self.bucket_of = bucket_of
        self.cnt = cnt
        self.min1 = min1
        self.min2 = min2
        self.acc = acc
        self.pre = pre
        self.suf = suf
        self._full = None
        self._excl0 = None

    def full(self) -> int:
        if self._full is None:
            best = 0
            for b in range(1, self.h + 1):
                if self.cnt[b]:
                    v = self.min1[b] + self.acc[b] * self.rho
                    if v > best:
                        best = v
            self._full = best
        return self._full

    def exclude(self, e: int) -> int:
        if e == 0:
            if self._excl0 is None:
                self._excl0 = opt_time(self.keys[1:], self.rho)
            return self._excl0
        b = self.bucket_of[e]
        if b == 0:
            return self.full()
        k = self.keys[e]
        best = self.pre[b] if self.pre[b] is not None else 0
        if self.cnt[b] >= 2:
            lam = self.min2[b] if k == self.min1[b] else self.min1[b]
            v = lam + (self.acc[b] - 1) * self.rho
            if v > best:
                best = v
        if self.suf[b] is not None:
            v = self.suf[b] - self.rho
            if v > best:
                best = v
        return best


def make_exclusion(keys_desc, rho: int):
    return SortedExclusion(keys_desc, rho) if rho == 0 else BucketExclusion(keys_desc, rho)


# ------------------------------------------------------------------ #
# Subtree pass and the full rerooting sweep                            #
# ------------------------------------------------------------------ #

def rooted_pass(t: Tree, w, rho: int, root: int, cut: int | None = None):
    """Bottom-up subtree broadcast times for the region B<root, cut-side>.

    Returns (order, parent, ppos, away, row_keys) where away[p] for a CSR
    position p = (v -> u), with u deeper than v, holds b_time(u, B<u,v>),
    and row_keys[root] is the sorted (key, neighbor, pos) list at root.
    """
    order, parent, ppos = bfs_structure(t, root, cut)
    away = np.zeros(2 * (t.n - 1) if t.n > 1 else 0, dtype=np.int64)
    indptr, nbr, eid, rev = t.indptr, t.nbr, t.eid, t.rev
    root_row = None
    for i in range(len(order) - 1, -1, -1):
        v = int(order[i])
        pp = ppos[v]
        keys = []
        for p in range(indptr[v], indptr[v + 1]):
            if p != pp and parent[nbr[p]] == v:
                keys.append((-(int(w[eid[p]]) + int(away[p])), int(nbr[p]), p))
        keys.sort()
        vals = [-k for k, _, _ in keys]
        x = opt_time(vals, rho)
        if v == root:
            root_row = keys
        else:
            away[rev[pp]] = x
    return order, parent, ppos, away, root_row


@dataclass
class BranchTimes:
    """Per-directed-edge branch broadcast times plus per-vertex totals.

    away[p] for CSR position p = (v -> u) is b_time(u, B<u,v>): u's time
    over its whole side once the branch toward v is cut off.  total[v]
    is b_time(v, T).  rows[v] is v's full neighbor list as (key, u, pos),
    key nonincreasing with id tie-break.
    """

    away: np.ndarray
    total: np.ndarray
    rows: list


def branch_times(t: Tree, w, rho: int) -> BranchTimes:
    """Both directions of every edge plus all totals, in O(n log n).

    One bottom-up pass computes the deep sides; a top-down pass computes
    each parent's time with one child's branch removed via the bucket
    exclusion (pi-, second-minimum, pi+), giving the shallow sides.
    """
    n = t.n
    if n == 1:
        return BranchTimes(np.zeros(0, dtype=np.int64), np.zeros(1, dtype=np.int64), [[]])
    order, parent, ppos = bfs_structure(t, 0)
    away = np.zeros(2 * (n - 1), dtype=np.int64)
    total = np.zeros(n, dtype=np.int64)
    rows: list = [None] * n
    indptr, nbr, eid, rev = t.indptr, t.nbr, t.eid, t.rev

    for i in range(n - 1, -1, -1):
        v = int(order[i])
        pp = ppos[v]
        keys = []
        for p in range(indptr[v], indptr[v + 1]):
            if p != pp:
                keys.append((-(int(w[eid[p]]) + int(away[p])), int(nbr[p]), p))
        keys.sort()
        rows[v] = keys
        if v != 0:
            away[rev[pp]] = opt_time([-k for k, _, _ in keys], rho)

    for i in range(n):
        v = int(order[i])
        pp = ppos[v]
        row = rows[v]
        if v != 0:
            pkey = int(w[eid[pp]]) + int(away[pp])
            insort(row, (-pkey, int(nbr[pp]), int(pp)))
        vals = [-k for k, _, _ in row]
        oracle = make_exclusion(vals, rho)
        total[v] = oracle.full()
        for idx, (_, _, p) in enumerate(row):
            if p != pp:
                away[rev[p]] = oracle.exclude(idx)
    return BranchTimes(away, total, rows)


# ------------------------------------------------------------------ #
# Public operations                                                    #
# ------------------------------------------------------------------ #

def _check_scenario(t: Tree, s: Scenario) -> None:
    if s.tree is not t and s.tree != t:
        raise ValueError("scenario belongs to a different tree")


def _check_region(t: Tree, v: int, excluded):
    t.check_vertex(v)
    if excluded is not None:
        t.check_vertex(excluded)
        if all(u != excluded for u, _ in t.neighbors(v)):
            raise NotNeighbor(f"{excluded} is not adjacent to {v}")


def btime(t: Tree, s: Scenario, rho, v: int, excluded: int | None = None) -> int:
    """b_time of v over B<v, excluded-side>, or over all of T when
    excluded is None; 0 when the region is v alone."""
    rho = _check_rho(rho)
    _check_scenario(t, s)
    _check_region(t, v, excluded)
    _, _, _, _, root_row = rooted_pass(t, s.weights, rho, v, excluded)
    return opt_time([-k for k, _, _ in root_row], rho)


def neighbor_keys(t: Tree, s: Scenario, rho, v: int, excluded: int | None = None):
    """Region-neighbors of v as (vertex, key) sorted by key nonincreasing,
    ties toward the lower vertex id."""
    rho = _check_rho(rho)
    _check_scenario(t, s)
    _check_region(t, v, excluded)
    _, _, _, _, root_row = rooted_pass(t, s.weights, rho, v, excluded)
    return [(u, -nk) for nk, u, _ in root_row]


def btime_all(t: Tree, s: Scenario, rho) -> np.ndarray:
    """b_time(v, T) for every v (one rerooting sweep, O(n log n))."""
    rho = _check_rho(rho)
    _check_scenario(t, s)
    return branch_times(t, s.weights, rho).total


def broadcast_centers(t: Tree, s: Scenario, rho) -> frozenset:
    """The argmin set of btime_all.  For rho > 0 the set always induces a
    star and this is asserted; in the degenerate rho = 0 mode (the
    1-center problem) zero-weight edges can merge whole blobs of centers,
    so only connectedness is guaranteed and checked."""
    rho = _check_rho(rho)
    _check_scenario(t, s)
    total = btime_all(t, s, rho)
    best = int(total.min())
    centers = frozenset(int(v) for v in np.flatnonzero(total == best))
    _assert_center_shape(t, centers, rho)
    return centers


def _assert_center_shape(t: Tree, members: frozenset, rho: int) -> None:
    inside_deg = {v: 0 for v in members}
    edges = 0
    for v in members:
        for u, _ in t.neighbors(v):
            if u in members:
                inside_deg[v] += 1
                edges += 1
    edges //= 2
    k = len(members)
    if edges != k - 1:
        raise InvariantViolation(
            f"broadcast centers {sorted(members)} do not induce a connected subtree")
    if rho > 0 and k > 2 and sum(1 for d in inside_deg.values() if d == k - 1) != 1:
        raise InvariantViolation(f"broadcast centers {sorted(members)} do not induce a star")


def star_center(t: Tree, members: frozenset) -> int:
    """Center of the star induced by `members` (lowest id on 1- and 2-vertex stars)."""
    if len(members) <= 2:
        return min(members)
    for v in sorted(members):
        deg_in = sum(1 for u, _ in t.neighbors(v) if u in members)
        if deg_in == len(members) - 1:
            return v
    raise InvariantViolation(f"{sorted(members)} induce no star center")


def prime_broadcast_center(t: Tree, s: Scenario, rho) -> int:
    """A broadcast center whose own-side time dominates the far side on
    every incident edge.

    Starts from the star center of the center set and repeatedly moves to
    the lowest-id violating neighbor.  Each move crosses an edge in the
    fixed direction of strictly larger far-side time, so no edge is ever
    recrossed and the walk stops at a vertex with no violation; applying
    the edge-splitting identity down any path shows such a sink beats
    every other vertex, hence is itself a broadcast center.  For rho > 0 a
    single move suffices per the star structure; the loop also covers the
    rho = 0 blobs."""
    rho = _check_rho(rho)
    _check_scenario(t, s)
    if t.n == 1:
        return 0
    bt = branch_times(t, s.weights, rho)
    best = int(bt.total.min())
    centers = frozenset(int(v) for v in np.flatnonzero(bt.total == best))
    _assert_center_shape(t, centers, rho)
    kappa = star_center(t, centers) if rho > 0 else min(centers)
    for _ in range(t.n):
        viol = _prime_violation(t, bt, kappa)
        if viol is None:
            if int(bt.total[kappa]) != best:
                raise InvariantViolation(
                    f"prime candidate {kappa} is not a broadcast center")
            return kappa
        kappa = viol
    raise InvariantViolation("prime-center walk failed to reach a sink")


def _prime_violation(t: Tree, bt: BranchTimes, kappa: int):
    """Lowest-id neighbor u with b_time(kappa, B<kappa,u>) < b_time(u, B<u,kappa>)."""
    worst = None
    for p in t.row(kappa):
        u = int(t.nbr[p])
        own = int(bt.away[t.position(u, kappa)])
        far = int(bt.away[p])
        if own < far and (worst is None or u < worst):
            worst = u
    return worst


def optimal_schedule(t: Tree, s: Scenario, rho, v: int) -> Schedule:
    """Canonical optimal schedule for v to broadcast over T.

    Every vertex connects to its broadcast-tree children in nonincreasing
    key order immediately upon arrival; ties by child id.  The makespan
    equals btime(t, s, rho, v)."""
    rho = _check_rho(rho)
    _check_scenario(t, s)
    t.check_vertex(v)
    order, parent, ppos, away, root_row = rooted_pass(t, s.weights, rho, v, None)
    w = s.weights
    arrival = [0] * t.n
    rank = [0] * t.n
    children: list = [None] * t.n
    indptr, nbr, eid = t.indptr, t.nbr, t.eid
    for x in order:
        x = int(x)
        pp = ppos[x]
        keys = []
        for p in range(indptr[x], indptr[x + 1]):
            u = int(nbr[p])
            if p != pp and parent[u] == x:
                keys.append((-(int(w[eid[p]]) + int(away[p])), u, int(w[eid[p]])))
        keys.sort()
        children[x] = keys
    for x in order:
        x = int(x)
        for k, (_, u, wu) in enumerate(children[x], start=1):
            rank[u] = k
            arrival[u] = arrival[x] + k * rho + wu
    return Schedule(sender=v, connect_rank=tuple(rank), arrival=tuple(arrival))


# ------------------------------------------------------------------ #
# Width-rho bucket arrays (public form)                                #
# ------------------------------------------------------------------ #

@dataclass(frozen=True)
class BucketArray:
    """Bucket decomposition of neighbor keys, width rho, anchored at the
    maximum key.  buckets[l-1] holds the vertices whose key k satisfies
    (l-1)*rho <= anchor - k < l*rho; keys at offset >= h*rho sit in no
    bucket.  acc[l-1] counts vertices in buckets 1..l; min_v[l-1] is the
    smallest key in bucket l (None if empty)."""

    width: int
    buckets: tuple
    min_v: tuple
    acc: tuple
    anchor: int


def bucket_build(keys, rho) -> BucketArray:
    """Build the bucket array for (vertex, key) pairs.

    Raises ZeroRho when rho == 0 (callers must use the sort-based path);
    keys must be nonempty."""
    rho = _check_rho(rho)
    if rho == 0:
        raise ZeroRho("bucket arrays need rho > 0; use the sort-based path")
    items = sorted(keys, key=lambda vk: (-vk[1], vk[0]))
    if not items:
        raise ValueError("bucket_build needs at least one key")
    h = len(items)
    anchor = int(items[0][1])
    buckets = [set() for _ in range(h)]
    min_v = [None] * h
    for vtx, k in items:
        off = anchor - int(k)
        if off >= h * rho:
            continue
        b = off // rho  # 0-based slot for bucket b+1
        buckets[b].add(int(vtx))
        if min_v[b] is None or k < min_v[b]:
            min_v[b] = int(k)
    acc = []
    run = 0
    for b in range(h):
        run += len(buckets[b])
        acc.append(run)
    return BucketArray(width=rho, buckets=tuple(frozenset(b) for b in buckets),
                       min_v=tuple(min_v), acc=tuple(acc), anchor=anchor)


def btime_from_buckets(b: BucketArray) -> int:
    """max over nonempty buckets of min_v(l) + acc(l) * rho; equals the
    sort-based btime over the same key multiset."""
    best = 0
    for mv, a in zip(b.min_v, b.acc):
        if mv is not None:
            v = mv + a * b.width
            if v > best:
                best = v
    return best
