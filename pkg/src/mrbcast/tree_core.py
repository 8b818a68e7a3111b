"""Tree representation with interval edge weights.

A tree is stored as parallel numpy arrays: one row per edge (endpoints and
the integer weight interval) plus a CSR adjacency built once at
construction.  All vertex and edge ids are dense integers, so every
per-vertex quantity elsewhere in the package is a flat array.

Weights are exact nonnegative integers in a caller-chosen unit (the
connection latency rho is expressed in the same unit).  The algorithms
downstream compare sums and differences for exact equality, which floats
would break; rational inputs are pre-scaled to integers by the CLI reader.

Public API
----------
  WeightInterval(lo, hi)          validated [lo, hi] interval
  build_tree(edge_list)           -> Tree
  centroid(tree)                  -> vertex minimizing the largest open branch
  path_info(tree, x, y)           -> (edge ids along the x-to-y path, hop count)
  branch(tree, root, toward)      -> BranchView of the open branch <root, toward>
  read_tree_text / write_tree_text  text format used by the CLI
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .errors import (
    BadInterval,
    CycleDetected,
    Disconnected,
    DuplicateEdge,
    SameVertex,
    UnknownVertex,
)


@dataclass(frozen=True)
class WeightInterval:
    """Closed integer interval [lo, hi] an edge weight may take."""

    lo: int
    hi: int

    def __post_init__(self):
        if not (isinstance(self.lo, int) and isinstance(self.hi, int)):
            raise BadInterval(f"interval bounds must be integers, got ({self.lo!r}, {self.hi!r})")
        if self.lo < 0 or self.lo > self.hi:
            raise BadInterval(f"need 0 <= lo <= hi, got [{self.lo}, {self.hi}]")


class Tree:
    """Immutable tree with interval edge weights and a CSR adjacency.

    Attributes
    ----------
    n       : int            vertex count; vertex ids are 0..n-1
    edge_u  : int64[n-1]     first endpoint of edge e (input order)
    edge_v  : int64[n-1]     second endpoint of edge e
    lo, hi  : int64[n-1]     weight interval of edge e
    indptr  : int64[n+1]     CSR row pointers; row v is positions indptr[v]:indptr[v+1]
    nbr     : int64[2(n-1)]  neighbor vertex at each CSR position
    eid     : int64[2(n-1)]  edge id at each CSR position
    rev     : int64[2(n-1)]  CSR position of the opposite direction of the same edge

    Instances are never mutated after construction and are safe to share
    across threads.  Use :func:`build_tree` instead of the constructor.
    """

    __slots__ = ("n", "edge_u", "edge_v", "lo", "hi", "indptr", "nbr", "eid", "rev")

    def __init__(self, n, edge_u, edge_v, lo, hi):
        self.n = int(n)
        self.edge_u = edge_u
        self.edge_v = edge_v
        self.lo = lo
        self.hi = hi
        m = 2 * (self.n - 1)
        deg = np.zeros(self.n, dtype=np.int64)
        np.add.at(deg, edge_u, 1)
        np.add.at(deg, edge_v, 1)
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        nbr = np.empty(m, dtype=np.int64)
        eid = np.empty(m, dtype=np.int64)
        rev = np.empty(m, dtype=np.int64)
        cursor = indptr[:-1].copy()
        for e in range(self.n - 1):
            u = int(edge_u[e])
            v = int(edge_v[e])
            pu = int(cursor[u])
            pv = int(cursor[v])
            cursor[u] += 1
            cursor[v] += 1
            nbr[pu] = v
            nbr[pv] = u
            eid[pu] = e
            eid[pv] = e
            rev[pu] = pv
            rev[pv] = pu
        self.indptr = indptr
        self.nbr = nbr
        self.eid = eid
        self.rev = rev

    # -------------------------------------------------------------- #
    # Small accessors                                                 #
    # -------------------------------------------------------------- #

    @property
    def n_edges(self) -> int:
        return self.n - 1

    def interval(self, e: int) -> WeightInterval:
        return WeightInterval(int(self.lo[e]), int(self.hi[e]))

    @property
    def edges(self):
        """Edges as (u, v, WeightInterval) tuples, in input order."""
        return [
            (int(self.edge_u[e]), int(self.edge_v[e]), self.interval(e))
            for e in range(self.n - 1)
        ]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbors(self, v: int):
        """(neighbor, edge id) pairs of v, in CSR order."""
        self.check_vertex(v)
        a, b = int(self.indptr[v]), int(self.indptr[v + 1])
        return [(int(self.nbr[p]), int(self.eid[p])) for p in range(a, b)]

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, (int, np.integer)) and 0 <= v < self.n):
            raise UnknownVertex(f"vertex {v!r} not in 0..{self.n - 1}")

    def row(self, v: int):
        """CSR position range of vertex v."""
        return range(int(self.indptr[v]), int(self.indptr[v + 1]))

    def position(self, v: int, u: int) -> int:
        """CSR position of the directed pair (v -> u); raises NotNeighbor-ish KeyError."""
        for p in self.row(v):
            if self.nbr[p] == u:
                return p
        raise KeyError((v, u))

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.edge_u, other.edge_u)
            and np.array_equal(self.edge_v, other.edge_v)
            and np.array_equal(self.lo, other.lo)
            and np.array_equal(self.hi, other.hi)
        )

    def __hash__(self):
        return hash((self.n, self.edge_u.tobytes(), self.edge_v.tobytes(),
                     self.lo.tobytes(), self.hi.tobytes()))

    def __repr__(self):
        return f"Tree(n={self.n})"


@dataclass(frozen=True)
class BranchView:
    """A closed branch B<root, excluded-side>: root's side of the tree once
    the branch toward `excluded` is cut off.  With excluded=None it is the
    whole vertex set.  The open branch <x, y> is represented as the closed
    branch at y's side, i.e. B<w, x> where w is x's neighbor toward y."""

    root: int
    excluded: int | None
    members: frozenset

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __len__(self) -> int:
        return len(self.members)


def build_tree(edge_list) -> Tree:
    """Validate an edge list and return a Tree.

    Parameters
    ----------
    edge_list : iterable of (u, v, lo, hi)
        Vertex ids must be dense in 0..n-1 where n = len(edge_list) + 1;
        intervals must satisfy 0 <= lo <= hi (integers).

    Raises
    ------
    BadInterval, CycleDetected, Disconnected, DuplicateEdge
    """
    rows = list(edge_list)
    n = len(rows) + 1
    if n == 1:
        return Tree(1,
                    np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64),
                    np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64))
    edge_u = np.empty(n - 1, dtype=np.int64)
    edge_v = np.empty(n - 1, dtype=np.int64)
    lo = np.empty(n - 1, dtype=np.int64)
    hi = np.empty(n - 1, dtype=np.int64)
    seen = set()
    parent_dsu = list(range(n))

    def find(a):
        while parent_dsu[a] != a:
            parent_dsu[a] = parent_dsu[parent_dsu[a]]
            a = parent_dsu[a]
        return a

    for e, (u, v, a, b) in enumerate(rows):
        iv = WeightInterval(int(a), int(b))
        u = int(u)
        v = int(v)
        if not (0 <= u < n):
            raise Disconnected(f"vertex id {u} out of 0..{n - 1} for {n - 1} edges")
        if not (0 <= v < n):
            raise Disconnected(f"vertex id {v} out of 0..{n - 1} for {n - 1} edges")
        if u == v:
            raise CycleDetected(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge {key} listed twice")
        seen.add(key)
        ru, rv = find(u), find(v)
        if ru == rv:
            raise CycleDetected(f"edge ({u}, {v}) closes a cycle")
        parent_dsu[ru] = rv
        edge_u[e] = u
        edge_v[e] = v
        lo[e] = iv.lo
        hi[e] = iv.hi
    root = find(0)
    if any(find(v) != root for v in range(n)):
        raise Disconnected("edge list does not connect all vertices")
    return Tree(n, edge_u, edge_v, lo, hi)


# ------------------------------------------------------------------ #
# Traversals (iterative: paths of 10^6 vertices must not overflow)    #
# ------------------------------------------------------------------ #

def bfs_structure(t: Tree, root: int, cut: int | None = None):
    """BFS from root, optionally refusing to cross from root to `cut`.

    Returns (order, parent, ppos): vertices in visit order, parent ids
    (-1 at root), and for each visited v != root the CSR position of the
    directed pair (v -> parent(v)); -1 elsewhere.  With `cut` set, the
    traversal covers exactly B<root, cut-side>.
    """
    order = np.empty(t.n, dtype=np.int64)
    parent = np.full(t.n, -1, dtype=np.int64)
    ppos = np.full(t.n, -1, dtype=np.int64)
    seen = np.zeros(t.n, dtype=bool)
    order[0] = root
    seen[root] = True
    if cut is not None:
        seen[cut] = True  # do not enter the cut side
    head, tail = 0, 1
    nbr, rev, indptr = t.nbr, t.rev, t.indptr
    while head < tail:
        v = order[head]
        head += 1
        for p in range(indptr[v], indptr[v + 1]):
            u = nbr[p]
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                ppos[u] = rev[p]
                order[tail] = u
                tail += 1
    return order[:tail], parent, ppos


def subtree_sizes(t: Tree, order, parent):
    """Vertex counts of the subtrees induced by a BFS order."""
    size = np.ones(t.n, dtype=np.int64)
    for i in range(len(order) - 1, 0, -1):
        v = order[i]
        size[parent[v]] += size[v]
    return size


def centroid(t: Tree) -> int:
    """Vertex whose largest open branch is smallest; ties to lowest id.

    The winner's largest open branch has at most floor(n/2) vertices.
    """
    if t.n == 1:
        return 0
    order, parent, _ = bfs_structure(t, 0)
    size = subtree_sizes(t, order, parent)
    best_v, best_m = 0, t.n
    for v in range(t.n):
        m = t.n - int(size[v]) if v != 0 else 0
        for u, _e in t.neighbors(v):
            if u != parent[v]:
                m = max(m, int(size[u]))
        if m < best_m:
            best_v, best_m = v, m
    return best_v


def centroid_restricted(t: Tree, members) -> int:
    """Centroid of the subtree of t induced by `members` (assumed connected)."""
    members = set(int(v) for v in members)
    k = len(members)
    if k == 1:
        return next(iter(members))
    root = min(members)
    parent = {root: -1}
    order = [root]
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for u, _e in t.neighbors(v):
            if u in members and u not in parent:
                parent[u] = v
                order.append(u)
    size = {v: 1 for v in order}
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    best_v, best_m = None, k + 1
    for v in sorted(order):
        m = k - size[v] if v != root else 0
        for u, _e in t.neighbors(v):
            if u in members and parent.get(u) == v:
                m = max(m, size[u])
        if m < best_m:
            best_v, best_m = v, m
    return best_v


def path_info(t: Tree, x: int, y: int):
    """Edge ids along the unique x-to-y path (in order) and the hop count."""
    t.check_vertex(x)
    t.check_vertex(y)
    if x == y:
        return [], 0
    _, parent, ppos = bfs_structure(t, x)
    edges_rev = []
    v = y
    while v != x:
        edges_rev.append(int(t.eid[ppos[v]]))
        v = int(parent[v])
    edges_rev.reverse()
    return edges_rev, len(edges_rev)


def branch(t: Tree, root: int, toward: int) -> BranchView:
    """Open branch <root, toward>: the component of T - root containing toward.

    Returned as the equivalent closed-branch view B<w, root> where w is
    root's neighbor on the path to toward (so view.excluded == root).
    """
    t.check_vertex(root)
    t.check_vertex(toward)
    if root == toward:
        raise SameVertex(f"branch needs toward != root, got {root}")
    _, parent, _ = bfs_structure(t, root)
    w = toward
    while parent[w] != root:
        w = int(parent[w])
    members = _component_without(t, w, root)
    return BranchView(root=w, excluded=root, members=frozenset(members))


def closed_branch(t: Tree, root: int, toward: int) -> BranchView:
    """Closed branch B<root, toward>: everything except <root, toward>."""
    open_view = branch(t, root, toward)
    members = frozenset(range(t.n)) - open_view.members
    return BranchView(root=root, excluded=open_view.root, members=members)


def whole_tree_view(t: Tree, root: int) -> BranchView:
    t.check_vertex(root)
    return BranchView(root=root, excluded=None, members=frozenset(range(t.n)))


def _component_without(t: Tree, start: int, banned: int):
    out = [start]
    seen = {start, banned}
    head = 0
    while head < len(out):
        v = out[head]
        head += 1
        for u, _e in t.neighbors(v):
            if u not in seen:
                seen.add(u)
                out.append(u)
    return out


# ------------------------------------------------------------------ #
# Text format: line 1 "n rho", then n-1 lines "u v lo hi".            #
# '#' starts a comment.  Numbers may be integers or p/q rationals;    #
# rationals are pre-scaled to a common integer denominator.           #
# ------------------------------------------------------------------ #

def read_tree_text(text: str, rho_override=None):
    """Parse the tree text format.

    Returns (tree, rho, scale) where scale is the common denominator all
    weights (and rho) were multiplied by to make them integers; 1 when the
    input was already integral.  rho_override (a Fraction-parseable
    string) replaces the header rho before scaling.
    """
    values = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            values.append(line.split())
    if not values:
        raise ValueError("empty tree file")
    header = values[0]
    if len(header) != 2:
        raise ValueError(f"header must be 'n rho', got {header!r}")
    n = int(header[0])
    rho = Fraction(header[1]) if rho_override is None else Fraction(rho_override)
    if rho < 0:
        raise ValueError("rho must be nonnegative")
    rows = values[1:]
    if len(rows) != n - 1:
        raise ValueError(f"expected {n - 1} edge lines, found {len(rows)}")
    fracs = []
    for row in rows:
        if len(row) != 4:
            raise ValueError(f"edge line must be 'u v lo hi', got {row!r}")
        fracs.append((int(row[0]), int(row[1]), Fraction(row[2]), Fraction(row[3])))
    scale = lcm(rho.denominator, *(d for _, _, a, b in fracs
                                   for d in (a.denominator, b.denominator))) if fracs else rho.denominator
    edge_list = [(u, v, int(a * scale), int(b * scale)) for u, v, a, b in fracs]
    tree = build_tree(edge_list)
    if tree.n != n:
        raise ValueError(f"header says n={n} but edges imply n={tree.n}")
    return tree, int(rho * scale), int(scale)


def write_tree_text(t: Tree, rho: int) -> str:
    lines = [f"{t.n} {rho}"]
    for e in range(t.n - 1):
        lines.append(f"{int(t.edge_u[e])} {int(t.edge_v[e])} {int(t.lo[e])} {int(t.hi[e])}")
    return "\n".join(lines) + "\n"
