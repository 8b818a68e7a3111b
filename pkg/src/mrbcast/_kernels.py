"""Compiled flat-array sweep behind max_regret_naive's "compiled" engine.

The naive search evaluates on the order of n candidate scenarios per
query with a full all-vertices broadcast-time pass each, so interpreted
loops are out of the question at the n = 2000 scale the equivalence
suite runs at.  These kernels mirror the pure-Python naive path exactly
(same candidate family, same key tie-breaks, same first-maximizer rule);
the test suite asserts report-level equality of the two engines.

The broadcast-time pass here intentionally uses position-based
prefix/suffix exclusion over the sorted keys rather than the bucket
machinery of the main library: the two paths stay algorithmically
independent, which is the point of having a naive oracle at all.
"""

from __future__ import annotations

import numpy as np

from .tree_core import Tree, bfs_structure

try:
    from numba import njit

    AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    AVAILABLE = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        return wrap if not (args and callable(args[0])) else args[0]


@njit(cache=True)
def _bt_all(n, indptr, nbr, eid, rev, order, ppos, w, rho, away, total,
            sk, sp, pf, s2):
    """All-vertices broadcast times: bottom-up subtree pass, then top-down
    exclusions via prefix/suffix maxima of (position * rho + key)."""
    for i in range(n - 1, -1, -1):
        v = order[i]
        pp = ppos[v]
        m = 0
        for p in range(indptr[v], indptr[v + 1]):
            if p != pp:
                key = w[eid[p]] + away[p]
                q = m
                while q > 0 and sk[q - 1] < key:
                    sk[q] = sk[q - 1]
                    q -= 1
                sk[q] = key
                m += 1
        if pp >= 0:
            best = 0
            for q in range(m):
                val = (q + 1) * rho + sk[q]
                if val > best:
                    best = val
            away[rev[pp]] = best
    for i in range(n):
        v = order[i]
        pp = ppos[v]
        m = 0
        for p in range(indptr[v], indptr[v + 1]):
            key = w[eid[p]] + away[p]
            q = m
            while q > 0 and sk[q - 1] < key:
                sk[q] = sk[q - 1]
                sp[q] = sp[q - 1]
                q -= 1
            sk[q] = key
            sp[q] = p
            m += 1
        best = 0
        for q in range(m):
            val = (q + 1) * rho + sk[q]
            if val > best:
                best = val
            pf[q] = best
        total[v] = best
        s2[m] = 0
        best = 0
        for q in range(m - 1, -1, -1):
            val = q * rho + sk[q]
            if val > best:
                best = val
            s2[q] = best
        for q in range(m):
            p = sp[q]
            if p != pp:
                left = pf[q - 1] if q > 0 else 0
                right = s2[q + 1]
                away[rev[p]] = left if left > right else right


@njit(cache=True)
def _subtree_pass(n, indptr, nbr, eid, rev, w, rho, root, qbuf, par, pps,
                  away, sk):
    """Bottom-up subtree times rooted at `root` (no exclusions)."""
    for v in range(n):
        par[v] = -1
        pps[v] = -1
    qbuf[0] = root
    par[root] = root
    tail = 1
    head = 0
    while head < tail:
        v = qbuf[head]
        head += 1
        for p in range(indptr[v], indptr[v + 1]):
            u = nbr[p]
            if par[u] == -1:
                par[u] = v
                pps[u] = rev[p]
                qbuf[tail] = u
                tail += 1
    for i in range(n - 1, -1, -1):
        v = qbuf[i]
        pp = pps[v]
        m = 0
        for p in range(indptr[v], indptr[v + 1]):
            if p != pp:
                u = nbr[p]
                if par[u] == v:
                    key = w[eid[p]] + away[p]
                    q = m
                    while q > 0 and sk[q - 1] < key:
                        sk[q] = sk[q - 1]
                        q -= 1
                    sk[q] = key
                    m += 1
        if v != root:
            best = 0
            for q in range(m):
                val = (q + 1) * rho + sk[q]
                if val > best:
                    best = val
            away[rev[pp]] = best


@njit(cache=True)
def _sweep(n, indptr, nbr, eid, rev, lo, hi, rho, x,
           order0, ppos0, xparent, xppos, tin, tout, pre_eid, best_bt):
    """Evaluate the whole candidate family for query x; returns
    (best value, best pivot or n for the all-lo fallback, best j) and
    fills best_bt with the winning scenario's broadcast-time table."""
    m2 = 2 * (n - 1)
    w = np.empty(n - 1, np.int64)
    away = np.zeros(m2, np.int64)
    away2 = np.zeros(m2, np.int64)
    total = np.zeros(n, np.int64)
    sk = np.zeros(n + 1, np.int64)
    sp = np.zeros(n + 1, np.int64)
    pf = np.zeros(n + 1, np.int64)
    s2 = np.zeros(n + 2, np.int64)
    qbuf = np.zeros(n, np.int64)
    par = np.zeros(n, np.int64)
    pps = np.zeros(n, np.int64)
    ordk = np.zeros(n, np.int64)
    ordu = np.zeros(n, np.int64)

    # all-lo fallback, evaluated with the lowest priority
    for e in range(n - 1):
        w[e] = lo[e]
    for p in range(m2):
        away[p] = 0
    _bt_all(n, indptr, nbr, eid, rev, order0, ppos0, w, rho, away, total,
            sk, sp, pf, s2)
    mn = total[0]
    for v in range(1, n):
        if total[v] < mn:
            mn = total[v]
    best_val = total[x] - mn
    best_pivot = n
    best_j = 0
    for v in range(n):
        best_bt[v] = total[v]

    for pivot in range(n):
        if pivot == x:
            continue
        if indptr[pivot + 1] - indptr[pivot] < 2:
            continue
        # base scenario: hi on the x-to-pivot path and below pivot, lo elsewhere
        for e in range(n - 1):
            w[e] = lo[e]
        for q in range(tin[pivot] + 1, tout[pivot]):
            w[pre_eid[q]] = hi[pre_eid[q]]
        v = pivot
        while v != x:
            e = eid[xppos[v]]
            w[e] = hi[e]
            v = xparent[v]
        # order the far-side neighbors by base-scenario key (desc, id asc)
        for p in range(m2):
            away2[p] = 0
        _subtree_pass(n, indptr, nbr, eid, rev, w, rho, pivot, qbuf, par, pps,
                      away2, sk)
        h = 0
        for p in range(indptr[pivot], indptr[pivot + 1]):
            u = nbr[p]
            if u != xparent[pivot]:
                key = w[eid[p]] + away2[p]
                q = h
                while q > 0 and (ordk[q - 1] < key or
                                 (ordk[q - 1] == key and ordu[q - 1] > u)):
                    ordk[q] = ordk[q - 1]
                    ordu[q] = ordu[q - 1]
                    q -= 1
                ordk[q] = key
                ordu[q] = u
                h += 1
        for jj in range(h, 0, -1):
            if jj < h:
                u = ordu[jj]
                for q in range(tin[u], tout[u]):
                    w[pre_eid[q]] = lo[pre_eid[q]]
            for p in range(m2):
                away[p] = 0
            _bt_all(n, indptr, nbr, eid, rev, order0, ppos0, w, rho, away,
                    total, sk, sp, pf, s2)
            mn = total[0]
            for v in range(1, n):
                if total[v] < mn:
                    mn = total[v]
            r = total[x] - mn
            if r > best_val or (r == best_val and
                                (pivot < best_pivot or
                                 (pivot == best_pivot and jj < best_j))):
                best_val = r
                best_pivot = pivot
                best_j = jj
                for v in range(n):
                    best_bt[v] = total[v]
    return best_val, best_pivot, best_j


def _preorder(t: Tree, x: int):
    """Iterative preorder from x: tin/tout vertex intervals plus, for each
    preorder slot q >= 1, the edge id linking that vertex to its parent.
    The edges of B<v, parent(v)> plus the connecting edge are exactly the
    slots [tin[v], tout[v])."""
    n = t.n
    tin = np.zeros(n, dtype=np.int64)
    tout = np.zeros(n, dtype=np.int64)
    pre_eid = np.zeros(n, dtype=np.int64)
    indptr, nbr, eid = t.indptr, t.nbr, t.eid
    seen = np.zeros(n, dtype=np.bool_)
    stack = [(x, -1, False)]
    counter = 0
    while stack:
        v, via_edge, closing = stack.pop()
        if closing:
            tout[v] = counter
            continue
        seen[v] = True
        tin[v] = counter
        if via_edge >= 0:
            pre_eid[counter] = via_edge
        counter += 1
        stack.append((v, -1, True))
        for p in range(int(indptr[v]), int(indptr[v + 1])):
            u = int(nbr[p])
            if not seen[u]:
                stack.append((u, int(eid[p]), False))
    return tin, tout, pre_eid


def naive_sweep(t: Tree, rho: int, x: int):
    """Run the compiled candidate sweep; returns (value, pivot, j, btimes)
    with pivot = -1 and j = -1 for the all-lo fallback winner."""
    n = t.n
    if n == 1:
        return 0, -1, -1, np.zeros(1, dtype=np.int64)
    order0, _, ppos0 = bfs_structure(t, 0)
    _, xparent, xppos = bfs_structure(t, x)
    tin, tout, pre_eid = _preorder(t, x)
    best_bt = np.zeros(n, dtype=np.int64)
    val, pivot, j = _sweep(
        n, t.indptr, t.nbr, t.eid, t.rev, t.lo, t.hi, np.int64(rho),
        np.int64(x), order0, ppos0, xparent, xppos, tin, tout, pre_eid,
        best_bt)
    if pivot >= n:
        return int(val), -1, -1, best_bt
    return int(val), int(pivot), int(j), best_bt
