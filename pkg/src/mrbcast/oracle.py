"""Deliberately slow brute-force references used as ground truth in tests.

Nothing here shares code with the fast paths beyond the Tree type:
broadcast times come either from enumerating connection orders outright
(btime_bruteforce) or from a textbook per-vertex recursion with plain
sorting (no rerooting, no bucket arrays), and the regret oracles
enumerate all 2^(n-1) extremal scenarios.  Hard size guards raise
TooLarge rather than silently crawling.
"""

from __future__ import annotations

from itertools import permutations

from .broadcast import Scenario
from .errors import TooLarge
from .tree_core import Tree

BTIME_GUARD = 8
REGRET_GUARD = 10


class ExtremalEnumerator:
    """Iterates the 2^(n-1) scenarios with every edge at an interval
    endpoint: bit e of the cursor set means edge e at hi, else lo;
    distinct whenever no interval is a single point."""

    def __init__(self, t: Tree):
        self.t = t

    def __len__(self):
        return 1 << (self.t.n - 1)

    def __iter__(self):
        for bits in range(1 << (self.t.n - 1)):
            yield Scenario.from_bits(self.t, bits)


def _iter_weight_tuples(t: Tree):
    lo = [int(v) for v in t.lo]
    hi = [int(v) for v in t.hi]
    for bits in range(1 << (t.n - 1)):
        yield [hi[e] if bits >> e & 1 else lo[e] for e in range(t.n - 1)]


def _simple_btime(t: Tree, w, rho: int, v: int, banned: int) -> int:
    """Textbook recursion: sort child keys nonincreasing, take
    max(k*rho + key).  Only for guard-sized trees."""
    keys = sorted((w[e] + _simple_btime(t, w, rho, u, v)
                   for u, e in t.neighbors(v) if u != banned),
                  reverse=True)
    return max((k * rho + key for k, key in enumerate(keys, start=1)), default=0)


def btime_bruteforce(t: Tree, s, rho: int, v: int) -> int:
    """Minimum makespan over all recursive child-connection orders."""
    if t.n > BTIME_GUARD:
        raise TooLarge(f"btime_bruteforce guard is n <= {BTIME_GUARD}, got {t.n}")
    t.check_vertex(v)
    w = s.weights

    def region_time(x: int, banned: int) -> int:
        kids = [(u, e) for u, e in t.neighbors(x) if u != banned]
        if not kids:
            return 0
        best = None
        for order in permutations(kids):
            makespan = 0
            for k, (u, e) in enumerate(order, start=1):
                arrive = k * rho + int(w[e])
                makespan = max(makespan, arrive + region_time(u, x))
            if best is None or makespan < best:
                best = makespan
        return best

    return region_time(v, -1)


def max_regret_bruteforce(t: Tree, rho: int, x: int) -> int:
    """max over extremal scenarios s and vertices y of
    b_time^s(x,T) - b_time^s(y,T)."""
    if t.n > REGRET_GUARD:
        raise TooLarge(f"max_regret_bruteforce guard is n <= {REGRET_GUARD}, got {t.n}")
    t.check_vertex(x)
    best = 0
    for w in _iter_weight_tuples(t):
        bt = [_simple_btime(t, w, rho, v, -1) for v in range(t.n)]
        r = bt[x] - min(bt)
        if r > best:
            best = r
    return best


def minmax_center_bruteforce(t: Tree, rho: int):
    """(vertex, value) minimizing max_regret_bruteforce; ties to lowest id."""
    if t.n > REGRET_GUARD:
        raise TooLarge(f"minmax_center_bruteforce guard is n <= {REGRET_GUARD}, got {t.n}")
    worst = [0] * t.n
    for w in _iter_weight_tuples(t):
        bt = [_simple_btime(t, w, rho, v, -1) for v in range(t.n)]
        low = min(bt)
        for v in range(t.n):
            r = bt[v] - low
            if r > worst[v]:
                worst[v] = r
    best_v = min(range(t.n), key=lambda v: (worst[v], v))
    return best_v, worst[best_v]
