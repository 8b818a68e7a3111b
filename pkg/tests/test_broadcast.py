import itertools
import random

import pytest

from mrbcast import (NotNeighbor, Scenario, beta_scenario,
                     broadcast_centers, btime, btime_all, btime_bruteforce,
                     build_tree, neighbor_keys, optimal_schedule, path_info,
                     prime_broadcast_center)
from mrbcast.broadcast import branch_times

from conftest import FIG_PIVOT, FIG_X, rand_extremal, rand_scenario, rand_tree


def star_with_keys(keys):
    """Star whose leaf edge weights equal the given keys (exact intervals)."""
    return build_tree([(0, i + 1, k, k) for i, k in enumerate(keys)])


def test_btime_single_vertex():
    t = build_tree([])
    assert btime(t, Scenario(t, []), 3, 0) == 0


def test_btime_star_536():
    t = star_with_keys([5, 3, 1])
    s = Scenario.all_hi(t)
    # enumerate all 3! connection orders
    best = min(max((k + 1) * 1 + order[k] for k in range(3))
               for order in itertools.permutations([5, 3, 1]))
    assert best == 6
    assert btime(t, s, 1, 0) == 6


def test_btime_fig_values(fig_tree):
    s = beta_scenario(fig_tree, 1, FIG_X, FIG_PIVOT, 1)
    assert btime(fig_tree, s, 1, FIG_X) == 20
    assert btime(fig_tree, s, 1, FIG_PIVOT) == 14
    bt = btime_all(fig_tree, s, 1)
    assert int(bt[FIG_X]) == 20 and int(bt[FIG_PIVOT]) == 14


def test_btime_not_neighbor(fig_tree):
    with pytest.raises(NotNeighbor):
        btime(fig_tree, Scenario.all_hi(fig_tree), 1, FIG_X, excluded=0)


def test_scenario_tree_mismatch_rejected():
    t1 = build_tree([(0, 1, 1, 4)])
    t2 = build_tree([(0, 1, 2, 5)])
    with pytest.raises(ValueError):
        btime(t1, Scenario(t2, [3]), 1, 0)
    with pytest.raises(ValueError):
        Scenario(t1, [9])  # outside the interval


def test_neighbor_keys_fig(fig_tree):
    from mrbcast import alpha_scenario

    alpha = alpha_scenario(fig_tree, FIG_X, FIG_PIVOT)
    ks = neighbor_keys(fig_tree, alpha, 1, FIG_PIVOT, excluded=2)
    assert ks == [(0, 13), (7, 12), (8, 7)]


def test_neighbor_keys_leaf_and_ties():
    t = build_tree([(0, 1, 4, 4)])
    s = Scenario.all_hi(t)
    assert neighbor_keys(t, s, 1, 0) == [(1, 4)]
    # two neighbors with equal keys are ordered by vertex id
    t2 = star_with_keys([7, 7])
    assert neighbor_keys(t2, Scenario.all_hi(t2), 1, 0) == [(1, 7), (2, 7)]


def test_btime_all_path_and_single():
    t = build_tree([(0, 1, 2, 2), (1, 2, 1, 1)])
    assert list(btime_all(t, Scenario.all_hi(t), 1)) == [5, 3, 5]
    t1 = build_tree([])
    assert list(btime_all(t1, Scenario(t1, []), 1)) == [0]


def test_btime_all_matches_per_vertex():
    rng = random.Random(42)
    for _ in range(60):
        t = rand_tree(rng, 1, 16)
        s = rand_scenario(rng, t)
        rho = rng.choice([0, 1, 2, 5])
        bt = btime_all(t, s, rho)
        for v in range(t.n):
            assert bt[v] == btime(t, s, rho, v)


def test_broadcast_centers_basics():
    t1 = build_tree([])
    assert broadcast_centers(t1, Scenario(t1, []), 1) == frozenset({0})
    t = build_tree([(0, 1, 3, 3), (1, 2, 3, 3)])
    for rho in (0, 1, 4):
        assert 1 in broadcast_centers(t, Scenario.all_hi(t), rho)


def test_prime_center_small():
    t1 = build_tree([])
    assert prime_broadcast_center(t1, Scenario(t1, []), 1) == 0
    t2 = build_tree([(0, 1, 4, 4)])
    assert prime_broadcast_center(t2, Scenario.all_hi(t2), 1) == 0


def test_prime_center_condition_random():
    rng = random.Random(9)
    for _ in range(60):
        t = rand_tree(rng, 1, 9)
        s = rand_scenario(rng, t)
        rho = rng.choice([0, 1, 3])
        k = prime_broadcast_center(t, s, rho)
        assert k in broadcast_centers(t, s, rho)
        for u, _ in t.neighbors(k):
            assert btime(t, s, rho, k, excluded=u) >= btime(t, s, rho, u, excluded=k)


def test_break_edge_identity_and_path_lower_bound():
    # For every edge (u,v): if btime(u, B<u,v>) <= btime(v, B<v,u>) then
    # btime(u,T) = rho + w + btime(v, B<v,u>) and btime(v,T) <= btime(u,T).
    # And for any x != y: btime(x,T) >= d*rho + pathw + btime(y, B<y,x>).
    rng = random.Random(13)
    for _ in range(40):
        t = rand_tree(rng, 2, 10)
        s = rand_scenario(rng, t)
        rho = rng.choice([0, 1, 2])
        bt = btime_all(t, s, rho)
        for e in range(t.n - 1):
            u, v = int(t.edge_u[e]), int(t.edge_v[e])
            bu = btime(t, s, rho, u, excluded=v)
            bv = btime(t, s, rho, v, excluded=u)
            if bu <= bv:
                assert bt[u] == rho + int(s.weights[e]) + bv
                assert bt[v] <= bt[u]
            if bv <= bu:
                assert bt[v] == rho + int(s.weights[e]) + bu
                assert bt[u] <= bt[v]
        x, y = rng.randrange(t.n), rng.randrange(t.n)
        if x != y:
            edges, d = path_info(t, x, y)
            pathw = sum(int(s.weights[e]) for e in edges)
            toward = int(t.edge_u[edges[-1]]) if int(t.edge_v[edges[-1]]) == y \
                else int(t.edge_v[edges[-1]])
            assert bt[x] >= d * rho + pathw + btime(t, s, rho, y, excluded=toward)


def test_prime_center_direct_formula():
    # btime(x,T) = d(x,k)*rho + pathw + btime(k, B<k, x-side>) for the
    # prime center k and every other vertex x.
    rng = random.Random(29)
    for _ in range(40):
        t = rand_tree(rng, 2, 12)
        s = rand_scenario(rng, t)
        rho = rng.choice([0, 1, 2, 4])
        bt = btime_all(t, s, rho)
        k = prime_broadcast_center(t, s, rho)
        for x in range(t.n):
            if x == k:
                continue
            edges, d = path_info(t, x, k)
            pathw = sum(int(s.weights[e]) for e in edges)
            e_last = edges[-1]
            toward = int(t.edge_u[e_last]) if int(t.edge_v[e_last]) == k \
                else int(t.edge_v[e_last])
            assert bt[x] == d * rho + pathw + btime(t, s, rho, k, excluded=toward)


def test_star_property_random():
    rng = random.Random(31)
    for _ in range(120):
        t = rand_tree(rng, 1, 14)
        s = rand_scenario(rng, t)
        broadcast_centers(t, s, rng.choice([0, 1, 2, 5]))  # raises if not a star


def test_monotonicity_single_edge_bump():
    rng = random.Random(37)
    for _ in range(40):
        t = rand_tree(rng, 2, 10, wmin=0, wmax=6)
        rho = rng.choice([0, 1, 3])
        w = [rng.randint(int(t.lo[e]), int(t.hi[e])) for e in range(t.n - 1)]
        s = Scenario(t, w)
        e = rng.randrange(t.n - 1)
        if w[e] == int(t.hi[e]):
            continue
        w2 = list(w)
        w2[e] += 1
        s2 = Scenario(t, w2)
        b1, b2 = btime_all(t, s, rho), btime_all(t, s2, rho)
        assert all(int(b2[v]) >= int(b1[v]) for v in range(t.n))


def test_schedule_small():
    t1 = build_tree([])
    sch = optimal_schedule(t1, Scenario(t1, []), 1, 0)
    assert sch.arrival == (0,) and sch.makespan == 0

    star = star_with_keys([5, 3, 1])
    sch = optimal_schedule(star, Scenario.all_hi(star), 1, 0)
    assert sch.makespan == 6
    assert sorted(sch.arrival) == [0, 4, 5, 6]
    assert sch.arrival[1] == 6 and sch.arrival[2] == 5 and sch.arrival[3] == 4

    path = build_tree([(0, 1, 2, 2), (1, 2, 3, 3)])
    sch = optimal_schedule(path, Scenario.all_hi(path), 1, 0)
    assert sch.arrival == (0, 3, 7)
    assert sch.connect_rank == (0, 1, 1)


def test_schedule_matches_btime_and_bruteforce():
    rng = random.Random(41)
    for _ in range(40):
        t = rand_tree(rng, 1, 7)
        s = rand_extremal(rng, t)
        rho = rng.choice([0, 1, 3])
        v = rng.randrange(t.n)
        sch = optimal_schedule(t, s, rho, v)
        target = btime(t, s, rho, v)
        assert sch.makespan == target
        assert btime_bruteforce(t, s, rho, v) == target
        assert sch.arrival[v] == 0
        # arrival recurrence: child's arrival = parent's + rank*rho + w
        from mrbcast.tree_core import bfs_structure

        _, parent, _ = bfs_structure(t, v)
        for e in range(t.n - 1):
            a, b = int(t.edge_u[e]), int(t.edge_v[e])
            child, par = (b, a) if int(parent[b]) == a else (a, b)
            assert sch.arrival[child] == (sch.arrival[par]
                                          + sch.connect_rank[child] * rho
                                          + int(s.weights[e]))


def test_branch_times_away_matches_direct():
    rng = random.Random(47)
    for _ in range(25):
        t = rand_tree(rng, 2, 10)
        s = rand_scenario(rng, t)
        rho = rng.choice([0, 1, 2])
        bt = branch_times(t, s.weights, rho)
        for v in range(t.n):
            for p in t.row(v):
                u = int(t.nbr[p])
                assert int(bt.away[p]) == btime(t, s, rho, u, excluded=v)
