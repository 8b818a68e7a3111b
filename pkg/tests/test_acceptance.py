"""Acceptance suite: one test per criterion, exact expected values, fixed
seeds, and the stated runtime budget asserted.  Run with ``pytest -s`` to
see the one-line PASS report per criterion."""

import random
import time

import numpy as np

from mrbcast import (OrderedIndex, Scenario, alpha_scenario, beta_scenario,
                     broadcast_centers, btime, btime_bruteforce,
                     build_tree, centroid, max_regret_bruteforce,
                     max_regret_fast, max_regret_naive,
                     minmax_center_bruteforce, neighbor_keys, path_info,
                     preprocess_extremes, prime_broadcast_center,
                     relative_regret, solve, solve_naive)
from mrbcast.broadcast import branch_times
from mrbcast._succ import (EvolvingBuckets, buckets_from_scratch,
                           succ_from_scratch)
from mrbcast.solver import iteration_bound
from mrbcast.tree_core import bfs_structure

from conftest import FIG_EDGES, FIG_PIVOT, FIG_X, rand_scenario
from test_ordered_index import ReferenceSet

from mrbcast import random_instance


def _report(num, name, t0, budget):
    dt = time.perf_counter() - t0
    assert dt < budget, f"criterion {num} exceeded its {budget}s budget ({dt:.1f}s)"
    print(f"ACCEPTANCE {num} ({name}): PASS in {dt:.1f}s (budget {budget}s)")


def test_acceptance_1_worked_example():
    t0 = time.perf_counter()
    t = build_tree(FIG_EDGES)
    alpha = alpha_scenario(t, FIG_X, FIG_PIVOT)
    keys = neighbor_keys(t, alpha, 1, FIG_PIVOT, excluded=2)
    assert [k for _, k in keys] == [13, 12, 7]
    b1 = beta_scenario(t, 1, FIG_X, FIG_PIVOT, 1)
    assert btime(t, b1, 1, FIG_X) == 20
    assert btime(t, b1, 1, FIG_PIVOT) == 14
    assert relative_regret(t, b1, 1, FIG_X, FIG_PIVOT) == 6
    edges, d = path_info(t, FIG_X, FIG_PIVOT)
    pathw = sum(int(b1.weights[e]) for e in edges)
    assert d * 1 + pathw == 2 + 4 == 6
    _report(1, "worked example", t0, 1)


def test_acceptance_2_broadcast_time_oracle():
    t0 = time.perf_counter()
    rng = random.Random(2_002)
    rhos = [0, 1, 3]
    for i in range(200):
        n = rng.randint(1, 7)
        t = random_instance(n, seed=rng.randrange(2**32))
        s = Scenario.from_bits(t, rng.getrandbits(max(n - 1, 1)))
        rho = rhos[i % 3]
        v = rng.randrange(n)
        assert btime(t, s, rho, v) == btime_bruteforce(t, s, rho, v)
    _report(2, "broadcast-time oracle", t0, 30)


def test_acceptance_3_regret_oracle():
    t0 = time.perf_counter()
    rng = random.Random(3_003)
    rhos = [0, 1, 2, 5]
    for i in range(500):
        n = rng.randint(2, 9)
        t = random_instance(n, seed=rng.randrange(2**32), wmin=0, wmax=9)
        rho = rhos[i % 4]
        x = rng.randrange(n)
        tables = preprocess_extremes(t, rho)
        fast = max_regret_fast(t, rho, x, tables).max_regret
        naive = max_regret_naive(t, rho, x).max_regret
        brute = max_regret_bruteforce(t, rho, x)
        assert fast == naive == brute
    _report(3, "regret oracle", t0, 300)


def test_acceptance_4_solver_oracle():
    t0 = time.perf_counter()
    rng = random.Random(4_004)
    for i in range(200):
        n = rng.randint(1, 10)
        t = random_instance(n, seed=rng.randrange(2**32))
        rho = [0, 1, 2, 5][i % 4]
        assert solve(t, rho).max_regret == minmax_center_bruteforce(t, rho)[1]
    for i in range(200):
        n = rng.randint(11, 60)
        t = random_instance(n, seed=rng.randrange(2**32))
        rho = [0, 1, 2, 5][i % 4]
        assert solve(t, rho).max_regret == solve_naive(t, rho).max_regret
    _report(4, "solver oracle", t0, 300)


def test_acceptance_5_scale_equivalence():
    t0 = time.perf_counter()
    rng = random.Random(5_005)
    sizes = [500, 1000, 2000]
    for i in range(50):
        n = sizes[i % 3]
        t = random_instance(n, seed=rng.randrange(2**32))
        rho = [1, 2, 5][i % 3] if i % 5 else 0
        tables = preprocess_extremes(t, rho)
        for _ in range(5):
            x = rng.randrange(n)
            fast = max_regret_fast(t, rho, x, tables).max_regret
            naive = max_regret_naive(t, rho, x).max_regret
            assert fast == naive, (n, rho, x)
    _report(5, "naive/fast scale equivalence", t0, 600)


def test_acceptance_6_structural_invariants():
    t0 = time.perf_counter()
    rng = random.Random(6_006)
    for i in range(1000):
        n = rng.randint(1, 30)
        t = random_instance(n, seed=rng.randrange(2**32))
        s = rand_scenario(rng, t)
        rho = [0, 1, 2, 5][i % 4]

        centers = broadcast_centers(t, s, rho)  # raises unless a star
        kappa = prime_broadcast_center(t, s, rho)
        assert kappa in centers
        bt = branch_times(t, s.weights, rho)
        for p in t.row(kappa):
            u = int(t.nbr[p])
            own = int(bt.away[t.position(u, kappa)])
            far = int(bt.away[p])
            assert own >= far, "prime center inequality violated"

        # direct-to-center equality for every non-center vertex
        order, parent, ppos = bfs_structure(t, kappa)
        w = s.weights
        d = np.zeros(t.n, dtype=np.int64)
        pw = np.zeros(t.n, dtype=np.int64)
        br = np.zeros(t.n, dtype=np.int64)
        for v in order[1:]:
            p = int(parent[v])
            d[v] = d[p] + 1
            pw[v] = pw[p] + w[t.eid[ppos[v]]]
            br[v] = v if p == kappa else br[p]
        for x in range(t.n):
            if x == kappa:
                continue
            side = int(bt.away[t.position(int(br[x]), kappa)])
            assert int(bt.total[x]) == int(d[x]) * rho + int(pw[x]) + side

        z = centroid(t)
        sizes = [len(c) for c in _open_branches(t, z)]
        assert (max(sizes) if sizes else 0) <= t.n // 2

        res = solve(t, rho)
        assert res.iterations <= iteration_bound(t.n)
    _report(6, "structural invariants", t0, 120)


def _open_branches(t, z):
    out = []
    for u, _ in t.neighbors(z):
        comp = [u]
        seen = {u, z}
        head = 0
        while head < len(comp):
            v = comp[head]
            head += 1
            for nb, _e in t.neighbors(v):
                if nb not in seen:
                    seen.add(nb)
                    comp.append(nb)
        out.append(comp)
    return out


def test_acceptance_7_incremental_succ():
    t0 = time.perf_counter()
    rng = random.Random(7_007)
    for _ in range(200):
        h = rng.randint(1, 64)
        rho = rng.choice([1, 2, 3, 5])
        plus = sorted((rng.randint(0, 160) for _ in range(h)), reverse=True)
        minus = [rng.randint(0, p) for p in plus]
        statics = [rng.randint(0, 200)] if rng.random() < 0.5 else []
        H = h + len(statics)
        eng = EvolvingBuckets(plus, minus, statics, rho)
        eng.run(record=True)
        for st in eng.states:
            tau, succ, delta, value = succ_from_scratch(plus, minus, statics,
                                                        rho, st.j)
            assert (st.tau, st.succ, st.delta, st.value) == (tau, succ, delta,
                                                             value)
        for j in range(1, eng.hprime):
            t1 = eng.tau[j]
            lhat = eng.bucket_of(minus[j])
            allowed = {t1} | ({lhat} if lhat else set())
            c1, m1, _ = buckets_from_scratch(plus, minus, statics, rho, j + 1)
            c0, m0, _ = buckets_from_scratch(plus, minus, statics, rho, j)
            for b in range(1, H + 1):
                if (c1[b], m1[b]) != (c0[b], m0[b]):
                    assert b in allowed
    _report(7, "incremental succ/pred", t0, 60)


def test_acceptance_8_ordered_index_differential():
    t0 = time.perf_counter()
    rng = random.Random(8_008)
    total_ops = 0
    for universe in (64, 4096, 10**6):
        idx = OrderedIndex(universe)
        ref = ReferenceSet(universe)
        ops = 400_000 if universe <= 4096 else 250_000
        for i in range(ops):
            op = rng.randrange(6)
            k = rng.randint(1, universe)
            if op <= 1:
                idx.insert(k)
                ref.insert(k)
            elif op == 2:
                assert idx.delete(k) == ref.delete(k)
            elif op == 3:
                assert idx.successor(k) == ref.successor(k)
            elif op == 4:
                assert idx.predecessor(k) == ref.predecessor(k)
            else:
                assert (k in idx) == (k in ref)
            if i % 64 == 0:
                assert idx.min() == ref.min()
        total_ops += ops
    assert total_ops >= 1_000_000
    _report(8, "ordered-index differential", t0, 60)
