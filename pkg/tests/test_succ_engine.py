"""The incremental succ/Delta machinery against from-scratch definitions."""

import random

from mrbcast._succ import (EvolvingBuckets, buckets_from_scratch, evolve_values,
                           succ_from_scratch, values_by_sorting)
from mrbcast.scenario_regret import preprocess_extremes, pivot_engine_states

from conftest import rand_tree


def synth_instance(rng, hmax=64):
    h = rng.randint(1, hmax)
    rho = rng.choice([1, 1, 2, 3, 5, 9])
    plus = sorted((rng.randint(0, 120) for _ in range(h)), reverse=True)
    minus = [rng.randint(0, p) for p in plus]
    statics = [rng.randint(0, 150)] if rng.random() < 0.5 else []
    return plus, minus, statics, rho


def test_values_match_sorting():
    rng = random.Random(83)
    for _ in range(400):
        plus, minus, statics, rho = synth_instance(rng, hmax=20)
        assert evolve_values(plus, minus, statics, rho)[1:] \
            == values_by_sorting(plus, minus, statics, rho)[1:]


def test_values_match_sorting_rho0():
    rng = random.Random(84)
    for _ in range(200):
        plus, minus, statics, _ = synth_instance(rng, hmax=16)
        assert evolve_values(plus, minus, statics, 0)[1:] \
            == values_by_sorting(plus, minus, statics, 0)[1:]


def test_succ_and_delta_match_scratch():
    rng = random.Random(85)
    for _ in range(250):
        plus, minus, statics, rho = synth_instance(rng)
        eng = EvolvingBuckets(plus, minus, statics, rho)
        eng.run(record=True)
        for st in eng.states:
            tau, succ, delta, value = succ_from_scratch(plus, minus, statics,
                                                        rho, st.j)
            assert st.tau == tau
            assert st.succ == succ
            assert st.delta == delta
            assert st.value == value
            # the maintained bucket arrays equal a full rebuild
            cnt, minv, _ = buckets_from_scratch(plus, minus, statics, rho, st.j)
            H = eng.H
            assert list(st.cnt[1:H + 1]) == cnt[1:H + 1]
            assert list(st.min_v[1:H + 1]) == minv[1:H + 1]


def test_tau_monotone_and_two_bucket_changes():
    # tau_j <= tau_{j+1} <= lhat, and consecutive candidates rebuild to
    # bucket arrays differing only at {tau_{j+1}, lhat}
    rng = random.Random(86)
    for _ in range(250):
        plus, minus, statics, rho = synth_instance(rng)
        h = len(plus)
        H = h + len(statics)
        eng = EvolvingBuckets(plus, minus, statics, rho)
        for j in range(1, min(h, eng.hprime) + 1):
            assert 1 <= eng.tau[j - 1]
            if j < h and eng.tau[j] != 0:
                assert eng.tau[j - 1] <= eng.tau[j]
        for j in range(1, eng.hprime):
            t1 = eng.tau[j]  # tau_{j+1}
            lhat = eng.bucket_of(minus[j])
            assert t1 <= (lhat if lhat else H + 1)
            c1, m1, _ = buckets_from_scratch(plus, minus, statics, rho, j + 1)
            c0, m0, _ = buckets_from_scratch(plus, minus, statics, rho, j)
            allowed = {t1} | ({lhat} if lhat else set())
            for b in range(1, H + 1):
                if (c1[b], m1[b]) != (c0[b], m0[b]):
                    assert b in allowed


def test_stage_branch_coverage():
    rng = random.Random(87)
    hits = {}
    for _ in range(600):
        plus, minus, statics, rho = synth_instance(rng, hmax=24)
        eng = EvolvingBuckets(plus, minus, statics, rho)
        eng.run()
        for k, v in eng.stage_hits.items():
            hits[k] = hits.get(k, 0) + v
    for branch in ("s2_auto_join", "s2_auto_keep", "s2_join_member",
                   "s2_join_new", "s2_drop_member", "s2_drop_new", "s3_keep",
                   "s3_drop", "s4_first", "s4_join", "s4_drop", "s4_skip",
                   "same_bucket", "out_of_buckets"):
        assert hits.get(branch, 0) > 0, f"stage branch {branch} never exercised"


def test_engine_states_on_real_star_heavy_trees():
    rng = random.Random(88)
    checked = 0
    for _ in range(40):
        t = rand_tree(rng, 6, 40, shape="star")
        rho = rng.choice([1, 2, 3])
        x = rng.randrange(1, t.n)  # a leaf, so the hub is a useful pivot
        tables = preprocess_extremes(t, rho)
        eng, plus, minus, statics = pivot_engine_states(t, rho, x, 0, tables,
                                                        with_mu=True)
        if eng is None:
            continue
        for st in eng.states:
            tau, succ, delta, value = succ_from_scratch(plus, minus, statics,
                                                        rho, st.j)
            assert (st.tau, st.succ, st.delta, st.value) == (tau, succ, delta, value)
            checked += 1
    assert checked > 100
