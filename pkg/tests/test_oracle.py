import random

import pytest

from mrbcast import (ExtremalEnumerator, Scenario, TooLarge, btime,
                     btime_bruteforce, build_tree, max_regret_bruteforce,
                     max_regret_naive, minmax_center_bruteforce, solve)

from conftest import rand_extremal, rand_tree


def test_btime_bruteforce_small():
    t = build_tree([])
    assert btime_bruteforce(t, Scenario(t, []), 1, 0) == 0
    star = build_tree([(0, 1, 5, 5), (0, 2, 3, 3), (0, 3, 1, 1)])
    assert btime_bruteforce(star, Scenario.all_hi(star), 1, 0) == 6


def test_guards():
    big = rand_tree(random.Random(1), 11, 16)
    with pytest.raises(TooLarge):
        btime_bruteforce(big, Scenario.all_hi(big), 1, 0)
    with pytest.raises(TooLarge):
        max_regret_bruteforce(big, 1, 0)
    with pytest.raises(TooLarge):
        minmax_center_bruteforce(big, 1)


def test_btime_bruteforce_matches_dp():
    rng = random.Random(103)
    for _ in range(60):
        t = rand_tree(rng, 1, 7)
        s = rand_extremal(rng, t)
        rho = rng.choice([0, 1, 3])
        v = rng.randrange(t.n)
        assert btime_bruteforce(t, s, rho, v) == btime(t, s, rho, v)


def test_extremal_enumerator():
    t = build_tree([(0, 1, 1, 4), (1, 2, 2, 3), (1, 3, 0, 5)])
    scenarios = list(ExtremalEnumerator(t))
    assert len(scenarios) == 8
    seen = {tuple(map(int, s.weights)) for s in scenarios}
    assert len(seen) == 8  # distinct when no interval is degenerate
    for w in seen:
        assert all(wi in (int(t.lo[e]), int(t.hi[e])) for e, wi in enumerate(w))
    degenerate = build_tree([(0, 1, 2, 2), (1, 2, 1, 4)])
    assert len(list(ExtremalEnumerator(degenerate))) == 4


def test_regret_oracle_values():
    t = build_tree([])
    assert max_regret_bruteforce(t, 1, 0) == 0
    t2 = build_tree([(0, 1, 1, 4)])
    # both scenarios give equal btimes on two vertices: regret 0
    assert max_regret_bruteforce(t2, 1, 0) == 0
    assert max_regret_naive(t2, 1, 0).max_regret == 0


def test_minmax_center_bruteforce_basics():
    t = build_tree([])
    assert minmax_center_bruteforce(t, 1) == (0, 0)
    path = build_tree([(0, 1, 2, 5), (1, 2, 2, 5)])
    c, v = minmax_center_bruteforce(path, 1)
    assert c == 1
    assert solve(path, 1).max_regret == v
