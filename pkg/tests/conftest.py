"""Shared fixtures: the worked 14-vertex example tree and small helpers."""

import random

import pytest

from mrbcast import build_tree, random_instance

# 14-vertex reference tree (vertices 0..13), rho = 1 throughout its uses.
# Query vertex X = 3, pivot P = 1; the pivot's far side holds vertices
# {0, 1, 6, 7, 8, 9, 10} and its sorted far-side neighbors are (0, 7, 8)
# with base-scenario keys (13, 12, 7).
FIG_EDGES = [
    (0, 1, 0, 7), (1, 2, 1, 2), (2, 3, 1, 2), (2, 4, 0, 3), (3, 5, 5, 6),
    (6, 0, 2, 5), (7, 1, 2, 5), (9, 7, 3, 4), (10, 7, 1, 6), (8, 1, 5, 7),
    (11, 3, 2, 4), (12, 11, 1, 4), (13, 11, 2, 3),
]
FIG_X = 3
FIG_PIVOT = 1


@pytest.fixture(scope="session")
def fig_tree():
    return build_tree(FIG_EDGES)


@pytest.fixture(scope="session")
def simple3_tree():
    # Three vertices in a path with intervals [2,6] and [1,4].
    return build_tree([(0, 1, 2, 6), (1, 2, 1, 4)])


def rand_tree(rng: random.Random, nmin=2, nmax=9, wmin=0, wmax=9, shape="random"):
    n = rng.randint(nmin, nmax)
    return random_instance(n, seed=rng.randrange(2**32), wmin=wmin, wmax=wmax,
                           shape=shape)


def rand_scenario(rng: random.Random, t):
    """Random scenario with every weight drawn inside its interval."""
    from mrbcast import Scenario

    w = [rng.randint(int(t.lo[e]), int(t.hi[e])) for e in range(t.n - 1)]
    return Scenario(t, w)


def rand_extremal(rng: random.Random, t):
    from mrbcast import Scenario

    return Scenario.from_bits(t, rng.getrandbits(max(t.n - 1, 1)))
