"""Seeded instance generators used by the CLI, the oracle battery, and
the benchmark harness.  A fixed seed yields byte-identical instances."""

from __future__ import annotations

import heapq
import random

from .errors import BadRange
from .tree_core import Tree, build_tree

SHAPES = ("random", "path", "star", "caterpillar")


def prufer_edges(n: int, rng: random.Random):
    """Uniform random labeled tree on n vertices via a Prufer sequence,
    decoded with a leaf heap (deterministic for a given rng state)."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for s in seq:
        deg[s] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        deg[s] -= 1
        if deg[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def shape_edges(shape: str, n: int, rng: random.Random):
    if shape == "random":
        return prufer_edges(n, rng)
    if shape == "path":
        return [(v, v + 1) for v in range(n - 1)]
    if shape == "star":
        return [(0, v) for v in range(1, n)]
    if shape == "caterpillar":
        spine = max(1, n // 2)
        edges = [(v, v + 1) for v in range(spine - 1)]
        for i, v in enumerate(range(spine, n)):
            edges.append((i % spine, v))
        return edges
    raise BadRange(f"unknown shape {shape!r}; pick one of {SHAPES}")


def random_instance(n: int, seed: int, wmin: int = 0, wmax: int = 9,
                    shape: str = "random") -> Tree:
    """Seeded tree with interval weights drawn from [wmin, wmax]."""
    if n < 1:
        raise BadRange(f"need n >= 1, got {n}")
    if not (0 <= wmin <= wmax):
        raise BadRange(f"need 0 <= wmin <= wmax, got [{wmin}, {wmax}]")
    rng = random.Random(seed)
    rows = []
    for u, v in shape_edges(shape, n, rng):
        a = rng.randint(wmin, wmax)
        b = rng.randint(wmin, wmax)
        rows.append((u, v, min(a, b), max(a, b)))
    return build_tree(rows)
