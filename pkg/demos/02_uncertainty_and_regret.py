# Edge-weight uncertainty and maximum regret, on a 14-vertex example.
#
# Every edge weight is only known to lie in an interval.  A "scenario"
# fixes one weight per edge.  Choosing vertex x as the broadcast origin
# risks regret: under some scenario s, a rival y broadcasts faster, and
# r = b_time(x) - b_time(y) is the loss.  max_regret(x) is the worst such
# loss over all scenarios and rivals.  Remarkably, the worst case always
# lies in a small structured family of scenarios, one per (pivot vertex,
# suffix index) pair.

from mrbcast import (alpha_scenario, beta_scenario, btime, build_tree,
                     max_regret_fast, max_regret_naive, neighbor_keys,
                     preprocess_extremes, relative_regret)

edges = [
    (0, 1, 0, 7), (1, 2, 1, 2), (2, 3, 1, 2), (2, 4, 0, 3), (3, 5, 5, 6),
    (6, 0, 2, 5), (7, 1, 2, 5), (9, 7, 3, 4), (10, 7, 1, 6), (8, 1, 5, 7),
    (11, 3, 2, 4), (12, 11, 1, 4), (13, 11, 2, 3),
]
t = build_tree(edges)
rho = 1
x = 3        # query vertex
pivot = 1    # a rival two hops away

# The base scenario for (x, pivot): as bad as possible for x, as good as
# possible for the pivot's far side: hi on the x-to-pivot path and on
# every edge beyond the pivot, lo elsewhere.
alpha = alpha_scenario(t, x, pivot)
print("base scenario weights:", list(map(int, alpha.weights)))

# The pivot's far-side neighbors, ranked by how long their branches keep
# it busy under the base scenario:
keys = neighbor_keys(t, alpha, rho, pivot, excluded=2)
print("far-side neighbor keys at the pivot:", keys)

# Resetting the lower-ranked branches back to lo gives the rest of the
# candidate family; index j keeps the first j branches at hi.
for j in (1, 2, 3):
    beta = beta_scenario(t, rho, x, pivot, j)
    r = relative_regret(t, beta, rho, x, pivot)
    print(f"candidate j={j}: b_time(x)={btime(t, beta, rho, x)}, "
          f"b_time(pivot)={btime(t, beta, rho, pivot)}, regret={r}")

# j=1 is the worst case here: regret 6.  The naive search materializes
# all such candidates for every pivot; the fast search scores them
# against two preprocessed extreme scenarios without materializing.
tables = preprocess_extremes(t, rho)
fast = max_regret_fast(t, rho, x, tables)
naive = max_regret_naive(t, rho, x)
print(f"\nmax_regret({x}) fast  = {fast.max_regret} "
      f"(pivot {fast.worst_scenario.pivot}, j {fast.worst_scenario.j}, "
      f"witness {fast.witness_center})")
print(f"max_regret({x}) naive = {naive.max_regret}")
assert fast.max_regret == naive.max_regret == 6

# The report is recomputable from scratch:
sc = fast.worst_scenario.materialize(t, rho)
assert (btime(t, sc, rho, x) - btime(t, sc, rho, fast.witness_center)
        == fast.max_regret)
print("worst-case scenario recomputes to the same regret: ok")
