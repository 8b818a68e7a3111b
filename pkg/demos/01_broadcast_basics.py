# Broadcast times on a tree under the postal model.
#
# A sender spends rho time units per connection, made one receiver at a
# time, but transmissions overlap: the k-th receiver in the sender's
# order holds the message at k*rho + w(edge) after the sender does.
# Every quantity below is an exact integer.

from mrbcast import (Scenario, broadcast_centers, btime, btime_all,
                     build_tree, optimal_schedule, prime_broadcast_center)

# A small heterogeneous network: vertex 0 bridges two uneven sides.
#
#        3   4
#         \ /
#      1 - 0 - 2 - 5
#
edges = [
    (0, 1, 4, 4),   # (u, v, lo, hi): exact weights here, lo == hi
    (0, 2, 1, 1),
    (0, 3, 2, 2),
    (0, 4, 6, 6),
    (2, 5, 3, 3),
]
t = build_tree(edges)
s = Scenario.all_hi(t)   # all weights fixed, so lo and hi coincide
rho = 1

print("broadcast time of each vertex over the whole tree (rho = 1):")
for v, bt in enumerate(btime_all(t, s, rho)):
    print(f"  b_time({v}) = {bt}")

centers = broadcast_centers(t, s, rho)
print(f"broadcast centers (argmin set): {sorted(centers)}")
print(f"prime broadcast center: {prime_broadcast_center(t, s, rho)}")

# The schedule behind the number: vertex 0 connects to its neighbors in
# nonincreasing order of w + (time the neighbor still needs downstream).
sched = optimal_schedule(t, s, rho, 0)
print(f"\noptimal schedule from 0, makespan {sched.makespan}:")
for v in range(t.n):
    print(f"  vertex {v}: connect rank {sched.connect_rank[v]}, "
          f"arrival {sched.arrival[v]}")
assert sched.makespan == btime(t, s, rho, 0)

# Raising rho makes connection setup dominate: the big-degree hub pays
# for its fan-out.
for r in (0, 1, 3, 8):
    bt = btime_all(t, s, r)
    print(f"rho = {r}: b_time(0) = {bt[0]}, best vertex = {int(bt.argmin())}")
