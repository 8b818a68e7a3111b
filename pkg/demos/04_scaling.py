# Informal scaling evidence: the naive worst-case-scenario search does a
# full O(n) broadcast sweep per candidate (n per query), while the fast
# search scores all candidates incrementally after an O(n log n)
# preprocessing.  Doubling n should roughly quadruple naive query time
# and roughly double the fast one.  Timings are wall-clock and noisy;
# the correctness suite never relies on them.

import time

from mrbcast import max_regret_fast, max_regret_naive, preprocess_extremes, random_instance

rho = 1
sizes = [250, 500, 1000, 2000]
max_regret_naive(random_instance(64, seed=0), rho, 0)  # warm the JIT

print(f"{'n':>6} {'prep_ms':>8} {'fast_ms':>8} {'naive_ms':>9}")
prev = None
rows = []
for n in sizes:
    t = random_instance(n, seed=11)
    x = n // 2
    t0 = time.perf_counter()
    tables = preprocess_extremes(t, rho)
    t1 = time.perf_counter()
    rf = max_regret_fast(t, rho, x, tables)
    t2 = time.perf_counter()
    rn = max_regret_naive(t, rho, x)
    t3 = time.perf_counter()
    assert rf.max_regret == rn.max_regret
    rows.append((n, (t1 - t0) * 1e3, (t2 - t1) * 1e3, (t3 - t2) * 1e3))
    print(f"{n:>6} {rows[-1][1]:>8.1f} {rows[-1][2]:>8.1f} {rows[-1][3]:>9.1f}")

print("\ndoubling ratios (t(2n)/t(n)):")
for (n0, _, f0, v0), (n1, _, f1, v1) in zip(rows, rows[1:]):
    print(f"  {n0:>5} -> {n1:<5} fast x{f1 / f0:.2f}   naive x{v1 / v0:.2f}")
print("\nnaive trends toward x4 per doubling, fast stays near x2.")
