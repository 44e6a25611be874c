"""All period-3 orbits of sin(z) coded by strips with |k| <= 3 in both tracts.

The count of minimal codes follows the necklace formula, and each code gives
its own repelling point.
"""
import time

from tractorbit import FunctionSpec, build_partition
from tractorbit.enumerator import batch_solve, generate_itineraries
from tractorbit.partition import domain_window

part = build_partition(FunctionSpec.sin(1.0), R=2.0)
window = domain_window(part, 3)
print(len(window), "domains:", " ".join(map(str, window)))

for n in (1, 2, 3):
    its = generate_itineraries(window, n, minimal_only=True)
    t0 = time.perf_counter()
    rep = batch_solve(part, its, workers=2)
    dt = time.perf_counter() - t0
    worst = max(r.residual for r in rep.results)
    print(f"n={n}: {len(its):4d} codes, {len(rep.results):4d} solved, {len(rep.failures)} failed, "
          f"closest pair {rep.min_pairwise_distance:.2e}, worst residual {worst:.1e}, {dt:.2f}s")
