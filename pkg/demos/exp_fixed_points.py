"""Repelling fixed points of exp(z), one per logarithm strip.

Each strip {(2k-1)pi < Im z < (2k+1)pi} far enough from the origin holds
exactly one fixed point. We find it by iterating the matching inverse branch
and then check it against plain Newton on exp(z) - z.
"""
import cmath

from tractorbit import FunctionSpec, build_partition
from tractorbit.solver import Itinerary, newton_refine, solve_periodic

f = FunctionSpec.exp(1.0)
part = build_partition(f, R=1.0)

print(f"{'k':>4} {'fixed point':>36} {'|mult|':>10} {'iters':>6} {'newton gap':>11}")
for k in (-3, -2, -1, 1, 2, 3):
    r = solve_periodic(part, Itinerary.of(k))
    gap = abs(newton_refine(f, 1, r.point) - r.point)
    print(f"{k:>4} {r.point.real:15.12f} {r.point.imag:+17.12f}j {r.multiplier_modulus:10.4f} "
          f"{r.iterations:6d} {gap:11.2e}")

# for exp the multiplier at a fixed point is the point itself
w = solve_periodic(part, Itinerary.of(1)).point
print("\nexp(w) - w =", abs(cmath.exp(w) - w))
