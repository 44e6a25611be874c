"""How fast does the inverse-branch iteration contract?

In logarithmic coordinates the branch maps a half-strip into itself, and the
hyperbolic step ratio should drop like pi / Re(phi) once the iterates sit far
to the right. Deep strips (large |k|) keep the whole orbit out there.
"""
from tractorbit import FunctionSpec, build_partition
from tractorbit.hyperbolic import contraction_ratio_bound
from tractorbit.solver import Itinerary, hyperbolic_step_ratios, solve_periodic

part = build_partition(FunctionSpec.exp(1.0), R=1.0)

for k, seed in [(3, None), (3, 1e8), (200, None)]:
    r = solve_periodic(part, Itinerary.of(k), seed=seed)
    print(f"k={k} seed={seed}: {r.iterations} steps, w = {r.point:.6f}")
    for m, (a, b, ratio) in enumerate(hyperbolic_step_ratios(part, r)[:6]):
        bound = contraction_ratio_bound(min(a, b))
        print(f"  m={m}  Re phi {a:9.3f} -> {b:9.3f}   ratio {ratio:.3e}   pi/Re phi {bound:.3e}")
    print()
