"""f(z) = exp(z)/z has a pole at 0 but infinity is still a logarithmic singularity.

Outside a disk of radius R the preimage splits into one tract plus a small
component around the pole. Periodic points are only sought in the tract.
"""
from tractorbit import FunctionSpec, build_partition
from tractorbit import function_model as fm
from tractorbit.partition import domain_window
from tractorbit.solver import Itinerary, solve_periodic

f = FunctionSpec.exp_over_linear(0.0)
R = 10.0
for c in fm.classify_preimage_components(f, R):
    print(c.kind.value, "" if c.pole is None else f"around pole {c.pole}, order {c.order}")

part = build_partition(f, R)
window = domain_window(part, 3)
print("usable strips:", [str(d) for d in window])

for d in window:
    r = solve_periodic(part, Itinerary((d,)))
    print(f"{d}: w = {r.point:.10f}  |f'(w)| = {r.multiplier_modulus:.3f}  residual {r.residual:.1e}")
