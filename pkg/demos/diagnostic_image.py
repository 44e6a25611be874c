"""Escape-time picture of exp(z) with period-2 points marked.

Red crosses are orbit points, yellow pixels lie on preimages of the cut ray.
Writes exp_period2.ppm in the current directory.
"""
import sys

from tractorbit import FunctionSpec, build_partition
from tractorbit.enumerator import batch_solve, generate_itineraries
from tractorbit.partition import domain_window
from tractorbit.render import render_diagnostic

part = build_partition(FunctionSpec.exp(1.0), R=1.0)
rep = batch_solve(part, generate_itineraries(domain_window(part, 1), 2, minimal_only=True))

out = sys.argv[1] if len(sys.argv) > 1 else "exp_period2.ppm"
n = render_diagnostic(part, rep.results, out)
print(f"wrote {out} with {n} markers")
