"""How each family weights its substencils next to a jump.

The initial data is smooth except for a unit step at x = 0. Weights are
read at the first stage of the first step for the positive split flux.
Far from the jump all schemes return the linear weights (0.1, 0.6, 0.3);
at the interfaces straddling it the stencil crossing the jump is
switched off. Raising the ZR exponent p pushes the weights back towards
the linear ones wherever the data is smooth.
"""

from __future__ import annotations

import numpy as np

from wenozr.bench.probe import max_deviation, probe_weights, weight_probe
from wenozr.weights import Family, SchemeSpec

table = weight_probe(["js", "m", "z"], p_list=[1, 3, 6], eps={"m": 1e-6})
print("scheme            k " + " ".join(f"{x:>10}" for x in table.abscissae))
for label, k, *vals in table.rows():
    print(f"{label:<17} {k} " + " ".join(f"{v:10.4g}" for v in vals))

print("\nlargest |w - d| over the smooth part (|x| > 0.05) as p grows")
for p in (1, 2, 3, 6, 12, 24):
    x, w = probe_weights(SchemeSpec(Family.ZR, p=p))
    dev = max_deviation(w)
    print(f"  p = {p:>2}: {dev[np.abs(x) > 0.05].max():.3e}")
