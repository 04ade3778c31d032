"""Two-dimensional Euler runs on reduced grids.

The full-size runs take minutes to tens of minutes on one core; here
the four-quadrant Riemann problem and the double Mach reflection run on
coarse grids so the script finishes quickly. Positivity is monitored at
every step, and a strip of density values is printed for each.
"""

from __future__ import annotations

import numpy as np

from wenozr.bench.problems import get_problem
from wenozr.evolve import advance
from wenozr.weights import SchemeSpec


def lowest(model, store):
    def obs(step, t, u):
        store.append(min(u[0].min(), model.pressure(u).min()))
    return obs


for name, n in (("riemann2d", (80, 80)), ("dmr", (120, 30))):
    prob = get_problem(name)
    mins: list[float] = []
    grid, u = advance(prob, SchemeSpec.from_name("zr"), observers=[lowest(prob.model, mins)], n=n)
    rho = prob.model.cons_to_prim(u)[0]
    print(f"\n{name} on {n[0]}x{n[1]} to t = {prob.T}: {len(mins) - 1} steps, "
          f"min(rho, P) over the run {min(mins):.3g}")
    print(f"  density range [{rho.min():.4f}, {rho.max():.4f}]")
    j = n[1] // 4
    row = rho[::max(1, n[0] // 12), j]
    print(f"  rho along y = {grid.yaxis.x[j]:.3f}: " + " ".join(f"{v:.3f}" for v in row))
