"""Sod, Lax and 123 Riemann problems against the exact solution.

Each run uses 200 cells, characteristic-wise reconstruction and the
exact Riemann fan as reference. The printout lists density errors and a
coarse density profile of the Lax tube for WENO-JS and WENO-ZR.
"""

from __future__ import annotations

import numpy as np

from wenozr.bench.io import run_experiment
from wenozr.bench.norms import reference_primitive
from wenozr.reference import solve_riemann_euler
from wenozr.weights import SchemeSpec

for name in ("sod", "lax", "123"):
    print(f"\n{name}")
    for fam in ("js", "m", "z", "zr"):
        res = run_experiment(name, SchemeSpec.from_name(fam))
        n = res.norms
        print(f"  {res.scheme.label:<14} L1 {n['L1']:.4e}  L2 {n['L2']:.4e}  Linf {n['Linf']:.4e}"
              f"  ({res.wall_time:.1f}s)")

res = {fam: run_experiment("lax", SchemeSpec.from_name(fam)) for fam in ("js", "zr")}
x = res["zr"].grid.x
rho = {fam: r.problem.model.cons_to_prim(r.u)[0] for fam, r in res.items()}
exact = reference_primitive(res["zr"].problem, x)[0]
prob = res["zr"].problem
fan = solve_riemann_euler(*prob.riemann)
for label, pos in (("contact", fan.u_star * prob.T), ("shock", fan.right_speeds[0] * prob.T)):
    print(f"\nLax density across the {label} at x = {pos:.3f}")
    print(f"{'x':>8} {'exact':>8} {'JS':>8} {'ZR':>8}")
    for i in np.nonzero(np.abs(x - pos) < 0.2)[0]:
        print(f"{x[i]:8.3f} {exact[i]:8.4f} {rho['js'][i]:8.4f} {rho['zr'][i]:8.4f}")
