"""A Mach 3 shock running into a sinusoidal density field.

The reference is a 2000-cell WENO-M solution. The k = 5 case runs on
200 cells and the shorter-wave k = 10 case on 500; in both the density
error drops from JS through M and Z to ZR.
"""

from __future__ import annotations

from wenozr.bench.io import run_experiment
from wenozr.bench.problems import get_problem
from wenozr.weights import SchemeSpec

for name in ("shock_entropy", "shock_entropy_k10"):
    prob = get_problem(name)
    print(f"\n{name}: {prob.description}")
    for fam in ("js", "m", "z", "zr"):
        res = run_experiment(prob, SchemeSpec.from_name(fam))
        print(f"  {res.scheme.label:<14} density L1 {res.norms['L1']:.4e}  ({res.wall_time:.1f}s)")
