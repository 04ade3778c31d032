"""Accuracy on a smooth solution.

Advects sin(pi x) once around the periodic domain [-1, 1] and prints
L1/L2/Linf errors with observed orders for each weight family. All
four nonlinear schemes should settle at fifth order; the Z-type
weights reach the asymptotic errors of the linear scheme sooner.
"""

from __future__ import annotations

from wenozr.bench.norms import convergence_table
from wenozr.weights import SchemeSpec

for name in ("linear", "js", "m", "z", "zr"):
    scheme = SchemeSpec.from_name(name)
    print(f"\n{scheme.label}")
    print(f"{'N':>5} {'L1':>10} {'order':>7} {'L2':>10} {'order':>7} {'Linf':>10} {'order':>7}")
    for r in convergence_table("advection", scheme):
        o = [f"{v:7.3f}" if v is not None else "      -" for v in (r.order_L1, r.order_L2, r.order_Linf)]
        print(f"{r.N:>5} {r.L1:10.3e} {o[0]} {r.L2:10.3e} {o[1]} {r.Linf:10.3e} {o[2]}")
