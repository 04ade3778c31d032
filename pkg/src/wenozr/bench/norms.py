"""Discrete error norms, convergence tables and reference sampling."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from wenozr.bench.problems import ProblemSpec, ReferenceKind, get_problem
from wenozr.evolve import advance
from wenozr.reference import highres_reference, riemann_exact, solve_riemann_euler
from wenozr.weights import SchemeSpec

__all__ = ["error_norms", "ErrorReport", "convergence_table", "reference_primitive", "solution_primitive"]


def error_norms(numeric, exact) -> tuple[float, float, float]:
    """``(L1, L2, Linf)`` of ``numeric - exact`` over all samples.

    The sums are divided by the number of samples, which is ``N + 1`` on a
    node grid with nodes ``0..N``.
    """
    numeric = np.asarray(numeric, dtype=float)
    exact = np.asarray(exact, dtype=float)
    if numeric.shape != exact.shape:
        raise ValueError(f"length mismatch: {numeric.shape} vs {exact.shape}")
    e = np.abs(numeric - exact).ravel()
    if e.size == 0:
        raise ValueError("empty field")
    return float(e.sum() / e.size), float(math.sqrt((e * e).sum() / e.size)), float(e.max())


@dataclass(frozen=True)
class ErrorReport:
    N: int
    L1: float
    L2: float
    Linf: float
    order_L1: float | None = None
    order_L2: float | None = None
    order_Linf: float | None = None

    def error(self, norm: str) -> float:
        return getattr(self, norm)

    def order(self, norm: str) -> float | None:
        return getattr(self, "order_" + norm)


def _order(prev: float, cur: float) -> float:
    return math.log2(prev / cur) if prev > 0 and cur > 0 else float("nan")


def convergence_table(problem: ProblemSpec | str = "advection", scheme: SchemeSpec | None = None,
                      N_list: Sequence[int] = (10, 20, 40, 80, 160, 320)) -> list[ErrorReport]:
    """Errors against the closed-form solution at each N, with log2 orders.

    Consecutive entries of ``N_list`` are expected to double.
    """
    if isinstance(problem, str):
        problem = get_problem(problem)
    if problem.exact is None:
        raise ValueError(f"problem {problem.name!r} has no closed-form solution")
    scheme = scheme or SchemeSpec.from_name("zr")
    rows: list[ErrorReport] = []
    for n in N_list:
        grid, u = advance(problem, scheme, n=n)
        L1, L2, Li = error_norms(u[0], problem.exact(grid.x, problem.T))
        if rows:
            p = rows[-1]
            rows.append(ErrorReport(n, L1, L2, Li, _order(p.L1, L1), _order(p.L2, L2), _order(p.Linf, Li)))
        else:
            rows.append(ErrorReport(n, L1, L2, Li))
    return rows


def solution_primitive(problem: ProblemSpec, u: np.ndarray) -> np.ndarray:
    """Interior solution as primitive variables (scalars pass through)."""
    return problem.model.cons_to_prim(u) if problem.model.is_system else np.asarray(u)


def reference_primitive(problem: ProblemSpec, x, t: float | None = None, n_ref: int = 2000):
    """Reference primitive state at 1D points ``x``, or None if there is none."""
    t = problem.T if t is None else t
    kind = problem.reference
    if kind is ReferenceKind.CLOSED_FORM:
        return np.asarray(problem.exact(x, t), dtype=float)[None]
    if kind is ReferenceKind.EXACT_RIEMANN:
        left, right = problem.riemann
        fan = solve_riemann_euler(left, right, problem.model.gamma)
        return riemann_exact(fan, x, t)
    if kind is ReferenceKind.HIGHRES_M2000:
        if t != problem.T:
            raise ValueError("the fine-grid reference exists only at the final time")
        ref = highres_reference(problem, n=n_ref)
        return problem.model.cons_to_prim(ref.sample(x))
    return None
