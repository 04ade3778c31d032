"""Nonlinear weights around a jump on the first time step.

The probe advects

    u0(x) = -sin(pi x) - x^3/2          for x < 0
    u0(x) = -sin(pi x) - x^3/2 + 1      for x >= 0

on [-1, 1] with periodic ends and dx = 0.01, and reports the weights of
the positive split flux near the jump.

Two layouts are supported. With ``"interface"`` (the default) the data
sit on nodes ``x_j = -1 + j dx`` and a reported abscissa names the
interface ``x_{j+1/2}``; the jump then lies between the nodes -0.01 and
0. With ``"cell"`` the data sit on cell centres and a reported abscissa
names the cell whose right interface is reconstructed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from wenozr.evolve import rk3_step, spatial_operator_scalar
from wenozr.mesh import BoundaryKind, BoundarySpec, Centering, build_grid
from wenozr.physics import Advection
from wenozr.weights import LINEAR_WEIGHTS, SchemeSpec

__all__ = ["PROBE_ABSCISSAE", "probe_initial", "ProbeTable", "probe_weights", "weight_probe", "weight_profile", "max_deviation"]

PROBE_ABSCISSAE = (-0.035, -0.025, -0.015, -0.005, 0.005, 0.015, 0.025, 0.035)
LAYOUTS = ("interface", "cell")
READINGS = ("stage1", "step")

_BC = BoundarySpec.uniform(BoundaryKind.PERIODIC)
_MODEL = Advection(1.0)


def probe_initial(x):
    x = np.asarray(x, dtype=float)
    smooth = -np.sin(np.pi * x) - 0.5 * x**3
    return np.where(x < 0.0, smooth, smooth + 1.0)


def _setup(layout: str, n: int):
    if layout not in LAYOUTS:
        raise ValueError(f"layout must be one of {LAYOUTS}, got {layout!r}")
    grid = build_grid(-1.0, 1.0, n, Centering.NODE if layout == "interface" else Centering.CELL)
    u = np.zeros((1, grid.shape))
    u[0, grid.interior] = probe_initial(grid.x)
    return grid, u


def probe_weights(scheme: SchemeSpec, layout: str = "interface", reading: str = "stage1",
                  n: int = 200, dt: float | None = None):
    """Weights ``(3, n_if)`` of the positive flux at every interface.

    Also returns the interface abscissae. ``reading="step"`` evaluates
    the weights after one completed RK step of size ``dt`` (default
    ``0.4 dx``) instead of at the first stage.
    """
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}, got {reading!r}")
    grid, u = _setup(layout, n)
    if reading == "step":
        dt = 0.4 * grid.dx if dt is None else dt
        ev = lambda v, t: spatial_operator_scalar(v, grid, _BC, _MODEL, scheme, t)
        u = rk3_step(u, dt, ev, 0.0, (Ellipsis, grid.interior))
    _, w = spatial_operator_scalar(u, grid, _BC, _MODEL, scheme, 0.0, want_weights=True)
    x_if = grid.x[0] - 0.5 * grid.dx + grid.dx * np.arange(w.shape[-1])
    return x_if, w[:, 0]


def _column(grid_x0: float, dx: float, x: float, layout: str, n_if: int) -> int:
    # interface k sits between points k-1 and k
    target = x + 0.5 * dx if layout == "cell" else x
    k = (target - (grid_x0 - 0.5 * dx)) / dx
    kr = int(round(k))
    if abs(k - kr) > 1e-6 or not 0 <= kr < n_if:
        raise ValueError(f"abscissa {x} is not on the probe grid ({layout} layout)")
    return kr


@dataclass(frozen=True)
class ProbeTable:
    """Weights per scheme label, each of shape ``(3, len(abscissae))``."""

    abscissae: tuple[float, ...]
    weights: dict = field(hash=False)
    layout: str = "interface"
    reading: str = "stage1"

    def value(self, label: str, k: int, x: float) -> float:
        return float(self.weights[label][k, self.abscissae.index(x)])

    def rows(self) -> list[list]:
        out = []
        for label, w in self.weights.items():
            for k in range(3):
                out.append([label, k] + [float(v) for v in w[k]])
        return out

    def header(self) -> list[str]:
        return ["scheme", "k"] + [repr(x) for x in self.abscissae]


def weight_probe(schemes: Iterable[SchemeSpec | str] = ("js", "m", "z"), p_list: Sequence[float] = (),
                 abscissae: Sequence[float] = PROBE_ABSCISSAE, layout: str = "interface",
                 reading: str = "stage1", n: int = 200, eps: dict | None = None) -> ProbeTable:
    """Table of weight triples at named abscissae.

    ``schemes`` lists families or full specs; each entry of ``p_list`` adds
    a ZR scheme with that exponent. ``eps`` optionally overrides the
    regularization per family name, e.g. ``{"m": 1e-6}``.
    """
    eps = {k.lower(): v for k, v in (eps or {}).items()}
    specs = []
    for s in schemes:
        if isinstance(s, str):
            s = SchemeSpec.from_name(s, eps=eps.get(s.lower()))
        specs.append(s)
    specs += [SchemeSpec.from_name("zr", p=p, eps=eps.get("zr")) for p in p_list]
    table = {}
    for spec in specs:
        x_if, w = probe_weights(spec, layout, reading, n)
        dx = 2.0 / n
        x0 = x_if[0] + 0.5 * dx
        cols = [_column(x0, dx, x, layout, w.shape[1]) for x in abscissae]
        table[spec.label] = w[:, cols]
    return ProbeTable(tuple(float(x) for x in abscissae), table, layout, reading)


def weight_profile(scheme: SchemeSpec, window: float = 0.1, layout: str = "interface", n: int = 200):
    """``(x, weights)`` for every interface within ``window`` of the jump."""
    x_if, w = probe_weights(scheme, layout, "stage1", n)
    if layout == "cell":
        x_if = x_if - 0.5 * (2.0 / n)
    keep = np.abs(x_if) <= window + 1e-12
    return x_if[keep], w[:, keep]


def max_deviation(w: np.ndarray) -> np.ndarray:
    """``max_k |w_k - d_k|`` per column."""
    return np.max(np.abs(w - np.asarray(LINEAR_WEIGHTS)[:, None]), axis=0)
