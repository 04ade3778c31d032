"""Registry of the benchmark problems: data, domains, final times and step rules."""

from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from wenozr.evolve import StepKind, TimeStepRule
from wenozr.mesh import (BoundaryKind, BoundarySpec, Centering, DoubleMachParams, Grid2D,
                         build_grid, fill_ghosts)
from wenozr.physics import Advection, Burgers, Euler1D, Euler2D
from wenozr.reference import advection_exact, burgers_shock_exact

__all__ = ["ReferenceKind", "ProblemSpec", "REGISTRY", "get_problem", "problem_names"]

GAMMA = 1.4


class ReferenceKind(enum.Enum):
    CLOSED_FORM = "closed_form"
    EXACT_RIEMANN = "exact_riemann"
    HIGHRES_M2000 = "highres_m2000"
    NONE = "none"


@dataclass(frozen=True)
class ProblemSpec:
    """One benchmark problem.

    ``initial`` maps coordinates to the primitive state (a bare array for
    scalar models, ``(m, ...)`` for Euler). ``resolutions`` lists the cell
    counts the problem is run at; the first one is the default. For 2D
    problems each entry is an ``(nx, ny)`` pair.
    """

    name: str
    model: object
    domain: tuple
    initial: Callable
    bc: BoundarySpec
    T: float
    dt_rule: TimeStepRule
    resolutions: tuple
    reference: ReferenceKind
    centering: Centering = Centering.CELL
    exact: Callable | None = None
    riemann: tuple | None = None
    description: str = ""

    @property
    def ndim(self) -> int:
        return len(self.domain)

    @property
    def default_n(self):
        return self.resolutions[0]

    def grid(self, n=None):
        n = self.default_n if n is None else n
        if self.ndim == 1:
            (a, b), = self.domain
            return build_grid(a, b, int(n), self.centering)
        nx, ny = n
        (ax, bx), (ay, by) = self.domain
        return Grid2D(build_grid(ax, bx, int(nx), self.centering),
                      build_grid(ay, by, int(ny), self.centering))

    def initial_primitive(self, grid) -> np.ndarray:
        """Primitive initial state on the interior points, shape ``(m, ...)``."""
        if isinstance(grid, Grid2D):
            w = self.initial(*grid.mesh())
        else:
            w = self.initial(grid.x)
        w = np.asarray(w, dtype=float)
        return w[None] if w.ndim == grid_ndim(grid) else w

    def initial_field(self, grid) -> np.ndarray:
        """Conserved initial field with ghosts filled at t = 0."""
        w = self.initial_primitive(grid)
        shape = grid.shape if isinstance(grid.shape, tuple) else (grid.shape,)
        u = np.zeros((w.shape[0],) + shape)
        inner = grid.interior if isinstance(grid, Grid2D) else (grid.interior,)
        if self.model.is_system:
            u[(slice(None),) + inner] = self.model.prim_to_cons(w)
        else:
            u[(slice(None),) + inner] = w
        fill_ghosts(u, grid, self.bc, 0.0)
        return u

    def with_overrides(self, T: float | None = None, dt_coefficient: float | None = None) -> ProblemSpec:
        changes = {}
        if T is not None:
            changes["T"] = float(T)
        if dt_coefficient is not None:
            changes["dt_rule"] = TimeStepRule(self.dt_rule.kind, float(dt_coefficient))
        return dataclasses.replace(self, **changes) if changes else self


def grid_ndim(grid) -> int:
    return 2 if isinstance(grid, Grid2D) else 1


def _riemann_1d(left, right):
    left = np.asarray(left, dtype=float)
    right = np.asarray(right, dtype=float)

    def init(x):
        return np.where(x <= 0.0, left[:, None], right[:, None])

    return init


def _sine(x):
    return np.sin(np.pi * x)


def _burgers_step(x):
    return np.where(x <= 0.0, 1.0, 0.0)


def _shock_entropy(k):
    post = np.array([3.857143, 2.629369, 10.333333])

    def init(x):
        rest = np.stack([1.0 + 0.2 * np.sin(k * x), np.zeros_like(x), np.ones_like(x)])
        return np.where(x < -4.0, post[:, None], rest)

    return init


_QUADRANTS = {
    # (x > 0.8, y > 0.8) -> (rho, u, v, P)
    (True, True): (1.5, 0.0, 0.0, 1.5),
    (False, True): (0.5323, 1.206, 0.0, 0.3),
    (False, False): (0.138, 1.206, 1.206, 0.029),
    (True, False): (0.5323, 0.0, 1.206, 0.3),
}


def _riemann_2d(x, y):
    out = np.empty((4,) + x.shape)
    for (east, north), state in _QUADRANTS.items():
        mask = ((x > 0.8) == east) & ((y > 0.8) == north)
        for c, v in enumerate(state):
            out[c][mask] = v
    return out


def _double_mach(x, y):
    theta = math.pi / 6.0
    post = np.array([8.0, 8.25 * math.cos(theta), -8.25 * math.sin(theta), 116.5])
    pre = np.array([1.4, 0.0, 0.0, 1.0])
    behind = x < 1.0 / 6.0 + y / math.sqrt(3.0)
    return np.where(behind[None], post[:, None, None], pre[:, None, None])


_ZG = BoundaryKind.ZERO_GRADIENT
_TUBE_RULE = TimeStepRule(StepKind.DT_EQ_C_DX, 0.2)
_SE_RULE = TimeStepRule(StepKind.DT_EQ_C_DX, 0.05)


def _tube(name, left, right, T, description):
    return ProblemSpec(
        name=name, model=Euler1D(GAMMA), domain=((-5.0, 5.0),), initial=_riemann_1d(left, right),
        bc=BoundarySpec.uniform(_ZG), T=T, dt_rule=_TUBE_RULE, resolutions=(200,),
        reference=ReferenceKind.EXACT_RIEMANN, riemann=(tuple(left), tuple(right)),
        description=description,
    )


def _build_registry() -> dict[str, ProblemSpec]:
    problems = [
        ProblemSpec(
            name="advection", model=Advection(1.0), domain=((-1.0, 1.0),), initial=_sine,
            bc=BoundarySpec.uniform(BoundaryKind.PERIODIC), T=2.0,
            dt_rule=TimeStepRule(StepKind.DT_EQ_C_DX_POW, 0.4),
            resolutions=(10, 20, 40, 80, 160, 320), reference=ReferenceKind.CLOSED_FORM,
            centering=Centering.NODE, exact=advection_exact,
            description="periodic sine wave, one period of transport",
        ),
        ProblemSpec(
            name="burgers", model=Burgers(), domain=((-1.0, 1.0),), initial=_burgers_step,
            bc=BoundarySpec.uniform(_ZG), T=1.0, dt_rule=TimeStepRule(StepKind.DT_EQ_C_DX, 0.4),
            resolutions=(40,), reference=ReferenceKind.CLOSED_FORM, exact=burgers_shock_exact,
            description="right-moving shock of the inviscid Burgers equation",
        ),
        _tube("sod", (1.0, 0.0, 1.0), (0.125, 0.0, 0.1), 2.0, "Sod shock tube"),
        _tube("lax", (0.445, 0.698, 3.528), (0.5, 0.0, 0.571), 1.3, "Lax shock tube"),
        _tube("123", (1.0, -2.0, 0.4), (1.0, 2.0, 0.4), 1.0, "two strong rarefactions"),
        ProblemSpec(
            name="shock_entropy", model=Euler1D(GAMMA), domain=((-5.0, 5.0),), initial=_shock_entropy(5.0),
            bc=BoundarySpec.uniform(_ZG), T=2.0, dt_rule=_SE_RULE, resolutions=(200,),
            reference=ReferenceKind.HIGHRES_M2000,
            description="Mach 3 shock meeting a density wave, k = 5",
        ),
        ProblemSpec(
            name="shock_entropy_k10", model=Euler1D(GAMMA), domain=((-5.0, 5.0),),
            initial=_shock_entropy(10.0), bc=BoundarySpec.uniform(_ZG), T=2.0, dt_rule=_SE_RULE,
            resolutions=(500, 400), reference=ReferenceKind.HIGHRES_M2000,
            description="Mach 3 shock meeting a density wave, k = 10",
        ),
        ProblemSpec(
            name="riemann2d", model=Euler2D(GAMMA), domain=((0.0, 1.0), (0.0, 1.0)), initial=_riemann_2d,
            bc=BoundarySpec.uniform(_ZG, ndim=2), T=0.8,
            dt_rule=TimeStepRule(StepKind.DT_EQ_C_MIN_DXDY, 0.2), resolutions=((200, 200),),
            reference=ReferenceKind.NONE, description="four-quadrant 2D Riemann problem",
        ),
        ProblemSpec(
            name="dmr", model=Euler2D(GAMMA), domain=((0.0, 4.0), (0.0, 1.0)), initial=_double_mach,
            bc=BoundarySpec((_ZG, _ZG), (BoundaryKind.DMR_BOTTOM, BoundaryKind.DMR_TOP),
                            dmr=DoubleMachParams.standard(GAMMA)),
            T=0.2, dt_rule=TimeStepRule(StepKind.DT_EQ_C_MIN_DXDY, 0.005), resolutions=((480, 119),),
            reference=ReferenceKind.NONE, description="double Mach reflection of a Mach 10 shock",
        ),
    ]
    return {p.name: p for p in problems}


REGISTRY: dict[str, ProblemSpec] = _build_registry()


def problem_names() -> list[str]:
    return list(REGISTRY)


def get_problem(name: str) -> ProblemSpec:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown problem {name!r}; choose from {', '.join(REGISTRY)}") from None
