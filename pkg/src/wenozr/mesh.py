"""Uniform 1D/2D grids with ghost layers, and boundary-condition fills.

Field layout: a field carries its components on the leading axis and one
axis per spatial direction, ghosts included, e.g. ``(m, nx + 2g)`` or
``(m, nx + 2g, ny + 2g)``. A 1D scalar field may also be a plain
``(nx + 2g,)`` array.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Centering",
    "Grid1D",
    "Grid2D",
    "BoundaryKind",
    "BoundarySpec",
    "DoubleMachParams",
    "build_grid",
    "fill_ghosts",
    "dmr_shock_position",
]

N_GHOST = 3


class Centering(enum.Enum):
    NODE = "node"  # x_i = a + i dx, i = 0..N
    CELL = "cell"  # x_i = a + (i + 1/2) dx, i = 0..N-1


@dataclass(frozen=True)
class Grid1D:
    a: float
    b: float
    n_cells: int
    centering: Centering = Centering.CELL
    n_ghost: int = N_GHOST

    def __post_init__(self):
        if int(self.n_cells) != self.n_cells or self.n_cells < 1:
            raise ValueError(f"n_cells must be a positive integer, got {self.n_cells}")
        if not self.b > self.a:
            raise ValueError(f"need b > a, got a={self.a}, b={self.b}")
        if self.n_ghost < 3:
            raise ValueError("a fifth-order split-flux stencil needs n_ghost >= 3")
        object.__setattr__(self, "centering", Centering(self.centering))

    @property
    def dx(self) -> float:
        return (self.b - self.a) / self.n_cells

    @property
    def n_points(self) -> int:
        """Number of unknowns (``N + 1`` nodes or ``N`` cells)."""
        return self.n_cells + 1 if self.centering is Centering.NODE else self.n_cells

    @property
    def period(self) -> int:
        """Index period under periodic wrapping (node N duplicates node 0)."""
        return self.n_cells

    @property
    def shape(self) -> int:
        return self.n_points + 2 * self.n_ghost

    @property
    def interior(self) -> slice:
        return slice(self.n_ghost, self.n_ghost + self.n_points)

    def coord(self, i):
        """Coordinate of (possibly ghost, i.e. negative) index ``i``."""
        i = np.asarray(i, dtype=float)
        offset = 0.0 if self.centering is Centering.NODE else 0.5
        return self.a + (i + offset) * self.dx

    @property
    def x(self) -> np.ndarray:
        return self.coord(np.arange(self.n_points))

    @property
    def x_all(self) -> np.ndarray:
        """Coordinates including ghost points."""
        return self.coord(np.arange(-self.n_ghost, self.n_points + self.n_ghost))

    def index_of(self, x: float, tol: float = 1e-9) -> int:
        """Interior index whose coordinate equals ``x`` (within ``tol * dx``)."""
        offset = 0.0 if self.centering is Centering.NODE else 0.5
        s = (x - self.a) / self.dx - offset
        i = int(round(s))
        if abs(s - i) > tol or not 0 <= i < self.n_points:
            raise ValueError(f"x = {x} is not a grid point")
        return i


def build_grid(a, b, n_cells, centering=Centering.NODE, n_ghost=N_GHOST) -> Grid1D:
    if n_cells < 5:
        raise ValueError(f"need at least 5 cells, got {n_cells}")
    return Grid1D(float(a), float(b), int(n_cells), Centering(centering), int(n_ghost))


@dataclass(frozen=True)
class Grid2D:
    xaxis: Grid1D
    yaxis: Grid1D

    @property
    def dx(self) -> float:
        return self.xaxis.dx

    @property
    def dy(self) -> float:
        return self.yaxis.dx

    @property
    def n_ghost(self) -> int:
        return self.xaxis.n_ghost

    @property
    def shape(self) -> tuple[int, int]:
        return (self.xaxis.shape, self.yaxis.shape)

    @property
    def interior(self) -> tuple[slice, slice]:
        return (self.xaxis.interior, self.yaxis.interior)

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        """Interior coordinates as ``indexing='ij'`` arrays."""
        return np.meshgrid(self.xaxis.x, self.yaxis.x, indexing="ij")


class BoundaryKind(enum.Enum):
    PERIODIC = "periodic"
    ZERO_GRADIENT = "zero_gradient"
    REFLECTIVE_WALL = "reflective"
    DMR_BOTTOM = "dmr_bottom"
    DMR_TOP = "dmr_top"


@dataclass(frozen=True)
class DoubleMachParams:
    """Conserved post-/pre-shock states of the Mach 10 oblique shock."""

    post: tuple[float, float, float, float]
    pre: tuple[float, float, float, float]
    x0: float = 1.0 / 6.0
    shock_speed: float = 10.0

    @classmethod
    def standard(cls, gamma: float = 1.4) -> DoubleMachParams:
        theta = math.pi / 6.0

        def cons(rho, u, v, p):
            return (rho, rho * u, rho * v, p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v))

        return cls(
            post=cons(8.0, 8.25 * math.cos(theta), -8.25 * math.sin(theta), 116.5),
            pre=cons(1.4, 0.0, 0.0, 1.0),
        )


def dmr_shock_position(t: float, y: float = 1.0, params: DoubleMachParams | None = None) -> float:
    """Abscissa of the moving oblique shock at height ``y``."""
    x0 = 1.0 / 6.0 if params is None else params.x0
    s = 10.0 if params is None else params.shock_speed
    return x0 + (y + 2.0 * s * t) / math.sqrt(3.0)


@dataclass(frozen=True)
class BoundarySpec:
    """Boundary kinds per side: ``x = (left, right)``, ``y = (bottom, top)``."""

    x: tuple[BoundaryKind, BoundaryKind]
    y: tuple[BoundaryKind, BoundaryKind] | None = None
    dmr: DoubleMachParams | None = field(default=None)

    def __post_init__(self):
        for sides in (self.x, self.y):
            if sides is None:
                continue
            kinds = tuple(BoundaryKind(k) for k in sides)
            if (kinds[0] is BoundaryKind.PERIODIC) != (kinds[1] is BoundaryKind.PERIODIC):
                raise ValueError("PERIODIC must be set on both opposing sides or neither")
        object.__setattr__(self, "x", tuple(BoundaryKind(k) for k in self.x))
        if self.y is not None:
            object.__setattr__(self, "y", tuple(BoundaryKind(k) for k in self.y))

    @classmethod
    def uniform(cls, kind, ndim: int = 1) -> BoundarySpec:
        kind = BoundaryKind(kind)
        return cls((kind, kind), (kind, kind) if ndim == 2 else None)


def _fill_axis(u, axis, kind, side, n_points, period, g, normal_comp):
    """Fill the ghosts of one side along array axis ``axis`` (>= 1)."""
    ax = [slice(None)] * u.ndim

    def at(s):
        idx = list(ax)
        idx[axis] = s
        return tuple(idx)

    if kind is BoundaryKind.PERIODIC:
        if side == 0:
            src = np.arange(-g, 0) % period
        else:
            src = np.arange(n_points, n_points + g) % period
        dst = np.arange(-g, 0) if side == 0 else np.arange(n_points, n_points + g)
        u[at(dst + g)] = np.take(u, src + g, axis=axis)
    elif kind is BoundaryKind.ZERO_GRADIENT:
        if side == 0:
            u[at(slice(0, g))] = u[at(slice(g, g + 1))]
        else:
            u[at(slice(g + n_points, 2 * g + n_points))] = u[at(slice(g + n_points - 1, g + n_points))]
    elif kind is BoundaryKind.REFLECTIVE_WALL:
        if normal_comp is None:
            raise ValueError("a reflective wall needs a field with a velocity component")
        if side == 0:
            u[at(slice(0, g))] = u[at(slice(2 * g - 1, g - 1, -1))]
            idx = list(at(slice(0, g)))
        else:
            lo = g + n_points
            u[at(slice(lo, lo + g))] = u[at(slice(lo - 1, lo - g - 1, -1))]
            idx = list(at(slice(lo, lo + g)))
        idx[0] = normal_comp
        u[tuple(idx)] *= -1.0
    else:
        raise ValueError(f"boundary kind {kind} is not handled here")


def fill_ghosts(field, grid, bc: BoundarySpec, t: float = 0.0):
    """Populate ghost layers of ``field`` in place and return it."""
    if t < 0:
        raise ValueError("t must be non-negative")
    u = field
    scalar = u.ndim == 1
    if scalar:
        u = u[np.newaxis]
    if isinstance(grid, Grid1D):
        if u.ndim != 2:
            raise ValueError("a 1D grid needs a field of shape (m, n)")
        normal = 1 if u.shape[0] in (3, 4) and not scalar else None
        for side in (0, 1):
            kind = bc.x[side]
            if kind in (BoundaryKind.DMR_BOTTOM, BoundaryKind.DMR_TOP):
                raise ValueError(f"{kind} only applies to the y-sides of a 2D grid")
            _fill_axis(u, 1, kind, side, grid.n_points, grid.period, grid.n_ghost, normal)
        return field

    if u.ndim != 3 or bc.y is None:
        raise ValueError("a 2D grid needs a field of shape (m, nx, ny) and y boundaries")
    gx, gy = grid.xaxis, grid.yaxis
    g = grid.n_ghost
    m = u.shape[0]
    vec = m == 4
    # views: x ghosts over interior y, then y ghosts over interior x
    inner_y = u[:, :, gy.interior]
    for side in (0, 1):
        kind = bc.x[side]
        if kind in (BoundaryKind.DMR_BOTTOM, BoundaryKind.DMR_TOP):
            raise ValueError(f"{kind} only applies to the y-sides")
        _fill_axis(inner_y, 1, kind, side, gx.n_points, gx.period, g, 1 if vec else None)
    inner_x = u[:, gx.interior, :]
    for side in (0, 1):
        kind = bc.y[side]
        if kind is BoundaryKind.DMR_BOTTOM:
            _fill_dmr_bottom(inner_x, gx, g, bc.dmr)
        elif kind is BoundaryKind.DMR_TOP:
            _fill_dmr_top(inner_x, gx, gy, g, bc.dmr, t)
        else:
            _fill_axis(inner_x, 2, kind, side, gy.n_points, gy.period, g, 2 if vec else None)
    return field


def _fill_dmr_bottom(u, gx, g, params):
    if u.shape[0] != 4:
        raise ValueError("double Mach boundaries need a 2D Euler field")
    params = params or DoubleMachParams.standard()
    _fill_axis(u, 2, BoundaryKind.REFLECTIVE_WALL, 0, 0, 0, g, 2)
    inflow = gx.x < params.x0
    post = np.asarray(params.post)[:, None, None]
    u[:, inflow, :g] = post


def _fill_dmr_top(u, gx, gy, g, params, t):
    if u.shape[0] != 4:
        raise ValueError("double Mach boundaries need a 2D Euler field")
    params = params or DoubleMachParams.standard()
    xs = dmr_shock_position(t, 1.0, params)
    behind = gx.x < xs
    lo = g + gy.n_points
    post = np.asarray(params.post)
    pre = np.asarray(params.pre)
    state = np.where(behind[None, :], post[:, None], pre[:, None])
    u[:, :, lo:lo + g] = state[:, :, None]
