"""Semi-discrete WENO operators and SSP-RK3 time stepping."""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from wenozr import _kernels
from wenozr.mesh import BoundarySpec, Grid1D, Grid2D, fill_ghosts
from wenozr.physics import NonPhysicalStateError
from wenozr.reconstruct import weno_left
from wenozr.weights import SchemeSpec

__all__ = [
    "StepKind",
    "TimeStepRule",
    "SolverBlowup",
    "interface_fluxes",
    "spatial_operator_scalar",
    "spatial_operator_system",
    "spatial_operator_2d",
    "spatial_operator",
    "rk3_step",
    "advance",
]

logger = logging.getLogger(__name__)

#: interface-flux implementation used when callers do not pick one
DEFAULT_BACKEND = "numba"


class StepKind(enum.Enum):
    DT_EQ_C_DX = "c*dx"
    DT_EQ_C_DX_POW = "c*dx^(5/3)"
    DT_EQ_C_MIN_DXDY = "c*min(dx,dy)"


@dataclass(frozen=True)
class TimeStepRule:
    kind: StepKind
    c: float

    def __post_init__(self):
        object.__setattr__(self, "kind", StepKind(self.kind))
        if not self.c > 0:
            raise ValueError(f"time-step coefficient must be positive, got {self.c}")

    def dt(self, grid) -> float:
        if isinstance(grid, Grid2D):
            h = min(grid.dx, grid.dy)
        else:
            h = grid.dx
        if self.kind is StepKind.DT_EQ_C_DX_POW:
            return self.c * h ** (5.0 / 3.0)
        return self.c * h

    def __str__(self):
        return self.kind.value.replace("c", f"{self.c:g}", 1)


class SolverBlowup(FloatingPointError):
    """Raised when a non-finite value appears in the solution."""


def _windows(a, start, count, axis=1):
    """Slice ``count`` entries of ``a`` along ``axis`` beginning at ``start``."""
    idx = [slice(None)] * a.ndim
    idx[axis] = slice(start, start + count)
    return a[tuple(idx)]


def _split_reconstruct(fp, fm, n_if, scheme, want_weights=False):
    """WENO interface fluxes from split fluxes, sweep along axis 1.

    Entry ``s`` of axis 1 is cell ``j - 2 + s`` of interface ``j``: the
    positive part is reconstructed from offsets 0..4 and the negative part,
    mirrored, from offsets 5..1. Both go through one batched call.
    """
    m = fp.shape[0]
    left = np.moveaxis(sliding_window_view(fp, 5, axis=1)[:, :n_if], -1, 0)
    right = np.moveaxis(sliding_window_view(fm, 5, axis=1)[:, 1:n_if + 1, ..., ::-1], -1, 0)
    h, omega = weno_left(np.concatenate([left, right], axis=1), scheme)
    return h[:m] + h[m:], (omega[:, :m] if want_weights else None)


def interface_fluxes(u, grid: Grid1D, model, scheme: SchemeSpec, direction=0,
                     t=None, want_weights=False, average="arithmetic", backend=None):
    """Numerical fluxes at the ``n + 1`` interfaces of a ghost-filled field.

    ``u`` has shape ``(m, n + 2g, ...)`` with the sweep along axis 1.
    Returns ``(fluxes, weights)``; weights belong to the positive split
    flux (per characteristic field for systems) or are ``None``.
    ``backend`` is ``"numba"`` (default) or ``"numpy"``.
    """
    backend = backend or DEFAULT_BACKEND
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    g = grid.n_ghost
    n = u.shape[1] - 2 * g
    n_if = n + 1
    # drop unused outer ghosts so the stencil offsets start at 0
    u = _windows(u, g - 3, n + 6)
    m = u.shape[0]
    rest = u.shape[2:]
    if not model.is_system:
        f = model.flux(u, direction)
        alpha = model.max_wave_speed(u)
        fp = 0.5 * (f + alpha * u)
        fm = 0.5 * (f - alpha * u)
        if backend == "numpy":
            return _split_reconstruct(fp, fm, n_if, scheme, want_weights)
        rows = lambda a: np.ascontiguousarray(np.moveaxis(a, 1, -1).reshape(-1, n + 6))
        out = np.empty((fp.size // (n + 6), n_if))
        wout = np.empty((3,) + out.shape) if want_weights else np.empty((3, 1, 1))
        _kernels.scalar_fluxes(rows(fp), rows(fm), _kernels.FAMILY_CODES[scheme.family],
                               float(scheme.p), float(scheme.eps), out, wout, want_weights)
        h = np.moveaxis(out.reshape((m,) + rest + (n_if,)), -1, 1)
        w = np.moveaxis(wout.reshape((3, m) + rest + (n_if,)), -1, 2) if want_weights else None
        return h, w

    P = model.check(u, t)
    f = model.flux(u, direction, P)
    c = model.sound_speed(u, P)
    alpha = float(np.max(np.abs(u[1 + direction] / u[0]) + c))
    ul = _windows(u, 2, n_if)
    ur = _windows(u, 3, n_if)
    if average == "roe":
        avg = _roe_average(model, ul, ur)
    else:
        avg = 0.5 * (ul + ur)
    if backend == "numba":
        nrow = int(np.prod(rest)) if rest else 1
        perm = _normal_first(m, direction)
        as3 = lambda a: np.ascontiguousarray(a[perm].reshape(a.shape[:2] + (nrow,)))
        out = np.empty((m, n_if, nrow))
        wout = np.empty((3, m, n_if, nrow)) if want_weights else np.empty((3, 1, 1, 1))
        bad = _kernels.euler_fluxes(as3(u), as3(f), as3(avg), float(model.gamma), alpha,
                                    _kernels.FAMILY_CODES[scheme.family], float(scheme.p),
                                    float(scheme.eps), out, wout, want_weights)
        if bad >= 0:
            raise NonPhysicalStateError("non-physical average state", (bad,), t)
        h = out[perm].reshape((m, n_if) + rest)
        w = wout.reshape((3, m, n_if) + rest) if want_weights else None
        return h, w
    Lm, Rm = model.eigensystem(avg, direction)
    # characteristic projections of the six stencil cells of every interface
    w = np.stack([np.einsum("ij...,j...->i...", Lm, _windows(u, k, n_if)) for k in range(6)])
    q = np.stack([np.einsum("ij...,j...->i...", Lm, _windows(f, k, n_if)) for k in range(6)])
    gp = 0.5 * (q + alpha * w)
    gm = 0.5 * (q - alpha * w)
    left = gp[0:5]
    right = gm[5:0:-1]
    h, omega = weno_left(np.concatenate([left, right], axis=1), scheme)
    h = np.einsum("ij...,j...->i...", Rm, h[:m] + h[m:])
    return h, (omega[:, :m] if want_weights else None)


def _normal_first(m, direction):
    """Component permutation putting the sweep-normal momentum at index 1."""
    perm = np.arange(m)
    if direction == 1:
        perm[[1, 2]] = [2, 1]
    return perm


def _roe_average(model, ul, ur):
    rl = np.sqrt(ul[0])
    rr = np.sqrt(ur[0])
    Pl = model.pressure(ul)
    Pr = model.pressure(ur)
    wl = rl / (rl + rr)
    wr = 1.0 - wl
    vel = [wl * ul[k] / ul[0] + wr * ur[k] / ur[0] for k in range(1, ul.shape[0] - 1)]
    H = wl * (ul[-1] + Pl) / ul[0] + wr * (ur[-1] + Pr) / ur[0]
    rho = rl * rr
    q2 = 0.5 * sum(v * v for v in vel)
    # E from H: rho*H = E + P, P = (gamma-1)(E - rho q2)
    gam = model.gamma
    E = (rho * H + (gam - 1.0) * rho * q2) / gam
    return np.stack([rho] + [rho * v for v in vel] + [E])


def _divergence(h, dx, axis=1):
    n_if = h.shape[axis]
    return -(_windows(h, 1, n_if - 1, axis) - _windows(h, 0, n_if - 1, axis)) / dx


def _as_components(u):
    return u[np.newaxis] if u.ndim == 1 else u


def spatial_operator_scalar(field, grid: Grid1D, bc: BoundarySpec, model, scheme: SchemeSpec,
                            t=0.0, want_weights=False):
    """``L(u) = -(h[i+1/2] - h[i-1/2]) / dx`` for a scalar law (interior cells).

    ``field`` carries ghost layers; they are filled here at time ``t``.
    """
    scalar = field.ndim == 1
    u = _as_components(field)
    fill_ghosts(u, grid, bc, t)
    h, w = interface_fluxes(u, grid, model, scheme, 0, t, want_weights)
    L = _divergence(h, grid.dx)
    if scalar:
        L = L[0]
        w = None if w is None else w[:, 0]
    return (L, w) if want_weights else L


def spatial_operator_system(field, grid: Grid1D, bc: BoundarySpec, model, scheme: SchemeSpec,
                            t=0.0, want_weights=False, average="arithmetic"):
    """Characteristic-wise Lax-Friedrichs WENO operator for a 1D system."""
    fill_ghosts(field, grid, bc, t)
    h, w = interface_fluxes(field, grid, model, scheme, 0, t, want_weights, average)
    L = _divergence(h, grid.dx)
    return (L, w) if want_weights else L


def spatial_operator_2d(field, grid: Grid2D, bc: BoundarySpec, model, scheme: SchemeSpec,
                        t=0.0, average="arithmetic", split=False):
    """Dimension-by-dimension operator ``L = L_x + L_y`` on interior cells.

    With ``split=True`` the pair ``(L_x, L_y)`` is returned instead.
    """
    fill_ghosts(field, grid, bc, t)
    gx, gy = grid.xaxis, grid.yaxis
    ux = field[:, :, gy.interior]
    hx, _ = interface_fluxes(ux, gx, model, scheme, 0, t, False, average)
    Lx = _divergence(hx, gx.dx)
    uy = np.swapaxes(field[:, gx.interior, :], 1, 2)
    hy, _ = interface_fluxes(uy, gy, model, scheme, 1, t, False, average)
    Ly = np.swapaxes(_divergence(hy, gy.dx), 1, 2)
    if split:
        return Lx, Ly
    return Lx + Ly


def spatial_operator(field, grid, bc, model, scheme, t=0.0, **kw):
    """Pick the scalar, system or 2D operator from the model and grid."""
    if isinstance(grid, Grid2D):
        return spatial_operator_2d(field, grid, bc, model, scheme, t, **kw)
    if model.is_system:
        return spatial_operator_system(field, grid, bc, model, scheme, t, **kw)
    return spatial_operator_scalar(field, grid, bc, model, scheme, t, **kw)


def _interior(grid):
    if isinstance(grid, Grid2D):
        return (slice(None),) + grid.interior
    return (Ellipsis, grid.interior)


def rk3_step(state, dt, L_evaluator: Callable, t=0.0, interior=(Ellipsis,)):
    """One SSP-RK3 step.

    ``L_evaluator(u, t)`` returns the operator on ``u[interior]``; it is
    responsible for refilling ghosts of ``u`` at the stage time it is given
    (``t``, ``t + dt``, ``t + dt/2``). Returns a new array.
    """
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    u0 = state
    u1 = u0.copy()
    u1[interior] = u0[interior] + dt * L_evaluator(u0, t)
    u2 = u0.copy()
    u2[interior] = 0.75 * u0[interior] + 0.25 * u1[interior] + 0.25 * dt * L_evaluator(u1, t + dt)
    u3 = u0.copy()
    u3[interior] = (u0[interior] / 3.0 + 2.0 / 3.0 * u2[interior]
                    + 2.0 / 3.0 * dt * L_evaluator(u2, t + 0.5 * dt))
    return u3


def _check_finite(u, step, t):
    bad = ~np.isfinite(u)
    if np.any(bad):
        loc = tuple(int(i) for i in np.argwhere(bad)[0])
        raise SolverBlowup(f"non-finite value at index {loc}, step {step}, t = {t:.6g}")


def advance(problem, scheme: SchemeSpec, observers: Sequence[Callable] = (),
            n=None, record_weights=False, average="arithmetic", max_steps=None):
    """Integrate ``problem`` to its final time with SSP-RK3.

    ``problem`` provides ``grid(n)``, ``bc``, ``model``, ``initial_field(grid)``,
    ``T`` and ``dt_rule``. Each observer is called as ``obs(step, t, u)``
    with a copy of the interior field after every step (and once at step 0);
    with ``record_weights`` the stage-1 weights of each step are passed as
    ``weights=``. Returns ``(grid, u_interior)``.
    """
    grid = problem.grid(n)
    bc = problem.bc
    model = problem.model
    u = problem.initial_field(grid)
    inner = _interior(grid)
    T = float(problem.T)
    dt0 = problem.dt_rule.dt(grid)

    kw = {"average": average} if model.is_system else {}

    def evaluator(v, t):
        return spatial_operator(v, grid, bc, model, scheme, t, **kw)

    def notify(step, t, weights=None):
        for obs in observers:
            if record_weights:
                obs(step, t, u[inner].copy(), weights=weights)
            else:
                obs(step, t, u[inner].copy())

    t = 0.0
    step = 0
    notify(0, t)
    while t < T:
        if max_steps is not None and step >= max_steps:
            break
        dt = dt0
        last = t + dt >= T - 1e-12 * dt
        if last:
            dt = T - t
        weights = None
        if record_weights and not isinstance(grid, Grid2D):
            _, weights = spatial_operator(u.copy(), grid, bc, model, scheme, t, want_weights=True, **kw)
        u = rk3_step(u, dt, evaluator, t, inner)
        step += 1
        t = T if last else t + dt
        _check_finite(u[inner], step, t)
        notify(step, t, weights)
    fill_ghosts(u, grid, bc, t)
    logger.debug("advanced %s to t=%g in %d steps", getattr(problem, "name", "?"), t, step)
    return grid, u[inner].copy()
