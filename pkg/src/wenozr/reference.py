"""Reference solutions: closed forms, the exact Euler Riemann fan, and
fine-grid WENO-M runs used as stand-ins for unknown exact solutions."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from wenozr.weights import Family, SchemeSpec

__all__ = [
    "advection_exact",
    "burgers_shock_exact",
    "WaveKind",
    "RiemannFan",
    "VacuumError",
    "pressure_function",
    "solve_riemann_euler",
    "sample_riemann",
    "riemann_exact",
    "HighresReference",
    "highres_reference",
]


def advection_exact(x, t, speed: float = 1.0):
    """Exact solution ``sin(pi (x - speed t))`` of the periodic sine test."""
    return np.sin(np.pi * (np.asarray(x, dtype=float) - speed * t))


def burgers_shock_exact(x, t):
    """Right-moving unit shock of Burgers' equation: 1 where ``x <= t/2``."""
    if t < 0:
        raise ValueError("t must be non-negative")
    x = np.asarray(x, dtype=float)
    return np.where(x - 0.5 * t <= 0.0, 1.0, 0.0)


class WaveKind(enum.Enum):
    SHOCK = "shock"
    RAREFACTION = "rarefaction"


class VacuumError(ValueError):
    """The data would generate a vacuum region, which is not supported."""


def _check_state(w, side):
    rho, _, p = (float(v) for v in w)
    if not (rho > 0 and p > 0) or not all(math.isfinite(v) for v in (rho, p)):
        raise ValueError(f"{side} state must have positive density and pressure, got {tuple(w)}")
    return rho, float(w[1]), p


def _f_side(p, rho_k, p_k, c_k, gamma):
    """One-sided pressure function and its derivative."""
    if p > p_k:
        a = 2.0 / ((gamma + 1.0) * rho_k)
        b = (gamma - 1.0) / (gamma + 1.0) * p_k
        q = math.sqrt(a / (p + b))
        return (p - p_k) * q, q * (1.0 - 0.5 * (p - p_k) / (p + b))
    z = (gamma - 1.0) / (2.0 * gamma)
    r = (p / p_k) ** z
    return 2.0 * c_k / (gamma - 1.0) * (r - 1.0), (p / p_k) ** (-(gamma + 1.0) / (2.0 * gamma)) / (rho_k * c_k)


def pressure_function(p, left, right, gamma: float = 1.4) -> float:
    """Two-sided pressure function whose root is the star pressure."""
    rl, ul, pl = _check_state(left, "left")
    rr, ur, pr = _check_state(right, "right")
    cl = math.sqrt(gamma * pl / rl)
    cr = math.sqrt(gamma * pr / rr)
    return _f_side(p, rl, pl, cl, gamma)[0] + _f_side(p, rr, pr, cr, gamma)[0] + (ur - ul)


@dataclass(frozen=True)
class RiemannFan:
    """Self-similar solution of a 1D Euler Riemann problem.

    ``left_speeds``/``right_speeds`` hold (head, tail) of each acoustic
    wave; for a shock both entries equal the shock speed.
    """

    left: tuple[float, float, float]
    right: tuple[float, float, float]
    gamma: float
    p_star: float
    u_star: float
    rho_star_left: float
    rho_star_right: float
    left_wave: WaveKind
    right_wave: WaveKind
    left_speeds: tuple[float, float]
    right_speeds: tuple[float, float]
    residual: float = field(default=0.0, compare=False)
    iterations: int = field(default=0, compare=False)


def solve_riemann_euler(left_prim, right_prim, gamma: float = 1.4, tol: float = 1e-14,
                        max_iter: int = 200) -> RiemannFan:
    """Exact Riemann solver for the ideal-gas Euler equations.

    Parameters
    ----------
    left_prim, right_prim
        Primitive states ``(rho, u, P)``.
    gamma
        Ratio of specific heats.

    Returns
    -------
    RiemannFan

    Raises
    ------
    VacuumError
        If the velocity jump is large enough to open a vacuum.
    """
    rl, ul, pl = _check_state(left_prim, "left")
    rr, ur, pr = _check_state(right_prim, "right")
    cl = math.sqrt(gamma * pl / rl)
    cr = math.sqrt(gamma * pr / rr)
    du = ur - ul
    g1 = gamma - 1.0
    if 2.0 * (cl + cr) / g1 <= du:
        raise VacuumError(
            f"pressure positivity condition violated: 2(cL+cR)/(gamma-1) = {2 * (cl + cr) / g1:.6g} <= du = {du:.6g}")

    def f(p):
        fl, dl = _f_side(p, rl, pl, cl, gamma)
        fr, dr = _f_side(p, rr, pr, cr, gamma)
        return fl + fr + du, dl + dr, fl, fr

    # two-rarefaction guess, then a bracket for the safeguard
    z = g1 / (2.0 * gamma)
    p = ((cl + cr - 0.5 * g1 * du) / (cl / pl ** z + cr / pr ** z)) ** (1.0 / z)
    lo, hi = 0.0, max(pl, pr)
    while f(hi)[0] < 0.0:
        lo, hi = hi, 2.0 * hi
    if not lo < p < hi:
        p = 0.5 * (lo + hi)

    it = 0
    val, der, fl, fr = f(p)
    for it in range(1, max_iter + 1):
        if val == 0.0:
            break
        if val < 0.0:
            lo = p
        else:
            hi = p
        step = p - val / der
        p_new = step if lo < step < hi else 0.5 * (lo + hi)
        converged = abs(p_new - p) <= tol * p
        p = p_new
        val, der, fl, fr = f(p)
        if converged or hi - lo <= 4 * np.finfo(float).eps * hi:
            break

    u_star = 0.5 * (ul + ur) + 0.5 * (fr - fl)
    G6 = g1 / (gamma + 1.0)
    if p > pl:
        ratio = p / pl
        rho_l = rl * (ratio + G6) / (G6 * ratio + 1.0)
        s = ul - cl * math.sqrt((gamma + 1.0) / (2.0 * gamma) * ratio + z)
        lw, lsp = WaveKind.SHOCK, (s, s)
    else:
        rho_l = rl * (p / pl) ** (1.0 / gamma)
        lw, lsp = WaveKind.RAREFACTION, (ul - cl, u_star - cl * (p / pl) ** z)
    if p > pr:
        ratio = p / pr
        rho_r = rr * (ratio + G6) / (G6 * ratio + 1.0)
        s = ur + cr * math.sqrt((gamma + 1.0) / (2.0 * gamma) * ratio + z)
        rw, rsp = WaveKind.SHOCK, (s, s)
    else:
        rho_r = rr * (p / pr) ** (1.0 / gamma)
        rw, rsp = WaveKind.RAREFACTION, (ur + cr, u_star + cr * (p / pr) ** z)
    return RiemannFan((rl, ul, pl), (rr, ur, pr), float(gamma), float(p), float(u_star),
                      float(rho_l), float(rho_r), lw, rw, lsp, rsp, abs(val), it)


def sample_riemann(fan: RiemannFan, x_over_t) -> np.ndarray:
    """Primitive state ``(rho, u, P)`` of the fan at similarity coordinate(s).

    Returns an array of shape ``(3,) + shape(x_over_t)``.
    """
    xi = np.asarray(x_over_t, dtype=float)
    g = fan.gamma
    g1 = g - 1.0
    rl, ul, pl = fan.left
    rr, ur, pr = fan.right
    cl = math.sqrt(g * pl / rl)
    cr = math.sqrt(g * pr / rr)
    out = np.empty((3,) + xi.shape)

    left_of_contact = xi <= fan.u_star
    # left side
    head, tail = fan.left_speeds
    out[0] = np.where(xi < head, rl, fan.rho_star_left)
    out[1] = np.where(xi < head, ul, fan.u_star)
    out[2] = np.where(xi < head, pl, fan.p_star)
    if fan.left_wave is WaveKind.RAREFACTION:
        fan_zone = left_of_contact & (xi >= head) & (xi < tail)
        base = np.clip(2.0 / (g + 1.0) + g1 / ((g + 1.0) * cl) * (ul - xi), 0.0, None)
        out[0] = np.where(fan_zone, rl * base ** (2.0 / g1), out[0])
        out[1] = np.where(fan_zone, 2.0 / (g + 1.0) * (cl + 0.5 * g1 * ul + xi), out[1])
        out[2] = np.where(fan_zone, pl * base ** (2.0 * g / g1), out[2])
    # right side
    head, tail = fan.right_speeds
    rho = np.where(xi > head, rr, fan.rho_star_right)
    vel = np.where(xi > head, ur, fan.u_star)
    prs = np.where(xi > head, pr, fan.p_star)
    if fan.right_wave is WaveKind.RAREFACTION:
        fan_zone = (xi <= head) & (xi > tail)
        base = np.clip(2.0 / (g + 1.0) - g1 / ((g + 1.0) * cr) * (ur - xi), 0.0, None)
        rho = np.where(fan_zone, rr * base ** (2.0 / g1), rho)
        vel = np.where(fan_zone, 2.0 / (g + 1.0) * (-cr + 0.5 * g1 * ur + xi), vel)
        prs = np.where(fan_zone, pr * base ** (2.0 * g / g1), prs)
    out[0] = np.where(left_of_contact, out[0], rho)
    out[1] = np.where(left_of_contact, out[1], vel)
    out[2] = np.where(left_of_contact, out[2], prs)
    return out


def riemann_exact(fan: RiemannFan, x, t: float, x0: float = 0.0) -> np.ndarray:
    """Primitive fan state at positions ``x`` and time ``t > 0``."""
    if t <= 0:
        raise ValueError("t must be positive")
    return sample_riemann(fan, (np.asarray(x, dtype=float) - x0) / t)


@dataclass(frozen=True)
class HighresReference:
    """A fine-grid solution with linear interpolation onto other grids."""

    x: np.ndarray
    field: np.ndarray
    scheme: SchemeSpec
    n: int

    def sample(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.stack([np.interp(x, self.x, comp) for comp in self.field])


@lru_cache(maxsize=8)
def _cached_run(problem, scheme: SchemeSpec, n: int):
    from wenozr.evolve import advance

    grid, u = advance(problem, scheme, n=n)
    u.setflags(write=False)
    return grid.x, u


def highres_reference(problem, scheme: SchemeSpec | None = None, n: int = 2000) -> HighresReference:
    """Run ``problem`` on ``n`` cells (WENO-M by default) as a reference.

    Results are memoised per (problem, scheme, n); the run is deterministic
    so the cache never changes what a caller sees.
    """
    if scheme is None:
        scheme = SchemeSpec(Family.M)
    if problem.ndim != 1:
        raise ValueError("high-resolution references are only produced for 1D problems")
    x, u = _cached_run(problem, scheme, int(n))
    return HighresReference(x, u, scheme, int(n))
