"""Flux functions, variable transforms and Euler eigensystems.

Conserved states carry components on the leading axis: a scalar field is
``(1, ...)`` (or a bare array for the public scalar helpers), 1D Euler is
``(rho, rho*u, E)`` and 2D Euler is ``(rho, rho*u, rho*v, E)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "NonPhysicalStateError",
    "Advection",
    "Burgers",
    "Euler1D",
    "Euler2D",
    "flux",
    "prim_to_cons",
    "cons_to_prim",
    "max_wave_speed",
    "lf_split",
    "euler_eigensystem",
]


class NonPhysicalStateError(ValueError):
    """Raised when a density or pressure is not strictly positive."""

    def __init__(self, message, index=None, t=None):
        where = []
        if index is not None:
            where.append(f"cell {index}")
        if t is not None:
            where.append(f"t = {t:.6g}")
        super().__init__(message + (f" ({', '.join(where)})" if where else ""))
        self.index = index
        self.t = t


@dataclass(frozen=True)
class Advection:
    speed: float = 1.0
    n_comp = 1
    is_system = False

    def flux(self, u, direction=0):
        return self.speed * np.asarray(u, dtype=float)

    def max_wave_speed(self, u):
        return abs(self.speed)


@dataclass(frozen=True)
class Burgers:
    n_comp = 1
    is_system = False

    def flux(self, u, direction=0):
        u = np.asarray(u, dtype=float)
        return 0.5 * u * u

    def max_wave_speed(self, u):
        return float(np.max(np.abs(u)))


def _first_bad(mask):
    idx = np.argwhere(mask)
    return tuple(int(i) for i in idx[0]) if idx.size else None


@dataclass(frozen=True)
class Euler1D:
    gamma: float = 1.4
    n_comp = 3
    is_system = True

    def pressure(self, U):
        rho, mom, E = U
        return (self.gamma - 1.0) * (E - 0.5 * mom * mom / rho)

    def check(self, U, t=None):
        rho = U[0]
        P = self.pressure(U)
        bad = ~((rho > 0) & (P > 0))
        if np.any(bad):
            raise NonPhysicalStateError("non-physical Euler state", _first_bad(bad), t)
        return P

    def prim_to_cons(self, W):
        rho, u, P = (np.asarray(w, dtype=float) for w in W)
        if np.any(rho <= 0) or np.any(P <= 0):
            raise NonPhysicalStateError("density and pressure must be positive")
        return np.stack([rho, rho * u, P / (self.gamma - 1.0) + 0.5 * rho * u * u])

    def cons_to_prim(self, U):
        U = np.asarray(U, dtype=float)
        P = self.check(U)
        return np.stack([U[0], U[1] / U[0], P])

    def flux(self, U, direction=0, P=None):
        rho, mom, E = U
        if P is None:
            P = self.pressure(U)
        u = mom / rho
        return np.stack([mom, mom * u + P, u * (E + P)])

    def sound_speed(self, U, P=None):
        if P is None:
            P = self.pressure(U)
        return np.sqrt(self.gamma * P / U[0])

    def max_wave_speed(self, U, t=None):
        P = self.check(U, t)
        return float(np.max(np.abs(U[1] / U[0]) + self.sound_speed(U, P)))

    def eigensystem(self, U, direction=0):
        """Left/right eigenvector matrices of dF/dU, shape ``(3, 3, ...)``."""
        rho, mom, E = U
        u = mom / rho
        P = self.pressure(U)
        if np.any(rho <= 0) or np.any(P <= 0):
            raise NonPhysicalStateError("non-physical average state", _first_bad(~((rho > 0) & (P > 0))))
        c = np.sqrt(self.gamma * P / rho)
        H = (E + P) / rho
        q2 = 0.5 * u * u
        one = np.ones_like(u)
        R = np.array([
            [one, one, one],
            [u - c, u, u + c],
            [H - u * c, q2, H + u * c],
        ])
        b = (self.gamma - 1.0) / (c * c)
        L = np.array([
            [0.5 * (b * q2 + u / c), -0.5 * (b * u + 1.0 / c), 0.5 * b],
            [1.0 - b * q2, b * u, -b],
            [0.5 * (b * q2 - u / c), -0.5 * (b * u - 1.0 / c), 0.5 * b],
        ])
        return L, R


_SWAP = np.array([0, 2, 1, 3])


@dataclass(frozen=True)
class Euler2D:
    gamma: float = 1.4
    n_comp = 4
    is_system = True

    def pressure(self, U):
        rho, mx, my, E = U
        return (self.gamma - 1.0) * (E - 0.5 * (mx * mx + my * my) / rho)

    def check(self, U, t=None):
        rho = U[0]
        P = self.pressure(U)
        bad = ~((rho > 0) & (P > 0))
        if np.any(bad):
            raise NonPhysicalStateError("non-physical Euler state", _first_bad(bad), t)
        return P

    def prim_to_cons(self, W):
        rho, u, v, P = (np.asarray(w, dtype=float) for w in W)
        if np.any(rho <= 0) or np.any(P <= 0):
            raise NonPhysicalStateError("density and pressure must be positive")
        return np.stack([rho, rho * u, rho * v, P / (self.gamma - 1.0) + 0.5 * rho * (u * u + v * v)])

    def cons_to_prim(self, U):
        U = np.asarray(U, dtype=float)
        P = self.check(U)
        return np.stack([U[0], U[1] / U[0], U[2] / U[0], P])

    def flux(self, U, direction=0, P=None):
        if P is None:
            P = self.pressure(U)
        if direction == 1:
            return self.flux(U[_SWAP], 0, P)[_SWAP]
        rho, mx, my, E = U
        u = mx / rho
        return np.stack([mx, mx * u + P, my * u, u * (E + P)])

    def sound_speed(self, U, P=None):
        if P is None:
            P = self.pressure(U)
        return np.sqrt(self.gamma * P / U[0])

    def max_wave_speed(self, U, direction=None, t=None):
        """``max(|u_n| + c)``; with ``direction=None`` the max over both axes."""
        P = self.check(U, t)
        c = self.sound_speed(U, P)
        dirs = (0, 1) if direction is None else (direction,)
        return float(max(np.max(np.abs(U[1 + d] / U[0]) + c) for d in dirs))

    def eigensystem(self, U, direction=0):
        """Left/right eigenvector matrices of the directional flux Jacobian."""
        if direction == 1:
            L, R = self.eigensystem(U[_SWAP], 0)
            return L[:, _SWAP], R[_SWAP, :]
        rho, mx, my, E = U
        u = mx / rho
        v = my / rho
        P = self.pressure(U)
        if np.any(rho <= 0) or np.any(P <= 0):
            raise NonPhysicalStateError("non-physical average state", _first_bad(~((rho > 0) & (P > 0))))
        c = np.sqrt(self.gamma * P / rho)
        H = (E + P) / rho
        q2 = 0.5 * (u * u + v * v)
        one = np.ones_like(u)
        zero = np.zeros_like(u)
        R = np.array([
            [one, one, zero, one],
            [u - c, u, zero, u + c],
            [v, v, one, v],
            [H - u * c, q2, v, H + u * c],
        ])
        b = (self.gamma - 1.0) / (c * c)
        L = np.array([
            [0.5 * (b * q2 + u / c), -0.5 * (b * u + 1.0 / c), -0.5 * b * v, 0.5 * b],
            [1.0 - b * q2, b * u, b * v, -b],
            [-v, zero, one, zero],
            [0.5 * (b * q2 - u / c), -0.5 * (b * u - 1.0 / c), -0.5 * b * v, 0.5 * b],
        ])
        return L, R


def flux(model, state, direction=0):
    """Physical flux of ``model`` in the given direction."""
    if model.is_system:
        state = np.asarray(state, dtype=float)
        model.check(state)
    return model.flux(state, direction)


def prim_to_cons(model, prim):
    return model.prim_to_cons(prim)


def cons_to_prim(model, state):
    return model.cons_to_prim(state)


def max_wave_speed(model, field):
    """Global Lax-Friedrichs constant: ``|a|``, ``max|u|`` or ``max(|u|+c)``."""
    return model.max_wave_speed(field)


def lf_split(f_value, u_value, alpha):
    """Lax-Friedrichs splitting ``f = f+ + f-`` with ``f+- = (f +- alpha u)/2``."""
    f = np.asarray(f_value, dtype=float)
    au = alpha * np.asarray(u_value, dtype=float)
    fp = 0.5 * (f + au)
    fm = 0.5 * (f - au)
    if fp.ndim == 0:
        return float(fp), float(fm)
    return fp, fm


def euler_eigensystem(model, state_avg, direction=0):
    """Return ``(L, R)`` with ``L @ R = I`` at each averaged state."""
    return model.eigensystem(np.asarray(state_avg, dtype=float), direction)
