"""Linear and nonlinear WENO weights.

All weight functions map an indicator triple of shape ``(3, ...)`` to a
weight triple of the same shape whose entries are non-negative and sum
to one along the leading axis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

__all__ = [
    "LINEAR_WEIGHTS",
    "Family",
    "SchemeSpec",
    "weights_linear",
    "weights_js",
    "map_g",
    "weights_m",
    "weights_z",
    "weights_zr",
    "nonlinear_weights",
]

LINEAR_WEIGHTS = (0.1, 0.6, 0.3)
_D = np.array(LINEAR_WEIGHTS)


class Family(enum.Enum):
    LINEAR = "linear"
    JS = "js"
    M = "m"
    Z = "z"
    ZR = "zr"

    @classmethod
    def parse(cls, name: str | Family) -> Family:
        if isinstance(name, Family):
            return name
        key = name.strip().lower()
        if key.startswith("weno-"):
            key = key[5:]
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown weight family {name!r}") from None


@dataclass(frozen=True)
class SchemeSpec:
    """A weight family together with its exponent and regularization.

    ``eps`` defaults to 1e-6 for JS and 1e-40 for every other family; ``p``
    defaults to 1 for Z and 3 for ZR (it is ignored by LINEAR, JS and M).
    """

    family: Family
    p: float | None = None
    eps: float | None = None

    def __post_init__(self):
        family = Family.parse(self.family)
        object.__setattr__(self, "family", family)
        if self.eps is None:
            object.__setattr__(self, "eps", 1e-6 if family is Family.JS else 1e-40)
        if self.p is None:
            object.__setattr__(self, "p", 3.0 if family is Family.ZR else 1.0)
        if not self.eps > 0:
            raise ValueError(f"eps must be positive, got {self.eps}")
        if self.p < 1:
            raise ValueError(f"p must be >= 1, got {self.p}")

    @classmethod
    def from_name(cls, name: str, p: float | None = None, eps: float | None = None) -> SchemeSpec:
        return cls(Family.parse(name), p=p, eps=eps)

    @property
    def label(self) -> str:
        if self.family is Family.ZR:
            return f"WENO-ZR(p={self.p:g})"
        if self.family is Family.LINEAR:
            return "linear"
        return f"WENO-{self.family.name}"


def _normalize(alpha):
    return alpha / alpha.sum(axis=0)


def _beta(beta):
    b = np.asarray(beta, dtype=float)
    if b.shape[0] != 3:
        raise ValueError(f"indicator triple needs 3 entries, got {b.shape[0]}")
    return b


def _d_like(b):
    return _D.reshape((3,) + (1,) * (b.ndim - 1))


def weights_linear():
    """The linear weights ``(1/10, 3/5, 3/10)``."""
    return _D.copy()


def weights_js(beta, eps=1e-6):
    b = _beta(beta)
    alpha = _d_like(b) / (b + eps) ** 2
    return _normalize(alpha)


def map_g(omega, d):
    """Henrick's mapping, which fixes ``0``, ``d`` and ``1``."""
    w = np.asarray(omega, dtype=float)
    d = np.asarray(d, dtype=float)
    if np.any((w < 0) | (w > 1)):
        raise ValueError("map_g is defined for omega in [0, 1]")
    if np.any((d <= 0) | (d >= 1)):
        raise ValueError("map_g is defined for d in (0, 1)")
    r = w * (d + d * d - 3.0 * d * w + w * w) / (d * d + w * (1.0 - 2.0 * d))
    return r if r.ndim else float(r)


def weights_m(beta, eps=1e-40):
    b = _beta(beta)
    w = weights_js(b, eps)
    d = _d_like(b)
    alpha = w * (d + d * d - 3.0 * d * w + w * w) / (d * d + w * (1.0 - 2.0 * d))
    return _normalize(alpha)


def _z_type(ratio, p):
    """Normalize ``d * (1 + ratio**p)``.

    Where ``ratio**p`` overflows (a vanishing indicator next to a jump, large
    p) the alphas are rescaled by the largest ratio first; elsewhere the
    formula is evaluated as written.
    """
    shape = ratio.shape
    r = ratio.reshape(3, -1)
    d = _D[:, None]
    with np.errstate(over="ignore", invalid="ignore"):
        alpha = d * (1.0 + r ** p)
        total = alpha.sum(axis=0)
    bad = ~np.isfinite(total)
    if np.any(bad):
        rb = r[:, bad]
        top = rb.max(axis=0)
        with np.errstate(under="ignore"):
            alpha[:, bad] = d * (top ** -p + (rb / top) ** p)
        total = alpha.sum(axis=0)
    return (alpha / total).reshape(shape)


def weights_z(beta, eps=1e-40, p=1.0):
    b = _beta(beta)
    tau = np.abs(b[0] - b[2])
    return _z_type(tau / (b + eps), p)


def weights_zr(beta, eps=1e-40, p=3.0):
    """Z-type weights built from p-th roots of the indicators.

    ``eps`` is added to the rooted indicator, not to ``beta`` itself.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    b = _beta(beta)
    root = b ** (1.0 / p)
    tau = np.abs(root[0] - root[2])
    return _z_type(tau / (root + eps), p)


def nonlinear_weights(beta, scheme: SchemeSpec):
    """Dispatch to the weight family named by ``scheme``."""
    family = scheme.family
    if family is Family.LINEAR:
        b = _beta(beta)
        return np.broadcast_to(_d_like(b), b.shape).copy()
    if family is Family.JS:
        return weights_js(beta, scheme.eps)
    if family is Family.M:
        return weights_m(beta, scheme.eps)
    if family is Family.Z:
        return weights_z(beta, scheme.eps, scheme.p)
    if family is Family.ZR:
        return weights_zr(beta, scheme.eps, scheme.p)
    raise ValueError(f"unsupported family {family}")
