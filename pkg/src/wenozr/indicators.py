"""Smoothness indicators and the global indicators built from them.

Every function here is vectorized: a stencil window is any array whose
leading axis has length 5 (``f[i-2], ..., f[i+2]``), and an indicator
triple is any array whose leading axis has length 3.
"""

from __future__ import annotations

import numpy as np

__all__ = ["beta_js", "tau_z", "tau_zr_pow", "phi"]


def beta_js(window):
    """Jiang-Shu smoothness indicators of the three 3-point substencils.

    Parameters
    ----------
    window : array_like, shape (5, ...)
        Ordered samples ``f[i-2], f[i-1], f[i], f[i+1], f[i+2]``.

    Returns
    -------
    numpy.ndarray, shape (3, ...)
        ``(beta0, beta1, beta2)``, all non-negative.
    """
    v = np.asarray(window, dtype=float)
    if v.shape[0] != 5:
        raise ValueError(f"stencil window needs 5 samples, got {v.shape[0]}")
    fm2, fm1, f0, fp1, fp2 = v
    beta0 = 13.0 / 12.0 * (fm2 - 2.0 * fm1 + f0) ** 2 + 0.25 * (fm2 - 4.0 * fm1 + 3.0 * f0) ** 2
    beta1 = 13.0 / 12.0 * (fm1 - 2.0 * f0 + fp1) ** 2 + 0.25 * (fm1 - fp1) ** 2
    beta2 = 13.0 / 12.0 * (f0 - 2.0 * fp1 + fp2) ** 2 + 0.25 * (3.0 * f0 - 4.0 * fp1 + fp2) ** 2
    return np.stack([beta0, beta1, beta2])


def tau_z(beta):
    """Global smoothness indicator ``|beta0 - beta2|`` of the Z weights."""
    b = np.asarray(beta, dtype=float)
    return np.abs(b[0] - b[2])


def _check_p(p):
    if np.any(np.asarray(p) < 1.0):
        raise ValueError(f"exponent p must be >= 1, got {p}")


def tau_zr_pow(beta0, beta2, p):
    """Return ``|beta0**(1/p) - beta2**(1/p)|**p``.

    This is the p-th power of the rooted global indicator, evaluated with
    no regularization. It reduces to ``|beta0 - beta2|`` for ``p = 1``.
    """
    _check_p(p)
    b0 = np.asarray(beta0, dtype=float)
    b2 = np.asarray(beta2, dtype=float)
    if np.any(b0 < 0) or np.any(b2 < 0):
        raise ValueError("smoothness indicators must be non-negative")
    r = np.abs(b0 ** (1.0 / p) - b2 ** (1.0 / p)) ** p
    return r if r.ndim else float(r)


def phi(a, b, x):
    """Evaluate ``(a**(1/x) - b**(1/x))**x`` for ``a > b > 0`` and ``x > 0``.

    The value lies strictly between 0 and ``a`` and decreases strictly in
    ``x``. It is computed as ``a * exp(x * log(1 - exp(-t)))`` with
    ``t = log(a/b) / x``; the exponent is never positive, so rounding
    cannot push the result above ``a``, and neither limit of ``x``
    overflows or cancels.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    x = np.asarray(x, dtype=float)
    if np.any(b <= 0) or np.any(a <= b):
        raise ValueError("phi requires a > b > 0")
    if np.any(x <= 0):
        raise ValueError("phi requires x > 0")
    with np.errstate(over="ignore", divide="ignore", under="ignore"):
        t = np.log(a / b) / x
        # log(1 - e**-t), accurate on both sides of log 2
        log1mexp = np.where(t > np.log(2.0), np.log1p(-np.exp(-t)), np.log(-np.expm1(-t)))
        r = a * np.exp(x * log1mexp)
    return r if r.ndim else float(r)
