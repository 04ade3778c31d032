"""Candidate fluxes and the WENO interface flux."""

from __future__ import annotations

import enum

import numpy as np

from wenozr.indicators import beta_js
from wenozr.weights import SchemeSpec, nonlinear_weights

__all__ = ["Bias", "candidate_fluxes", "fd_flux5", "weno_interface_flux", "weno_left"]


class Bias(enum.Enum):
    #: reconstruct at i+1/2 from f[i-2..i+2] (positive split flux)
    LEFT = "left"
    #: mirror image, used for the negative split flux
    RIGHT = "right"


def _window(window):
    v = np.asarray(window, dtype=float)
    if v.shape[0] != 5:
        raise ValueError(f"stencil window needs 5 samples, got {v.shape[0]}")
    return v


def candidate_fluxes(window):
    """Third-order fluxes at i+1/2 from the substencils S0, S1, S2."""
    fm2, fm1, f0, fp1, fp2 = _window(window)
    q0 = (1.0 / 3.0) * fm2 - (7.0 / 6.0) * fm1 + (11.0 / 6.0) * f0
    q1 = -(1.0 / 6.0) * fm1 + (5.0 / 6.0) * f0 + (1.0 / 3.0) * fp1
    q2 = (1.0 / 3.0) * f0 + (5.0 / 6.0) * fp1 - (1.0 / 6.0) * fp2
    return np.stack([q0, q1, q2])


def fd_flux5(window):
    """Fifth-order upwind linear flux at i+1/2."""
    fm2, fm1, f0, fp1, fp2 = _window(window)
    r = fm2 / 30.0 - 13.0 / 60.0 * fm1 + 47.0 / 60.0 * f0 + 9.0 / 20.0 * fp1 - fp2 / 20.0
    return r if r.ndim else float(r)


def weno_left(window, scheme: SchemeSpec):
    """Left-biased WENO flux and the weights used to form it.

    Returns ``(flux, omega)`` with ``omega`` of shape ``(3, ...)``.
    """
    v = _window(window)
    omega = nonlinear_weights(beta_js(v), scheme)
    return (omega * candidate_fluxes(v)).sum(axis=0), omega


def weno_interface_flux(window, scheme: SchemeSpec, bias: Bias = Bias.LEFT):
    """WENO reconstruction of the flux at one interface.

    A RIGHT-biased reconstruction is the LEFT-biased one applied to the
    reversed window, so callers pass the five samples in grid order in
    both cases.
    """
    v = _window(window)
    if Bias(bias) is Bias.RIGHT:
        v = v[::-1]
    r, _ = weno_left(v, scheme)
    return r if r.ndim else float(r)
