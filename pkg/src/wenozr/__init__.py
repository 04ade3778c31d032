"""Fifth-order finite-difference WENO schemes with JS, M, Z and ZR weights."""

from wenozr.indicators import beta_js, phi, tau_z, tau_zr_pow
from wenozr.mesh import BoundaryKind, BoundarySpec, Centering, Grid1D, Grid2D, build_grid
from wenozr.reconstruct import Bias, candidate_fluxes, fd_flux5, weno_interface_flux
from wenozr.weights import (
    LINEAR_WEIGHTS,
    Family,
    SchemeSpec,
    map_g,
    nonlinear_weights,
    weights_js,
    weights_linear,
    weights_m,
    weights_z,
    weights_zr,
)

__version__ = "0.1.0"

__all__ = [
    "Bias",
    "BoundaryKind",
    "BoundarySpec",
    "Centering",
    "Family",
    "Grid1D",
    "Grid2D",
    "LINEAR_WEIGHTS",
    "SchemeSpec",
    "beta_js",
    "build_grid",
    "candidate_fluxes",
    "fd_flux5",
    "map_g",
    "nonlinear_weights",
    "phi",
    "tau_z",
    "tau_zr_pow",
    "weights_js",
    "weights_linear",
    "weights_m",
    "weights_z",
    "weights_zr",
    "weno_interface_flux",
]
