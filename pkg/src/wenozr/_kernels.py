"""Compiled interface-flux loops used by the time integrators.

These repeat, point by point, the arithmetic of ``indicators``,
``weights`` and ``reconstruct``; the numpy backend in ``evolve`` stays
the reference and the test suite checks the two against each other.
"""

from __future__ import annotations

import numba
import numpy as np

from wenozr.weights import Family

FAMILY_CODES = {Family.LINEAR: 0, Family.JS: 1, Family.M: 2, Family.Z: 3, Family.ZR: 4}

D0 = 0.1
D1 = 0.6
D2 = 0.3

_FM = {"nsz", "arcp", "contract", "afn", "reassoc"}
_jit = numba.njit(cache=True, nogil=True, fastmath=_FM)
_inline = numba.njit(cache=True, nogil=True, inline="always", fastmath=_FM)


@_inline
def _mapped(w, d):
    return w * (d + d * d - 3.0 * d * w + w * w) / (d * d + w * (1.0 - 2.0 * d))


@_inline
def _ipow(x, p, ip):
    # ip > 0 marks an integer exponent evaluated by repeated products
    if ip == 1:
        return x
    if ip == 2:
        return x * x
    if ip == 3:
        return x * x * x
    if ip > 0:
        r = x
        for _ in range(ip - 1):
            r *= x
        return r
    return x ** p


@_inline
def _iroot(x, p, ip):
    if ip == 1:
        return x
    if ip == 2:
        return np.sqrt(x)
    if ip == 3:
        return np.cbrt(x)
    return x ** (1.0 / p)


@_inline
def weno5(fm2, fm1, f0, fp1, fp2, fam, p, eps):
    """Left-biased WENO5 value and weights at i+1/2."""
    ip = int(p) if p == int(p) and p <= 8 else 0
    b0 = 13.0 / 12.0 * (fm2 - 2.0 * fm1 + f0) ** 2 + 0.25 * (fm2 - 4.0 * fm1 + 3.0 * f0) ** 2
    b1 = 13.0 / 12.0 * (fm1 - 2.0 * f0 + fp1) ** 2 + 0.25 * (fm1 - fp1) ** 2
    b2 = 13.0 / 12.0 * (f0 - 2.0 * fp1 + fp2) ** 2 + 0.25 * (3.0 * f0 - 4.0 * fp1 + fp2) ** 2
    if fam == 0:
        a0, a1, a2 = D0, D1, D2
    elif fam == 1 or fam == 2:
        a0 = D0 / ((b0 + eps) * (b0 + eps))
        a1 = D1 / ((b1 + eps) * (b1 + eps))
        a2 = D2 / ((b2 + eps) * (b2 + eps))
        if fam == 2:
            s = a0 + a1 + a2
            a0 = _mapped(a0 / s, D0)
            a1 = _mapped(a1 / s, D1)
            a2 = _mapped(a2 / s, D2)
    else:
        if fam == 3:
            tau = abs(b0 - b2)
            r0 = tau / (b0 + eps)
            r1 = tau / (b1 + eps)
            r2 = tau / (b2 + eps)
        else:
            q0 = _iroot(b0, p, ip)
            q1 = _iroot(b1, p, ip)
            q2 = _iroot(b2, p, ip)
            tau = abs(q0 - q2)
            r0 = tau / (q0 + eps)
            r1 = tau / (q1 + eps)
            r2 = tau / (q2 + eps)
        a0 = D0 * (1.0 + _ipow(r0, p, ip))
        a1 = D1 * (1.0 + _ipow(r1, p, ip))
        a2 = D2 * (1.0 + _ipow(r2, p, ip))
        if not a0 + a1 + a2 < np.inf:
            # ratio**p overflowed: rescale by the largest ratio
            top = max(r0, r1, r2)
            base = 1.0 / _ipow(top, p, ip)
            a0 = D0 * (base + _ipow(r0 / top, p, ip))
            a1 = D1 * (base + _ipow(r1 / top, p, ip))
            a2 = D2 * (base + _ipow(r2 / top, p, ip))
    s = a0 + a1 + a2
    w0 = a0 / s
    w1 = a1 / s
    w2 = a2 / s
    q0 = (1.0 / 3.0) * fm2 - (7.0 / 6.0) * fm1 + (11.0 / 6.0) * f0
    q1 = -(1.0 / 6.0) * fm1 + (5.0 / 6.0) * f0 + (1.0 / 3.0) * fp1
    q2 = (1.0 / 3.0) * f0 + (5.0 / 6.0) * fp1 - (1.0 / 6.0) * fp2
    return w0 * q0 + w1 * q1 + w2 * q2, w0, w1, w2


@_jit
def scalar_fluxes(fp, fm, fam, p, eps, out, wout, want_weights):
    """Split-flux WENO fluxes; rows of ``fp``/``fm`` hold ``n_if + 5`` cells."""
    nrow, n_if = out.shape
    for r in range(nrow):
        for j in range(n_if):
            hp, w0, w1, w2 = weno5(fp[r, j], fp[r, j + 1], fp[r, j + 2], fp[r, j + 3], fp[r, j + 4],
                                   fam, p, eps)
            hm, _, _, _ = weno5(fm[r, j + 5], fm[r, j + 4], fm[r, j + 3], fm[r, j + 2], fm[r, j + 1],
                                fam, p, eps)
            out[r, j] = hp + hm
            if want_weights:
                wout[0, r, j] = w0
                wout[1, r, j] = w1
                wout[2, r, j] = w2


@_inline
def _euler_eigen(A, j, r, gamma, L, R):
    """Eigenvectors of the x-flux Jacobian at the state ``A[:, j, r]``."""
    m = A.shape[0]
    rho = A[0, j, r]
    u = A[1, j, r] / rho
    v = A[2, j, r] / rho if m == 4 else 0.0
    E = A[m - 1, j, r]
    q2 = 0.5 * (u * u + v * v)
    P = (gamma - 1.0) * (E - rho * q2)
    c = np.sqrt(gamma * P / rho)
    H = (E + P) / rho
    b = (gamma - 1.0) / (c * c)
    e = m - 1
    for a in range(m):
        for b_ in range(m):
            L[a, b_] = 0.0
            R[a, b_] = 0.0
    # acoustic fields 0 and e, entropy field 1, shear field 2 (2D only)
    R[0, 0] = 1.0
    R[1, 0] = u - c
    R[e, 0] = H - u * c
    R[0, 1] = 1.0
    R[1, 1] = u
    R[e, 1] = q2
    R[0, e] = 1.0
    R[1, e] = u + c
    R[e, e] = H + u * c
    L[0, 0] = 0.5 * (b * q2 + u / c)
    L[0, 1] = -0.5 * (b * u + 1.0 / c)
    L[0, e] = 0.5 * b
    L[1, 0] = 1.0 - b * q2
    L[1, 1] = b * u
    L[1, e] = -b
    L[e, 0] = 0.5 * (b * q2 - u / c)
    L[e, 1] = -0.5 * (b * u - 1.0 / c)
    L[e, e] = 0.5 * b
    if m == 4:
        R[2, 0] = v
        R[2, 1] = v
        R[2, 2] = 1.0
        R[2, 3] = v
        R[3, 2] = v
        L[0, 2] = -0.5 * b * v
        L[1, 2] = b * v
        L[3, 2] = -0.5 * b * v
        L[2, 0] = -v
        L[2, 2] = 1.0
    return P > 0.0 and rho > 0.0


@_jit
def euler_fluxes(U, F, A, gamma, alpha, fam, p, eps, out, wout, want_weights):
    """Characteristic-wise split-flux WENO fluxes for the Euler equations.

    Arrays are in x-normal component order: ``U``/``F`` are
    ``(m, n_if + 5, nrow)``, the interface states ``A`` and ``out`` are
    ``(m, n_if, nrow)``. Returns the first interface index with a
    non-physical average state, or -1.
    """
    m = U.shape[0]
    n_if = out.shape[1]
    nrow = out.shape[2]
    L = np.empty((m, m))
    R = np.empty((m, m))
    gp = np.empty((m, 6))
    gm = np.empty((m, 6))
    h = np.empty(m)
    bad = -1
    for j in range(n_if):
        for r in range(nrow):
            if not _euler_eigen(A, j, r, gamma, L, R):
                if bad < 0:
                    bad = j
            for k in range(m):
                for s in range(6):
                    w = 0.0
                    q = 0.0
                    for c in range(m):
                        lkc = L[k, c]
                        w += lkc * U[c, j + s, r]
                        q += lkc * F[c, j + s, r]
                    gp[k, s] = 0.5 * (q + alpha * w)
                    gm[k, s] = 0.5 * (q - alpha * w)
            for k in range(m):
                hp, w0, w1, w2 = weno5(gp[k, 0], gp[k, 1], gp[k, 2], gp[k, 3], gp[k, 4], fam, p, eps)
                hm, _, _, _ = weno5(gm[k, 5], gm[k, 4], gm[k, 3], gm[k, 2], gm[k, 1], fam, p, eps)
                h[k] = hp + hm
                if want_weights:
                    wout[0, k, j, r] = w0
                    wout[1, k, j, r] = w1
                    wout[2, k, j, r] = w2
            for k in range(m):
                acc = 0.0
                for c in range(m):
                    acc += R[k, c] * h[c]
                out[k, j, r] = acc
    return bad
