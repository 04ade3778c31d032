from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wenozr.physics import (Advection, Burgers, Euler1D, Euler2D, NonPhysicalStateError, cons_to_prim,
                            euler_eigensystem, flux, lf_split, max_wave_speed, prim_to_cons)

E1 = Euler1D()
E2 = Euler2D()


def random_prim_1d(rng, n):
    return np.stack([rng.uniform(0.1, 5, n), rng.uniform(-3, 3, n), rng.uniform(0.05, 10, n)])


def random_prim_2d(rng, n):
    return np.stack([rng.uniform(0.1, 5, n), rng.uniform(-3, 3, n), rng.uniform(-3, 3, n),
                     rng.uniform(0.05, 10, n)])


def test_scalar_flux_examples():
    assert flux(Advection(1.0), 0.7) == pytest.approx(0.7)
    assert flux(Burgers(), 2.0) == pytest.approx(2.0)


def test_euler_flux_at_rest():
    U = prim_to_cons(E1, (1.0, 0.0, 1.0))
    np.testing.assert_allclose(flux(E1, U), (0.0, 1.0, 0.0), atol=1e-15)


def test_euler_flux_rejects_bad_state():
    with pytest.raises(NonPhysicalStateError):
        flux(E1, np.array([1.0, 0.0, -1.0]))
    with pytest.raises(NonPhysicalStateError):
        flux(E1, np.array([-1.0, 0.0, 1.0]))


@pytest.mark.parametrize("prim, cons", [((1.0, 0.0, 1.0), (1.0, 0.0, 2.5)), ((0.125, 0.0, 0.1), (0.125, 0.0, 0.25))])
def test_prim_to_cons_examples(prim, cons):
    np.testing.assert_allclose(prim_to_cons(E1, prim), cons, rtol=1e-15)


def test_prim_to_cons_rejects_nonphysical():
    with pytest.raises(NonPhysicalStateError):
        prim_to_cons(E1, (0.0, 1.0, 1.0))
    with pytest.raises(NonPhysicalStateError):
        prim_to_cons(E2, (1.0, 0.0, 0.0, -2.0))


def test_round_trip_1d(rng):
    W = random_prim_1d(rng, 1000)
    np.testing.assert_allclose(cons_to_prim(E1, prim_to_cons(E1, W)), W, rtol=1e-13, atol=1e-14)


def test_round_trip_2d(rng):
    W = random_prim_2d(rng, 1000)
    np.testing.assert_allclose(cons_to_prim(E2, prim_to_cons(E2, W)), W, rtol=1e-13, atol=1e-14)


def test_wave_speed_examples():
    assert max_wave_speed(Advection(1.0), np.zeros(4)) == 1.0
    assert max_wave_speed(Advection(-2.0), np.zeros(4)) == 2.0
    assert max_wave_speed(Burgers(), np.array([1.0, 0.0])) == 1.0
    U = prim_to_cons(E1, np.array([[1.0] * 3, [0.0] * 3, [1.0] * 3]))
    assert max_wave_speed(E1, U) == pytest.approx(math.sqrt(1.4), rel=1e-15)
    assert round(max_wave_speed(E1, U), 6) == 1.183216


def test_wave_speed_flags_bad_cell():
    U = prim_to_cons(E1, np.array([[1.0] * 3, [0.0] * 3, [1.0] * 3]))
    U[2, 1] = -1.0
    with pytest.raises(NonPhysicalStateError) as exc:
        max_wave_speed(E1, U)
    assert exc.value.index == (1,)


def test_lf_split_examples():
    assert lf_split(1.0, 1.0, 1.0) == (1.0, 0.0)
    assert lf_split(0.0, 1.0, 2.0) == (1.0, -1.0)


@given(st.floats(-1e6, 1e6), st.floats(-1e6, 1e6), st.floats(0, 1e3))
def test_lf_split_sums_to_flux(f, u, a):
    fp, fm = lf_split(f, u, a)
    assert fp + fm == pytest.approx(f, rel=1e-15, abs=1e-9 * (abs(a * u) + 1))


@given(st.floats(-5, 5), st.floats(-5, 5))
def test_lf_split_monotone_parts_for_burgers(u1, u2):
    # alpha bounds |f'(u)| = |u| on the sampled range
    alpha = 5.0
    b = Burgers()
    lo, hi = sorted((u1, u2))
    fp_lo, fm_lo = lf_split(b.flux(lo), lo, alpha)
    fp_hi, fm_hi = lf_split(b.flux(hi), hi, alpha)
    assert fp_hi >= fp_lo - 1e-12
    assert fm_hi <= fm_lo + 1e-12


def _fd_jacobian(model, U, direction=0, h=1e-6):
    m = U.shape[0]
    J = np.empty((m, m))
    for j in range(m):
        e = np.zeros(m)
        e[j] = h * max(1.0, abs(U[j]))
        J[:, j] = (model.flux(U + e, direction) - model.flux(U - e, direction)) / (2 * e[j])
    return J


def test_left_right_inverse_1d(rng):
    U = prim_to_cons(E1, random_prim_1d(rng, 100))
    L, R = euler_eigensystem(E1, U)
    prod = np.einsum("ij...,jk...->ik...", L, R)
    np.testing.assert_allclose(prod, np.broadcast_to(np.eye(3)[..., None], prod.shape), atol=1e-12)


@pytest.mark.parametrize("direction", [0, 1])
def test_left_right_inverse_2d(rng, direction):
    U = prim_to_cons(E2, random_prim_2d(rng, 100))
    L, R = euler_eigensystem(E2, U, direction)
    prod = np.einsum("ij...,jk...->ik...", L, R)
    np.testing.assert_allclose(prod, np.broadcast_to(np.eye(4)[..., None], prod.shape), atol=1e-12)


def _eigenvalues_1d(U):
    rho, mom, _ = U
    u = mom / rho
    c = E1.sound_speed(U)
    return np.array([u - c, u, u + c])


def test_jacobian_reproduced_1d(rng):
    Ws = random_prim_1d(rng, 100)
    for W in Ws.T:
        U = prim_to_cons(E1, W)
        L, R = euler_eigensystem(E1, U)
        lam = _eigenvalues_1d(U)
        J = R @ np.diag(lam) @ L
        Jfd = _fd_jacobian(E1, U)
        np.testing.assert_allclose(J, Jfd, rtol=1e-7, atol=1e-7 * np.abs(Jfd).max())
        ev = np.sort(np.linalg.eigvals(Jfd).real)
        np.testing.assert_allclose(ev, np.sort(lam), rtol=1e-6, atol=1e-6)


@pytest.mark.parametrize("direction", [0, 1])
def test_jacobian_reproduced_2d(rng, direction):
    Ws = random_prim_2d(rng, 100)
    for W in Ws.T:
        U = prim_to_cons(E2, W)
        L, R = euler_eigensystem(E2, U, direction)
        un = W[1 + direction]
        c = math.sqrt(1.4 * W[3] / W[0])
        J = R @ np.diag([un - c, un, un, un + c]) @ L
        Jfd = _fd_jacobian(E2, U, direction)
        np.testing.assert_allclose(J, Jfd, rtol=1e-7, atol=1e-7 * np.abs(Jfd).max())


def test_jacobian_exact_against_analytic_1d(rng):
    # closed-form Jacobian avoids finite-difference noise
    for W in random_prim_1d(rng, 100).T:
        U = prim_to_cons(E1, W)
        rho, u, P = W
        g = 1.4
        H = (U[2] + P) / rho
        J = np.array([[0.0, 1.0, 0.0],
                      [0.5 * (g - 3) * u * u, (3 - g) * u, g - 1],
                      [u * (0.5 * (g - 1) * u * u - H), H - (g - 1) * u * u, g * u]])
        L, R = euler_eigensystem(E1, U)
        Jr = R @ np.diag(_eigenvalues_1d(U)) @ L
        np.testing.assert_allclose(Jr, J, rtol=1e-10, atol=1e-10 * np.abs(J).max())


def test_2d_x_direction_contains_1d_block():
    W2 = np.array([1.3, 0.7, 0.0, 2.1])
    U2 = prim_to_cons(E2, W2)
    U1 = prim_to_cons(E1, W2[[0, 1, 3]])
    L2, R2 = euler_eigensystem(E2, U2, 0)
    L1, R1 = euler_eigensystem(E1, U1)
    # acoustic waves are fields 0 and 3, the entropy wave field 1, shear field 2
    acoustic = [0, 1, 3]
    np.testing.assert_allclose(R2[np.ix_([0, 1, 3], acoustic)], R1, rtol=1e-14)
    np.testing.assert_allclose(L2[np.ix_(acoustic, [0, 1, 3])], L1, rtol=1e-14)
    np.testing.assert_allclose(R2[:, 2], [0, 0, 1, 0])
    np.testing.assert_allclose(L2[2], [0, 0, 1, 0])


def test_y_direction_is_relabelled_x(rng):
    swap = [0, 2, 1, 3]
    U = prim_to_cons(E2, random_prim_2d(rng, 50))
    Ly, Ry = euler_eigensystem(E2, U, 1)
    Lx, Rx = euler_eigensystem(E2, U[swap], 0)
    np.testing.assert_array_equal(Ry, Rx[swap, :])
    np.testing.assert_array_equal(Ly, Lx[:, swap])
    np.testing.assert_array_equal(E2.flux(U, 1), E2.flux(U[swap], 0)[swap])


def test_eigensystem_rejects_bad_average():
    with pytest.raises(NonPhysicalStateError):
        euler_eigensystem(E1, np.array([1.0, 0.0, -0.5]))


def test_2d_wave_speed_by_direction():
    U = prim_to_cons(E2, np.array([[1.0], [2.0], [-3.0], [1.0 / 1.4]]))
    assert max_wave_speed(E2, U) == pytest.approx(4.0)
    assert E2.max_wave_speed(U, 0) == pytest.approx(3.0)
