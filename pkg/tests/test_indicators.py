from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wenozr.indicators import beta_js, phi, tau_z, tau_zr_pow

finite = st.floats(-1e3, 1e3, allow_nan=False)
windows = st.lists(finite, min_size=5, max_size=5)


def beta_exact(v):
    """Rational evaluation of the three quadratic forms."""
    a, b, c, d, e = (Fraction(x) for x in v)
    return (
        Fraction(13, 12) * (a - 2 * b + c) ** 2 + Fraction(1, 4) * (a - 4 * b + 3 * c) ** 2,
        Fraction(13, 12) * (b - 2 * c + d) ** 2 + Fraction(1, 4) * (b - d) ** 2,
        Fraction(13, 12) * (c - 2 * d + e) ** 2 + Fraction(1, 4) * (3 * c - 4 * d + e) ** 2,
    )


@pytest.mark.parametrize("window, expected", [
    ((2.5,) * 5, (0, 0, 0)),
    ((0, 1, 2, 3, 4), (1, 1, 1)),
    ((4, 1, 0, 1, 4), (Fraction(13, 3),) * 3),
])
def test_beta_hand_values(window, expected):
    got = beta_js(np.array(window, dtype=float))
    assert got.shape == (3,)
    np.testing.assert_allclose(got, [float(e) for e in expected], rtol=1e-15, atol=0)


@given(windows)
def test_beta_matches_rational_oracle(v):
    got = beta_js(np.array(v))
    want = [float(x) for x in beta_exact(v)]
    np.testing.assert_allclose(got, want, rtol=1e-12, atol=1e-12 * max(1.0, max(map(abs, v))) ** 2)


@given(windows)
def test_beta_nonnegative(v):
    assert np.all(beta_js(np.array(v)) >= 0)


def test_beta_vectorized_over_trailing_axes(rng):
    v = rng.normal(size=(5, 7, 3))
    out = beta_js(v)
    assert out.shape == (3, 7, 3)
    np.testing.assert_array_equal(out[:, 4, 1], beta_js(v[:, 4, 1]))


def test_beta_rejects_wrong_window():
    with pytest.raises(ValueError):
        beta_js(np.zeros(4))


@given(windows, st.floats(-1.0, 1.0))
def test_beta_translation_invariant(v, frac):
    v = np.array(v)
    scale = max(1.0, np.abs(v).max())
    c = frac * 1e3 * scale
    b = beta_js(v)
    # rounding of v + c perturbs each difference by ~ulp(c)
    tol = 1e-12 * b.max() + 64 * np.finfo(float).eps * abs(c) * scale * 20
    np.testing.assert_allclose(beta_js(v + c), b, rtol=1e-12, atol=tol)


@given(windows, st.floats(1e-3, 1e3))
def test_beta_quadratic_scaling(v, s):
    v = np.array(v)
    b = beta_js(v)
    # relative to the data scale: a beta that cancels to zero stays at rounding level
    atol = 1e-12 * s * s * max(np.abs(v).max(), 1e-300) ** 2
    np.testing.assert_allclose(beta_js(s * v), s * s * b, rtol=1e-12, atol=atol)


@pytest.mark.parametrize("beta, expected", [((1, 1, 1), 0.0), ((4, 7, 1), 3.0), ((13 / 3,) * 3, 0.0)])
def test_tau_z(beta, expected):
    assert tau_z(np.array(beta)) == expected


@pytest.mark.parametrize("b0, b2, p, expected", [
    (5.0, 5.0, 1, 0.0), (5.0, 5.0, 7.5, 0.0), (4.0, 1.0, 1, 3.0), (4.0, 1.0, 2, 1.0),
])
def test_tau_zr_pow_values(b0, b2, p, expected):
    assert tau_zr_pow(b0, b2, p) == pytest.approx(expected, abs=1e-15)


def test_tau_zr_pow_ordering_example():
    # T(2) < T(1) < max(beta)
    assert tau_zr_pow(4.0, 1.0, 2) < tau_zr_pow(4.0, 1.0, 1) < 4.0


def test_tau_zr_pow_zero_indicator():
    assert tau_zr_pow(0.0, 8.0, 3) == pytest.approx(8.0)
    assert tau_zr_pow(0.0, 0.0, 3) == 0.0


def test_tau_zr_pow_rejects_bad_input():
    with pytest.raises(ValueError):
        tau_zr_pow(1.0, 2.0, 0.5)
    with pytest.raises(ValueError):
        tau_zr_pow(-1.0, 2.0, 2)


@given(st.floats(1e-8, 1e3), st.floats(1e-8, 1e3), st.floats(1.0, 8.0))
def test_tau_zr_pow_at_p1_is_tau_z(b0, b2, p):
    assert tau_zr_pow(b0, b2, 1.0) == pytest.approx(abs(b0 - b2), rel=1e-12, abs=1e-300)


@given(st.floats(1e-6, 1e3), st.floats(1.001, 1e3))
def test_tau_zr_pow_decreases_in_p(b2, ratio):
    b0 = b2 * ratio
    vals = [tau_zr_pow(b0, b2, p) for p in (1, 2, 3, 6, 12, 24, 64)]
    assert all(x >= y for x, y in zip(vals, vals[1:]))


def test_tau_zr_pow_vanishes_for_large_p():
    assert tau_zr_pow(4.0, 1.0, 64) < 1e-10
    assert tau_zr_pow(4.0, 1.0, 128) < tau_zr_pow(4.0, 1.0, 64)


def test_phi_examples():
    assert phi(4.0, 1.0, 1.0) == pytest.approx(3.0, rel=1e-15)
    assert phi(4.0, 1.0, 1e-3) == pytest.approx(4.0, rel=1e-12)
    assert phi(4.0, 1.0, 64.0) < 1e-10


def test_phi_agrees_with_direct_formula(rng):
    a = rng.uniform(1.5, 100.0, 200)
    b = a / rng.uniform(1.5, 50.0, 200)
    x = rng.uniform(0.5, 6.0, 200)
    np.testing.assert_allclose(phi(a, b, x), (a ** (1 / x) - b ** (1 / x)) ** x, rtol=1e-11)


@pytest.mark.parametrize("a, b, x", [(1.0, 1.0, 1.0), (1.0, 2.0, 1.0), (1.0, 0.0, 1.0), (2.0, 1.0, 0.0)])
def test_phi_domain_errors(a, b, x):
    with pytest.raises(ValueError):
        phi(a, b, x)


@given(st.floats(1e-6, 1e6), st.floats(1.01, 1e4), st.floats(0.5, 16.0), st.floats(1.01, 2.0))
def test_phi_strictly_decreasing(b, ratio, q, step):
    a = b * ratio
    p = q * step
    assert phi(a, b, p) < phi(a, b, q)
    assert 0.0 < phi(a, b, p) < a
