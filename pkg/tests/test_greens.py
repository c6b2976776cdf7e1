import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import simpson

from gainscatter.greens import (decay_rate, dipole_sq_for_rate, green_dyadic,
                                im_green_coincident)

vectors = st.lists(st.floats(-10, 10), min_size=3, max_size=3).filter(
    lambda v: np.linalg.norm(v) > 1e-3)
omegas = st.floats(0.1, 10.0)


def test_projectors_along_z():
    # R along z: P = diag(1, 1, 0), Q = diag(1, 1, -2)
    k, r = 1.3, 0.7
    x = k * r
    pref = -k * np.exp(1j * x) / (4 * math.pi)
    a, b = 1 / x, 1j / x**2 - 1 / x**3
    M = green_dyadic([0, 0, r], k) / pref
    assert M[2, 2] / b == pytest.approx(-2.0, rel=1e-12)
    assert M[0, 0] == pytest.approx(a + b, rel=1e-12)
    assert M[1, 1] == pytest.approx(a + b, rel=1e-12)
    assert abs(M[0, 1]) < 1e-15 and abs(M[0, 2]) < 1e-15


def test_far_field_transverse_leading_term():
    k, r = 1.0, 1.0e6
    G = green_dyadic([0, 0, r], k)
    leading = -np.exp(1j * k * r) / (4 * math.pi * r)
    assert abs(G[0, 0] - leading) / abs(leading) < 1e-5
    # longitudinal part decays faster than the transverse one
    assert abs(G[2, 2]) / abs(G[0, 0]) < 1e-5


def test_coincident_limit_richardson():
    # isotropic average of Im G at small kR, extrapolated to kR -> 0
    k = 2.0
    vals = []
    for kr in (1e-1, 1e-2, 1e-3):
        G = green_dyadic([0, 0, kr / k], k)
        vals.append(np.trace(G).imag / 3.0)
    target = im_green_coincident(k)
    errs = [abs(v - target) for v in vals]
    assert errs[1] < errs[0] / 50 and errs[2] < errs[1] / 50
    rich = vals[2] + (vals[2] - vals[1]) / 99.0
    assert rich == pytest.approx(target, rel=1e-9)


def test_coincident_value_and_linearity():
    assert im_green_coincident(3.0) == pytest.approx(-3.0 / (6 * math.pi), rel=1e-15)
    assert im_green_coincident(6.0) == 2 * im_green_coincident(3.0)


def test_solid_angle_identity():
    # -k/(6 pi) equals (k/(16 pi**2)) int dOmega u.(I - nn).u with a sign, by quadrature
    k = 1.7
    th = np.linspace(0, math.pi, 2001)
    # phi-averaged x.(I - nn).x over the sphere
    integrand = (1 - np.sin(th) ** 2 * 0.5) * np.sin(th) * 2 * math.pi
    avg = simpson(integrand, x=th)
    assert -k / (16 * math.pi**2) * avg == pytest.approx(im_green_coincident(k), rel=1e-10)


def test_decay_rate_round_trip():
    omega0, gamma0 = 1.0e4, 1.0
    mu2 = dipole_sq_for_rate(omega0, gamma0)
    assert decay_rate(omega0, mu2) == pytest.approx(gamma0, rel=1e-14)
    assert decay_rate(2 * omega0, mu2) == pytest.approx(8 * gamma0, rel=1e-14)
    assert decay_rate(omega0, mu2) == pytest.approx(mu2 * omega0**3 / (3 * math.pi), rel=1e-14)


def test_upper_level_rate_matches_gamma_u():
    omega_u_minus_0, gamma_u = 1.0e4, 1.0e3
    mu2 = dipole_sq_for_rate(omega_u_minus_0, gamma_u)
    assert decay_rate(omega_u_minus_0, mu2) == pytest.approx(gamma_u, rel=1e-14)


@pytest.mark.parametrize("bad", [0.0, -1.0])
def test_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        green_dyadic([0, 0, 0], 1.0)
    with pytest.raises(ValueError):
        green_dyadic([0, 0, 1], bad)
    with pytest.raises(ValueError):
        im_green_coincident(bad)
    with pytest.raises(ValueError):
        decay_rate(bad, 1.0)
    with pytest.raises(ValueError):
        decay_rate(1.0, bad)


@given(vectors, omegas)
def test_symmetry_and_reciprocity(R, omega):
    G = green_dyadic(R, omega)
    assert np.allclose(G, G.T, rtol=0, atol=0)
    assert np.array_equal(G, green_dyadic(-np.asarray(R), omega))


@given(vectors, omegas)
def test_far_field_becomes_transverse(direction, omega):
    n = np.asarray(direction) / np.linalg.norm(direction)
    ratios = []
    for kr in (1e2, 1e4, 1e6):
        G = green_dyadic(n * kr / omega, omega)
        ratios.append(abs(n @ G @ n) / np.linalg.norm(G))
    assert ratios[0] > ratios[1] > ratios[2]
    assert ratios[2] < 1e-5
