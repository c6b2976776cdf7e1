import math

import pytest
from hypothesis import given, strategies as st

from gainscatter.balance import (GOLDEN_RATIO, NoBracketError, Quantity, critical_pump_root,
                                 critical_pumps_closed_form, unitarity_residual,
                                 unitarity_terms)
from gainscatter.params import GammaOmegaMode
from gainscatter.response import extinction_cross_section

from conftest import detunings, gamma_nrs, make_rates, modes, pumps


def test_golden_ratio_limit():
    crit = critical_pumps_closed_form(0.0, 1.0)
    assert crit.p_ext_zero == pytest.approx(1.6180339887498949, rel=1e-15)
    assert crit.p_ext_zero == pytest.approx(GOLDEN_RATIO, rel=1e-15)
    assert crit.p_abs_zero == 0.0


def test_lossy_critical_pumps():
    crit = critical_pumps_closed_form(0.2, 1.0)
    assert crit.p_ext_zero == 1.8
    assert crit.p_abs_zero == pytest.approx(0.4898979485566356, rel=1e-15)


def test_closed_form_rejects_bad_input():
    with pytest.raises(ValueError):
        critical_pumps_closed_form(-0.1, 1.0)
    with pytest.raises(ValueError):
        critical_pumps_closed_form(0.1, 0.0)


def test_root_solver_lossy():
    rates, _ = make_rates(gamma_nr=0.2)
    assert critical_pump_root(rates, Quantity.EXTINCTION) == pytest.approx(1.8, rel=1e-9)
    assert critical_pump_root(rates, "absorption") == pytest.approx(math.sqrt(0.24), rel=1e-9)


def test_root_solver_no_bracket():
    rates, _ = make_rates()
    with pytest.raises(NoBracketError):
        critical_pump_root(rates, Quantity.ABSORPTION)
    with pytest.raises(NoBracketError):
        critical_pump_root(rates, Quantity.EXTINCTION, p_max=1.0)


@pytest.mark.parametrize("gamma_nr", [0.0, 0.1, 0.2, 1.0, 5.0])
def test_root_matches_closed_form_grid(gamma_nr):
    rates, _ = make_rates(gamma_nr=gamma_nr)
    crit = critical_pumps_closed_form(gamma_nr, 1.0)
    assert critical_pump_root(rates, "extinction") == pytest.approx(crit.p_ext_zero, rel=1e-9)
    if gamma_nr > 0:
        assert critical_pump_root(rates, "absorption") == pytest.approx(crit.p_abs_zero,
                                                                        rel=1e-9)
    assert crit.p_ext_zero > crit.p_abs_zero


@pytest.mark.parametrize("gamma_nr", [0.0, 0.2, 1.0])
def test_extinction_sign_change_direction(gamma_nr):
    rates, _ = make_rates(gamma_nr=gamma_nr)
    p = critical_pumps_closed_form(gamma_nr, 1.0).p_ext_zero
    eps = 1e-6
    assert extinction_cross_section(rates.with_pump(p - eps)) > 0
    assert extinction_cross_section(rates.with_pump(p + eps)) < 0


def test_golden_ratio_approached_from_small_loss():
    crit = critical_pumps_closed_form(1e-6, 1.0)
    assert abs(crit.p_ext_zero - GOLDEN_RATIO) < 1e-5


def test_unitarity_resonant_zero_both_modes():
    for mode in GammaOmegaMode:
        rates, drive = make_rates(gamma_nr=0.3, pump=2.0, mode=mode)
        assert unitarity_residual(rates, drive) == 0.0


def test_unitarity_cubic_off_resonance_small():
    rates, drive = make_rates(pump=1.0, detuning=0.1, mode=GammaOmegaMode.CUBIC)
    outflow, _ = unitarity_terms(rates, drive)
    residual = unitarity_residual(rates, drive)
    assert residual != 0.0
    assert abs(residual) / outflow <= 3e-5
    assert abs(residual) / outflow == pytest.approx(7.500018749546875e-06, rel=1e-7)


@given(gamma_nrs, pumps, detunings)
def test_unitarity_flat_identically_zero(gamma_nr, pump, detuning):
    rates, drive = make_rates(gamma_nr, pump, detuning)
    assert unitarity_residual(rates, drive) == 0.0


@given(gamma_nrs, pumps, detunings, modes)
def test_unitarity_residual_closed_form(gamma_nr, pump, detuning, mode):
    rates, drive = make_rates(gamma_nr, pump, detuning, mode)
    expected = (drive.rabi_probe**2 * pump / rates.big_gamma
                * (rates.gamma_omega - rates.gamma0) / (4 * rates.lorentz_denominator))
    assert unitarity_residual(rates, drive) == pytest.approx(expected, rel=1e-9, abs=1e-18)


@given(st.floats(0.0, 10.0), st.floats(0.1, 3.0))
def test_critical_pumps_ordered(gamma_nr, gamma_omega):
    crit = critical_pumps_closed_form(gamma_nr, gamma_omega)
    assert crit.p_ext_zero > crit.p_abs_zero >= 0
