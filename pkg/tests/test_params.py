import math
import warnings

import pytest
from hypothesis import given, strategies as st

from gainscatter.params import (AtomParams, DriveParams, GammaOmegaMode, RegimeWarning,
                                derive_rates, is_weak_probe)

from conftest import detunings, gamma_nrs


def test_pump_rate_from_rabi():
    atom = AtomParams(gamma_u=100.0)
    rates = derive_rates(atom, DriveParams(rabi_pump=0.1, rabi_probe=1e-3))
    assert rates.pump_rate == pytest.approx(1.0e-4, rel=1e-14)


def test_no_pump():
    atom = AtomParams(gamma_nr=0.3)
    rates = derive_rates(atom, DriveParams())
    assert rates.pump_rate == 0.0
    assert rates.big_gamma == rates.gamma == 1.3


def test_cubic_gamma_omega():
    atom = AtomParams(omega0=100.0)
    rates = derive_rates(atom, DriveParams(detuning=1.0), GammaOmegaMode.CUBIC)
    assert rates.gamma_omega == pytest.approx(1.030301, rel=1e-14)


def test_flat_prefactor_frozen():
    rates = derive_rates(AtomParams(), DriveParams(detuning=3.0))
    assert rates.omega_prefactor == rates.omega0
    assert rates.omega == rates.omega0 + 3.0


def test_mu_parallel_normalization():
    atom = AtomParams(omega0=50.0, gamma0=2.0)
    assert atom.mu_parallel**2 * atom.omega0**3 / (3 * math.pi) == pytest.approx(2.0, rel=1e-14)
    assert atom.sigma0 == pytest.approx(6 * math.pi / atom.omega0**2, rel=1e-14)


@pytest.mark.parametrize("kwargs", [
    {"gamma0": 0.0}, {"gamma_nr": -0.1}, {"gamma_u": 0.0}, {"omega0": -1.0},
])
def test_atom_rejects_invalid(kwargs):
    with pytest.raises(ValueError):
        AtomParams(**kwargs)


def test_drive_rejects_negative_rabi():
    with pytest.raises(ValueError):
        DriveParams(rabi_probe=-1.0)
    with pytest.raises(ValueError):
        DriveParams.from_pump_rate(-1.0, 1e3)


def test_cubic_rejects_nonpositive_frequency():
    with pytest.raises(ValueError):
        derive_rates(AtomParams(omega0=10.0), DriveParams(detuning=-10.0), "cubic")


def test_regime_warnings_and_thresholds():
    with pytest.warns(RegimeWarning):
        derive_rates(AtomParams(gamma_u=10.0), DriveParams())
    with pytest.warns(RegimeWarning):
        derive_rates(AtomParams(), DriveParams(rabi_probe=0.5))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        derive_rates(AtomParams(gamma_u=10.0), DriveParams(), pump_ratio=5.0)
        derive_rates(AtomParams(), DriveParams(rabi_probe=0.5), probe_ratio=1.0)


def test_is_weak_probe():
    drive = DriveParams(rabi_probe=0.1)
    rates = derive_rates(AtomParams(), drive)
    assert is_weak_probe(drive, rates)
    assert not is_weak_probe(DriveParams(rabi_probe=0.2), rates)


@given(gamma_nrs, st.floats(0.0, 100.0), detunings, st.sampled_from(list(GammaOmegaMode)))
def test_derive_rates_invariants(gamma_nr, rabi_pump, detuning, mode):
    atom = AtomParams(gamma_nr=gamma_nr)
    drive = DriveParams(detuning=detuning, rabi_pump=rabi_pump, rabi_probe=1e-3)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        a = derive_rates(atom, drive, mode)
        b = derive_rates(atom, drive, mode)
    assert a == b
    assert a.big_gamma == a.gamma + a.pump_rate
    assert min(a.gamma, a.big_gamma, a.pump_rate, a.gamma_omega) >= 0
    if mode is GammaOmegaMode.FLAT:
        assert a.gamma_omega == atom.gamma0
    else:
        assert a.gamma_omega / a.gamma0 - (a.omega / a.omega0) ** 3 == pytest.approx(0, abs=1e-14)


@given(st.sampled_from(list(GammaOmegaMode)))
def test_gamma_omega_at_resonance_is_gamma0(mode):
    rates = derive_rates(AtomParams(gamma0=1.7), DriveParams(), mode)
    assert rates.gamma_omega == 1.7


@given(gamma_nrs, gamma_nrs, st.floats(0.0, 50.0), st.floats(0.0, 50.0))
def test_gamma_monotone(g1, g2, p1, p2):
    lo = derive_rates(AtomParams(gamma_nr=min(g1, g2)),
                      DriveParams(rabi_pump=min(p1, p2), rabi_probe=1e-3))
    hi = derive_rates(AtomParams(gamma_nr=max(g1, g2)),
                      DriveParams(rabi_pump=max(p1, p2), rabi_probe=1e-3))
    assert hi.big_gamma >= lo.big_gamma


def test_with_detuning_updates_gamma_omega():
    rates = derive_rates(AtomParams(omega0=10.0), DriveParams(), "cubic")
    moved = rates.with_detuning(10.0)
    assert moved.gamma_omega == pytest.approx(8.0, rel=1e-14)
    assert moved.with_detuning(0.0).gamma_omega == 1.0
