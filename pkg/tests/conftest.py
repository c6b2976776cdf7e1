import pytest
from hypothesis import settings, strategies as st

from gainscatter.params import AtomParams, DriveParams, GammaOmegaMode, derive_rates

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")

gamma_nrs = st.floats(min_value=0.0, max_value=5.0)
pumps = st.floats(min_value=0.0, max_value=20.0)
detunings = st.floats(min_value=-20.0, max_value=20.0)
modes = st.sampled_from(list(GammaOmegaMode))


def make_rates(gamma_nr=0.0, pump=0.0, detuning=0.0, mode=GammaOmegaMode.FLAT,
               omega0=1.0e4, rabi_probe=0.01):
    """Rates with the pump rate set exactly (no round trip through Omega_p)."""
    atom = AtomParams(omega0=omega0, gamma_nr=gamma_nr)
    drive = DriveParams(detuning=detuning, rabi_probe=rabi_probe)
    return derive_rates(atom, drive, mode).with_pump(pump), drive


@pytest.fixture
def rates_factory():
    return make_rates
