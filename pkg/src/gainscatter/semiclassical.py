"""
Semiclassical comparator: induced dipole, effective polarizability and the
power the dipole radiates into its own field.

The probe is treated as a classical field whose complex amplitude, in the
e^{-i omega t} convention used here, is i E0 eps with E0 = Omega0 / mu_par.
Only Im G enters the self-field at the dipole position; the divergent Re G
part is a frequency shift and is dropped.
"""
from __future__ import annotations

import numpy as np

from .bloch import STEADY_GAMMA_T
from .greens import dipole_sq_for_rate, im_green_coincident
from .params import DerivedRates, DriveParams, GammaOmegaMode

_X = (1.0, 0.0, 0.0)


def _mu_parallel_sq(rates: DerivedRates) -> float:
    return dipole_sq_for_rate(rates.omega0, rates.gamma0)


def _unit(polarization) -> np.ndarray:
    eps = np.asarray(polarization, dtype=float)
    return eps / np.linalg.norm(eps)


def _population_factor(rates: DerivedRates) -> float:
    return (rates.pump_rate - rates.gamma) / rates.big_gamma


def self_im_green(rates: DerivedRates) -> float:
    """Im G at the dipole's own position, consistent with ``rates.gamma_omega``.

    Equals :func:`im_green_coincident` (omega) in cubic mode; in flat mode it is
    the value that keeps -2 omega0**2 mu_par**2 Im G = gamma0 at every detuning.
    """
    if rates.mode is GammaOmegaMode.CUBIC:
        return im_green_coincident(rates.omega)
    omega = rates.omega_prefactor
    return -rates.gamma_omega / (2.0 * omega**2 * _mu_parallel_sq(rates))


def polarizability(rates: DerivedRates) -> complex:
    """alpha_par = ((P - gamma)/Gamma) mu_par**2 / (omega - omega0 + i Gamma/2).

    Vanishes when P = gamma. Im alpha_par has the sign of gamma - P.
    """
    if not rates.big_gamma > 0:
        raise ValueError("polarizability requires Gamma > 0")
    return (_population_factor(rates) * _mu_parallel_sq(rates)
            / complex(rates.detuning, 0.5 * rates.big_gamma))


def probe_amplitude(rates: DerivedRates, drive: DriveParams, polarization=_X) -> np.ndarray:
    """Complex probe amplitude i E0 eps."""
    E0 = drive.rabi_probe / np.sqrt(_mu_parallel_sq(rates))
    return 1j * E0 * _unit(polarization)


def dipole_amplitude(rates: DerivedRates, drive: DriveParams, polarization=_X) -> np.ndarray:
    """<d(omega)> = ((P - gamma)/Gamma) i Omega0 mu / (omega - omega0 + i Gamma/2)."""
    mu = np.sqrt(_mu_parallel_sq(rates)) * _unit(polarization)
    return (_population_factor(rates) * 1j * drive.rabi_probe * mu
            / complex(rates.detuning, 0.5 * rates.big_gamma))


def dipole_expectation(rates: DerivedRates, drive: DriveParams, t: float,
                       polarization=_X) -> np.ndarray:
    """Steady oscillating dipole <d(t)> = <d(omega)> e^{-i omega t}.

    Only valid once the populations have settled, Gamma t >= 50.
    """
    if rates.big_gamma * t < STEADY_GAMMA_T:
        raise ValueError(f"Gamma*t = {rates.big_gamma * t:g} < {STEADY_GAMMA_T:g}: "
                         "not in the steady state")
    return dipole_amplitude(rates, drive, polarization) * np.exp(-1j * rates.omega * t)


def coherent_field(rates: DerivedRates, drive: DriveParams, polarization=_X) -> np.ndarray:
    """Self-field -k**2 G(0+; omega) <d(omega)> keeping only i Im G."""
    k = rates.omega_prefactor
    d = dipole_amplitude(rates, drive, polarization)
    return -k**2 * 1j * self_im_green(rates) * d


def coherent_power(rates: DerivedRates, drive: DriveParams, polarization=_X) -> float:
    """W_coh = -(omega/2) Im{<d(omega)> . E*(r_A, omega)}.

    Reduces to ((P - gamma)/Gamma)**2 times the quantum scattered power.
    """
    if not rates.big_gamma > 0:
        raise ValueError("coherent_power requires Gamma > 0")
    d = dipole_amplitude(rates, drive, polarization)
    E = coherent_field(rates, drive, polarization)
    return float(-0.5 * rates.omega_prefactor * np.imag(np.dot(d, np.conj(E))))


def discrepancy_factor(rates: DerivedRates) -> float:
    """(P - gamma)**2 / Gamma**2, the ratio W_coh / W_sc."""
    return _population_factor(rates) ** 2
