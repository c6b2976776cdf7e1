"""
Steady-state powers and cross-sections under a weak probe.

Cross-sections are returned in units of sigma0 (see :mod:`gainscatter.params`).
Powers are returned in natural units (hbar = 1) with the frequencies and
rates exactly as supplied; dividing by omega0 * gamma0 gives units of
hbar omega0 gamma0, which is what :class:`ResponsePoint` stores.

All spectra share the Lorentzian denominator L = (omega - omega0)**2 + Gamma**2/4.
"""
from __future__ import annotations

from dataclasses import dataclass

from .params import DerivedRates, DriveParams


def _probe_factor(rates: DerivedRates) -> float:
    # sigma / sigma0 = (gamma0 omega / (4 omega0)) * numerator / L
    return rates.gamma0 * rates.omega_prefactor / (4.0 * rates.omega0)


def _absorption_numerator(rates: DerivedRates) -> float:
    G = rates.big_gamma
    return rates.gamma / G * rates.gamma_nr - rates.pump_rate / G * rates.pump_rate


def scattering_cross_section(rates: DerivedRates) -> float:
    """mu_par**2 omega gamma_omega / 2 / L, in units of sigma0."""
    return _probe_factor(rates) * rates.gamma_omega / rates.lorentz_denominator


def absorption_cross_section(rates: DerivedRates) -> float:
    """Net absorption ((gamma/Gamma) gamma_nr - (P/Gamma) P) weighted like scattering.

    Negative values mean net stimulated emission into the probe; no clamping.
    """
    return _probe_factor(rates) * _absorption_numerator(rates) / rates.lorentz_denominator


def extinction_cross_section(rates: DerivedRates) -> float:
    """Extinction as scattering plus absorption.

    The numerator gamma_omega + (gamma/Gamma) gamma_nr - P**2/Gamma equals
    gamma - (P/Gamma)(gamma_nr + P) whenever gamma_omega = gamma0; see
    :func:`extinction_numerator_population_form`.
    """
    return scattering_cross_section(rates) + absorption_cross_section(rates)


def extinction_numerator_population_form(rates: DerivedRates) -> float:
    """gamma - (P/Gamma)(gamma_nr + P): gains and losses grouped by population."""
    return rates.gamma - rates.pump_rate / rates.big_gamma * (rates.gamma_nr + rates.pump_rate)


def scattered_power(rates: DerivedRates, drive: DriveParams) -> float:
    """hbar omega Omega0**2 gamma_omega / (4 L)."""
    omega = rates.omega_prefactor
    return omega * drive.rabi_probe**2 * rates.gamma_omega / (4.0 * rates.lorentz_denominator)


def absorbed_power(rates: DerivedRates, drive: DriveParams) -> float:
    """hbar omega Omega0**2 ((gamma/Gamma) gamma_nr - (P/Gamma) P) / (4 L); may be negative."""
    omega = rates.omega_prefactor
    return (omega * drive.rabi_probe**2 * _absorption_numerator(rates)
            / (4.0 * rates.lorentz_denominator))


def stimulated_power(rates: DerivedRates, drive: DriveParams) -> float:
    """Power handed to the probe by stimulated emission from the excited state.

    hbar omega Omega0**2 P / (4 L), i.e. minus the excited-state absorption term.
    """
    omega = rates.omega_prefactor
    return omega * drive.rabi_probe**2 * rates.pump_rate / (4.0 * rates.lorentz_denominator)


def incoherent_power(rates: DerivedRates, drive: DriveParams) -> float:
    """Spontaneously emitted power fed by the pump, with its probe correction.

    (P/Gamma) {hbar omega0 gamma0 - (Omega0**2 Gamma**2 / 8) / L**2
               [hbar omega gamma_omega - hbar omega0 gamma0 / 2
                + 2 hbar omega0 gamma0 delta**2 / Gamma**2]}
    """
    G = rates.big_gamma
    L = rates.lorentz_denominator
    w0g0 = rates.omega0 * rates.gamma0
    bracket = (rates.omega_prefactor * rates.gamma_omega - 0.5 * w0g0
               + 2.0 * w0g0 * rates.detuning**2 / G**2)
    correction = drive.rabi_probe**2 * G**2 / 8.0 / L**2 * bracket
    return rates.pump_rate / G * (w0g0 - correction)


def incoherent_power_resonant(rates: DerivedRates, drive: DriveParams) -> float:
    """Quasi-resonant form (hbar omega0 gamma0 P/Gamma)[1 - Omega0**2 Gamma**2 / (16 L**2)]."""
    G = rates.big_gamma
    L = rates.lorentz_denominator
    w0g0 = rates.omega0 * rates.gamma0
    return w0g0 * rates.pump_rate / G * (1.0 - drive.rabi_probe**2 * G**2 / 16.0 / L**2)


@dataclass(frozen=True)
class ResponsePoint:
    """One spectral sample. Detuning in gamma0, cross-sections in sigma0,
    powers in hbar omega0 gamma0."""

    detuning: float
    sigma_sc: float
    sigma_abs: float
    sigma_ext: float
    w_sc: float
    w_abs: float
    w_inc: float


def response_point(rates: DerivedRates, drive: DriveParams) -> ResponsePoint:
    unit = rates.omega0 * rates.gamma0
    return ResponsePoint(
        detuning=rates.detuning / rates.gamma0,
        sigma_sc=scattering_cross_section(rates),
        sigma_abs=absorption_cross_section(rates),
        sigma_ext=extinction_cross_section(rates),
        w_sc=scattered_power(rates, drive) / unit,
        w_abs=absorbed_power(rates, drive) / unit,
        w_inc=incoherent_power(rates, drive) / unit,
    )
