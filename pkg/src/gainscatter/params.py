"""
Physical inputs and the composite rates shared by every response formula.

Units
-----
Natural units hbar = eps0 = c = 1 are used throughout. Frequencies and rates
are plain floats in whatever unit the caller picks; all defaults (and the CLI)
measure them in units of the natural linewidth gamma0, so that gamma0 = 1.
Cross-sections are reported in units of

    sigma0 = 2 omega0 mu_par**2 / gamma0 = 6 pi / k0**2,

and the dipole projection mu_par is not a free input: it is fixed by the
free-space relation gamma0 = mu_par**2 omega0**3 / (3 pi).
"""
from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, replace

#: gamma_u / gamma0 above which the pump is treated as incoherent.
PUMP_REGIME_RATIO = 100.0
#: Omega0 / Gamma below which the probe is treated as weak.
PROBE_REGIME_RATIO = 0.1


class RegimeWarning(UserWarning):
    """Inputs fall outside the asymptotic regime the formulas assume."""


class GammaOmegaMode(str, enum.Enum):
    """How the radiative rate at the probe frequency is evaluated.

    ``FLAT`` is the quasi-resonant treatment: gamma_omega = gamma0 and every
    explicit omega prefactor is frozen at omega0, so spectra are exact
    Lorentzians. ``CUBIC`` keeps the free-space law
    gamma_omega = gamma0 (omega/omega0)**3 and the exact omega prefactors.
    """

    FLAT = "flat"
    CUBIC = "cubic"


@dataclass(frozen=True)
class AtomParams:
    """Level structure and widths of the three-level atom."""

    omega0: float = 1.0e4
    omega_u: float = 2.0e4
    gamma0: float = 1.0
    gamma_nr: float = 0.0
    gamma_u: float = 1.0e3

    def __post_init__(self):
        if not self.gamma0 > 0:
            raise ValueError(f"gamma0 must be positive, got {self.gamma0}")
        if not self.gamma_nr >= 0:
            raise ValueError(f"gamma_nr must be non-negative, got {self.gamma_nr}")
        if not self.gamma_u > 0:
            raise ValueError(f"gamma_u must be positive, got {self.gamma_u}")
        if not self.omega0 > 0:
            raise ValueError(f"omega0 must be positive, got {self.omega0}")

    @property
    def mu_parallel(self) -> float:
        """Dipole projection on the probe polarization, fixed by gamma0."""
        return math.sqrt(3.0 * math.pi * self.gamma0 / self.omega0**3)

    @property
    def sigma0(self) -> float:
        """Resonant cross-section unit 2 omega0 mu_par**2 / gamma0."""
        return 2.0 * self.omega0 * self.mu_parallel**2 / self.gamma0

    def is_incoherent_pump(self, ratio: float = PUMP_REGIME_RATIO) -> bool:
        return self.gamma_u >= ratio * self.gamma0


@dataclass(frozen=True)
class DriveParams:
    """Probe and pump fields, given through their Rabi frequencies.

    The probe frequency is stored as the detuning from omega0 so that exact
    resonance is represented exactly.
    """

    detuning: float = 0.0
    rabi_probe: float = 0.01
    rabi_pump: float = 0.0

    def __post_init__(self):
        if not self.rabi_probe >= 0:
            raise ValueError(f"rabi_probe must be non-negative, got {self.rabi_probe}")
        if not self.rabi_pump >= 0:
            raise ValueError(f"rabi_pump must be non-negative, got {self.rabi_pump}")

    @classmethod
    def from_pump_rate(cls, pump_rate: float, gamma_u: float, **kwargs) -> "DriveParams":
        """Build a drive whose pump Rabi frequency yields ``pump_rate``."""
        if pump_rate < 0:
            raise ValueError(f"pump_rate must be non-negative, got {pump_rate}")
        return cls(rabi_pump=math.sqrt(pump_rate * gamma_u), **kwargs)


@dataclass(frozen=True)
class DerivedRates:
    """Rates computed once from (atom, drive) and consumed by all formulas.

    Besides the rates proper this carries the frequencies the response
    formulas need, so that cross-sections are functions of ``DerivedRates``
    alone.
    """

    gamma0: float
    gamma_nr: float
    pump_rate: float
    gamma: float
    big_gamma: float
    gamma_omega: float
    omega0: float
    detuning: float
    mode: GammaOmegaMode = GammaOmegaMode.FLAT

    @property
    def omega(self) -> float:
        return self.omega0 + self.detuning

    @property
    def omega_prefactor(self) -> float:
        """Frequency multiplying explicit hbar*omega factors (omega0 if flat)."""
        return self.omega0 if self.mode is GammaOmegaMode.FLAT else self.omega

    @property
    def lorentz_denominator(self) -> float:
        """(omega - omega0)**2 + Gamma**2 / 4."""
        return self.detuning**2 + 0.25 * self.big_gamma**2

    def with_pump(self, pump_rate: float) -> "DerivedRates":
        """Same atom and probe, different effective pump rate."""
        return replace(self, pump_rate=pump_rate, big_gamma=self.gamma + pump_rate)

    def with_detuning(self, detuning: float) -> "DerivedRates":
        omega = self.omega0 + detuning
        return replace(self, detuning=detuning,
                       gamma_omega=_gamma_omega(self.gamma0, self.omega0, omega, self.mode))


def _gamma_omega(gamma0: float, omega0: float, omega: float, mode: GammaOmegaMode) -> float:
    if mode is GammaOmegaMode.FLAT:
        return gamma0
    if not omega > 0:
        raise ValueError(f"probe frequency must be positive in cubic mode, got {omega}")
    return gamma0 * (omega / omega0) ** 3


def derive_rates(atom: AtomParams, drive: DriveParams,
                 mode: GammaOmegaMode | str = GammaOmegaMode.FLAT, *,
                 pump_ratio: float = PUMP_REGIME_RATIO,
                 probe_ratio: float = PROBE_REGIME_RATIO) -> DerivedRates:
    """Compute P, gamma, Gamma and gamma_omega.

    P = Omega_p**2 / gamma_u, gamma = gamma_nr + gamma0 and Gamma = gamma + P.
    Leaving the incoherent-pump or weak-probe regime emits a
    :class:`RegimeWarning`; the thresholds are the ``*_ratio`` arguments.
    """
    mode = GammaOmegaMode(mode)
    pump_rate = drive.rabi_pump**2 / atom.gamma_u
    gamma = atom.gamma_nr + atom.gamma0
    big_gamma = gamma + pump_rate
    omega = atom.omega0 + drive.detuning
    gamma_omega = _gamma_omega(atom.gamma0, atom.omega0, omega, mode)

    if not atom.is_incoherent_pump(pump_ratio):
        warnings.warn(f"gamma_u/gamma0 = {atom.gamma_u / atom.gamma0:g} < {pump_ratio:g}: "
                      "pump is not in the incoherent regime", RegimeWarning, stacklevel=2)
    if drive.rabi_probe > probe_ratio * big_gamma:
        warnings.warn(f"Omega0/Gamma = {drive.rabi_probe / big_gamma:g} > {probe_ratio:g}: "
                      "probe is not weak", RegimeWarning, stacklevel=2)

    return DerivedRates(gamma0=atom.gamma0, gamma_nr=atom.gamma_nr, pump_rate=pump_rate,
                        gamma=gamma, big_gamma=big_gamma, gamma_omega=gamma_omega,
                        omega0=atom.omega0, detuning=drive.detuning, mode=mode)


def is_weak_probe(drive: DriveParams, rates: DerivedRates,
                  ratio: float = PROBE_REGIME_RATIO) -> bool:
    return drive.rabi_probe <= ratio * rates.big_gamma
