"""
Gain/loss balance: pump rates that null absorption or extinction, and the
probability-balance (unitarity) residual at order Omega0**2 / Gamma.
"""
from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass

from scipy.optimize import bisect

from .params import DerivedRates, DriveParams
from .response import absorption_cross_section, extinction_cross_section

GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0


class NoBracketError(ValueError):
    """The cross-section does not change sign inside the search bracket."""


class Quantity(str, enum.Enum):
    ABSORPTION = "absorption"
    EXTINCTION = "extinction"


@dataclass(frozen=True)
class CriticalPumps:
    p_abs_zero: float
    p_ext_zero: float


def critical_pumps_closed_form(gamma_nr: float, gamma_omega: float) -> CriticalPumps:
    """Pump rates at which absorption and extinction vanish.

    P_abs = sqrt(gamma_nr**2 + gamma_nr gamma_omega)
    P_ext = [gamma_omega + sqrt(4 gamma_nr**2 + 8 gamma_nr gamma_omega + 5 gamma_omega**2)] / 2

    Both assume gamma_omega = gamma0 (quasi-resonant probe). With
    gamma_nr = 0, P_ext is the golden ratio times gamma_omega.
    """
    if gamma_nr < 0:
        raise ValueError(f"gamma_nr must be non-negative, got {gamma_nr}")
    if not gamma_omega > 0:
        raise ValueError(f"gamma_omega must be positive, got {gamma_omega}")
    p_abs = math.sqrt(gamma_nr**2 + gamma_nr * gamma_omega)
    disc = 4.0 * gamma_nr**2 + 8.0 * gamma_nr * gamma_omega + 5.0 * gamma_omega**2
    p_ext = 0.5 * (gamma_omega + math.sqrt(disc))
    return CriticalPumps(p_abs_zero=p_abs, p_ext_zero=p_ext)


def critical_pump_root(rates: DerivedRates, which: Quantity | str, *,
                       p_max: float | None = None, xtol: float = 1e-14) -> float:
    """Bisect sigma(P) = 0 for P in [0, p_max] at the detuning held by ``rates``.

    ``rates`` serves as a template: only its pump rate is varied. ``p_max``
    defaults to 1000 gamma0. Raises :class:`NoBracketError` unless sigma is
    strictly positive at P = 0 and strictly negative at ``p_max``.
    """
    which = Quantity(which)
    sigma = absorption_cross_section if which is Quantity.ABSORPTION else extinction_cross_section
    p_max = 1.0e3 * rates.gamma0 if p_max is None else p_max

    def f(p):
        return sigma(rates.with_pump(p))

    lo, hi = f(0.0), f(p_max)
    if not (lo > 0.0 > hi):
        raise NoBracketError(f"{which.value} cross-section has no sign change in "
                             f"[0, {p_max}]: sigma(0) = {lo}, sigma(p_max) = {hi}")
    return bisect(f, 0.0, p_max, xtol=xtol, rtol=4 * sys.float_info.epsilon, maxiter=500)


def unitarity_terms(rates: DerivedRates, drive: DriveParams) -> tuple[float, float]:
    """Probability outflow rate and state-renormalization rate.

    outflow       = Omega0**2 (gamma + P + (P/Gamma) gamma_omega - (P/Gamma) gamma0) / (4 L)
    renormalized  = -Omega0**2 (gamma + P) / (4 L)
    """
    G = rates.big_gamma
    P = rates.pump_rate
    scale = drive.rabi_probe**2 / (4.0 * rates.lorentz_denominator)
    mismatch = P / G * rates.gamma_omega - P / G * rates.gamma0
    outflow = scale * ((rates.gamma + P) + mismatch)
    renormalized = -scale * (rates.gamma + P)
    return outflow, renormalized


def unitarity_residual(rates: DerivedRates, drive: DriveParams) -> float:
    """Sum of outflow and renormalization; Omega0**2 (P/Gamma)(gamma_omega - gamma0)/(4 L).

    Vanishes exactly whenever gamma_omega == gamma0.
    """
    outflow, renormalized = unitarity_terms(rates, drive)
    return outflow + renormalized
