"""
Brute-force quadrature of the time-integral expressions behind the closed-form
rates and powers. Nothing here calls :mod:`gainscatter.response`; the closed
forms are only used as comparison targets by :func:`run_oracle_suite`.

All time integrands are evaluated after factoring out the overall optical
phase (co-rotating reduction), so only detuning-scale phases remain on the
grid. The photon frequency integrals keep the full free-space density
omega'**3 Im G(0+; omega') inside the integral; nothing is frozen at the pole.

Photon-frequency densities (natural units, mu_par fixed by gamma0):

    rate density    -(omega'**2 / pi) mu_par**2 Im G(omega')
    power density   -(omega'**3 / pi) mu_par**2 Im G(omega')
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.integrate import simpson

from .bloch import STEADY_GAMMA_T
from .greens import dipole_sq_for_rate, im_green_coincident
from .params import AtomParams, DerivedRates, DriveParams, GammaOmegaMode, derive_rates

MIN_FREQ_WINDOW = 20.0
MAX_DERIV_STEP = 1e-3
MAX_SLOW_DECAY = 1e-2
_POINTS_PER_RAD = 20.0
_POINTS_PER_PERIOD = 8.0


class QuadratureGuardError(ValueError):
    """A grid or window is too coarse for the requested target."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Grid settings for one quadrature target.

    ``t_end`` is the observation time. ``freq_window`` is the half-width of
    the photon-frequency window, in units of Gamma for the steady targets and
    in units of 1/t_end for :func:`quad_gamma0`. ``deriv_step`` is the
    centred-difference step for d/dt, in units of 1/Gamma.
    """

    t_end: float
    n_time: int = 2001
    freq_window: float = 40.0
    n_freq: int = 2**15 + 1
    deriv_step: float = 1e-3

    @classmethod
    def steady(cls, rates: DerivedRates, gamma_t: float = STEADY_GAMMA_T, **kwargs):
        """Spec observing at Gamma t = ``gamma_t``, with a time grid that
        resolves the detuning phase."""
        t_end = gamma_t / rates.big_gamma
        kwargs.setdefault("n_time", _min_time_points(rates, t_end) | 1)
        return cls(t_end=t_end, **kwargs)

    @classmethod
    def golden_rule(cls, t_end: float = 1e-3, freq_window: float = 2000.0,
                    n_freq: int = 2**16 + 1):
        """Spec for the slow-decay rate extraction (window in units of 1/t_end)."""
        return cls(t_end=t_end, n_time=3, freq_window=freq_window, n_freq=n_freq)


def _min_time_points(rates: DerivedRates, t_end: float) -> int:
    fastest = max(abs(rates.detuning), rates.big_gamma)
    return int(math.ceil(_POINTS_PER_RAD * t_end * fastest)) + 1


def _check_steady(rates: DerivedRates, spec: QuadratureSpec):
    if rates.big_gamma * spec.t_end < STEADY_GAMMA_T * (1 - 1e-12):
        raise QuadratureGuardError(
            f"Gamma*t_end = {rates.big_gamma * spec.t_end:g} < {STEADY_GAMMA_T:g}")


def _check_time_grid(rates: DerivedRates, spec: QuadratureSpec):
    need = _min_time_points(rates, spec.t_end)
    if spec.n_time < need:
        raise QuadratureGuardError(f"n_time = {spec.n_time} does not resolve the "
                                   f"detuning phase; need >= {need}")


def _check_freq_grid(spec: QuadratureSpec, half_width: float):
    spacing = 2.0 * half_width / (spec.n_freq - 1)
    if spacing * spec.t_end > 2.0 * math.pi / _POINTS_PER_PERIOD:
        raise QuadratureGuardError(
            f"n_freq = {spec.n_freq} under-resolves the e^(i Delta t) oscillation")


def _check_steady_window(rates: DerivedRates, spec: QuadratureSpec, center: float):
    if spec.freq_window < MIN_FREQ_WINDOW:
        raise QuadratureGuardError(f"freq_window = {spec.freq_window} < {MIN_FREQ_WINDOW}")
    if center - spec.freq_window * rates.big_gamma <= 0:
        raise QuadratureGuardError("frequency window reaches omega' <= 0")
    if spec.deriv_step > MAX_DERIV_STEP:
        raise QuadratureGuardError(f"deriv_step = {spec.deriv_step} > {MAX_DERIV_STEP}")


def power_density(omega_p, dipole_sq):
    """-(omega'**3 / pi) |mu|**2 Im G(0+; omega'), photon energy included."""
    omega_p = np.asarray(omega_p, dtype=float)
    return -(omega_p**3 / math.pi) * dipole_sq * im_green_coincident(omega_p)


def rate_density(omega_p, dipole_sq):
    """-(omega'**2 / pi) |mu|**2 Im G(0+; omega')."""
    omega_p = np.asarray(omega_p, dtype=float)
    return -(omega_p**2 / math.pi) * dipole_sq * im_green_coincident(omega_p)


def _simpson_time(integrand, t_end, n_time):
    tau = np.linspace(0.0, t_end, n_time)
    return simpson(integrand(tau), x=tau)


def _detuned_decay_integral(exponent, t_end, n_time):
    """int_0^t dtau exp(exponent (t - tau)) by composite Simpson."""
    return _simpson_time(lambda tau: np.exp(exponent * (t_end - tau)), t_end, n_time)


def quad_absorption_w3(rates: DerivedRates, drive: DriveParams, spec: QuadratureSpec) -> float:
    """Ground-state absorption power gamma (hbar omega Omega0**2/4) |int|**2.

    The time integral int_0^t dtau e^{-i(t-tau)omega0} e^{-(t-tau)Gamma/2} e^{-i tau omega}
    is evaluated after removing e^{-i omega t}, leaving e^{(i delta - Gamma/2)(t - tau)}.
    """
    _check_steady(rates, spec)
    _check_time_grid(rates, spec)
    z = complex(-0.5 * rates.big_gamma, rates.detuning)
    amp = _detuned_decay_integral(z, spec.t_end, spec.n_time)
    return rates.gamma * rates.omega_prefactor * drive.rabi_probe**2 / 4.0 * abs(amp) ** 2


def quad_stimulated_w4(rates: DerivedRates, drive: DriveParams, spec: QuadratureSpec) -> float:
    """Stimulated-emission term -P (hbar omega Omega0**2/4) |int|**2 (negative).

    int_0^t dtau e^{-2i(t-tau)omega} e^{-(t-tau)Gamma/2} e^{-i tau(omega+omega0)}
    reduces, after removing e^{-i(omega+omega0)t}, to e^{(-i delta - Gamma/2)(t - tau)}.
    """
    _check_steady(rates, spec)
    _check_time_grid(rates, spec)
    z = complex(-0.5 * rates.big_gamma, -rates.detuning)
    amp = _detuned_decay_integral(z, spec.t_end, spec.n_time)
    return -rates.pump_rate * rates.omega_prefactor * drive.rabi_probe**2 / 4.0 * abs(amp) ** 2


def _phase_ramp(D, t):
    """(e^{i D t} - 1)/(i D), finite at D = 0."""
    return t * np.exp(0.5j * D * t) * np.sinc(D * t / (2.0 * math.pi))


def _scattering_amp_sq(D, pole, t):
    """|A|**2 for the nested scattering integral with detuning D = omega' - omega.

    A = (1/pole) int_0^t dtau e^{i D tau} (1 - e^{-pole tau}), up to a unit phase.
    """
    z = 1j * D - pole
    amp = (_phase_ramp(D, t) - np.expm1(z * t) / z) / pole
    return np.abs(amp) ** 2


def _rate_of(amp_sq, t, h):
    return (amp_sq(t + h) - amp_sq(t - h)) / (2.0 * h)


def quad_scattering_parts(rates: DerivedRates, drive: DriveParams,
                          spec: QuadratureSpec) -> tuple[float, float]:
    """Scattered power from the ground (W1) and excited (W2) steady states.

    For every photon frequency omega' the nested time integrals reduce to
    elementary exponentials; the photon-frequency integral and the time
    derivative (centred difference at t_end) are done numerically:

        W_n = (Omega0**2/4) w_n int d omega' rho(omega') d/dt |A_n(t; omega')|**2

    with weights w_1 = gamma/Gamma, w_2 = P/Gamma. The inner pole is
    Gamma/2 - i delta for W1 and Gamma/2 + i(omega' - omega0) for W2.
    """
    _check_steady(rates, spec)
    omega = rates.omega
    _check_steady_window(rates, spec, omega)
    half = spec.freq_window * rates.big_gamma
    _check_freq_grid(spec, half)

    D = np.linspace(-half, half, spec.n_freq)
    omega_p = omega + D
    density = power_density(omega_p, dipole_sq_for_rate(rates.omega0, rates.gamma0))
    t, h = spec.t_end, spec.deriv_step / rates.big_gamma

    ground_pole = complex(0.5 * rates.big_gamma, -rates.detuning)
    excited_pole = 0.5 * rates.big_gamma + 1j * (omega_p - rates.omega0)
    d1 = _rate_of(lambda s: _scattering_amp_sq(D, ground_pole, s), t, h)
    d2 = _rate_of(lambda s: _scattering_amp_sq(D, excited_pole, s), t, h)

    scale = drive.rabi_probe**2 / 4.0
    G = rates.big_gamma
    w1 = scale * rates.gamma / G * simpson(density * d1, x=omega_p)
    w2 = scale * rates.pump_rate / G * simpson(density * d2, x=omega_p)
    return float(w1), float(w2)


def quad_scattering(rates: DerivedRates, drive: DriveParams, spec: QuadratureSpec) -> float:
    """Total scattered power W1 + W2 by quadrature."""
    w1, w2 = quad_scattering_parts(rates, drive, spec)
    return w1 + w2


def quad_gamma0(spec: QuadratureSpec | None = None, *, omega0: float = 1.0e8,
                gamma0: float = 1.0, gamma: float | None = None,
                dipole_sq: float | None = None) -> float:
    """Spontaneous decay rate from the golden-rule window gamma t << 1.

    d/dt int d omega' rho(omega') |int_0^t dtau e^{-i(t-tau)omega'} e^{-i tau omega0}
    e^{-tau gamma/2}|**2 with the time integral done in closed form, the
    derivative taken exactly, and the frequency integral by Simpson over
    omega0 +- freq_window / t_end.

    The window must be wide compared with 1/t_end and narrow compared with
    omega0, which is why omega0 defaults to 1e8 gamma0. ``dipole_sq``
    defaults to the value giving ``gamma0``; ``gamma`` (the decay in the
    envelope) defaults to ``gamma0``.
    """
    spec = QuadratureSpec.golden_rule() if spec is None else spec
    gamma = gamma0 if gamma is None else gamma
    dipole_sq = dipole_sq_for_rate(omega0, gamma0) if dipole_sq is None else dipole_sq
    t = spec.t_end
    if gamma * t > MAX_SLOW_DECAY:
        raise QuadratureGuardError(f"gamma*t_end = {gamma * t:g} > {MAX_SLOW_DECAY:g}")
    if spec.freq_window < MIN_FREQ_WINDOW:
        raise QuadratureGuardError(f"freq_window = {spec.freq_window} < {MIN_FREQ_WINDOW}")
    half = spec.freq_window / t
    if half >= omega0:
        raise QuadratureGuardError("frequency window reaches omega' <= 0; raise omega0")
    _check_freq_grid(spec, half)

    D = np.linspace(-half, half, spec.n_freq)
    omega_p = omega0 + D
    z = 1j * D - 0.5 * gamma
    amp = np.expm1(z * t) / z
    rate = 2.0 * np.real(np.conj(amp) * np.exp(z * t))
    return float(simpson(rate_density(omega_p, dipole_sq) * rate, x=omega_p))


def spontaneous_w5_integrand(rates: DerivedRates, spec: QuadratureSpec):
    """(omega', P rho(omega') |int_0^t ds e^{-s(i(omega'-omega0) + Gamma/2)}|**2)."""
    _check_steady(rates, spec)
    _check_steady_window(rates, spec, rates.omega0)
    half = spec.freq_window * rates.big_gamma
    D0 = np.linspace(-half, half, spec.n_freq)
    omega_p = rates.omega0 + D0
    pole = 1j * D0 + 0.5 * rates.big_gamma
    amp = -np.expm1(-pole * spec.t_end) / pole
    density = power_density(omega_p, dipole_sq_for_rate(rates.omega0, rates.gamma0))
    return omega_p, rates.pump_rate * density * np.abs(amp) ** 2


def quad_spontaneous_w5(rates: DerivedRates, spec: QuadratureSpec) -> float:
    """Probe-independent incoherent power fed by the pump, by frequency quadrature."""
    omega_p, integrand = spontaneous_w5_integrand(rates, spec)
    return float(simpson(integrand, x=omega_p))


# -- closed-form targets ------------------------------------------------------

def lorentzian_targets(rates: DerivedRates, drive: DriveParams) -> dict:
    """Closed forms of the individual diagram powers the quadratures approach."""
    L = rates.lorentz_denominator
    G = rates.big_gamma
    base = rates.omega_prefactor * drive.rabi_probe**2 / (4.0 * L)
    return {
        "w1": base * rates.gamma / G * rates.gamma_omega,
        "w2": base * rates.pump_rate / G * rates.gamma_omega,
        "w3": base * rates.gamma,
        "w4": -base * rates.pump_rate,
        "w5": rates.omega0 * rates.gamma0 * rates.pump_rate / G,
    }


@dataclass(frozen=True)
class OracleResult:
    target: str
    closed_form: float
    quadrature: float
    rel_error: float
    tolerance: float
    passed: bool

    def as_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


def _result(target, closed, quad, tol):
    rel = abs(quad - closed) / abs(closed)
    return OracleResult(target, float(closed), float(quad), float(rel), tol, bool(rel <= tol))


def run_oracle_suite(omega0: float = 1.0e4, gamma_nr: float = 0.2,
                     rabi_probe: float = 0.01) -> list[OracleResult]:
    """Compare every quadrature target with its closed form.

    Uses the free-space (cubic) radiative law so that the closed forms and
    the quadratures describe the same atom.
    """
    atom = AtomParams(omega0=omega0, gamma_nr=gamma_nr)
    cubic = GammaOmegaMode.CUBIC
    results = []

    def rates_for(pump, delta):
        drive = DriveParams.from_pump_rate(pump, atom.gamma_u, rabi_probe=rabi_probe,
                                           detuning=delta)
        return derive_rates(atom, drive, cubic), drive

    for pump in (0.0, 1.8):
        G = gamma_nr + atom.gamma0 + pump
        for frac in (0.0, 0.5, 1.0):
            rates, drive = rates_for(pump, frac * G)
            spec = QuadratureSpec.steady(rates)
            ref = lorentzian_targets(rates, drive)
            tag = f"P={pump:g},delta={frac:g}Gamma"
            results.append(_result(f"w3[{tag}]", ref["w3"],
                                   quad_absorption_w3(rates, drive, spec), 1e-3))
            if pump > 0:
                results.append(_result(f"w4[{tag}]", ref["w4"],
                                       quad_stimulated_w4(rates, drive, spec), 1e-3))

    for pump in (0.0, 3.0):
        G = gamma_nr + atom.gamma0 + pump
        for frac in (0.0, 0.5, 1.0):
            rates, drive = rates_for(pump, frac * G)
            spec = QuadratureSpec.steady(rates)
            ref = lorentzian_targets(rates, drive)
            tag = f"P={pump:g},delta={frac:g}Gamma"
            results.append(_result(f"w_sc[{tag}]", ref["w1"] + ref["w2"],
                                   quad_scattering(rates, drive, spec), 1e-2))

    rates, drive = rates_for(1.8, 0.0)
    spec = QuadratureSpec.steady(rates)
    w1, _ = quad_scattering_parts(rates, drive, spec)
    assembled = (quad_absorption_w3(rates, drive, spec)
                 + quad_stimulated_w4(rates, drive, spec) - w1)
    G = rates.big_gamma
    eq_abs = (rates.omega_prefactor * rabi_probe**2
              * (rates.gamma / G * rates.gamma_nr - rates.pump_rate**2 / G)
              / (4.0 * rates.lorentz_denominator))
    results.append(_result("w_abs[P=1.8,delta=0]", eq_abs, assembled, 1e-2))

    results.append(_result("gamma0", 1.0, quad_gamma0(), 1e-2))

    rates, drive = rates_for(atom.gamma0 + gamma_nr, 0.0)
    spec = QuadratureSpec.steady(rates)
    results.append(_result("w5[P=gamma]", lorentzian_targets(rates, drive)["w5"],
                           quad_spontaneous_w5(rates, spec), 1e-2))
    return results
