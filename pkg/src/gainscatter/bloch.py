"""
Effective two-level dynamics of the incoherently pumped atom.

    d/dt rho_ee = -gamma rho_ee + P rho_gg
    d/dt rho_gg =  gamma rho_ee - P rho_gg
    d/dt rho_eg = -(gamma + P) rho_eg / 2 - i omega0 rho_eg

The upper level u never appears explicitly; its adiabatic elimination is
already folded into the pump rate P carried by :class:`DerivedRates`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import DerivedRates

#: Gamma * t beyond which the atom is considered to be in its steady state.
STEADY_GAMMA_T = 50.0
#: Largest Gamma * dt accepted by :func:`integrate_bloch`.
MAX_GAMMA_DT = 1e-2

_TRACE_TOL = 1e-12


@dataclass(frozen=True)
class BlochState:
    rho_gg: float
    rho_ee: float
    rho_eg: complex = 0j

    def __post_init__(self):
        if abs(self.rho_gg + self.rho_ee - 1.0) > _TRACE_TOL:
            raise ValueError(f"populations do not sum to one: {self.rho_gg} + {self.rho_ee}")
        bound = math.sqrt(max(self.rho_ee - self.rho_ee**2, 0.0))
        if abs(self.rho_eg) > bound + _TRACE_TOL:
            raise ValueError(f"|rho_eg| = {abs(self.rho_eg)} exceeds physical bound {bound}")

    @classmethod
    def from_excited_population(cls, Ne: float) -> "BlochState":
        """Initial state with population Ne and maximal real coherence."""
        _check_population(Ne)
        return cls(rho_gg=1.0 - Ne, rho_ee=Ne, rho_eg=complex(math.sqrt(Ne - Ne**2)))

    def as_array(self) -> np.ndarray:
        return np.array([self.rho_gg, self.rho_ee, self.rho_eg], dtype=complex)


@dataclass(frozen=True)
class SteadyState:
    rho_gg: float
    rho_ee: float

    @property
    def weights(self) -> tuple[float, float]:
        """Amplitude weights (sqrt(gamma/Gamma), sqrt(P/Gamma)) of the mixture."""
        return math.sqrt(self.rho_gg), math.sqrt(self.rho_ee)


def _check_population(Ne):
    if not 0.0 <= Ne <= 1.0:
        raise ValueError(f"excited population must lie in [0, 1], got {Ne}")


def analytic_evolution(rates: DerivedRates, Ne: float, t: float) -> BlochState:
    """Closed-form solution starting from population Ne and maximal coherence.

    rho_ee(t) = (P/Gamma)(1 - e^{-Gamma t}) + Ne e^{-Gamma t}
    rho_eg(t) = sqrt(Ne - Ne**2) e^{-i omega0 t} e^{-Gamma t / 2}
    """
    _check_population(Ne)
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    G = rates.big_gamma
    decay = math.exp(-G * t)
    rho_ee = rates.pump_rate / G * (1.0 - decay) + Ne * decay
    rho_gg = rates.gamma / G * (1.0 - decay) + decay * (1.0 - Ne)
    coherence = math.sqrt(Ne - Ne**2) * math.exp(-0.5 * G * t)
    rho_eg = coherence * complex(math.cos(rates.omega0 * t), -math.sin(rates.omega0 * t))
    return BlochState(rho_gg=rho_gg, rho_ee=rho_ee, rho_eg=rho_eg)


def _rhs(rates: DerivedRates, y: np.ndarray) -> np.ndarray:
    # y = (rho_gg, rho_ee, rho_eg in the frame rotating at omega0)
    flow = rates.gamma * y[1] - rates.pump_rate * y[0]
    return np.array([flow, -flow, -0.5 * rates.big_gamma * y[2]])


def integrate_bloch(rates: DerivedRates, initial: BlochState, t_end: float,
                    dt: float) -> BlochState:
    """Fixed-step RK4 integration of the Bloch equations up to ``t_end``.

    The optical phase e^{-i omega0 t} is carried analytically (the coherence is
    stepped in the frame rotating at omega0), so the step only has to resolve
    the incoherent time scale 1/Gamma. The last step is shortened to land on
    ``t_end`` exactly.
    """
    if t_end < 0:
        raise ValueError(f"t_end must be non-negative, got {t_end}")
    if not dt > 0 or dt * rates.big_gamma > MAX_GAMMA_DT:
        raise ValueError(f"step dt = {dt} violates Gamma*dt <= {MAX_GAMMA_DT}")
    y = initial.as_array()
    if t_end == 0:
        return initial

    n_steps = max(1, math.ceil(t_end / dt - 1e-12))
    h = t_end / n_steps
    for _ in range(n_steps):
        k1 = _rhs(rates, y)
        k2 = _rhs(rates, y + 0.5 * h * k1)
        k3 = _rhs(rates, y + 0.5 * h * k2)
        k4 = _rhs(rates, y + h * k3)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    phase = complex(math.cos(rates.omega0 * t_end), -math.sin(rates.omega0 * t_end))
    return BlochState(rho_gg=y[0].real, rho_ee=y[1].real, rho_eg=complex(y[2]) * phase)


def bloch_trajectory(rates: DerivedRates, initial: BlochState, times, dt: float):
    """RK4 states at each of the non-decreasing sample ``times`` (t >= 0)."""
    states = []
    state, t_prev = initial, 0.0
    for t in times:
        if t < t_prev:
            raise ValueError("times must be non-decreasing and start at >= 0")
        # the equations are time-homogeneous: restart from the previous sample
        state = integrate_bloch(rates, state, t - t_prev, dt)
        states.append(state)
        t_prev = t
    return states


def steady_state(rates: DerivedRates) -> SteadyState:
    """Asymptotic populations gamma/Gamma and P/Gamma; the coherence vanishes."""
    if not rates.big_gamma > 0:
        raise ValueError("steady state requires Gamma > 0")
    rho_ee = rates.pump_rate / rates.big_gamma
    return SteadyState(rho_gg=1.0 - rho_ee, rho_ee=rho_ee)
