"""Steady-state optical response of an incoherently pumped two-level atom."""

__version__ = "0.1.0"

from .balance import (GOLDEN_RATIO, CriticalPumps, NoBracketError, Quantity,
                      critical_pump_root, critical_pumps_closed_form,
                      unitarity_residual, unitarity_terms)
from .bloch import (BlochState, SteadyState, analytic_evolution, bloch_trajectory,
                    integrate_bloch, steady_state)
from .greens import decay_rate, dipole_sq_for_rate, green_dyadic, im_green_coincident
from .params import (AtomParams, DerivedRates, DriveParams, GammaOmegaMode,
                     RegimeWarning, derive_rates, is_weak_probe)
from .response import (ResponsePoint, absorbed_power, absorption_cross_section,
                       extinction_cross_section, incoherent_power,
                       incoherent_power_resonant, response_point, scattered_power,
                       scattering_cross_section, stimulated_power)
from .semiclassical import (coherent_field, coherent_power, dipole_expectation,
                            discrepancy_factor, polarizability)

__all__ = [
    "GOLDEN_RATIO", "AtomParams", "BlochState", "CriticalPumps", "DerivedRates",
    "DriveParams", "GammaOmegaMode", "NoBracketError", "Quantity", "RegimeWarning",
    "ResponsePoint", "SteadyState", "absorbed_power", "absorption_cross_section",
    "analytic_evolution", "bloch_trajectory", "coherent_field", "coherent_power",
    "critical_pump_root", "critical_pumps_closed_form", "decay_rate",
    "derive_rates", "dipole_expectation", "dipole_sq_for_rate", "discrepancy_factor",
    "extinction_cross_section", "green_dyadic", "im_green_coincident",
    "incoherent_power", "incoherent_power_resonant", "integrate_bloch",
    "is_weak_probe", "polarizability", "response_point", "scattered_power",
    "scattering_cross_section", "steady_state", "stimulated_power",
    "unitarity_residual", "unitarity_terms",
]
