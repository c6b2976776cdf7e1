"""
Gain/loss balance: the golden-ratio pump and the probability bookkeeping.

Run:  python demos/balance_and_unitarity.py
"""
import numpy as np

from gainscatter import (GOLDEN_RATIO, AtomParams, DriveParams, GammaOmegaMode,
                         critical_pumps_closed_form, derive_rates, unitarity_residual,
                         unitarity_terms)

# %% Without nonradiative loss extinction vanishes at P = phi gamma0.
for gamma_nr in (0.0, 1e-6, 0.2, 1.0, 5.0):
    crit = critical_pumps_closed_form(gamma_nr, 1.0)
    print(f"gamma_nr = {gamma_nr:<6g}  P_abs = {crit.p_abs_zero:.6f}  "
          f"P_ext = {crit.p_ext_zero:.10f}")
print(f"golden ratio           {GOLDEN_RATIO:.10f}")

# %% Outflow and renormalization cancel at resonance. Off resonance the
# free-space rate gamma_omega differs from gamma0 and leaves a small residue.
atom = AtomParams(gamma_nr=0.2)
drive = DriveParams(rabi_probe=0.01)
for mode in GammaOmegaMode:
    base = derive_rates(atom, drive, mode).with_pump(1.0)
    for d in (0.0, 0.1, 1.0):
        r = base.with_detuning(d)
        out, ren = unitarity_terms(r, drive)
        print(f"{mode.value:5s} delta = {d:3.1f}  outflow = {out:.3e}  "
              f"renorm = {ren:.3e}  residual/outflow = {unitarity_residual(r, drive) / out:.2e}")

# %% The residual shrinks like (omega - omega0)/omega0.
base = derive_rates(atom, drive, GammaOmegaMode.CUBIC).with_pump(1.0)
ratios = [unitarity_residual(base.with_detuning(d), drive) / unitarity_terms(
    base.with_detuning(d), drive)[0] for d in (0.01, 0.1, 1.0)]
print("slope of log residual vs log delta:", np.polyfit(np.log([0.01, 0.1, 1.0]),
                                                         np.log(ratios), 1)[0].round(3))
