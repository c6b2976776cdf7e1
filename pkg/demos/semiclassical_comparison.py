"""
Quantum scattered power versus the power radiated by a classical induced dipole.

Run:  python demos/semiclassical_comparison.py
"""
import numpy as np

from gainscatter import (AtomParams, DriveParams, coherent_power, derive_rates,
                         discrepancy_factor, polarizability, scattered_power)

# %% The classical dipole scales with the population difference, so its
# radiated power carries (P - gamma)**2/Gamma**2 and vanishes at P = gamma.
atom = AtomParams(gamma_nr=0.2)
drive = DriveParams()
for P in np.linspace(0.0, 4.0, 9):
    r = derive_rates(atom, drive).with_pump(P)
    w_sc = scattered_power(r, drive)
    w_coh = coherent_power(r, drive)
    print(f"P = {P:3.1f}  alpha = {polarizability(r):+.3e}  W_coh/W_sc = {w_coh / w_sc:.4f}  "
          f"(P-gamma)^2/Gamma^2 = {discrepancy_factor(r):.4f}")
