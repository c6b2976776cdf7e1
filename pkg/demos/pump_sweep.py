"""
Resonant cross-sections versus pump rate, and where they change sign.

Run:  python demos/pump_sweep.py
"""
import numpy as np

from gainscatter import (AtomParams, DriveParams, absorption_cross_section, critical_pump_root,
                         critical_pumps_closed_form, derive_rates, extinction_cross_section,
                         scattering_cross_section)

# %%
atom = AtomParams(gamma_nr=0.2)
resonant = derive_rates(atom, DriveParams())
pumps = np.linspace(0.0, 4.0, 81)
table = np.array([[scattering_cross_section(r), absorption_cross_section(r),
                   extinction_cross_section(r)]
                  for r in (resonant.with_pump(P) for P in pumps)])

# %% Closed-form thresholds against bisection on the curves themselves.
crit = critical_pumps_closed_form(atom.gamma_nr, resonant.gamma_omega)
print(f"absorption vanishes at P = {crit.p_abs_zero:.6f}  "
      f"(bisection {critical_pump_root(resonant, 'absorption'):.6f})")
print(f"extinction vanishes at P = {crit.p_ext_zero:.6f}  "
      f"(bisection {critical_pump_root(resonant, 'extinction'):.6f})")

# %% Strong pumping: scattering falls like 1/P**2, absorption and extinction like 1/P.
for P in (1e2, 1e3, 1e4):
    r = resonant.with_pump(P)
    print(f"P = {P:7.0f}  sigma_sc P^2 = {scattering_cross_section(r) * P**2:.4f}  "
          f"sigma_ext P = {extinction_cross_section(r) * P:+.4f}")

# %%
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    for col, label in enumerate(("scattering", "absorption", "extinction")):
        ax.plot(pumps, table[:, col], label=label)
    ax.axhline(0.0, color="0.6", lw=0.5)
    ax.axvline(crit.p_ext_zero, color="0.6", ls=":")
    ax.set_xlabel("P / gamma0")
    ax.set_ylabel("sigma(0) / sigma0")
    ax.legend()
    fig.tight_layout()
    fig.savefig("pump_sweep.png", dpi=120)
