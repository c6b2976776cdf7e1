"""
Cross-section spectra of a lossy atom as the pump is turned up.

Run:  python demos/gain_spectra.py   (writes gain_spectra.png if matplotlib is installed)
"""
import numpy as np

from gainscatter import AtomParams, DriveParams, derive_rates, response_point

# %% A lossy atom: one fifth of the decay is nonradiative.
atom = AtomParams(gamma_nr=0.2)
detunings = np.linspace(-4.0, 4.0, 161)
pumps = [0.0, 0.8, 1.9, 4.0]

# %% Each pump rate gives a Lorentzian of width Gamma = gamma + P.
# The pump both narrows the ground-state weight and feeds stimulated emission,
# so absorption turns negative first and extinction follows.
spectra = {}
for P in pumps:
    base = derive_rates(atom, DriveParams()).with_pump(P)
    points = [response_point(base.with_detuning(d), DriveParams()) for d in detunings]
    spectra[P] = np.array([[p.sigma_sc, p.sigma_abs, p.sigma_ext] for p in points])
    peak = spectra[P][len(detunings) // 2]
    print(f"P = {P:3.1f}  Gamma = {base.big_gamma:3.1f}  "
          f"sigma_sc = {peak[0]:+.4f}  sigma_abs = {peak[1]:+.4f}  sigma_ext = {peak[2]:+.4f}")

# %% Optional figure.
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(1, len(pumps), figsize=(14, 3.2), sharey=True)
    for ax, P in zip(axes, pumps):
        for col, label in enumerate(("scattering", "absorption", "extinction")):
            ax.plot(detunings, spectra[P][:, col], label=label)
        ax.axhline(0.0, color="0.6", lw=0.5)
        ax.set_title(f"P = {P} gamma0")
        ax.set_xlabel("detuning / gamma0")
    axes[0].set_ylabel("sigma / sigma0")
    axes[0].legend(fontsize=8)
    fig.tight_layout()
    fig.savefig("gain_spectra.png", dpi=120)
