"""
Brute-force quadrature of the time integrals behind the closed forms.

Run:  python demos/quadrature_checks.py
"""
import math

from gainscatter import AtomParams, DriveParams, GammaOmegaMode, derive_rates
from gainscatter.oracle import (QuadratureSpec, lorentzian_targets, quad_absorption_w3,
                                quad_gamma0, run_oracle_suite)

# %% Full report, as printed by `gainscatter oracle`.
for r in run_oracle_suite():
    print(f"{r.target:28s} closed = {r.closed_form:+.6e}  quad = {r.quadrature:+.6e}  "
          f"rel = {r.rel_error:.1e}  {'ok' if r.passed else 'FAIL'}")

# %% Simpson convergence on the single time integral: error drops ~16x per halving.
atom = AtomParams(gamma_nr=0.2)
drive = DriveParams(detuning=0.6)
rates = derive_rates(atom, drive, GammaOmegaMode.CUBIC)
ref = lorentzian_targets(rates, drive)["w3"]
prev = None
for n in (1003, 2005, 4009):
    err = abs(quad_absorption_w3(rates, drive, QuadratureSpec.steady(rates, n_time=n)) - ref)
    order = "" if prev is None else f"  order {math.log2(prev / err):.2f}"
    print(f"n_time = {n:5d}  rel error = {err / ref:.2e}{order}")
    prev = err

# %% The decay rate is a plateau: it must not depend on t inside gamma t << 1.
for t in (2e-3, 1e-3, 5e-4):
    print(f"t = {t:.0e}  gamma0 = {quad_gamma0(QuadratureSpec.golden_rule(t_end=t)):.5f}")
