"""Frequency-dependent media: a transparency-window dispersion model.

Replaces the constant kappa, alpha, V_g with profiles from an
illustrative three-level transparency-window model, then compares the
full boundary-value waveform against the first-order perturbative one as
the coupling grows.
"""

import numpy as np

from biphoton import (ModelParams, default_grid,
                      dispersive_interaction_spectrum, dispersive_spectrum,
                      eit_model, to_time)

grid = default_grid()

anchor = ModelParams(kappa_l=0.03, alpha_l=0.51)
model = eit_model(anchor, od=100.0, omega_c=2.0, gamma13=1.0, gamma12=0.2)
print("transparency-window model anchored at kappa*L = 0.03, "
      "alpha*L = 0.51:")
print(f"  group index at line center: {model.meta['group_index0']:.1f}"
      f"  (V_g/c = {model.meta['vg0_over_c']:.4f}, slow light)")
k, a, v = model.evaluate(np.array([0.0, 0.5, 1.0, 3.0]))
for w, kk, aa, vv in zip((0.0, 0.5, 1.0, 3.0), k, a, v):
    print(f"  varpi = {w:3.1f}:  kappa*L = {kk:.4f},  alpha*L = {aa:.4f},"
          f"  V_g/V_g(0) = {vv:.3f}")

print("\n== full vs perturbative waveform, dispersive medium ==")
for kappa_l in (0.03, 0.87, 1.40):
    p = ModelParams(kappa_l=kappa_l, alpha_l=0.51)
    m = eit_model(p, od=100.0, omega_c=2.0, gamma13=1.0, gamma12=0.2)
    heis = to_time(dispersive_spectrum(m, grid, "total")).values
    inter = to_time(dispersive_interaction_spectrum(m, grid)).values
    dev = np.max(np.abs(np.abs(heis) / np.max(np.abs(heis))
                        - np.abs(inter) / np.max(np.abs(inter))))
    print(f"kappa*L = {kappa_l:4.2f}:  normalized shape deviation = {dev:.4f}")
print("the deviation grows with coupling here too: gain physics, not an")
print("artifact of the constant-parameter idealization")
