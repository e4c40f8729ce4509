"""First-order perturbative spectral amplitude from the interaction
picture.

For constant parameters this coincides exactly with the small-gain limit
of the Heisenberg result; its defining property is that the shape stays
a sinc (a rectangle in time) at every coupling strength.
"""

from __future__ import annotations

import numpy as np

from .spectrum import SpectralAmplitude, _sinc, smallgain_values
from .units import FrequencyGrid, ModelParams


def phi_interaction(params: ModelParams, varpi):
    """i*kappa_l*exp(-alpha_l)*sinc(varpi), elementwise.  Identical to the
    small-gain Heisenberg limit for constant parameters."""
    values = smallgain_values(params.kappa_l, params.alpha_l,
                              np.asarray(varpi, dtype=float))
    if np.ndim(varpi) == 0:
        return complex(values)
    return values


def interaction_spectrum(params: ModelParams,
                         grid: FrequencyGrid) -> SpectralAmplitude:
    return SpectralAmplitude(grid=grid, values=phi_interaction(params, grid.samples),
                             component="interaction")


def dispersive_interaction_spectrum(model,
                                    grid: FrequencyGrid) -> SpectralAmplitude:
    """Pointwise dispersive generalization: kappa(varpi), alpha(varpi)
    and V_g(varpi) are substituted directly into the first-order
    integrand.  Where exactly each frequency dependence should enter is
    a modeling choice; this is the minimal pointwise reading."""
    kappa, alpha, vg = model.evaluate(grid.samples)
    values = 1j * kappa * np.exp(-alpha) * _sinc(grid.samples / vg + 0j)
    return SpectralAmplitude(grid=grid, values=values, component="interaction")


def two_photon_state_norm(params: ModelParams, grid: FrequencyGrid) -> float:
    """First-order pair-generation weight
    (1/2pi) * int |kappa_l * sinc(varpi)|^2 dvarpi."""
    amp = params.kappa_l * np.real(_sinc(grid.samples + 0j))
    return float(np.trapezoid(amp**2, grid.samples)) / (2.0 * np.pi)
