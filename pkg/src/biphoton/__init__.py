"""Backward-wave biphoton simulator.

Computes the joint spectral amplitude, temporal wavefunction, and Glauber
correlation of degenerate backward-wave photon pairs from the
Heisenberg-Langevin boundary-value solution, cross-validated against the
first-order interaction-picture result and the small-gain closed forms.
"""

__version__ = "0.1.0"

from .coupled_mode import (AuxSpectralVars, BoundaryCoeffs, aux_vars,
                           boundary_coeffs, hamiltonian, partial_propagator,
                           propagator)
from .dispersion import (DispersionModel, DispersionTable, constant_model,
                         eit_model, from_table, read_dispersion_csv)
from .errors import (BiphotonError, ConvergenceError, ThresholdError,
                     ValidationError)
from .interaction import (dispersive_interaction_spectrum, interaction_spectrum,
                          phi_interaction, two_photon_state_norm)
from .observables import (G2Curve, LangevinSplit, coherence_time, g2,
                          langevin_split, plateau_flatness, snr, support_width)
from .spectrum import (RatePair, SpectralAmplitude, cross_amplitude_check,
                       dispersive_spectrum, heisenberg_spectrum, phi0,
                       phi0_smallgain, phi1_closed, phi1_quadrature,
                       phi_smallgain, phi_total, rate_densities, total_rates)
from .transform import TemporalWaveform, eval_at, parseval_residual, to_time
from .units import (FrequencyGrid, ModelParams, PhysicalParams, TimeGrid,
                    default_grid, rescale_time, to_dimensionless)

__all__ = [name for name in dir() if not name.startswith("_")]
