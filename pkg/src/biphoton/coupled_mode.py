"""Closed-form 2x2 propagators and boundary-value scattering coefficients
for the counter-propagating mode pair.

The spatial generator of the mode pair (a1, a2^dagger) is

    M = [[beta, -i*kappa], [-i*kappa, -beta]],   beta = alpha - i*varpi/V_g,

which satisfies M^2 = eta^2 * I with eta = sqrt(beta^2 - kappa^2).  The
matrix exponential over a length ell is therefore exactly

    exp(M*ell) = cosh(eta*ell)*I + (sinh(eta*ell)/eta) * M,

never a general expm call.  All lengths below are in units of L, all
detunings in V_g/L.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ThresholdError, ValidationError
from .units import ModelParams

#: |eta*ell| below which cosh/sinhc switch to their Taylor series.
SERIES_CUTOFF = 1e-4

#: |A_bar(L)| below which the boundary-value problem is treated as at the
#: parametric-oscillation threshold.
THRESHOLD_EPS = 1e-12


@dataclass(frozen=True)
class AuxSpectralVars:
    """beta = alpha - i*varpi and eta = sqrt(beta^2 - kappa^2) at one detuning."""

    beta: complex
    eta: complex


def aux_vars(params: ModelParams, varpi: float) -> AuxSpectralVars:
    """Auxiliary spectral variables on the principal square-root branch.

    Every downstream formula depends on eta only through cosh(eta*ell)
    and sinh(eta*ell)/eta, both even in eta, so the branch choice is
    immaterial.
    """
    if not np.all(np.isfinite(varpi)):
        raise ValidationError("varpi must be finite")
    beta = params.alpha_l - 1j * np.asarray(varpi, dtype=float)
    eta = np.sqrt(beta * beta - params.kappa_l**2 + 0j)
    if np.ndim(varpi) == 0:
        return AuxSpectralVars(beta=complex(beta), eta=complex(eta))
    return AuxSpectralVars(beta=beta, eta=eta)


def cosh_sinhc(eta, ell):
    """Return (cosh(eta*ell), sinh(eta*ell)/eta), elementwise.

    Near the degenerate eigenvalue eta -> 0 both are evaluated by
    truncated Taylor series (through fourth order), which keeps ~1e-12
    accuracy while avoiding 0/0.
    """
    eta = np.asarray(eta, dtype=complex)
    ell = np.asarray(ell, dtype=float)
    x = eta * ell
    small = np.abs(x) < SERIES_CUTOFF
    # series: cosh(x) = 1 + x^2/2 + x^4/24; sinh(x)/eta = ell*(1 + x^2/6 + x^4/120)
    x2 = x * x
    ch_s = 1.0 + x2 / 2.0 + x2 * x2 / 24.0
    shc_s = ell * (1.0 + x2 / 6.0 + x2 * x2 / 120.0)
    with np.errstate(invalid="ignore", divide="ignore"):
        ch = np.cosh(x)
        shc = np.where(small, 1.0, np.sinh(x) / np.where(small, 1.0, eta))
    ch = np.where(small, ch_s, ch)
    shc = np.where(small, shc_s, shc)
    return ch, shc


def propagator(params: ModelParams, varpi: float, ell: float) -> np.ndarray:
    """exp(M*ell) as a 2x2 complex array; unit determinant (traceless M)."""
    if ell < 0:
        raise ValidationError("propagation length must be >= 0")
    v = aux_vars(params, varpi)
    ch, shc = cosh_sinhc(v.eta, ell)
    k = params.kappa_l
    return np.array(
        [[ch + v.beta * shc, -1j * k * shc],
         [-1j * k * shc, ch - v.beta * shc]],
        dtype=complex,
    )


def partial_propagator(params: ModelParams, varpi: float, z: float) -> np.ndarray:
    """Propagator over the remaining length (1/2 - z), z in [-1/2, 1/2]."""
    if not (-0.5 <= z <= 0.5):
        raise ValidationError("z must lie in [-1/2, 1/2]")
    return propagator(params, varpi, 0.5 - z)


@dataclass(frozen=True)
class BoundaryCoeffs:
    """Scattering coefficients of the boundary-value solution at one detuning.

    With exp(M*L) = [[A_bar, B_bar], [C_bar, D_bar]]:
    a = 1/A_bar, b = -B_bar/A_bar, c = C_bar/A_bar,
    d = D_bar - B_bar*C_bar/A_bar (= 1/A_bar by the unit determinant).
    """

    a: complex
    b: complex
    c: complex
    d: complex


def boundary_coeffs(params: ModelParams, varpi: float) -> BoundaryCoeffs:
    """Boundary-value scattering coefficients; raises at the oscillation
    threshold |A_bar(L)| -> 0 where they diverge."""
    m = propagator(params, varpi, 1.0)
    a_bar, b_bar, c_bar, d_bar = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    if abs(a_bar) < THRESHOLD_EPS:
        raise ThresholdError(
            f"parametric-oscillation threshold at varpi={varpi!r}: "
            f"|A_bar(L)|={abs(a_bar):.3e}")
    return BoundaryCoeffs(
        a=1.0 / a_bar,
        b=-b_bar / a_bar,
        c=c_bar / a_bar,
        d=d_bar - b_bar * c_bar / a_bar,
    )


def hamiltonian(params: ModelParams, varpi: float = 0.0) -> np.ndarray:
    """The non-Hermitian 2x2 generator H, i.e. M = -i*H.

    At varpi = 0 it satisfies the PT identity sigma_x H* sigma_x = H.
    """
    return np.array(
        [[varpi + 1j * params.alpha_l, params.kappa_l],
         [params.kappa_l, -varpi - 1j * params.alpha_l]],
        dtype=complex,
    )
