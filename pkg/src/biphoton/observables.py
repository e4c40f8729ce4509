"""Physics deliverables: Langevin split, Glauber correlation, coherence
time, and signal-to-noise ratio."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .spectrum import (phi_total, heisenberg_spectrum, total_rates)
from .transform import TemporalWaveform, to_time
from .units import FrequencyGrid, ModelParams, TimeGrid


@dataclass(frozen=True)
class LangevinSplit:
    """Temporal wavefunction and its pair-scattering / Langevin parts."""

    psi_total: TemporalWaveform
    psi0: TemporalWaveform
    psi1: TemporalWaveform


@dataclass(frozen=True)
class G2Curve:
    """Glauber correlation |psi(tau)|^2 above the accidental background."""

    grid: TimeGrid
    values: np.ndarray
    background: float


def langevin_split(params: ModelParams, grid: FrequencyGrid) -> LangevinSplit:
    """Transforms of the total, pair-scattering, and Langevin spectra.

    Additivity psi0 + psi1 = psi_total is exact by linearity of the
    transform over the spectral decomposition.
    """
    psi_total = to_time(phi_total(params, grid))
    psi0 = to_time(heisenberg_spectrum(params, grid, "phi0"))
    psi1 = to_time(heisenberg_spectrum(params, grid, "phi1"))
    return LangevinSplit(psi_total=psi_total, psi0=psi0, psi1=psi1)


def g2(params: ModelParams, grid: FrequencyGrid) -> G2Curve:
    """|psi(tau)|^2 + R1*R2.  The cross term of the Glauber decomposition
    vanishes identically for this boundary-value solution (checked
    separately by ``cross_amplitude_check``)."""
    wave = to_time(phi_total(params, grid))
    rates = total_rates(params, grid)
    background = rates.r1 * rates.r2
    return G2Curve(grid=wave.grid,
                   values=np.abs(wave.values) ** 2 + background,
                   background=background)


def _half_crossings(taus, y, level):
    """Interpolated crossings of y(tau) through ``level``, ascending tau."""
    above = y >= level
    idx = np.nonzero(above[1:] != above[:-1])[0]
    crossings = []
    for i in idx:
        y0, y1 = y[i], y[i + 1]
        t = taus[i] + (level - y0) / (y1 - y0) * (taus[i + 1] - taus[i])
        crossings.append(t)
    return crossings


def coherence_time(wave: TemporalWaveform) -> float:
    """Full width at half maximum of |psi(tau)|^2 (L/V_g units)."""
    y = np.abs(wave.values) ** 2
    peak = float(np.max(y))
    if peak == 0.0:
        raise ValidationError("coherence time undefined for a zero waveform")
    crossings = _half_crossings(wave.grid.samples, y, 0.5 * peak)
    if len(crossings) < 2:
        raise ValidationError("could not bracket the half-maximum crossings")
    return float(crossings[-1] - crossings[0])


def support_width(wave: TemporalWaveform, frac: float = 0.05) -> float:
    """Alternative width metric: distance between the first and last
    crossings of frac*peak of |psi|^2."""
    y = np.abs(wave.values) ** 2
    peak = float(np.max(y))
    if peak == 0.0:
        raise ValidationError("support width undefined for a zero waveform")
    crossings = _half_crossings(wave.grid.samples, y, frac * peak)
    if len(crossings) < 2:
        raise ValidationError("could not bracket the support edges")
    return float(crossings[-1] - crossings[0])


def plateau_flatness(wave: TemporalWaveform, lo: float = -0.8,
                     hi: float = 0.8) -> float:
    """max/min of |psi| over the plateau interior [lo, hi]."""
    taus = wave.grid.samples
    sel = (taus >= lo) & (taus <= hi)
    mag = np.abs(wave.values[sel])
    if mag.size == 0 or np.min(mag) == 0.0:
        raise ValidationError("plateau window is empty or contains zeros")
    return float(np.max(mag) / np.min(mag))


def snr(params: ModelParams, grid: FrequencyGrid) -> float:
    """Peak signal-to-background ratio max|psi|^2 / (R1*R2)."""
    rates = total_rates(params, grid)
    if rates.r1 <= 0.0 or rates.r2 <= 0.0:
        raise ValidationError("SNR undefined: photon generation rates are zero")
    wave = to_time(phi_total(params, grid))
    return float(np.max(np.abs(wave.values) ** 2) / (rates.r1 * rates.r2))
