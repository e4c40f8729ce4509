import numpy as np
import pytest

from biphoton import (FrequencyGrid, ModelParams, ValidationError,
                      coherence_time, default_grid, g2, langevin_split,
                      phi_total, plateau_flatness, snr, support_width,
                      to_time)

ANCHOR = ModelParams(kappa_l=0.03, alpha_l=0.51)


@pytest.fixture(scope="module")
def anchor_split():
    return langevin_split(ANCHOR, default_grid())


def test_split_additivity(anchor_split):
    total = anchor_split.psi0.values + anchor_split.psi1.values
    np.testing.assert_allclose(
        anchor_split.psi_total.values, total, rtol=0,
        atol=1e-13 * np.max(np.abs(anchor_split.psi_total.values)))


def test_coherence_time(anchor_split):
    # rectangle of width 2 L/V_g, slightly rounded by the finite window
    assert coherence_time(anchor_split.psi_total) == pytest.approx(
        1.9908225410393605, rel=1e-6)
    assert coherence_time(anchor_split.psi0) == pytest.approx(
        0.5160097273972948, rel=1e-6)


def test_support_width(anchor_split):
    w = support_width(anchor_split.psi_total)
    assert w == pytest.approx(2.02, abs=0.02)
    assert w > coherence_time(anchor_split.psi_total)


def test_plateau_flatness(anchor_split):
    assert plateau_flatness(anchor_split.psi_total) == pytest.approx(
        1.0137880950160463, rel=1e-6)
    # custom narrower window is at least as flat
    inner = plateau_flatness(anchor_split.psi_total, lo=-0.5, hi=0.5)
    assert inner <= plateau_flatness(anchor_split.psi_total) + 1e-12


def test_g2_curve():
    curve = g2(ANCHOR, default_grid())
    assert curve.background == pytest.approx(7.928269567573687e-08, rel=1e-8)
    assert np.max(curve.values) == pytest.approx(9.655518584124892e-05,
                                                 rel=1e-8)
    # the curve never drops below the accidental background
    assert np.min(curve.values) >= curve.background


def test_g2_peak_to_background_converges_in_half_width():
    # refining the spectral window changes the ratio by ever smaller
    # amounts (the peak is already resolved; only the tails move)
    ratios = []
    for hw, n in ((20 * np.pi, 8192), (40 * np.pi, 16384), (80 * np.pi, 32768)):
        curve = g2(ANCHOR, FrequencyGrid(half_width=hw, n_points=n))
        ratios.append(np.max(curve.values) / curve.background)
    assert ratios[0] == pytest.approx(1237.2, rel=1e-3)
    assert abs(ratios[2] - ratios[1]) < abs(ratios[1] - ratios[0])
    assert abs(ratios[2] - ratios[1]) / ratios[2] < 0.01


def test_snr_values():
    g = default_grid()
    assert snr(ANCHOR, g) == pytest.approx(1216.8595217821032, rel=1e-7)
    # backward-wave SNR falls as the generation rate grows: ~1/kappa_l^2
    s1 = snr(ModelParams(kappa_l=0.01, alpha_l=0.51), g)
    s2 = snr(ModelParams(kappa_l=0.02, alpha_l=0.51), g)
    assert s2 / s1 == pytest.approx(0.25, rel=0.01)


def test_snr_vs_loss():
    g = default_grid()
    vals = [snr(ModelParams(kappa_l=0.03, alpha_l=al), g)
            for al in (0.13, 0.51, 1.26)]
    assert vals[0] == pytest.approx(1317.0946545255285, rel=1e-7)
    assert vals[2] == pytest.approx(803.6574507726112, rel=1e-7)
    assert vals[0] > vals[1] > vals[2]


def test_zero_waveform_raises():
    p = ModelParams(kappa_l=0.0, alpha_l=0.51)
    g = FrequencyGrid(half_width=40.0, n_points=512)
    wave = to_time(phi_total(p, g))
    with pytest.raises(ValidationError):
        coherence_time(wave)
    with pytest.raises(ValidationError):
        snr(p, g)


def test_decay_law_of_split(anchor_split):
    # |psi0/psi| follows exp(-alpha_l*(1 + tau)) across the plateau
    t = anchor_split.psi_total.grid.samples
    sel = (t >= -0.8) & (t <= 0.8)
    ratio = (np.abs(anchor_split.psi0.values[sel])
             / np.abs(anchor_split.psi_total.values[sel]))
    np.testing.assert_allclose(ratio, np.exp(-0.51 * (1.0 + t[sel])),
                               rtol=0, atol=5e-4)
