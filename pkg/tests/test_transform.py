import numpy as np
import pytest

from biphoton import (FrequencyGrid, ModelParams, SpectralAmplitude,
                      ValidationError, default_grid, eval_at,
                      interaction_spectrum, parseval_residual, phi_total,
                      to_time)

ANCHOR = ModelParams(kappa_l=0.03, alpha_l=0.51)


def _gaussian_spec(half_width=40.0, n_points=4096):
    g = FrequencyGrid(half_width=half_width, n_points=n_points)
    return SpectralAmplitude(grid=g, values=np.exp(-g.samples**2 / 2.0) + 0j,
                             component="test")


def test_gaussian_transform_pair():
    # exp(-w^2/2) <-> exp(-t^2/2)/sqrt(2*pi)
    spec = _gaussian_spec()
    wave = to_time(spec)
    t = wave.grid.samples
    sel = np.abs(t) <= 5.0
    expect = np.exp(-t[sel] ** 2 / 2.0) / np.sqrt(2.0 * np.pi)
    np.testing.assert_allclose(wave.values[sel], expect, rtol=0, atol=1e-12)


def test_rectangle_from_sinc():
    # the sinc spectrum transforms to a rectangle on [-1, 1] of height
    # kappa_l*exp(-alpha_l)/2
    wave = to_time(interaction_spectrum(ANCHOR, default_grid()))
    t = wave.grid.samples
    plateau = 0.5 * 0.03 * np.exp(-0.51)
    inner = np.abs(t) <= 0.8
    outer = np.abs(t) >= 1.2
    np.testing.assert_allclose(np.abs(wave.values[inner]), plateau, rtol=0.02)
    assert np.max(np.abs(wave.values[outer])) < 0.05 * plateau
    # the spectrum is i*(real even function), so psi is purely imaginary
    assert np.max(np.abs(wave.values.real)) < 1e-12 * plateau


def test_time_grid_geometry():
    g = FrequencyGrid(half_width=40.0, n_points=256)
    wave = to_time(SpectralAmplitude(grid=g, values=np.zeros(256, complex),
                                     component="test"))
    t = wave.grid.samples
    assert t.size == 256
    assert t[128] == 0.0
    assert wave.grid.spacing == pytest.approx(2 * np.pi / (256 * g.spacing))


def test_linearity_exact():
    g = FrequencyGrid(half_width=40.0, n_points=512)
    rng = np.random.default_rng(5)
    va = rng.normal(size=512) + 1j * rng.normal(size=512)
    vb = rng.normal(size=512) + 1j * rng.normal(size=512)
    wa = to_time(SpectralAmplitude(g, va, "a")).values
    wb = to_time(SpectralAmplitude(g, vb, "b")).values
    wab = to_time(SpectralAmplitude(g, va + vb, "ab")).values
    np.testing.assert_allclose(wab, wa + wb, rtol=0,
                               atol=1e-13 * np.max(np.abs(wab)))


def test_eval_at_matches_fft():
    spec = phi_total(ANCHOR, default_grid())
    wave = to_time(spec)
    taus = wave.grid.samples[::4096]
    direct = eval_at(spec, taus)
    np.testing.assert_allclose(direct, wave.values[::4096], rtol=0, atol=1e-8)


def test_eval_at_edge_cases():
    spec = _gaussian_spec()
    assert eval_at(spec, []).size == 0
    with pytest.raises(ValidationError):
        eval_at(spec, [0.0, np.nan])
    # tail far outside the plateau is tiny
    tail = eval_at(phi_total(ANCHOR, default_grid()), [10.0])
    assert np.abs(tail[0]) < 1e-3 * 0.5 * 0.03 * np.exp(-0.51)


def test_parseval():
    spec = phi_total(ANCHOR, default_grid())
    wave = to_time(spec)
    assert parseval_residual(spec, wave) < 1e-9
    zero = SpectralAmplitude(spec.grid, np.zeros_like(spec.values), "zero")
    assert parseval_residual(zero, to_time(zero)) == 0.0


def test_component_label_propagates():
    spec = phi_total(ANCHOR, FrequencyGrid(half_width=20.0, n_points=64))
    assert to_time(spec).component == "total"
