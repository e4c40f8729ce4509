import numpy as np
import pytest

from biphoton import (FrequencyGrid, ModelParams, constant_model,
                      default_grid, dispersive_interaction_spectrum,
                      heisenberg_spectrum, interaction_spectrum,
                      phi_interaction, two_photon_state_norm)

ANCHOR = ModelParams(kappa_l=0.03, alpha_l=0.51)


def test_line_center_value():
    assert phi_interaction(ANCHOR, 0.0) == pytest.approx(
        1j * 0.03 * np.exp(-0.51), rel=1e-12)


def test_sinc_zeros_and_lobes():
    # zeros at multiples of pi, alternating-sign lobes in between
    for k in (1, 2, 5):
        assert phi_interaction(ANCHOR, k * np.pi) == pytest.approx(0.0,
                                                                   abs=1e-16)
    peak = abs(phi_interaction(ANCHOR, 0.0))
    lobe1 = phi_interaction(ANCHOR, 1.5 * np.pi) / (1j * 0.03 * np.exp(-0.51))
    assert lobe1.real < 0 and abs(lobe1) < 0.25
    assert abs(phi_interaction(ANCHOR, 0.5)) < peak


def test_identical_to_smallgain_limit():
    # shared code path: byte-for-byte equal arrays
    g = default_grid()
    inter = interaction_spectrum(ANCHOR, g)
    sg = heisenberg_spectrum(ANCHOR, g, "smallgain_total")
    np.testing.assert_array_equal(inter.values, sg.values)


def test_shape_is_coupling_independent():
    # normalized spectrum identical at every kappa_l: always the same sinc
    g = FrequencyGrid(half_width=40.0, n_points=256)
    ref = interaction_spectrum(ModelParams(kappa_l=0.03, alpha_l=0.51),
                               g).values / 0.03
    for kl in (0.3, 0.9, 1.4):
        v = interaction_spectrum(ModelParams(kappa_l=kl, alpha_l=0.51),
                                 g).values / kl
        np.testing.assert_allclose(v, ref, rtol=1e-12)


def test_vectorized_matches_scalar():
    w = np.array([-3.0, 0.25, 10.0])
    vec = phi_interaction(ANCHOR, w)
    for i, wi in enumerate(w):
        assert vec[i] == pytest.approx(phi_interaction(ANCHOR, wi), rel=1e-14)


def test_state_norm():
    g = default_grid()
    norm = two_photon_state_norm(ANCHOR, g)
    assert norm == pytest.approx(0.0004494300728511691, rel=1e-9)
    # scales as kappa_l^2
    norm4 = two_photon_state_norm(ModelParams(kappa_l=0.06, alpha_l=0.51), g)
    assert norm4 == pytest.approx(4.0 * norm, rel=1e-12)
    # half-width refinement: the sinc^2 tail decays only as 1/varpi, so
    # doubling the window still shifts the integral at the ~1e-3 level
    g2 = FrequencyGrid(half_width=2 * g.half_width, n_points=2 * g.n_points)
    norm2 = two_photon_state_norm(ANCHOR, g2)
    assert abs(norm2 - norm) / norm < 1e-3
    assert abs(norm2 - norm) / norm > 1e-5


def test_dispersive_constant_model_reduces_to_plain():
    g = FrequencyGrid(half_width=40.0, n_points=512)
    model = constant_model(ANCHOR)
    disp = dispersive_interaction_spectrum(model, g)
    plain = interaction_spectrum(ANCHOR, g)
    np.testing.assert_allclose(disp.values, plain.values, rtol=1e-12)
