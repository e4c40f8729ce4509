import numpy as np
import pytest

from biphoton import (DispersionTable, FrequencyGrid, ModelParams,
                      ValidationError, constant_model, eit_model, from_table,
                      read_dispersion_csv)

ANCHOR = ModelParams(kappa_l=0.03, alpha_l=0.51)
EIT_KW = dict(od=100.0, omega_c=2.0, gamma13=1.0, gamma12=0.2)


def test_constant_model():
    model = constant_model(ANCHOR)
    k, a, v = model.evaluate(np.linspace(-50, 50, 7))
    np.testing.assert_allclose(k, 0.03)
    np.testing.assert_allclose(a, 0.51)
    np.testing.assert_allclose(v, 1.0)
    with pytest.raises(ValidationError):
        constant_model(ANCHOR, v_g=-1.0)


def test_eit_anchors():
    model = eit_model(ANCHOR, **EIT_KW)
    k, a, v = model.evaluate(np.array([0.0]))
    assert k[0] == pytest.approx(0.03, rel=1e-12)
    assert a[0] == pytest.approx(0.51, rel=1e-12)
    assert v[0] == pytest.approx(1.0, rel=1e-9)
    assert model.meta["vg0_over_c"] == pytest.approx(0.02912621359, rel=1e-8)


def test_eit_profiles_physical():
    model = eit_model(ANCHOR, **EIT_KW)
    w = np.linspace(-60, 60, 2001)
    k, a, v = model.evaluate(w)
    assert np.all(a >= 0)
    assert np.all(v > 0)
    assert np.all(k >= 0) and np.all(k <= 0.03 + 1e-15)
    # loss grows out of the transparency window toward the absorption lines
    assert a[np.argmin(np.abs(w - 1.0))] > a[np.argmin(np.abs(w))]
    # coupling envelope decays away from line center
    assert k[np.argmin(np.abs(w - 10))] < 0.5 * 0.03


def test_eit_validation():
    with pytest.raises(ValidationError):
        eit_model(ANCHOR, od=-1.0, omega_c=2.0, gamma13=1.0)
    # no transparency window when the dephasing exceeds the window width
    with pytest.raises(ValidationError):
        eit_model(ANCHOR, od=100.0, omega_c=0.2, gamma13=1.0, gamma12=0.5)
    # a lossy anchor is inconsistent with perfect transparency
    with pytest.raises(ValidationError):
        eit_model(ANCHOR, od=100.0, omega_c=2.0, gamma13=1.0, gamma12=0.0)


def test_table_validation():
    w = np.array([0.0, 1.0, 2.0])
    ones = np.ones(3)
    DispersionTable(varpi=w, kappa=ones, alpha=ones, vg=ones)
    with pytest.raises(ValidationError):
        DispersionTable(varpi=w[::-1], kappa=ones, alpha=ones, vg=ones)
    with pytest.raises(ValidationError):
        DispersionTable(varpi=w, kappa=ones, alpha=-ones, vg=ones)
    with pytest.raises(ValidationError):
        DispersionTable(varpi=w, kappa=ones, alpha=ones, vg=0 * ones)
    with pytest.raises(ValidationError):
        DispersionTable(varpi=w[:1], kappa=ones[:1], alpha=ones[:1],
                        vg=ones[:1])
    with pytest.raises(ValidationError):
        DispersionTable(varpi=w, kappa=ones[:2], alpha=ones, vg=ones)


def test_from_table_interpolation():
    table = DispersionTable(varpi=np.array([-10.0, 0.0, 10.0]),
                            kappa=np.array([0.01, 0.03, 0.01]),
                            alpha=np.array([1.0, 0.5, 1.0]),
                            vg=np.array([0.5, 1.0, 0.5]))
    model = from_table(table)
    k, a, v = model.evaluate(np.array([-10.0, -5.0, 0.0]))
    assert k[0] == pytest.approx(0.01) and k[2] == pytest.approx(0.03)
    assert k[1] == pytest.approx(0.02)   # midpoint of a linear segment
    assert a[1] == pytest.approx(0.75)
    assert v[1] == pytest.approx(0.75)
    # clamped (not extrapolated) outside the range, with a warning
    with pytest.warns(UserWarning):
        k, a, v = model.evaluate(np.array([25.0]))
    assert k[0] == pytest.approx(0.01)


def test_read_dispersion_csv(tmp_path):
    path = tmp_path / "disp.csv"
    path.write_text(
        "# comment line\n"
        "varpi,kappa,alpha,vg\n"
        "-5.0,0.01,0.8,0.9\n"
        "\n"
        "0.0,0.03,0.51,1.0\n"
        "5.0,0.01,0.8,0.9\n")
    table = read_dispersion_csv(path)
    assert table.varpi.size == 3
    assert table.kappa[1] == pytest.approx(0.03)
    model = from_table(table)
    k, a, v = model.evaluate(np.array([0.0]))
    assert a[0] == pytest.approx(0.51)


def test_read_dispersion_csv_errors(tmp_path):
    bad_header = tmp_path / "h.csv"
    bad_header.write_text("w,k,a,v\n0,1,1,1\n1,1,1,1\n")
    with pytest.raises(ValidationError, match="header"):
        read_dispersion_csv(bad_header)

    bad_fields = tmp_path / "f.csv"
    bad_fields.write_text("varpi,kappa,alpha,vg\n0,1,1\n")
    with pytest.raises(ValidationError, match="4 fields"):
        read_dispersion_csv(bad_fields)

    bad_float = tmp_path / "x.csv"
    bad_float.write_text("varpi,kappa,alpha,vg\n0,1,oops,1\n1,1,1,1\n")
    with pytest.raises(ValidationError, match="x.csv:2"):
        read_dispersion_csv(bad_float)

    short = tmp_path / "s.csv"
    short.write_text("varpi,kappa,alpha,vg\n0,1,1,1\n")
    with pytest.raises(ValidationError, match="2 data rows"):
        read_dispersion_csv(short)

    empty = tmp_path / "e.csv"
    empty.write_text("# nothing here\n")
    with pytest.raises(ValidationError, match="header"):
        read_dispersion_csv(empty)
