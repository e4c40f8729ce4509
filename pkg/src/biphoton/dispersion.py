"""Frequency-dependent kappa(varpi), alpha(varpi), V_g(varpi).

Three variants: constant (the paper-style baseline), an illustrative
three-level transparency-window model, and tabulated ingestion for
externally computed dispersion.  All quantities are dimensionless:
kappa and alpha as the products kappa*L and alpha*L, group velocity as
the ratio V_g(varpi)/V_g(0), detunings in V_g(0)/L units.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ValidationError
from .units import FrequencyGrid, ModelParams


@dataclass(frozen=True)
class DispersionModel:
    """Map varpi -> (kappa_l, alpha_l, vg_rel), vectorized over varpi."""

    variant: str
    _eval: Callable = field(repr=False)
    meta: dict = field(default_factory=dict)

    def evaluate(self, varpi):
        varpi = np.asarray(varpi, dtype=float)
        kappa, alpha, vg = self._eval(varpi)
        return (np.broadcast_to(kappa, varpi.shape).astype(float),
                np.broadcast_to(alpha, varpi.shape).astype(float),
                np.broadcast_to(vg, varpi.shape).astype(float))


def _validate_on_default_grid(model: DispersionModel):
    grid = FrequencyGrid()
    kappa, alpha, vg = model.evaluate(grid.samples)
    if np.any(alpha < 0):
        raise ValidationError(f"{model.variant} model produces alpha < 0 "
                              "on the default grid")
    if np.any(vg <= 0):
        raise ValidationError(f"{model.variant} model produces V_g <= 0 "
                              "on the default grid")


def constant_model(params: ModelParams, v_g: float = 1.0) -> DispersionModel:
    """Flat dispersion anchored at the given dimensionless parameters."""
    if not (np.isfinite(v_g) and v_g > 0):
        raise ValidationError("v_g must be positive and finite")
    k, a = params.kappa_l, params.alpha_l

    def ev(varpi):
        one = np.ones_like(varpi)
        return k * one, a * one, one

    return DispersionModel(variant="constant", _eval=ev, meta={"v_g": v_g})


def _lambda_susceptibility(varpi, omega_c, gamma13, gamma12):
    """Illustrative Lambda-scheme susceptibility (arbitrary scale):
    i*(gamma12 - i*varpi) / ((gamma13 - i*varpi)*(gamma12 - i*varpi) + omega_c^2/4).

    Its imaginary part is nonnegative for all real varpi and vanishes at
    varpi = 0 when gamma12 = 0 (the dark-state transparency point).
    """
    num = 1j * (gamma12 - 1j * varpi)
    den = (gamma13 - 1j * varpi) * (gamma12 - 1j * varpi) + omega_c**2 / 4.0
    return num / den


def eit_model(params: ModelParams, od: float, omega_c: float,
              gamma13: float, gamma12: float = 0.0) -> DispersionModel:
    """Transparency-window dispersion anchored at the requested
    kappa(0)L, alpha(0)L.

    The loss profile follows Im chi of a Lambda-scheme susceptibility,
    rescaled to the alpha(0)L anchor; the group velocity follows the
    slope of Re chi with a group index 1 + (od*gamma13/2)*slope, clamped
    at 1 where the slope turns anomalous; the coupling gets a Lorentzian
    envelope of half-width omega_c/2.  Illustrative only: rate constants
    are in grid detuning units, and no attempt is made to reproduce any
    specific cold-atom dataset.
    """
    if not (od > 0 and omega_c > 0 and gamma13 > 0 and gamma12 >= 0):
        raise ValidationError("need od > 0, omega_c > 0, gamma13 > 0, "
                              "gamma12 >= 0")

    def chi(varpi):
        return _lambda_susceptibility(varpi, omega_c, gamma13, gamma12)

    im0 = float(np.imag(chi(0.0)))
    if im0 == 0.0 and params.alpha_l > 0.0:
        raise ValidationError(
            "alpha(0) anchor must be 0 at the perfect-transparency point "
            "(gamma12 = 0)")

    slope0 = (omega_c**2 / 4.0 - gamma12**2) / (gamma13 * gamma12
                                                + omega_c**2 / 4.0) ** 2
    if slope0 <= 0.0:
        raise ValidationError("no transparency window: Re chi slope at "
                              "varpi = 0 is not positive")
    ng0 = 1.0 + 0.5 * od * gamma13 * slope0
    h = 1e-6 * max(omega_c, gamma13)
    w_kappa = omega_c / 2.0

    def ev(varpi):
        c = chi(varpi)
        alpha = (params.alpha_l * np.imag(c) / im0 if im0 > 0.0
                 else np.zeros_like(varpi))
        slope = (np.real(chi(varpi + h)) - np.real(chi(varpi - h))) / (2.0 * h)
        ng = np.maximum(1.0, 1.0 + (ng0 - 1.0) * slope / slope0)
        vg = ng0 / ng
        kappa = params.kappa_l * w_kappa**2 / (w_kappa**2 + varpi**2)
        return kappa, alpha, vg

    model = DispersionModel(variant="eit", _eval=ev,
                            meta={"od": od, "omega_c": omega_c,
                                  "gamma13": gamma13, "gamma12": gamma12,
                                  "group_index0": ng0,
                                  "vg0_over_c": 1.0 / ng0})
    _validate_on_default_grid(model)
    return model


@dataclass(frozen=True)
class DispersionTable:
    """Rows of (varpi, kappa_l, alpha_l, vg_rel) with strictly increasing
    varpi."""

    varpi: np.ndarray
    kappa: np.ndarray
    alpha: np.ndarray
    vg: np.ndarray

    def __post_init__(self):
        cols = {name: np.asarray(getattr(self, name), dtype=float)
                for name in ("varpi", "kappa", "alpha", "vg")}
        n = cols["varpi"].size
        if n < 2:
            raise ValidationError("dispersion table needs at least 2 rows")
        if any(c.shape != (n,) for c in cols.values()):
            raise ValidationError("dispersion table columns must have equal length")
        if not all(np.all(np.isfinite(c)) for c in cols.values()):
            raise ValidationError("dispersion table entries must be finite")
        if np.any(np.diff(cols["varpi"]) <= 0):
            raise ValidationError("varpi column must be strictly increasing")
        if np.any(cols["alpha"] < 0):
            raise ValidationError("alpha column must be >= 0")
        if np.any(cols["vg"] <= 0):
            raise ValidationError("vg column must be > 0")
        for name, c in cols.items():
            c = c.copy()
            c.flags.writeable = False
            object.__setattr__(self, name, c)


def from_table(table: DispersionTable) -> DispersionModel:
    """Linear interpolation inside the tabulated range; clamped
    extrapolation outside (with a warning), so no gain is manufactured
    beyond the measured range."""

    def ev(varpi):
        if np.any(varpi < table.varpi[0]) or np.any(varpi > table.varpi[-1]):
            warnings.warn("query outside tabulated range; clamping to the "
                          "edge rows", stacklevel=2)
        kappa = np.interp(varpi, table.varpi, table.kappa)
        alpha = np.interp(varpi, table.varpi, table.alpha)
        vg = np.interp(varpi, table.varpi, table.vg)
        return kappa, alpha, vg

    return DispersionModel(variant="tabulated", _eval=ev,
                           meta={"rows": int(table.varpi.size),
                                 "range": (float(table.varpi[0]),
                                           float(table.varpi[-1]))})


def read_dispersion_csv(path) -> DispersionTable:
    """Parse a dispersion CSV: header ``varpi,kappa,alpha,vg``, decimal
    floats, comment lines starting with '#'."""
    rows = []
    header_seen = False
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if not header_seen:
                cols = [c.strip() for c in line.split(",")]
                if cols != ["varpi", "kappa", "alpha", "vg"]:
                    raise ValidationError(
                        f"{path}:{lineno}: expected header "
                        f"'varpi,kappa,alpha,vg', got {line!r}")
                header_seen = True
                continue
            parts = line.split(",")
            if len(parts) != 4:
                raise ValidationError(f"{path}:{lineno}: expected 4 fields, "
                                      f"got {len(parts)}")
            try:
                rows.append([float(p) for p in parts])
            except ValueError as exc:
                raise ValidationError(f"{path}:{lineno}: {exc}") from exc
    if not header_seen:
        raise ValidationError(f"{path}: missing header row")
    if len(rows) < 2:
        raise ValidationError(f"{path}: need at least 2 data rows")
    data = np.asarray(rows, dtype=float)
    return DispersionTable(varpi=data[:, 0], kappa=data[:, 1],
                           alpha=data[:, 2], vg=data[:, 3])
