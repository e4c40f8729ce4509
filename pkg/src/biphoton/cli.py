"""Command-line interface: ad-hoc spectrum/waveform runs, figure presets,
and parameter sweeps with CSV/JSON emission.

Exit codes: 0 success, 2 validation, 3 numerical (threshold or
quadrature convergence), 4 I/O.
"""

from __future__ import annotations

import argparse
import io
import itertools
import json
import sys

import numpy as np

from . import __version__
from .dispersion import eit_model, from_table, read_dispersion_csv
from .errors import ConvergenceError, ThresholdError, ValidationError
from .interaction import dispersive_interaction_spectrum, interaction_spectrum
from .observables import (coherence_time, g2, langevin_split,
                          plateau_flatness, snr)
from .spectrum import (COMPONENTS, dispersive_spectrum, heisenberg_spectrum,
                       total_rates)
from .transform import to_time
from .units import (DEFAULT_HALF_WIDTH, DEFAULT_N_POINTS, FrequencyGrid,
                    ModelParams)

EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

FIG2_PRESETS = {"fig2a": 0.03, "fig2c": 0.87, "fig2e": 1.40}
FIG3_PRESETS = {"fig3a": 0.13, "fig3c": 0.51, "fig3e": 1.26}

#: Built-in illustrative transparency-window parameters for --dispersive
#: runs without a user table (grid detuning units).
EIT_DEFAULTS = {"od": 100.0, "omega_c": 2.0, "gamma13": 1.0, "gamma12": 0.2}


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def parse_config(path) -> dict:
    """Flat key-value config: lines of ``key = value``, '#' comments.
    Known keys: kappa_l, alpha_l, grid.half_width, grid.n."""
    known = {"kappa_l": float, "alpha_l": float,
             "grid.half_width": float, "grid.n": int}
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValidationError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in known:
                raise ValidationError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                out[key] = known[key](value.strip())
            except ValueError as exc:
                raise ValidationError(f"{path}:{lineno}: {exc}") from exc
    return out


def _resolve_run(args):
    """Merge config-file values and CLI flags into params + grid
    (flags win)."""
    cfg = parse_config(args.config) if getattr(args, "config", None) else {}
    kappa_l = args.kappa_l if args.kappa_l is not None else cfg.get("kappa_l")
    alpha_l = args.alpha_l if args.alpha_l is not None else cfg.get("alpha_l")
    if kappa_l is None or alpha_l is None:
        raise ValidationError("kappa_l and alpha_l are required "
                              "(flags or config file)")
    half_width = (args.grid_half_width if args.grid_half_width is not None
                  else cfg.get("grid.half_width", DEFAULT_HALF_WIDTH))
    n = (args.grid_n if args.grid_n is not None
         else cfg.get("grid.n", DEFAULT_N_POINTS))
    return ModelParams(kappa_l=kappa_l, alpha_l=alpha_l), \
        FrequencyGrid(half_width=half_width, n_points=n)


def _dispersion_model(args, params):
    if getattr(args, "dispersion_csv", None):
        return from_table(read_dispersion_csv(args.dispersion_csv))
    return eit_model(params, **EIT_DEFAULTS)


def _emit(path, fmt, columns, rows, meta):
    """Serialize rows deterministically (9 significant digits)."""
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(",".join(columns) + "\n")
        for row in rows:
            buf.write(",".join(_fmt(v) for v in row) + "\n")
        text = buf.getvalue()
    else:
        doc = {"meta": meta, "columns": list(columns),
               "rows": [[float(_fmt(v)) for v in row] for row in rows]}
        text = json.dumps(doc, indent=1, sort_keys=True) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _meta(params, grid, **extra):
    meta = {"version": __version__, "kappa_l": params.kappa_l,
            "alpha_l": params.alpha_l, "grid": {"half_width": grid.half_width,
                                                "n_points": grid.n_points}}
    meta.update(extra)
    return meta


def cmd_spectrum(args) -> int:
    params, grid = _resolve_run(args)
    if args.component == "interaction":
        spec = interaction_spectrum(params, grid)
    else:
        spec = heisenberg_spectrum(params, grid, args.component)
    rows = [(w, v.real, v.imag, abs(v))
            for w, v in zip(grid.samples, spec.values)]
    _emit(args.output, args.format, ("varpi", "re", "im", "abs"), rows,
          _meta(params, grid, component=args.component))
    return 0


def _window(taus, width):
    return (taus >= -width) & (taus <= width)


def cmd_waveform(args) -> int:
    params, grid = _resolve_run(args)
    split = langevin_split(params, grid)
    curve = g2(params, grid)
    taus = split.psi_total.grid.samples
    sel = _window(taus, args.tau_window)
    columns = ["tau", "re", "im", "abs", "g2"]
    series = [taus[sel], split.psi_total.values[sel].real,
              split.psi_total.values[sel].imag,
              np.abs(split.psi_total.values[sel]), curve.values[sel]]
    if args.split:
        for name, wave in (("psi0", split.psi0), ("psi1", split.psi1)):
            columns += [f"{name}_re", f"{name}_im", f"{name}_abs"]
            vals = wave.values[sel]
            series += [vals.real, vals.imag, np.abs(vals)]
    rows = list(zip(*series))
    _emit(args.output, args.format, columns, rows,
          _meta(params, grid, g2_background=curve.background,
                split=bool(args.split)))
    return 0


def cmd_figure(args) -> int:
    preset = args.preset
    if preset in FIG2_PRESETS:
        params = ModelParams(kappa_l=FIG2_PRESETS[preset], alpha_l=0.51)
    else:
        params = ModelParams(kappa_l=0.03, alpha_l=FIG3_PRESETS[preset])
    grid = FrequencyGrid(
        half_width=args.grid_half_width or DEFAULT_HALF_WIDTH,
        n_points=args.grid_n or DEFAULT_N_POINTS)

    if preset in FIG2_PRESETS:
        if args.dispersive:
            model = _dispersion_model(args, params)
            heis = to_time(dispersive_spectrum(model, grid, "total"))
            inter = to_time(dispersive_interaction_spectrum(model, grid))
        else:
            heis = to_time(heisenberg_spectrum(params, grid, "total"))
            inter = to_time(interaction_spectrum(params, grid))
        taus = heis.grid.samples
        sel = _window(taus, args.tau_window)
        columns = ("tau", "heisenberg_abs", "interaction_abs")
        series = [taus[sel], np.abs(heis.values[sel]),
                  np.abs(inter.values[sel])]
    else:
        if args.dispersive:
            model = _dispersion_model(args, params)
            psi = to_time(dispersive_spectrum(model, grid, "total"))
            psi0 = to_time(dispersive_spectrum(model, grid, "phi0"))
            psi1 = to_time(dispersive_spectrum(model, grid, "phi1"))
        else:
            split = langevin_split(params, grid)
            psi, psi0, psi1 = split.psi_total, split.psi0, split.psi1
        taus = psi.grid.samples
        sel = _window(taus, args.tau_window)
        columns = ("tau", "psi_abs", "psi0_abs", "psi1_abs")
        series = [taus[sel], np.abs(psi.values[sel]),
                  np.abs(psi0.values[sel]), np.abs(psi1.values[sel])]

    rows = list(zip(*series))
    _emit(args.output, args.format, columns, rows,
          _meta(params, grid, preset=preset, dispersive=bool(args.dispersive)))
    return 0


def _parse_values(text) -> list:
    if text is None or text.strip() == "":
        return []
    try:
        return [float(t) for t in text.split(",") if t.strip() != ""]
    except ValueError as exc:
        raise ValidationError(f"bad sweep value list {text!r}: {exc}") from exc


def cmd_sweep(args) -> int:
    kappas = _parse_values(args.kappa_l)
    alphas = _parse_values(args.alpha_l)
    tuples = list(itertools.product(kappas, alphas))
    if len(tuples) > args.max_tuples:
        raise ValidationError(f"sweep of {len(tuples)} tuples exceeds the "
                              f"limit of {args.max_tuples}")
    grid = FrequencyGrid(
        half_width=args.grid_half_width or DEFAULT_HALF_WIDTH,
        n_points=args.grid_n or DEFAULT_N_POINTS)
    columns = ("kappa_l", "alpha_l", "coherence_time", "plateau_flatness",
               "snr", "r1", "r2")
    rows = []
    for kappa_l, alpha_l in tuples:
        params = ModelParams(kappa_l=kappa_l, alpha_l=alpha_l)
        split = langevin_split(params, grid)
        rates = total_rates(params, grid)
        rows.append((kappa_l, alpha_l,
                     coherence_time(split.psi_total),
                     plateau_flatness(split.psi_total),
                     snr(params, grid), rates.r1, rates.r2))
    meta = {"version": __version__, "sweep": {"kappa_l": kappas,
                                              "alpha_l": alphas},
            "grid": {"half_width": grid.half_width,
                     "n_points": grid.n_points}}
    _emit(args.output, args.format, columns, rows, meta)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biphoton",
        description="Backward-wave biphoton spectra, waveforms and "
                    "correlation diagnostics.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_params=True):
        if with_params:
            p.add_argument("--kappa-l", type=float, default=None,
                           help="dimensionless coupling kappa*L")
            p.add_argument("--alpha-l", type=float, default=None,
                           help="dimensionless loss alpha*L")
            p.add_argument("--config", default=None,
                           help="flat key-value config file")
        p.add_argument("--grid-half-width", type=float, default=None)
        p.add_argument("--grid-n", type=int, default=None)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("-o", "--output", default=None,
                       help="output path ('-' or omit for stdout)")

    p = sub.add_parser("spectrum", help="emit a spectral-amplitude component")
    add_common(p)
    p.add_argument("--component", choices=COMPONENTS, default="total")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("waveform", help="emit the temporal wavefunction and g2")
    add_common(p)
    p.add_argument("--split", action="store_true",
                   help="add pair-scattering/Langevin split columns")
    p.add_argument("--tau-window", type=float, default=5.0,
                   help="emit |tau| <= this window (L/V_g units)")
    p.set_defaults(func=cmd_waveform)

    p = sub.add_parser("figure", help="figure presets (waveform comparisons)")
    p.add_argument("preset", choices=sorted(FIG2_PRESETS) + sorted(FIG3_PRESETS))
    p.add_argument("--dispersive", action="store_true",
                   help="use frequency-dependent parameters")
    p.add_argument("--dispersion-csv", default=None,
                   help="tabulated dispersion (header varpi,kappa,alpha,vg)")
    p.add_argument("--tau-window", type=float, default=2.0)
    add_common(p, with_params=False)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("sweep", help="summary metrics over a parameter grid")
    p.add_argument("--kappa-l", default=None,
                   help="comma-separated kappa*L values")
    p.add_argument("--alpha-l", default=None,
                   help="comma-separated alpha*L values")
    p.add_argument("--max-tuples", type=int, default=10_000)
    p.add_argument("--grid-half-width", type=float, default=None)
    p.add_argument("--grid-n", type=int, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ThresholdError, ConvergenceError) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
