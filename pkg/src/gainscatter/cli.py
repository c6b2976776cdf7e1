"""
Command-line front end.

    gainscatter spectrum  --config run.json --gamma-nr 0.2 --pump-rate 1.9
    gainscatter pumpsweep --sweep-min 0 --sweep-max 4 --n-points 41
    gainscatter balance   --gamma-nr 0.2
    gainscatter oracle

A config file is a JSON object whose keys mirror :class:`RunConfig`; command
line flags override individual keys. Tables are written as CSV with a
``#``-prefixed header echoing the full config, or as a single JSON document
with ``--format json``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from dataclasses import asdict, dataclass, field, fields

import numpy as np

from . import __version__
from .balance import (NoBracketError, Quantity, critical_pump_root,
                      critical_pumps_closed_form, unitarity_residual)
from .bloch import BlochState, analytic_evolution, bloch_trajectory
from .oracle import run_oracle_suite
from .params import AtomParams, DriveParams, GammaOmegaMode, derive_rates
from .response import (absorption_cross_section, extinction_cross_section,
                       response_point, scattered_power, scattering_cross_section)
from .semiclassical import coherent_power

EXIT_OK = 0
EXIT_ORACLE_FAILED = 1
EXIT_INVALID = 2
EXIT_IO = 3

SPECTRUM_COLUMNS = ("detuning_over_gamma0", "sigma_sc", "sigma_abs", "sigma_ext",
                    "w_sc", "w_abs", "w_inc")
PUMPSWEEP_COLUMNS = ("P_over_gamma0", "sigma_sc", "sigma_abs", "sigma_ext")
COMPARE_COLUMNS = ("detuning_over_gamma0", "w_sc", "w_coh", "ratio")
BLOCH_COLUMNS = ("t_times_gamma0", "rho_gg", "rho_ee", "re_rho_eg", "im_rho_eg",
                 "rho_ee_analytic")

SWEEP_VARIABLES = ("detuning", "pump", "time")
FORMATS = ("csv", "json")

# variable, min, max, n_points (sweep bounds in units of gamma0 or 1/gamma0)
_DEFAULT_SWEEPS = {
    "spectrum": ("detuning", -4.0, 4.0, 81),
    "compare": ("detuning", -4.0, 4.0, 81),
    "pumpsweep": ("pump", 0.0, 4.0, 81),
    "bloch": ("time", 0.0, 10.0, 101),
}


class ConfigError(ValueError):
    """Invalid run configuration."""


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    min: float
    max: float
    n_points: int

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ConfigError(f"sweep variable must be one of {SWEEP_VARIABLES}, "
                              f"got {self.variable!r}")
        if isinstance(self.n_points, bool) or not isinstance(self.n_points, int):
            raise ConfigError(f"n_points must be an integer, got {self.n_points!r}")
        if self.n_points < 2:
            raise ConfigError(f"n_points must be >= 2, got {self.n_points}")
        if not (math.isfinite(self.min) and math.isfinite(self.max)) or not self.min < self.max:
            raise ConfigError(f"need finite min < max, got [{self.min}, {self.max}]")

    def grid(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.n_points)


@dataclass(frozen=True)
class OutputSpec:
    path: str | None = None
    format: str = "csv"

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.format!r}")


@dataclass(frozen=True)
class RunConfig:
    """Flat atom and drive parameters plus sweep and output settings.

    ``pump_rate``, when set, replaces ``rabi_pump`` via P = Omega_p**2/gamma_u.
    ``initial_excited`` and ``dt`` are only read by the ``bloch`` command.
    """

    omega0: float = 1.0e4
    omega_u: float = 2.0e4
    gamma0: float = 1.0
    gamma_nr: float = 0.0
    gamma_u: float = 1.0e3
    detuning: float = 0.0
    rabi_probe: float = 0.01
    rabi_pump: float = 0.0
    pump_rate: float | None = None
    initial_excited: float = 0.5
    dt: float | None = None
    gamma_omega_mode: str = GammaOmegaMode.FLAT.value
    sweep: SweepSpec | None = None
    output: OutputSpec = field(default_factory=OutputSpec)

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
        kwargs = dict(data)
        try:
            if kwargs.get("sweep") is not None:
                kwargs["sweep"] = _nested(SweepSpec, kwargs["sweep"], "sweep")
            if "output" in kwargs:
                kwargs["output"] = _nested(OutputSpec, kwargs["output"] or {}, "output")
            for name in ("omega0", "omega_u", "gamma0", "gamma_nr", "gamma_u", "detuning",
                         "rabi_probe", "rabi_pump", "initial_excited"):
                if name in kwargs:
                    kwargs[name] = _as_float(name, kwargs[name])
            for name in ("pump_rate", "dt"):
                if kwargs.get(name) is not None:
                    kwargs[name] = _as_float(name, kwargs[name])
            if "gamma_omega_mode" in kwargs:
                kwargs["gamma_omega_mode"] = GammaOmegaMode(kwargs["gamma_omega_mode"]).value
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        config = cls(**kwargs)
        config.atom()
        config.drive()
        return config

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def atom(self) -> AtomParams:
        try:
            return AtomParams(omega0=self.omega0, omega_u=self.omega_u, gamma0=self.gamma0,
                              gamma_nr=self.gamma_nr, gamma_u=self.gamma_u)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def drive(self) -> DriveParams:
        try:
            if self.pump_rate is not None:
                return DriveParams.from_pump_rate(self.pump_rate, self.gamma_u,
                                                  detuning=self.detuning,
                                                  rabi_probe=self.rabi_probe)
            return DriveParams(detuning=self.detuning, rabi_probe=self.rabi_probe,
                               rabi_pump=self.rabi_pump)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def rates(self):
        return derive_rates(self.atom(), self.drive(), self.gamma_omega_mode)

    def resolved_sweep(self, command: str) -> SweepSpec:
        """The configured sweep, or the command's default; the variable must fit."""
        variable = _DEFAULT_SWEEPS[command][0]
        sweep = self.sweep if self.sweep is not None else SweepSpec(*_DEFAULT_SWEEPS[command])
        if sweep.variable != variable:
            raise ConfigError(f"'{command}' sweeps {variable}, config has {sweep.variable!r}")
        if variable == "time" and sweep.min < 0:
            raise ConfigError("time sweep must start at t >= 0")
        return sweep


def _nested(cls, data, name):
    if not isinstance(data, dict):
        raise ConfigError(f"'{name}' must be an object")
    known = {f.name for f in fields(cls)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"unknown {name} keys: {', '.join(unknown)}")
    data = dict(data)
    for key in ("min", "max"):
        if key in data:
            data[key] = _as_float(f"{name}.{key}", data[key])
    try:
        return cls(**data)
    except TypeError as exc:
        raise ConfigError(f"incomplete '{name}': {exc}") from exc


def _as_float(name, value):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{name} must be a number, got {value!r}")
    return float(value)


# -- runners ------------------------------------------------------------------

@dataclass
class Table:
    command: str
    columns: tuple
    rows: list
    footer: dict | None = None


def run_spectrum(config: RunConfig) -> Table:
    sweep = config.resolved_sweep("spectrum")
    base = config.rates()
    drive = config.drive()
    rows = []
    for d in sweep.grid():
        p = response_point(base.with_detuning(float(d) * config.gamma0), drive)
        rows.append([p.detuning, p.sigma_sc, p.sigma_abs, p.sigma_ext, p.w_sc, p.w_abs, p.w_inc])
    return Table("spectrum", SPECTRUM_COLUMNS, rows)


def run_pumpsweep(config: RunConfig) -> Table:
    sweep = config.resolved_sweep("pumpsweep")
    if sweep.min < 0:
        raise ConfigError("pump sweep must start at P >= 0")
    base = config.rates()
    rows = []
    for p in sweep.grid():
        rates = base.with_pump(float(p) * config.gamma0)
        rows.append([rates.pump_rate / config.gamma0, scattering_cross_section(rates),
                     absorption_cross_section(rates), extinction_cross_section(rates)])
    crit = critical_pumps_closed_form(base.gamma_nr, base.gamma_omega)
    footer = {"p_abs_zero": crit.p_abs_zero / config.gamma0,
              "p_ext_zero": crit.p_ext_zero / config.gamma0}
    return Table("pumpsweep", PUMPSWEEP_COLUMNS, rows, footer)


def run_balance(config: RunConfig) -> dict:
    """Critical pumps (closed form and bisection) and the resonant unitarity residual."""
    rates = config.rates()
    resonant = rates.with_detuning(0.0)
    crit = critical_pumps_closed_form(resonant.gamma_nr, resonant.gamma_omega)

    def root(which):
        try:
            return critical_pump_root(resonant, which) / config.gamma0
        except NoBracketError:
            return None

    return {
        "p_abs_zero": crit.p_abs_zero / config.gamma0,
        "p_ext_zero": crit.p_ext_zero / config.gamma0,
        "p_abs_zero_root": root(Quantity.ABSORPTION),
        "p_ext_zero_root": root(Quantity.EXTINCTION),
        "unitarity_residual_at_resonance": unitarity_residual(resonant, config.drive()),
    }


def run_compare(config: RunConfig) -> Table:
    sweep = config.resolved_sweep("compare")
    base = config.rates()
    drive = config.drive()
    unit = config.omega0 * config.gamma0
    rows = []
    for d in sweep.grid():
        rates = base.with_detuning(float(d) * config.gamma0)
        w_sc = scattered_power(rates, drive)
        w_coh = coherent_power(rates, drive)
        rows.append([rates.detuning / config.gamma0, w_sc / unit, w_coh / unit,
                     w_coh / w_sc if w_sc else float("nan")])
    return Table("compare", COMPARE_COLUMNS, rows)


def run_bloch(config: RunConfig) -> Table:
    sweep = config.resolved_sweep("bloch")
    rates = config.rates()
    dt = config.dt if config.dt is not None else 1e-3 / rates.big_gamma
    try:
        initial = BlochState.from_excited_population(config.initial_excited)
        times = sweep.grid() / config.gamma0
        states = bloch_trajectory(rates, initial, times, dt)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    rows = []
    for t, s in zip(times, states):
        exact = analytic_evolution(rates, config.initial_excited, float(t))
        rows.append([float(t) * config.gamma0, s.rho_gg, s.rho_ee, s.rho_eg.real,
                     s.rho_eg.imag, exact.rho_ee])
    return Table("bloch", BLOCH_COLUMNS, rows)


def run_oracle(config: RunConfig) -> list[dict]:
    return [r.as_dict() for r in run_oracle_suite(omega0=config.omega0,
                                                  gamma_nr=config.gamma_nr,
                                                  rabi_probe=config.rabi_probe)]


# -- serialization ------------------------------------------------------------

def format_table(table: Table, config: RunConfig) -> str:
    if config.output.format == "json":
        doc = {"command": table.command, "config": config.to_dict(),
               "columns": list(table.columns), "rows": table.rows}
        if table.footer is not None:
            doc["footer"] = table.footer
        return json.dumps(doc, sort_keys=True) + "\n"
    buf = io.StringIO()
    buf.write(f"# gainscatter {__version__} {table.command}\n")
    buf.write(f"# config: {config.to_json()}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([repr(float(v)) for v in row])
    if table.footer is not None:
        buf.write(f"# footer: {json.dumps(table.footer, sort_keys=True)}\n")
    return buf.getvalue()


def _emit(text: str, config: RunConfig):
    if config.output.path:
        with open(config.output.path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- argument parsing ---------------------------------------------------------

_FLAT_FLAGS = (
    ("omega0", float), ("omega_u", float), ("gamma0", float), ("gamma_nr", float),
    ("gamma_u", float), ("detuning", float), ("rabi_probe", float), ("rabi_pump", float),
    ("pump_rate", float), ("initial_excited", float), ("dt", float),
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gainscatter", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("spectrum", "cross-sections and powers versus detuning"),
        ("pumpsweep", "cross-sections versus pump rate, with critical pumps"),
        ("bloch", "population and coherence trajectory"),
        ("balance", "critical pumps and unitarity residual (JSON)"),
        ("compare", "quantum versus semiclassical scattered power"),
        ("oracle", "quadrature checks of the closed forms (JSON)"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="JSON config file")
        for key, typ in _FLAT_FLAGS:
            p.add_argument("--" + key.replace("_", "-"), dest=key, type=typ)
        p.add_argument("--mode", dest="gamma_omega_mode",
                       choices=[m.value for m in GammaOmegaMode])
        p.add_argument("--variable", choices=SWEEP_VARIABLES)
        p.add_argument("--sweep-min", type=float)
        p.add_argument("--sweep-max", type=float)
        p.add_argument("--n-points", type=int)
        p.add_argument("--output", help="output path (default stdout)")
        p.add_argument("--format", choices=FORMATS)
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    data = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
    for key, _ in _FLAT_FLAGS + (("gamma_omega_mode", str),):
        value = getattr(args, key)
        if value is not None:
            data[key] = value

    sweep_over = {k: v for k, v in (("variable", args.variable), ("min", args.sweep_min),
                                    ("max", args.sweep_max), ("n_points", args.n_points))
                  if v is not None}
    if sweep_over:
        default = _DEFAULT_SWEEPS.get(args.command)
        base = data.get("sweep") or (dict(zip(("variable", "min", "max", "n_points"), default))
                                     if default else {})
        data["sweep"] = {**base, **sweep_over}

    out = dict(data.get("output") or {})
    if args.output is not None:
        out["path"] = args.output
    if args.format is not None:
        out["format"] = args.format
    if out:
        data["output"] = out
    return RunConfig.from_dict(data)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args)
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            warnings.showwarning = _warn_to_stderr
            return _dispatch(args.command, config)
    except ConfigError as exc:
        print(f"gainscatter: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"gainscatter: error: {exc}", file=sys.stderr)
        return EXIT_IO


def _warn_to_stderr(message, category, *_args, **_kwargs):
    print(f"gainscatter: {category.__name__}: {message}", file=sys.stderr)


def _dispatch(command: str, config: RunConfig) -> int:
    if command in ("balance", "oracle"):
        report = run_balance(config) if command == "balance" else run_oracle(config)
        _emit(json.dumps(report, sort_keys=True, indent=2) + "\n", config)
        if command == "oracle" and not all(r["pass"] for r in report):
            return EXIT_ORACLE_FAILED
        return EXIT_OK
    runner = {"spectrum": run_spectrum, "pumpsweep": run_pumpsweep,
              "compare": run_compare, "bloch": run_bloch}[command]
    _emit(format_table(runner(config), config), config)
    return EXIT_OK
