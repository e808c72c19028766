"""Command-line scenario runner.

Subcommands: ``simulate`` (one trajectory to CSV+summary), ``verify``
(three-way analytic/ODE/Volterra consistency suite), ``greens-check``
(quadrature vs closed forms and kernel reconstruction), ``sweep``
(cross-product parameter scans), ``classify`` (regime report), ``presets``
(bundled scenario list).

Configuration is line-oriented ``key = value`` text with ``#`` comments and
dotted prefixes, e.g.::

    params.omega0 = 0.15
    params.u_factor = 0.95
    grid.t_end = 2000
    initial.state = e1g2

Exit codes: 0 success, 1 validation/configuration failure, 2 numerical
failure.  Output is deterministic: identical inputs give byte-identical
files (no timestamps; floats via repr round-trip formatting).
"""
from __future__ import annotations

import argparse
import concurrent.futures
import math
import os
import sys
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import __version__
from .coupling import (
    CouplingParams,
    Geometry,
    collective_couplings,
    coupling_strength,
    interaction_function,
)
from .dynamics import (
    classify_regime,
    evolve,
    image_amplitudes,
    mode_solution,
    _mode_solutions,
)
from .errors import (
    ConfigError,
    NumericalError,
    PlasmonPairError,
    ValidationError,
)
from .greens import green_quadrature, green_xx_closed, green_zz_closed, \
    kernel_from_greens
from .materials import default_model
from .oracle import (
    IntegratorSpec,
    integrate_ode,
    integrate_volterra,
    stability_bound,
    suggest_step,
)
from .presets import LOSSLESS_SET, PRESETS, VERIFY_SUITE, get_preset, \
    preset_names
from .series import AmplitudeState, TimeSeries

_UNITS_NOTE = "rates and frequencies in units of gamma; time in 1/gamma"
_VERIFY_TOL = 1e-6
_NORM_DRIFT_TOL = 1e-9
_GREENS_TOL = 0.05
_KERNEL_TOL = 0.02


# --------------------------------------------------------------------------
# Scenario model and configuration parsing
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Scenario:
    """Fully resolved run request (defaults overlaid by preset and config)."""

    mode: str = "dimensionless"
    omega0: float = 0.15
    u_factor: float = 0.95
    delta: float = 0.0
    gamma: float = 1.0
    gamma_a: float = 1.0
    x21: float = 0.0
    z0: float = 0.05
    lambda_s: float = 1.0
    state: str = "e1g2"
    c1_re: float = 1.0
    c1_im: float = 0.0
    c2_re: float = 0.0
    c2_im: float = 0.0
    t_end: float = 100.0
    samples: int = 1001
    source: str = "analytic"
    dt: Optional[float] = None
    seed_label: str = ""
    images: bool = False


def _parse_bool(raw: str) -> bool:
    lowered = raw.lower()
    if lowered in ("1", "true", "on", "yes"):
        return True
    if lowered in ("0", "false", "off", "no"):
        return False
    raise ValueError("not a boolean: %r" % raw)


_FLOAT_KEYS = {
    "params.omega0": "omega0",
    "params.u_factor": "u_factor",
    "params.delta": "delta",
    "params.gamma": "gamma",
    "params.gamma_a": "gamma_a",
    "geometry.x21": "x21",
    "geometry.z0": "z0",
    "geometry.lambda_s": "lambda_s",
    "initial.c1_re": "c1_re",
    "initial.c1_im": "c1_im",
    "initial.c2_re": "c2_re",
    "initial.c2_im": "c2_im",
    "grid.t_end": "t_end",
    "oracle.dt": "dt",
}
_INT_KEYS = {"grid.samples": "samples"}
_STR_KEYS = {
    "scenario.mode": ("mode", ("dimensionless", "physical")),
    "initial.state": ("state", ("e1g2", "e2g1", "sym", "antisym", "custom")),
    "oracle.source": ("source", ("analytic", "ode_oracle", "volterra_oracle")),
    "run.seed_label": ("seed_label", None),
}
_BOOL_KEYS = {"output.images": "images"}
_ALL_KEYS = (set(_FLOAT_KEYS) | set(_INT_KEYS) | set(_STR_KEYS)
             | set(_BOOL_KEYS))


def parse_config(path: str) -> Tuple[Dict[str, str], Dict[str, int]]:
    """Read a config file into raw key/value strings plus line numbers."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError("cannot read config file %s: %s" % (path, exc))
    values: Dict[str, str] = {}
    lines: Dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError("expected 'key = value'", line=lineno)
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        if not key:
            raise ConfigError("missing key before '='", line=lineno)
        if key in values:
            raise ConfigError("duplicate key %r" % key, line=lineno)
        if key not in _ALL_KEYS:
            raise ConfigError("unknown key %r" % key, line=lineno)
        values[key] = value
        lines[key] = lineno
    return values, lines


def _apply_value(sc: Scenario, key: str, raw: str, lineno: int) -> Scenario:
    try:
        if key in _FLOAT_KEYS:
            return replace(sc, **{_FLOAT_KEYS[key]: float(raw)})
        if key in _INT_KEYS:
            return replace(sc, **{_INT_KEYS[key]: int(raw)})
        if key in _BOOL_KEYS:
            return replace(sc, **{_BOOL_KEYS[key]: _parse_bool(raw)})
        attr, allowed = _STR_KEYS[key]
        if allowed is not None and raw not in allowed:
            raise ValueError("must be one of %s" % (", ".join(allowed)))
        return replace(sc, **{attr: raw})
    except ValueError as exc:
        raise ConfigError("invalid value for %s: %s" % (key, exc),
                          line=lineno)


def build_scenario(preset_name: Optional[str],
                   config: Optional[Tuple[Dict[str, str], Dict[str, int]]]
                   ) -> Scenario:
    sc = Scenario()
    if preset_name is not None:
        preset = get_preset(preset_name)
        sc = replace(sc, omega0=preset.omega0, u_factor=preset.u_factor,
                     delta=preset.delta, gamma=preset.gamma,
                     state=preset.state, t_end=preset.t_end,
                     samples=preset.samples, seed_label=preset.name)
    if config is not None:
        values, linenos = config
        for key in sorted(values, key=lambda k: linenos[k]):
            sc = _apply_value(sc, key, values[key], linenos[key])
    _validate_scenario(sc)
    return sc


def _validate_scenario(sc: Scenario) -> None:
    if sc.t_end <= 0:
        raise ValidationError("grid.t_end must be > 0")
    if sc.samples < 2:
        raise ValidationError("grid.samples must be >= 2")
    if sc.dt is not None and sc.dt <= 0:
        raise ValidationError("oracle.dt must be > 0")


def scenario_params(sc: Scenario) -> CouplingParams:
    if sc.mode == "physical":
        geom = Geometry(x21=sc.x21, z0=sc.z0, lambda_s=sc.lambda_s)
        omega_s_unit = 1.0e4 * sc.gamma if sc.gamma > 0 else 1.0e4
        omega0 = coupling_strength(geom, mu1_real_abs=2.0,
                                   gamma_a=sc.gamma_a, omega_s=omega_s_unit)
        u_val = interaction_function(geom)
        return CouplingParams(omega0=omega0, u_factor=u_val, delta=sc.delta,
                              gamma=sc.gamma, gamma_a=sc.gamma_a)
    return CouplingParams(omega0=sc.omega0, u_factor=sc.u_factor,
                          delta=sc.delta, gamma=sc.gamma, gamma_a=sc.gamma_a)


def scenario_initial(sc: Scenario) -> AmplitudeState:
    if sc.state == "custom":
        return AmplitudeState.from_label(
            "custom", (complex(sc.c1_re, sc.c1_im),
                       complex(sc.c2_re, sc.c2_im)))
    return AmplitudeState.from_label(sc.state)


def run_scenario(sc: Scenario) -> TimeSeries:
    params = scenario_params(sc)
    initial = scenario_initial(sc)
    if sc.source == "analytic":
        t = np.linspace(0.0, sc.t_end, sc.samples)
        if sc.images:
            return image_amplitudes(t, params, initial)
        return evolve(t, params, initial)
    method = "ode" if sc.source == "ode_oracle" else "volterra"
    dt = sc.dt if sc.dt is not None else suggest_step(params, sc.t_end, method)
    spec = IntegratorSpec(dt=dt, t_end=sc.t_end)
    if sc.source == "ode_oracle":
        return integrate_ode(params, initial, spec, sc.samples)
    return integrate_volterra(params, initial, spec, sc.samples)


# --------------------------------------------------------------------------
# Output formatting
# --------------------------------------------------------------------------

def _fmt(x: float) -> str:
    return repr(float(x))


def _metadata(sc: Scenario) -> List[Tuple[str, str]]:
    params = scenario_params(sc)
    items = [
        ("package", "plasmonpair %s" % __version__),
        ("units", _UNITS_NOTE),
        ("source", sc.source),
        ("mode", sc.mode),
        ("params.omega0", _fmt(params.omega0)),
        ("params.u_factor", _fmt(params.u_factor)),
        ("params.delta", _fmt(params.delta)),
        ("params.gamma", _fmt(params.gamma)),
        ("initial.state", sc.state),
        ("grid.t_end", _fmt(sc.t_end)),
        ("grid.samples", str(sc.samples)),
    ]
    if sc.mode == "physical":
        items.extend([
            ("geometry.x21", _fmt(sc.x21)),
            ("geometry.z0", _fmt(sc.z0)),
            ("geometry.lambda_s", _fmt(sc.lambda_s)),
            ("params.gamma_a", _fmt(sc.gamma_a)),
        ])
    if sc.seed_label:
        items.append(("run.seed_label", sc.seed_label))
    return items


def csv_text(sc: Scenario, ts: TimeSeries) -> str:
    lines = ["# %s = %s" % (key, value) for key, value in _metadata(sc)]
    cols = ["t", "re_c1", "im_c1", "re_c2", "im_c2", "p1", "p2",
            "concurrence"]
    with_images = ts.b1 is not None
    if with_images:
        cols += ["re_b1", "im_b1", "re_b2", "im_b2"]
    lines.append(",".join(cols))
    conc = ts.concurrence_series()
    p1, p2 = ts.p1, ts.p2
    for i in range(len(ts.t)):
        row = [_fmt(ts.t[i]),
               _fmt(ts.c1[i].real), _fmt(ts.c1[i].imag),
               _fmt(ts.c2[i].real), _fmt(ts.c2[i].imag),
               _fmt(p1[i]), _fmt(p2[i]), _fmt(conc[i])]
        if with_images:
            row += [_fmt(ts.b1[i].real), _fmt(ts.b1[i].imag),
                    _fmt(ts.b2[i].real), _fmt(ts.b2[i].imag)]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def summary_text(sc: Scenario, ts: TimeSeries) -> str:
    params = scenario_params(sc)
    sol_s, sol_a = _mode_solutions(params)
    conc = ts.concurrence_series()
    idx = int(np.argmax(conc))
    pairs: List[Tuple[str, str]] = list(_metadata(sc))
    pairs += [
        ("regime", classify_regime(params)),
        ("omega_s", _fmt(collective_couplings(params).omega_s)),
        ("omega_a", _fmt(collective_couplings(params).omega_a)),
        ("rabi_eff_s_re", _fmt(sol_s.rabi_eff.real)),
        ("rabi_eff_s_im", _fmt(sol_s.rabi_eff.imag)),
        ("rabi_eff_a_re", _fmt(sol_a.rabi_eff.real)),
        ("rabi_eff_a_im", _fmt(sol_a.rabi_eff.imag)),
        ("rate_slow_s", _fmt(sol_s.rate_slow)),
        ("rate_slow_a", _fmt(sol_a.rate_slow)),
        ("max_concurrence", _fmt(conc[idx])),
        ("t_max_concurrence", _fmt(ts.t[idx])),
        ("final_p1", _fmt(ts.p1[-1])),
        ("final_p2", _fmt(ts.p2[-1])),
        ("final_concurrence", _fmt(conc[-1])),
    ]
    return "".join("%s = %s\n" % (key, value) for key, value in pairs)


def _write_atomic(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    os.replace(tmp, path)


# --------------------------------------------------------------------------
# Subcommands
# --------------------------------------------------------------------------

def _cmd_simulate(args) -> int:
    config = parse_config(args.config) if args.config else None
    sc = build_scenario(args.preset, config)
    ts = run_scenario(sc)
    out_dir = args.out or "."
    os.makedirs(out_dir, exist_ok=True)
    label = sc.seed_label or args.preset or "run"
    written = []
    if args.format != "summary-only":
        csv_path = os.path.join(out_dir, label + ".csv")
        _write_atomic(csv_path, csv_text(sc, ts))
        written.append(csv_path)
    summary_path = os.path.join(out_dir, label + ".summary")
    _write_atomic(summary_path, summary_text(sc, ts))
    written.append(summary_path)
    for path in written:
        print("wrote %s" % path)
    return 0


def _range_or_scalar(raw: str) -> Optional[Tuple[float, float, int]]:
    """Recognize the sweep range syntax start:stop:count."""
    if raw.count(":") != 2:
        return None
    start_s, stop_s, count_s = raw.split(":")
    try:
        start, stop, count = float(start_s), float(stop_s), int(count_s)
    except ValueError:
        raise ConfigError("malformed range %r (need start:stop:count)" % raw)
    if count < 1:
        raise ConfigError("range count must be >= 1 in %r" % raw)
    return start, stop, count


def _cmd_sweep(args) -> int:
    if not args.config:
        raise ConfigError("sweep requires --config with at least one "
                          "start:stop:count range")
    values, linenos = parse_config(args.config)
    sweep_axes: List[Tuple[str, List[float]]] = []
    scalars: Dict[str, str] = {}
    for key in sorted(values, key=lambda k: linenos[k]):
        raw = values[key]
        rng = _range_or_scalar(raw) if key in _FLOAT_KEYS else None
        if rng is not None:
            start, stop, count = rng
            pts = (np.linspace(start, stop, count) if count > 1
                   else np.asarray([start]))
            sweep_axes.append((key, [float(v) for v in pts]))
        else:
            scalars[key] = raw
    if not sweep_axes:
        raise ConfigError("sweep config contains no start:stop:count ranges")
    base = build_scenario(args.preset, (scalars, linenos))
    out_dir = args.out or "."
    os.makedirs(out_dir, exist_ok=True)

    combos: List[Tuple[float, ...]] = [()]
    for _, pts in sweep_axes:
        combos = [prev + (v,) for prev in combos for v in pts]

    def run_point(index: int, combo: Tuple[float, ...]) -> Tuple[int, str]:
        sc = base
        for (key, _), value in zip(sweep_axes, combo):
            sc = replace(sc, **{_FLOAT_KEYS[key]: value})
        label = "point_%04d" % index
        sc = replace(sc, seed_label=label)
        ts = run_scenario(sc)
        if args.format != "summary-only":
            _write_atomic(os.path.join(out_dir, label + ".csv"),
                          csv_text(sc, ts))
        _write_atomic(os.path.join(out_dir, label + ".summary"),
                      summary_text(sc, ts))
        return index, label

    workers = min(8, os.cpu_count() or 1)
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(run_point, i, combo)
                   for i, combo in enumerate(combos)]
        for future in futures:
            future.result()

    index_lines = ["index," + ",".join(key for key, _ in sweep_axes)
                   + ",file"]
    for i, combo in enumerate(combos):
        label = "point_%04d" % i
        suffix = ".summary" if args.format == "summary-only" else ".csv"
        index_lines.append(
            ",".join([str(i)] + [_fmt(v) for v in combo]) + ","
            + label + suffix)
    index_path = os.path.join(out_dir, "index.csv")
    _write_atomic(index_path, "\n".join(index_lines) + "\n")
    print("wrote %d sweep points and %s" % (len(combos), index_path))
    return 0


def _verify_one(omega0: float, u_factor: float, delta: float,
                t_end: float = 10.0, samples: int = 201):
    params = CouplingParams(omega0=omega0, u_factor=u_factor, delta=delta)
    initial = AmplitudeState.from_label("e1g2")
    t = np.linspace(0.0, t_end, samples)
    analytic = evolve(t, params, initial)
    spec_ode = IntegratorSpec(dt=suggest_step(params, t_end, "ode"),
                              t_end=t_end)
    spec_vol = IntegratorSpec(dt=suggest_step(params, t_end, "volterra"),
                              t_end=t_end)
    ode = integrate_ode(params, initial, spec_ode, samples)
    vol = integrate_volterra(params, initial, spec_vol, samples)
    return (analytic.sup_deviation(ode), analytic.sup_deviation(vol),
            ode.sup_deviation(vol))


def _cmd_verify(args) -> int:
    lines: List[str] = []
    failures: List[str] = []

    lines.append("three-way consistency (analytic / ode / volterra), "
                 "tolerance %.1e" % _VERIFY_TOL)
    lines.append("%-28s %12s %12s %12s  %s"
                 % ("set (omega0, U, delta)", "an-ode", "an-vol", "ode-vol",
                    "status"))
    for omega0, u_factor, delta in VERIFY_SUITE:
        d_ao, d_av, d_ov = _verify_one(omega0, u_factor, delta)
        worst = max(d_ao, d_av, d_ov)
        status = "pass" if worst <= _VERIFY_TOL else "FAIL"
        if status == "FAIL":
            failures.append(
                "set (%g, %g, %g) deviates by %.3e" % (omega0, u_factor,
                                                       delta, worst))
        lines.append("(%g, %g, %g)%s %12.3e %12.3e %12.3e  %s"
                     % (omega0, u_factor, delta,
                        " " * max(0, 28 - len("(%g, %g, %g)" % (omega0,
                                                                u_factor,
                                                                delta))),
                        d_ao, d_av, d_ov, status))

    # Lossless set: gamma = 0 must conserve the total norm.
    om0, u_val, delta = LOSSLESS_SET
    params0 = CouplingParams(omega0=om0, u_factor=u_val, delta=delta,
                             gamma=0.0)
    omega_s = collective_couplings(params0).omega_s
    t_end0 = 10.0 * 2.0 * math.pi / omega_s
    spec0 = IntegratorSpec(dt=suggest_step(params0, t_end0, "ode",
                                           target=1e-9),
                           t_end=t_end0)
    traj0 = integrate_ode(params0, AmplitudeState.from_label("e1g2"),
                          spec0, 201)
    drift = float(np.max(np.abs(traj0.norm - traj0.norm[0])))
    ok0 = drift < _NORM_DRIFT_TOL
    lines.append("gamma=0 norm conservation over 10 Rabi periods: drift "
                 "%.3e (%s)" % (drift, "pass" if ok0 else "FAIL"))
    if not ok0:
        failures.append("gamma=0 norm drift %.3e exceeds %.1e"
                        % (drift, _NORM_DRIFT_TOL))

    # Negative control: at the coarse stability-bound step the Volterra
    # route must visibly miss the analytic solution, proving the comparison
    # has discriminating power.
    omega0, u_factor, delta = 25.0, 0.95, 50.0
    params_nc = CouplingParams(omega0=omega0, u_factor=u_factor, delta=delta)
    t_end_nc = 10.0
    dt_nc = stability_bound(params_nc)
    samples_nc = int(round(t_end_nc / dt_nc)) + 1
    spec_nc = IntegratorSpec(dt=dt_nc, t_end=t_end_nc)
    initial = AmplitudeState.from_label("e1g2")
    coarse = integrate_volterra(params_nc, initial, spec_nc, samples_nc)
    exact = evolve(coarse.t, params_nc, initial)
    dev_nc = exact.sup_deviation(coarse)
    control_failed_as_expected = dev_nc > _VERIFY_TOL
    lines.append("negative control (coarse dt = %.3g): deviation %.3e "
                 "(%s)" % (dt_nc, dev_nc,
                           "fails as expected"
                           if control_failed_as_expected
                           else "UNEXPECTEDLY PASSES"))
    if not control_failed_as_expected:
        failures.append(
            "negative control at dt = %.3g agreed to %.3e; the comparison "
            "lacks discriminating power" % (dt_nc, dev_nc))

    report = "\n".join(lines) + "\n"
    sys.stdout.write(report)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        _write_atomic(os.path.join(args.out, "verify.report"), report)
    if failures:
        sys.stderr.write("verification failed:\n")
        for failure in failures:
            sys.stderr.write("  %s\n" % failure)
        return 2
    return 0


def _cmd_greens_check(args) -> int:
    gamma = 1.0
    z0 = 0.05
    delta = 0.0
    if args.config:
        values, linenos = parse_config(args.config)
        for key in values:
            if key == "geometry.z0":
                z0 = float(values[key])
            elif key == "params.delta":
                delta = float(values[key])
            elif key == "params.gamma":
                gamma = float(values[key])
            else:
                raise ConfigError(
                    "greens-check accepts only geometry.z0, params.delta, "
                    "params.gamma", line=linenos[key])
    omega_s = 1.0e4 * gamma
    model = default_model(omega_s=omega_s)
    lines: List[str] = []
    failures: List[str] = []
    lines.append("quadrature vs closed form at omega = omega_s, z0 = %g "
                 "lambda_s (tolerance %g%%)" % (z0, 100 * _GREENS_TOL))
    lines.append("%8s %14s %14s %9s %14s %14s %9s"
                 % ("x21", "zz_closed", "zz_quad", "zz_dev",
                    "xx_closed", "xx_quad", "xx_dev"))
    for x21 in (0.0, 0.1, 0.25, 0.5):
        geom = Geometry(x21=x21, z0=z0)
        two_point = x21 > 0
        closed_zz = green_zz_closed(geom, omega_s, gamma, omega_s, two_point)
        closed_xx = green_xx_closed(geom, omega_s, gamma, omega_s, -2.0,
                                    two_point)
        quad_zz = green_quadrature(geom, model, omega_s, "zz").value
        quad_xx = green_quadrature(geom, model, omega_s, "xx").value
        dev_zz = abs(quad_zz - closed_zz) / abs(closed_zz)
        dev_xx = abs(quad_xx - closed_xx) / abs(closed_xx)
        lines.append("%8g %14.6g %14.6g %9.2e %14.6g %14.6g %9.2e"
                     % (x21, closed_zz, quad_zz, dev_zz, closed_xx, quad_xx,
                        dev_xx))
        if dev_zz > _GREENS_TOL or dev_xx > _GREENS_TOL:
            failures.append("x21 = %g deviation above %g%%"
                            % (x21, 100 * _GREENS_TOL))

    geom0 = Geometry(x21=0.0, z0=z0)
    omega0 = coupling_strength(geom0, mu1_real_abs=2.0, gamma_a=1.0,
                               omega_s=omega_s)
    omega_a = omega_s - delta
    taus = np.linspace(0.0, 10.0 / gamma, 21)
    worst_kernel = 0.0
    worst_env = 0.0
    k0 = kernel_from_greens(geom0, gamma, omega_s, omega_a, 0.0)
    for tau in taus:
        sample = kernel_from_greens(geom0, gamma, omega_s, omega_a,
                                    float(tau))
        target = -omega0 ** 2 * np.exp(-(0.5 * gamma + 1j * delta) * tau)
        worst_kernel = max(worst_kernel,
                           abs(sample.value - target) / abs(target))
        env = abs(sample.value) / abs(k0.value)
        worst_env = max(worst_env,
                        abs(env - math.exp(-0.5 * gamma * tau)))
    lines.append("kernel reconstruction over tau in [0, 10/gamma]: max "
                 "relative deviation %.3e vs -Omega0^2 e^{-(gamma/2 + i "
                 "delta) tau} (Omega0 = %.6g, tolerance %g%%)"
                 % (worst_kernel, omega0, 100 * _KERNEL_TOL))
    lines.append("kernel envelope |K(tau)|/|K(0)| vs e^{-gamma tau/2}: max "
                 "absolute deviation %.3e" % worst_env)
    lines.append("window tail outside omega_s +- 50 gamma: %.3e of the "
                 "Lorentzian mass" % k0.tail_fraction)
    if worst_kernel > _KERNEL_TOL:
        failures.append("kernel reconstruction deviates by %.3e"
                        % worst_kernel)

    report = "\n".join(lines) + "\n"
    sys.stdout.write(report)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        _write_atomic(os.path.join(args.out, "greens.report"), report)
    if failures:
        sys.stderr.write("greens-check failed:\n")
        for failure in failures:
            sys.stderr.write("  %s\n" % failure)
        return 2
    return 0


def _cmd_classify(args) -> int:
    config = parse_config(args.config) if args.config else None
    sc = build_scenario(args.preset, config)
    params = scenario_params(sc)
    coup = collective_couplings(params)
    sol_s = mode_solution(coup.omega_s, params.gamma, params.delta,
                          "symmetric")
    sol_a = mode_solution(coup.omega_a, params.gamma, params.delta,
                          "antisymmetric")
    u_val = math.hypot(params.gamma, 2.0 * params.delta)
    print("regime = %s" % classify_regime(params))
    print("threshold = %s" % _fmt(0.25 * u_val))
    for sol in (sol_s, sol_a):
        print("%s.omega = %s" % (sol.mode, _fmt(sol.omega_mode)))
        print("%s.regime = %s" % (sol.mode, sol.regime))
        print("%s.rabi_eff = %s" % (sol.mode, repr(complex(sol.rabi_eff))))
        print("%s.rate_slow = %s" % (sol.mode, _fmt(sol.rate_slow)))
        print("%s.rate_fast = %s" % (sol.mode, _fmt(sol.rate_fast)))
    return 0


def _cmd_presets(args) -> int:
    for name in preset_names():
        preset = PRESETS[name]
        print("%-16s omega0=%-6g U=%-5g delta=%-4g state=%-8s t_end=%-7g "
              "samples=%d" % (name, preset.omega0, preset.u_factor,
                              preset.delta, preset.state, preset.t_end,
                              preset.samples))
        print("%-16s %s" % ("", preset.description))
    return 0


# --------------------------------------------------------------------------
# Argument parsing and entry point
# --------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    """Argparse variant that reports usage problems through the package's
    validation-error channel (exit code 1)."""

    def error(self, message):
        raise ConfigError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="plasmonpair",
                     description="Two-atom surface-plasmon dynamics runner")
    sub = parser.add_subparsers(dest="command")

    def add_common(p, config=True, preset=True, out=True, fmt=True):
        if config:
            p.add_argument("--config", help="key = value configuration file")
        if preset:
            p.add_argument("--preset", help="bundled scenario name")
        if out:
            p.add_argument("--out", help="output directory")
        if fmt:
            p.add_argument("--format", choices=("csv", "summary-only"),
                           default="csv")

    add_common(sub.add_parser("simulate",
                              help="run one scenario and write CSV/summary"))
    add_common(sub.add_parser("sweep",
                              help="cross-product scan over ranged keys"))
    add_common(sub.add_parser("verify",
                              help="three-way oracle consistency suite"),
               config=False, preset=False, fmt=False)
    add_common(sub.add_parser("greens-check",
                              help="quadrature and kernel validation"),
               preset=False, fmt=False)
    add_common(sub.add_parser("classify", help="regime classification"),
               out=False, fmt=False)
    sub.add_parser("presets", help="list bundled scenarios")
    return parser


_DISPATCH = {
    "simulate": _cmd_simulate,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "greens-check": _cmd_greens_check,
    "classify": _cmd_classify,
    "presets": _cmd_presets,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        if not argv:
            parser.print_usage(sys.stderr)
            return 1
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_usage(sys.stderr)
            return 1
        return _DISPATCH[args.command](args)
    except NumericalError as exc:
        sys.stderr.write("numerical failure: %s\n" % exc)
        return 2
    except ValidationError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    except PlasmonPairError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
