"""Command-line interface: solve, compare, stability, plan, bench.

Every command reads a flat ``key = value`` config (all keys optional,
defaults below), draws randomness from a recorded 64-bit seed, and
writes plot-ready CSV/JSON plus a manifest. The manifest embeds the
fully resolved configuration, so re-running with ``--config manifest.json``
reproduces the outputs byte for byte (wall-clock fields aside).

Exit codes: 0 ok, 2 config error, 3 numeric error, 4 infeasible plan.
"""

import argparse
import json
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__
from .config import Config, load_config
from .errors import (ConfigError, DrsLipError, InfeasibleScheduleError,
                     MaxIterationsError)
from .mathieu import SolutionBasis, fit_initial_conditions
from .model import (ModelParams, PendulumState, Pitching, VerticalSinusoid,
                    as_vertical_sinusoid, to_mathieu)
from .oracle import PERCENT_ERROR_FLOOR, IntegratorConfig, integrate
from .planner import (G1, G2, AnalyticTrajectoryBackend, GaitParams,
                      NumericTrajectoryBackend, build_nlp, com_plan,
                      feasibility_report, lower_layer, sample_plan, solve_nlp)
from .rng import SplitMix64
from .stability import SWEEP_CSV_COLUMNS, SweepGrid, sweep

DRS_PRESETS = {
    "drs1": lambda radius: VerticalSinusoid(amplitude=0.10, omega=math.pi),
    "drs2": lambda radius: Pitching(pitch_amplitude=math.radians(5.0),
                                    pitch_frequency=0.5,
                                    reference_radius=radius),
    "drs3": lambda radius: Pitching(pitch_amplitude=math.radians(5.0),
                                    pitch_frequency=0.4,
                                    reference_radius=radius),
}

GAIT_PRESETS = {"g1": G1, "g2": G2}


# ----------------------------------------------------------------- config

def _wrap_value_errors(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _model_from(cfg, resolved):
    z0 = cfg.get_float("model.z0", 0.42)
    g = cfg.get_float("model.g", 9.81)
    m = cfg.get_float("model.m", 25.0)
    resolved.update({"model.z0": z0, "model.g": g, "model.m": m})
    return _wrap_value_errors(ModelParams, z0=z0, g=g, m=m)


def _surface_from(cfg, resolved):
    preset = cfg.get_str("surface.preset", default="none",
                         choices={"none", "drs1", "drs2", "drs3"})
    resolved["surface.preset"] = preset
    if preset != "none":
        radius = cfg.get_float("surface.reference_radius", 1.0)
        resolved["surface.reference_radius"] = radius
        return _wrap_value_errors(DRS_PRESETS[preset], radius)
    kind = cfg.get_str("surface.kind", default="vertical",
                       choices={"vertical", "pitching"})
    resolved["surface.kind"] = kind
    if kind == "vertical":
        amplitude = cfg.get_float("surface.amplitude", 0.07)
        omega = cfg.get_float("surface.omega", math.pi)
        phase = cfg.get_float("surface.phase", 0.0)
        resolved.update({"surface.amplitude": amplitude,
                         "surface.omega": omega, "surface.phase": phase})
        return _wrap_value_errors(VerticalSinusoid, amplitude=amplitude,
                                  omega=omega, phase=phase)
    amp_deg = cfg.get_float("surface.pitch_amplitude_deg", 5.0)
    freq = cfg.get_float("surface.pitch_frequency_hz", 0.5)
    radius = cfg.get_float("surface.reference_radius", 1.0)
    resolved.update({"surface.pitch_amplitude_deg": amp_deg,
                     "surface.pitch_frequency_hz": freq,
                     "surface.reference_radius": radius})
    return _wrap_value_errors(Pitching, pitch_amplitude=math.radians(amp_deg),
                              pitch_frequency=freq, reference_radius=radius)


def _gait_from(cfg, resolved):
    preset = cfg.get_str("gait.preset", default="g1",
                         choices={"g1", "g2", "custom"})
    resolved["gait.preset"] = preset
    base = GAIT_PRESETS.get(preset, G1)
    fields = {
        "gait.friction": ("friction_coefficient", base.friction_coefficient),
        "gait.z0": ("z0", base.z0),
        "gait.period": ("gait_period", base.gait_period),
        "gait.velocity": ("avg_velocity", base.avg_velocity),
        "gait.step_length": ("step_length", base.step_length),
        "gait.step_height": ("max_step_height", base.max_step_height),
        "gait.stance_half_length": ("stance_half_length", base.stance_half_length),
        "gait.stance_half_width": ("stance_half_width", base.stance_half_width),
        "gait.dwell_fraction": ("four_leg_dwell_fraction",
                                base.four_leg_dwell_fraction),
    }
    kwargs = {}
    for key, (attr, default) in fields.items():
        value = cfg.get_float(key, default)
        resolved[key] = value
        kwargs[attr] = value
    return _wrap_value_errors(GaitParams, **kwargs)


# ------------------------------------------------------------- file output

def _fmt(value):
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, np.integer):
        return str(int(value))
    return str(value)


def _write_csv(path, columns, rows):
    lines = [",".join(columns)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _write_json(path, obj):
    path.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n",
                    encoding="utf-8")


def _mean_sd(values):
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        return 0.0, 0.0
    if arr.size == 1:
        return float(arr[0]), 0.0
    return float(arr.mean()), float(arr.std())


def _drop_warmup(values):
    """Discard the first 5% of repetitions (timer warm-up)."""
    skip = int(0.05 * len(values))
    return values[skip:]


def _pct_errors(x_analytic, x_numeric):
    denom = np.maximum(np.abs(x_numeric), PERCENT_ERROR_FLOOR)
    return np.abs(x_analytic - x_numeric) / denom * 100.0


# ---------------------------------------------------------------- commands

def cmd_solve(cfg, seed, out_dir, threads):
    resolved = {}
    model = _model_from(cfg, resolved)
    motion = as_vertical_sinusoid(_surface_from(cfg, resolved))
    x0 = cfg.get_float("solve.x0", 0.1)
    v0 = cfg.get_float("solve.v0", 0.0)
    t_start = cfg.get_float("solve.t_start", 0.0)
    t_end = cfg.get_float("solve.t_end", 0.5)
    n = cfg.get_int("solve.samples", 1000)
    terms = cfg.get_int("solve.terms", 10)
    resolved.update({"solve.x0": x0, "solve.v0": v0, "solve.t_start": t_start,
                     "solve.t_end": t_end, "solve.samples": n,
                     "solve.terms": terms})
    if not (t_end > t_start):
        raise ConfigError("solve.t_end must exceed solve.t_start")
    if n < 2:
        raise ConfigError("solve.samples must be >= 2")

    t0 = time.perf_counter()
    basis = SolutionBasis.build(to_mathieu(model, motion), terms=terms)
    sol = basis.fit(x0, v0, t0=t_start)
    ts = np.linspace(t_start, t_end, n)
    xs, vs = sol.evaluate(ts)
    wall = (time.perf_counter() - t0) * 1e3

    _write_csv(out_dir / "trajectory.csv", ("t_s", "x_m", "v_m_s"),
               list(zip(ts.tolist(), xs.tolist(), vs.tolist())))
    return resolved, {"solve_ms": wall}, ["trajectory.csv"]


def _compare_trial(basis, samples, model, motion, ic, integ_cfg):
    t0 = time.perf_counter()
    coeffs = fit_initial_conditions(basis, ic.x, ic.v)
    xa, _ = samples.combine(coeffs)
    t_analytic = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    traj = integrate(model, motion, ic, (samples.times[0], samples.times[-1]),
                     len(samples.times), integ_cfg)
    t_numeric = (time.perf_counter() - t0) * 1e3

    pct = _pct_errors(xa, traj.positions)
    return float(pct.mean()), float(pct.max()), t_analytic, t_numeric


def cmd_compare(cfg, seed, out_dir, threads):
    resolved = {}
    model = _model_from(cfg, resolved)
    motion = as_vertical_sinusoid(_surface_from(cfg, resolved))
    trials = cfg.get_int("compare.trials", 1000)
    bound = cfg.get_float("compare.ic_bound", 0.2)
    t_end = cfg.get_float("compare.t_end", 0.5)
    n = cfg.get_int("compare.samples", 1000)
    terms = cfg.get_int("compare.terms", 10)
    rel_tol = cfg.get_float("compare.rel_tol", 1e-9)
    abs_tol = cfg.get_float("compare.abs_tol", 1e-9)
    resolved.update({"compare.trials": trials, "compare.ic_bound": bound,
                     "compare.t_end": t_end, "compare.samples": n,
                     "compare.terms": terms, "compare.rel_tol": rel_tol,
                     "compare.abs_tol": abs_tol})
    if trials < 1:
        raise ConfigError("compare.trials must be >= 1")
    integ_cfg = _wrap_value_errors(IntegratorConfig, rel_tol=rel_tol,
                                   abs_tol=abs_tol)

    rng = SplitMix64(seed)
    ics = [PendulumState(rng.uniform(-bound, bound), rng.uniform(-bound, bound))
           for _ in range(trials)]

    t_begin = time.perf_counter()
    basis = SolutionBasis.build(to_mathieu(model, motion), terms=terms)
    samples = basis.sampled(np.linspace(0.0, t_end, n))
    setup_ms = (time.perf_counter() - t_begin) * 1e3

    def work(ic):
        return _compare_trial(basis, samples, model, motion, ic, integ_cfg)

    t_begin = time.perf_counter()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, ics))
    else:
        results = [work(ic) for ic in ics]
    run_ms = (time.perf_counter() - t_begin) * 1e3

    trial_means = np.array([r[0] for r in results])
    trial_maxes = np.array([r[1] for r in results])
    t_analytic = [r[2] for r in results]
    t_numeric = [r[3] for r in results]
    an_mean, an_sd = _mean_sd(t_analytic)
    nu_mean, nu_sd = _mean_sd(t_numeric)

    stats = {
        "trials": trials,
        "samples_per_trial": n,
        "mean_pct": float(trial_means.mean()),
        "std_pct": float(trial_means.std()),
        "max_trial_mean_pct": float(trial_means.max()),
        "max_sample_pct": float(trial_maxes.max()),
        "analytic_ms_mean": an_mean,
        "analytic_ms_sd": an_sd,
        "numeric_ms_mean": nu_mean,
        "numeric_ms_sd": nu_sd,
        "speedup_ratio": nu_mean / an_mean if an_mean > 0 else float("inf"),
    }
    _write_json(out_dir / "error_stats.json", stats)
    # timing stays in the aggregate JSON; the per-trial table holds only
    # deterministic values so reruns are byte-identical
    rows = [(i, ics[i].x, ics[i].v, results[i][0], results[i][1])
            for i in range(trials)]
    _write_csv(out_dir / "trials.csv",
               ("trial", "x0_m", "v0_m_s", "mean_pct_err", "max_pct_err"),
               rows)
    return resolved, {"setup_ms": setup_ms, "run_ms": run_ms}, \
        ["error_stats.json", "trials.csv"]


def cmd_stability(cfg, seed, out_dir, threads):
    resolved = {}
    g = cfg.get_float("model.g", 9.81)
    resolved["model.g"] = g
    axes = {}
    defaults = {
        "a": (0.0, 1.0, 5),
        "omega": (0.0, 2.0 * math.pi, 5),
        "z0": (0.3, 0.55, 5),
    }
    for name, (lo, hi, count) in defaults.items():
        axes[name] = (
            cfg.get_float(f"stability.{name}_min", lo),
            cfg.get_float(f"stability.{name}_max", hi),
            cfg.get_int(f"stability.{name}_count", count),
        )
        resolved[f"stability.{name}_min"] = axes[name][0]
        resolved[f"stability.{name}_max"] = axes[name][1]
        resolved[f"stability.{name}_count"] = axes[name][2]
    tol = cfg.get_float("stability.tol", 1e-9)
    resolved["stability.tol"] = tol

    grid = _wrap_value_errors(SweepGrid, amplitude=axes["a"],
                              frequency=axes["omega"], height=axes["z0"])
    t0 = time.perf_counter()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            points = sweep(grid, g=g, tol=tol, map_fn=pool.map)
    else:
        points = sweep(grid, g=g, tol=tol)
    wall = (time.perf_counter() - t0) * 1e3

    _write_csv(out_dir / "sweep.csv", SWEEP_CSV_COLUMNS,
               [p.csv_row() for p in points])
    return resolved, {"sweep_ms": wall}, ["sweep.csv"]


def _plan_once(gait, motion, model, n_check, tol, backend_name, pos_bound,
               vel_bound, polygon_margin, terms, max_outer=30):
    sinusoid = as_vertical_sinusoid(motion)
    if backend_name == "numeric":
        backend = NumericTrajectoryBackend(model, sinusoid)
    else:
        backend = AnalyticTrajectoryBackend(model, sinusoid, terms=terms)
    problem = build_nlp(gait, sinusoid, model, n_check=n_check,
                        backend=backend, pos_bound=pos_bound,
                        vel_bound=vel_bound, polygon_margin=polygon_margin)
    t0 = time.perf_counter()
    result = solve_nlp(problem, tol=tol, max_outer=max_outer)
    wall = (time.perf_counter() - t0) * 1e3
    return problem, result, wall


def cmd_plan(cfg, seed, out_dir, threads):
    resolved = {}
    model_cfg = _model_from(cfg, resolved)
    motion = _surface_from(cfg, resolved)
    gait = _gait_from(cfg, resolved)
    # the gait's mass height is the physical one the plan must respect
    model = _wrap_value_errors(ModelParams, z0=gait.z0, g=model_cfg.g,
                               m=model_cfg.m)
    n_check = cfg.get_int("plan.n_check", 10)
    tol = cfg.get_float("plan.tol", 1e-6)
    dt = cfg.get_float("plan.dt", 0.01)
    backend_name = cfg.get_str("plan.backend", "analytic",
                               choices={"analytic", "numeric"})
    pos_bound = cfg.get_float("plan.pos_bound", 0.5)
    vel_bound = cfg.get_float("plan.vel_bound", 1.0)
    margin = cfg.get_float("plan.polygon_margin", 0.0)
    terms = cfg.get_int("plan.terms", 10)
    horizon = cfg.get_float("plan.horizon", gait.gait_period)
    max_outer = cfg.get_int("plan.max_outer", 30)
    resolved.update({"plan.n_check": n_check, "plan.tol": tol, "plan.dt": dt,
                     "plan.backend": backend_name, "plan.pos_bound": pos_bound,
                     "plan.vel_bound": vel_bound, "plan.polygon_margin": margin,
                     "plan.terms": terms, "plan.horizon": horizon,
                     "plan.max_outer": max_outer})

    try:
        gait.validate_motion(motion)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    problem, result, wall = _plan_once(gait, motion, model, n_check, tol,
                                       backend_name, pos_bound, vel_bound,
                                       margin, terms, max_outer)
    plan = com_plan(result.x, gait, motion, model, terms=terms)
    body = lower_layer(plan, gait, motion)
    columns, rows = sample_plan(body, dt, horizon)
    _write_csv(out_dir / "plan.csv", columns, rows)

    diagnostics = {
        "backend": backend_name,
        "problem": problem.describe(),
        "iterations": result.outer_iterations,
        "inner_evaluations": result.inner_evaluations,
        "constraint_violation": result.constraint_violation,
        "stationarity": result.stationarity,
        "decision_vector": [float(v) for v in result.x],
        "feasibility": feasibility_report(plan),
        "wall_ms": wall,
    }
    _write_json(out_dir / "nlp_diagnostics.json", diagnostics)
    return resolved, {"plan_ms": wall}, ["plan.csv", "nlp_diagnostics.json"]


def cmd_bench(cfg, seed, out_dir, threads):
    resolved = {}
    workload = cfg.get_str("bench.workload", "solve",
                           choices={"solve", "plan"})
    resolved["bench.workload"] = workload
    if workload == "solve":
        payload, wall = _bench_solve(cfg, seed, resolved)
    else:
        payload, wall = _bench_plan(cfg, resolved)
    _write_json(out_dir / "timings.json", payload)
    return resolved, wall, ["timings.json"]


def _bench_solve(cfg, seed, resolved):
    model = _model_from(cfg, resolved)
    motion = as_vertical_sinusoid(_surface_from(cfg, resolved))
    reps = cfg.get_int("bench.reps", 1000)
    bound = cfg.get_float("compare.ic_bound", 0.2)
    t_end = cfg.get_float("compare.t_end", 0.5)
    n = cfg.get_int("compare.samples", 1000)
    terms = cfg.get_int("compare.terms", 10)
    resolved.update({"bench.reps": reps, "compare.ic_bound": bound,
                     "compare.t_end": t_end, "compare.samples": n,
                     "compare.terms": terms})
    if reps < 1:
        raise ConfigError("bench.reps must be >= 1")

    rng = SplitMix64(seed)
    ics = [PendulumState(rng.uniform(-bound, bound), rng.uniform(-bound, bound))
           for _ in range(reps)]
    basis = SolutionBasis.build(to_mathieu(model, motion), terms=terms)
    samples = basis.sampled(np.linspace(0.0, t_end, n))
    integ_cfg = IntegratorConfig()

    t_an, t_nu = [], []
    t0_all = time.perf_counter()
    for ic in ics:
        t0 = time.perf_counter()
        coeffs = fit_initial_conditions(basis, ic.x, ic.v)
        samples.combine(coeffs)
        t_an.append((time.perf_counter() - t0) * 1e3)
        t0 = time.perf_counter()
        integrate(model, motion, ic, (0.0, t_end), n, integ_cfg)
        t_nu.append((time.perf_counter() - t0) * 1e3)
    total_ms = (time.perf_counter() - t0_all) * 1e3

    an_mean, an_sd = _mean_sd(_drop_warmup(t_an))
    nu_mean, nu_sd = _mean_sd(_drop_warmup(t_nu))
    payload = {
        "workload": "solve",
        "reps": reps,
        "analytic_ms_mean": an_mean,
        "analytic_ms_sd": an_sd,
        "numeric_ms_mean": nu_mean,
        "numeric_ms_sd": nu_sd,
        "speedup_ratio": nu_mean / an_mean if an_mean > 0 else float("inf"),
    }
    return payload, {"bench_ms": total_ms}


def _bench_plan(cfg, resolved):
    model_cfg = _model_from(cfg, resolved)
    motion = _surface_from(cfg, resolved)
    gait = _gait_from(cfg, resolved)
    model = _wrap_value_errors(ModelParams, z0=gait.z0, g=model_cfg.g,
                               m=model_cfg.m)
    reps = cfg.get_int("bench.reps", 3)
    n_check = cfg.get_int("plan.n_check", 10)
    tol = cfg.get_float("plan.tol", 1e-6)
    terms = cfg.get_int("plan.terms", 10)
    pos_bound = cfg.get_float("plan.pos_bound", 0.5)
    vel_bound = cfg.get_float("plan.vel_bound", 1.0)
    margin = cfg.get_float("plan.polygon_margin", 0.0)
    resolved.update({"bench.reps": reps, "plan.n_check": n_check,
                     "plan.tol": tol, "plan.terms": terms,
                     "plan.pos_bound": pos_bound, "plan.vel_bound": vel_bound,
                     "plan.polygon_margin": margin})
    try:
        gait.validate_motion(motion)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    times = {"analytic": [], "numeric": []}
    solutions = {}
    problems = {}
    t0_all = time.perf_counter()
    for name in ("analytic", "numeric"):
        for _ in range(reps):
            problem, result, wall = _plan_once(
                gait, motion, model, n_check, tol, name, pos_bound,
                vel_bound, margin, terms)
            times[name].append(wall)
        solutions[name] = result.x
        problems[name] = problem
    total_ms = (time.perf_counter() - t0_all) * 1e3

    an_mean, an_sd = _mean_sd(_drop_warmup(times["analytic"]))
    nu_mean, nu_sd = _mean_sd(_drop_warmup(times["numeric"]))
    cross = max(
        problems["analytic"].violation(solutions["numeric"]),
        problems["numeric"].violation(solutions["analytic"]),
    )
    payload = {
        "workload": "plan",
        "reps": reps,
        "analytic_ms_mean": an_mean,
        "analytic_ms_sd": an_sd,
        "numeric_ms_mean": nu_mean,
        "numeric_ms_sd": nu_sd,
        "speedup_ratio": nu_mean / an_mean if an_mean > 0 else float("inf"),
        "cross_constraint_residual": cross,
    }
    return payload, {"bench_ms": total_ms}


COMMANDS = {
    "solve": cmd_solve,
    "compare": cmd_compare,
    "stability": cmd_stability,
    "plan": cmd_plan,
    "bench": cmd_bench,
}

# namespaces each command owns (typos there are errors) vs merely knows
_OWN_PREFIXES = {
    "solve": ("solve.", "model.", "surface."),
    "compare": ("compare.", "model.", "surface."),
    "stability": ("stability.",),
    "plan": ("plan.", "gait.", "model.", "surface."),
    "bench": ("bench.",),
}
_KNOWN_PREFIXES = ("model.", "surface.", "solve.", "compare.", "stability.",
                   "gait.", "plan.", "bench.")


def _load_inputs(args):
    """Config plus seed, from a key=value file or a previous manifest."""
    seed = args.seed
    if args.config is None:
        return Config(), 0 if seed is None else seed
    path = Path(args.config)
    if path.suffix == ".json":
        try:
            manifest = json.loads(path.read_text(encoding="utf-8"))
            entries = {
                key: (_fmt(value), 0)
                for key, value in manifest["resolved_config"].items()
            }
            if seed is None:
                seed = int(manifest.get("seed", 0))
        except (OSError, KeyError, ValueError, TypeError) as exc:
            raise ConfigError(f"cannot read manifest {path}: {exc}") from exc
        return Config(entries, source=str(path)), seed
    try:
        cfg = load_config(path)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return cfg, 0 if seed is None else seed


def build_parser():
    parser = argparse.ArgumentParser(
        prog="drslip",
        description="Oscillating-surface pendulum model: closed-form "
                    "solutions, stability sweeps, and gait planning.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("solve", "sample one closed-form trajectory"),
        ("compare", "closed form vs adaptive integration over random states"),
        ("stability", "exponent sweep over the parameter grid"),
        ("plan", "two-layer gait plan"),
        ("bench", "timing comparison of solve or plan workloads"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", default=None,
                       help="key=value config file or a previous manifest.json")
        p.add_argument("--seed", type=int, default=None,
                       help="64-bit PRNG seed (default 0 or manifest seed)")
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--threads", type=int, default=1,
                       help="worker threads for compare/stability")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    t_start = time.perf_counter()
    try:
        cfg, seed = _load_inputs(args)
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        resolved, walls, outputs = COMMANDS[args.command](
            cfg, seed, out_dir, max(1, args.threads))
        cfg.reject_unknown(_OWN_PREFIXES[args.command], _KNOWN_PREFIXES)
        manifest = {
            "command": args.command,
            "version": __version__,
            "seed": seed,
            "resolved_config": resolved,
            "outputs": outputs,
            "wall_time_ms": {**walls,
                             "total": (time.perf_counter() - t_start) * 1e3},
        }
        _write_json(out_dir / "manifest.json", manifest)
        return 0
    except ConfigError as exc:
        print(f"drslip: config error: {exc}", file=sys.stderr)
        return 2
    except (InfeasibleScheduleError, MaxIterationsError) as exc:
        print(f"drslip: infeasible plan: {exc}", file=sys.stderr)
        return 4
    except (DrsLipError, ValueError, ArithmeticError) as exc:
        print(f"drslip: numeric error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
