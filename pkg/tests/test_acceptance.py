"""Acceptance suite: one test per numbered criterion.

Each test prints a single pass/fail line with its measured quantities
(visible with ``pytest -s``) before asserting, so a red criterion still
reports its numbers. Criteria are self-contained apart from two shared
fixtures: the accuracy/timing workload (criteria 1 and 2) and the
exponent grid (criteria 4 and 5).
"""

import json
import math
import time

import numpy as np
import pytest

from drslip import (Classification, ModelParams, PendulumState,
                    SolutionBasis, VerticalSinusoid, characteristic_exponent,
                    classify, divergence_demo, fit_initial_conditions,
                    integrate, monodromy_exponent, to_mathieu)
from drslip.cli import main
from drslip.mathieu import coefficient_table
from drslip.model import Pitching, equivalent_vertical_sinusoid
from drslip.oracle import PERCENT_ERROR_FLOOR, IntegratorConfig
from drslip.planner import (G1, G2, com_plan, feasibility_report, solve_nlp)
from drslip.planner.gait import polygon_violation
from drslip.cli import _plan_once
from drslip.rng import SplitMix64

MODEL = ModelParams(z0=0.42, g=9.81)
MOTION = VerticalSinusoid(amplitude=0.07, omega=math.pi)
DRS1 = VerticalSinusoid(amplitude=0.10, omega=math.pi)
DRS3_EQUIV = equivalent_vertical_sinusoid(
    Pitching(pitch_amplitude=math.radians(5.0), pitch_frequency=0.4,
             reference_radius=1.0))

SEED = 1


def _report(number, name, ok, detail):
    print(f"\n[criterion {number:02d}] {'PASS' if ok else 'FAIL'} {name}: {detail}")


# ---------------------------------------------------------- criteria 1 + 2

@pytest.fixture(scope="module")
def accuracy_workload():
    """1000 seeded random states, closed form vs integrator at tol 1e-9."""
    rng = SplitMix64(SEED)
    ics = [PendulumState(rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2))
           for _ in range(1000)]
    basis = SolutionBasis.build(to_mathieu(MODEL, MOTION), terms=10)
    grid = np.linspace(0.0, 0.5, 1000)
    samples = basis.sampled(grid)
    cfg = IntegratorConfig(rel_tol=1e-9, abs_tol=1e-9)

    trial_means, trial_maxes, t_analytic, t_numeric = [], [], [], []
    for ic in ics:
        t0 = time.perf_counter()
        coeffs = fit_initial_conditions(basis, ic.x, ic.v)
        xa, _ = samples.combine(coeffs)
        t_analytic.append(time.perf_counter() - t0)

        t0 = time.perf_counter()
        traj = integrate(MODEL, MOTION, ic, (0.0, 0.5), 1000, cfg)
        t_numeric.append(time.perf_counter() - t0)

        pct = (np.abs(xa - traj.positions)
               / np.maximum(np.abs(traj.positions), PERCENT_ERROR_FLOOR) * 100.0)
        trial_means.append(pct.mean())
        trial_maxes.append(pct.max())
    return (np.array(trial_means), np.array(trial_maxes),
            np.array(t_analytic), np.array(t_numeric))


def test_criterion_01_solution_accuracy(accuracy_workload):
    """Per-trial mean guarded percentage error: max < 0.02, mean <= 0.01.

    The per-trial mean over the 1000 sample instants is the published
    accuracy statistic; the raw per-sample maximum is reported alongside
    for transparency (the nanometer denominator guard makes individual
    samples at zero crossings arbitrarily harsh).
    """
    trial_means, trial_maxes, _, _ = accuracy_workload
    worst_mean = float(trial_means.max())
    grand_mean = float(trial_means.mean())
    ok = worst_mean < 0.02 and grand_mean <= 0.01
    _report(1, "solution accuracy", ok,
            f"max trial-mean {worst_mean:.3e}% (limit 0.02), "
            f"mean {grand_mean:.3e}% (limit 0.01), "
            f"sd {float(trial_means.std()):.3e}%, "
            f"worst single sample {float(trial_maxes.max()):.3e}%")
    assert worst_mean < 0.02
    assert grand_mean <= 0.01


def test_criterion_02_evaluation_speedup(accuracy_workload):
    _, _, t_analytic, t_numeric = accuracy_workload
    ratio = float(t_numeric.mean() / t_analytic.mean())
    ok = ratio >= 5.0
    _report(2, "evaluation speedup", ok,
            f"analytic {t_analytic.mean()*1e3:.4f} ms, "
            f"numeric {t_numeric.mean()*1e3:.4f} ms, "
            f"ratio {ratio:.1f} (limit >= 5)")
    assert ratio >= 5.0


# -------------------------------------------------------------- criterion 3

def test_criterion_03_classical_limit():
    basis = SolutionBasis.build(to_mathieu(MODEL, VerticalSinusoid(0.0, math.pi)))
    lam = math.sqrt(MODEL.g / MODEL.z0)
    ts = np.linspace(0.0, 1.0, 200)
    rng = SplitMix64(SEED)
    worst = 0.0
    for _ in range(100):
        x0 = rng.uniform(-0.2, 0.2)
        v0 = rng.uniform(-0.2, 0.2)
        x, _ = basis.fit(x0, v0).evaluate(ts)
        exact = x0 * np.cosh(lam * ts) + (v0 / lam) * np.sinh(lam * ts)
        # relative to the trajectory scale (pointwise blows up at roots)
        worst = max(worst, float(np.abs(x - exact).max()
                                 / max(np.abs(exact).max(), 1e-30)))
    ok = worst < 1e-9
    _report(3, "classical-limit equivalence", ok,
            f"worst relative deviation {worst:.3e} (limit 1e-9)")
    assert worst < 1e-9


# ---------------------------------------------------------- criteria 4 + 5

def _acceptance_grid():
    amplitudes = np.linspace(0.0, 1.0, 6)[1:]
    omegas = np.linspace(0.0, 2.0 * math.pi, 6)[1:]
    heights = np.linspace(0.3, 0.55, 5)
    return [(a, w, z) for a in amplitudes for w in omegas for z in heights]


@pytest.fixture(scope="module")
def grid_exponents():
    rows = []
    for a, w, z in _acceptance_grid():
        mp = to_mathieu(ModelParams(z0=z), VerticalSinusoid(a, w))
        rows.append(((a, w, z),
                     characteristic_exponent(mp).mu,
                     monodromy_exponent(mp).mu))
    return rows


def test_criterion_04_exponent_cross_validation(grid_exponents):
    worst = 0.0
    worst_point = None
    for point, mu_formula, mu_mono in grid_exponents:
        rel = abs(mu_formula - mu_mono) / abs(mu_mono)
        if rel > worst:
            worst, worst_point = rel, point
    ok = worst < 1e-6
    _report(4, "exponent cross-validation", ok,
            f"worst relative disagreement {worst:.3e} at {worst_point} "
            f"(limit 1e-6, {len(grid_exponents)} grid points)")
    assert worst < 1e-6


def test_criterion_05_instability_reproduction(grid_exponents):
    # part 1: classification over the grid
    not_unstable = []
    for (a, w, z), mu_formula, _ in grid_exponents:
        report = classify(ModelParams(z0=z), VerticalSinusoid(a, w))
        if report.classification is not Classification.UNSTABLE:
            not_unstable.append(((a, w, z), report.classification.value,
                                 report.mu2))

    # part 2: divergence of the closed-form solution at the reference point
    rng = SplitMix64(SEED)
    n_crossed = 0
    for _ in range(100):
        x0, v0 = rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)
        if x0 == 0.0 and v0 == 0.0:
            continue
        t_cross = divergence_demo(MODEL, MOTION, PendulumState(x0, v0),
                                  horizon=5.0, threshold=10.0)
        if t_cross is not None:
            n_crossed += 1
    stays_zero = divergence_demo(MODEL, MOTION, PendulumState(0.0, 0.0),
                                 horizon=5.0, threshold=10.0) is None

    ok = not not_unstable and n_crossed == 100 and stays_zero
    detail = (f"{125 - len(not_unstable)}/125 grid points Unstable, "
              f"{n_crossed}/100 random states exceed 10 m within 5 s, "
              f"zero state bounded: {stays_zero}")
    if not_unstable:
        detail += (f"; counterexample(s): "
                   + "; ".join(f"A={p[0]:.2f} omega={p[1]:.4f} z0={p[2]:.4f} "
                               f"-> {c} (mu2={m:.6f})"
                               for p, c, m in not_unstable)
                   + " - the first stability band of the cosine-forced "
                     "equation crosses the sampled box at high frequency; "
                     "blanket instability over these ranges does not hold")
    _report(5, "instability reproduction", ok, detail)
    assert n_crossed == 100
    assert stays_zero
    assert not not_unstable, detail


# -------------------------------------------------------------- criterion 6

def _inverted_recurrence(mu, params, terms, depth):
    from drslip import beta

    b = {n: beta(-n, mu, params) for n in range(1, depth + 1)}
    denom = {depth: 1.0 + 0j}
    for n in range(depth - 1, 0, -1):
        denom[n] = 1.0 - b[n] * b[n + 1] / denom[n + 1]
    values = [1.0 + 0j]
    for n in range(1, terms + 1):
        values.append(-b[n] * values[n - 1] / denom[n])
    return np.array(values)


def test_criterion_06_coefficient_structure():
    rng = SplitMix64(SEED)
    worst_conj = 0.0
    worst_depth = 0.0
    checked = 0
    while checked < 50:
        a = rng.uniform(0.01, 1.0)
        w = rng.uniform(1.0, 2.0 * math.pi)
        z = rng.uniform(0.3, 0.55)
        mp = to_mathieu(ModelParams(z0=z), VerticalSinusoid(a, w))
        exp = characteristic_exponent(mp)
        if abs(exp.mu.imag) > 1e-12:
            continue  # inside the narrow stability band: conjugate
            # symmetry presumes a real exponent
        table = coefficient_table(exp, mp, terms=10, depth=30)
        neg = _inverted_recurrence(exp.mu, mp, 10, 30)
        for n in range(11):
            worst_conj = max(worst_conj,
                             abs(table.coefficient(-n) - neg[n]),
                             abs(table.coefficient(-n)
                                 - np.conj(table.coefficient(n))))
        deeper = coefficient_table(exp, mp, terms=10, depth=40)
        worst_depth = max(worst_depth,
                          float(np.abs(table.values - deeper.values).max()))
        checked += 1

    zero_forcing = to_mathieu(MODEL, VerticalSinusoid(0.0, math.pi))
    trivial = coefficient_table(characteristic_exponent(zero_forcing),
                                zero_forcing, terms=10)
    trivial_ok = (trivial.values[0] == 1.0 + 0j
                  and np.all(trivial.values[1:] == 0.0))

    ok = worst_conj < 1e-12 and worst_depth < 1e-12 and trivial_ok
    _report(6, "coefficient structure", ok,
            f"worst conjugate mismatch {worst_conj:.3e}, worst depth "
            f"sensitivity {worst_depth:.3e} (limits 1e-12), zero-forcing "
            f"table trivial: {trivial_ok}")
    assert worst_conj < 1e-12
    assert worst_depth < 1e-12
    assert trivial_ok


# -------------------------------------------------------------- criterion 7

def test_criterion_07_equation_residual():
    basis = SolutionBasis.build(to_mathieu(MODEL, MOTION), terms=10)
    rng = SplitMix64(SEED)
    worst = 0.0
    for _ in range(100):
        sol = basis.fit(rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2))
        ts = np.array([rng.uniform(0.0, 0.5) for _ in range(200)])
        x, _ = sol.evaluate(ts)
        acc = sol.evaluate_second_derivative(ts)
        k = (MODEL.g - MOTION.amplitude * MOTION.omega ** 2
             * np.sin(MOTION.omega * ts)) / MODEL.z0
        ratio = np.abs(acc - k * x) / (1e-6 * np.maximum(np.abs(x), 1e-9))
        worst = max(worst, float(ratio.max()))
    ok = worst <= 1.0
    _report(7, "equation residual", ok,
            f"worst residual at {worst:.3e} of the allowance "
            f"(1e-6 * max(|x|, 1e-9))")
    assert worst <= 1.0


# -------------------------------------------------------------- criterion 8

@pytest.mark.parametrize("label,gait,motion", [
    ("G1+DRS1", G1, DRS1),
    ("G2+DRS3-equivalent", G2, DRS3_EQUIV),
])
def test_criterion_08_planner_feasibility(label, gait, motion):
    model = ModelParams(z0=gait.z0, g=9.81)
    problem, result, _ = _plan_once(gait, motion, model, n_check=10, tol=1e-6,
                                    backend_name="analytic", pos_bound=0.5,
                                    vel_bound=1.0, polygon_margin=0.0,
                                    terms=10)
    plan = com_plan(result.x, gait, motion, model)

    rng = SplitMix64(SEED)
    worst_friction = 0.0
    worst_polygon = -np.inf
    for k, spec in enumerate(plan.phases):
        sol_x, sol_y = plan.solutions[k]
        for _ in range(100):
            t = rng.uniform(spec.start, spec.end)
            x, _ = sol_x.evaluate(t)
            y, _ = sol_y.evaluate(t)
            worst_friction = max(worst_friction, math.hypot(x, y) / gait.z0)
            sx, sy = spec.cop_reference
            worst_polygon = max(worst_polygon, polygon_violation(
                spec.halfplanes_at(t), sx + x, sy + y))

    jumps = plan.boundary_discontinuities()
    start, _ = plan.world_state(0.0)
    end, _ = plan._phase_world(3, gait.gait_period)
    avg_x = (end[0] - start[0]) / gait.gait_period
    avg_y = (end[1] - start[1]) / gait.gait_period

    ok = (result.constraint_violation <= 1e-6
          and worst_friction <= gait.friction_coefficient + 1e-6
          and worst_polygon <= 1e-6
          and max(jumps) <= 1e-6
          and abs(avg_x - gait.avg_velocity) <= 1e-6
          and abs(avg_y) <= 1e-6)
    _report(8, f"planner feasibility {label}", ok,
            f"violation {result.constraint_violation:.2e} (<=1e-6), "
            f"friction {worst_friction:.3f} (<= {gait.friction_coefficient}), "
            f"polygon {worst_polygon:.2e} (<=1e-6), "
            f"continuity {max(jumps):.2e} m (<=1e-6), "
            f"avg velocity ({avg_x:.8f}, {avg_y:.2e}) m/s "
            f"(target {gait.avg_velocity})")
    assert result.constraint_violation <= 1e-6
    assert worst_friction <= gait.friction_coefficient + 1e-6
    assert worst_polygon <= 1e-6
    assert max(jumps) <= 1e-6
    assert abs(avg_x - gait.avg_velocity) <= 1e-6
    assert abs(avg_y) <= 1e-6


# -------------------------------------------------------------- criterion 9

def test_criterion_09_planner_speedup():
    model = ModelParams(z0=G1.z0, g=9.81)
    results = {}
    for backend in ("analytic", "numeric"):
        problem, result, wall = _plan_once(
            G1, DRS1, model, n_check=10, tol=1e-6, backend_name=backend,
            pos_bound=0.5, vel_bound=1.0, polygon_margin=0.0, terms=10)
        results[backend] = (problem, result, wall)

    ratio = results["numeric"][2] / results["analytic"][2]
    cross = max(
        results["analytic"][0].violation(results["numeric"][1].x),
        results["numeric"][0].violation(results["analytic"][1].x),
    )
    ok = ratio >= 2.0 and cross <= 1e-5
    _report(9, "planner speedup", ok,
            f"analytic {results['analytic'][2]:.0f} ms, "
            f"numeric {results['numeric'][2]:.0f} ms, ratio {ratio:.1f} "
            f"(limit >= 2), cross-backend constraint residual {cross:.2e} "
            f"(limit 1e-5)")
    assert ratio >= 2.0
    assert cross <= 1e-5


# ------------------------------------------------------------- criterion 10

def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items()
                if "_ms" not in k and k not in ("wall_time_ms", "speedup_ratio")}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def test_criterion_10_cli_determinism(tmp_path):
    configs = {
        "solve": "solve.samples = 200\n",
        "compare": "compare.trials = 5\ncompare.samples = 200\n",
        "stability": ("stability.a_count = 2\nstability.omega_count = 2\n"
                      "stability.z0_count = 2\n"),
        "plan": "gait.preset = g1\nsurface.preset = drs1\nplan.dt = 0.05\n",
        "bench": "bench.workload = solve\nbench.reps = 5\n",
    }
    mismatches = []
    for command, text in configs.items():
        cfg = tmp_path / f"{command}.cfg"
        cfg.write_text(text)
        first = tmp_path / f"{command}_1"
        second = tmp_path / f"{command}_2"
        assert main([command, "--config", str(cfg), "--seed", "11",
                     "--out", str(first)]) == 0
        # replay from the recorded manifest
        assert main([command, "--config", str(first / "manifest.json"),
                     "--out", str(second)]) == 0
        for path in sorted(first.iterdir()):
            other = second / path.name
            if path.suffix == ".csv":
                if path.read_bytes() != other.read_bytes():
                    mismatches.append(f"{command}/{path.name}")
            elif path.suffix == ".json":
                a = _strip_timing(json.loads(path.read_text()))
                b = _strip_timing(json.loads(other.read_text()))
                if a != b:
                    mismatches.append(f"{command}/{path.name}")
    ok = not mismatches
    _report(10, "manifest determinism", ok,
            "all five commands replay byte-identically from their manifests"
            if ok else f"mismatched outputs: {mismatches}")
    assert not mismatches
