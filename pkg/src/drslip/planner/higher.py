"""Higher planning layer: per-phase initial states from a small NLP.

The decision vector holds the initial horizontal position and velocity
of the mass, relative to the phase support point, for each of the four
phases (16 numbers). Those initial states determine the trajectories
completely, so the planner only has to pick them such that

  * the world-frame path is continuous across landing events and, after
    a full cycle, repeats shifted by one stride,
  * the average velocity matches the request (zero laterally),
  * sampled path constraints hold: the horizontal force ratio stays in
    the friction cone and the mass projection stays inside the support
    region of the moment,
  * the decision variables stay inside user bounds.

Constraint evaluation goes through a trajectory backend. The default
backend evaluates the closed-form solution (the basis is built once per
problem; each candidate costs a 2x2 fit and a short series sum per phase
and axis). This module deliberately has no dependency on the numerical
integrator; a drop-in integrating backend lives in a separate module for
benchmark comparisons.
"""

from dataclasses import dataclass

import numpy as np

from ..mathieu import SolutionBasis
from ..model import as_vertical_sinusoid, to_mathieu
from ..nlp import NLProblem, solve_nlp
from .gait import phase_specs, polygon_violation

__all__ = [
    "DecisionVector",
    "AnalyticTrajectoryBackend",
    "build_nlp",
    "com_plan",
    "CoMPlan",
    "feasibility_report",
]

DEFAULT_N_CHECK = 10
DEFAULT_POS_BOUND = 0.5     # m
DEFAULT_VEL_BOUND = 1.0     # m/s


@dataclass(frozen=True)
class DecisionVector:
    """Per-phase initial states (x0, y0, vx0, vy0), phase support frame."""

    values: tuple   # 16 floats, phase-major

    @classmethod
    def from_array(cls, arr):
        arr = np.asarray(arr, dtype=float)
        if arr.shape != (16,):
            raise ValueError(f"decision vector must have 16 entries, got {arr.shape}")
        return cls(values=tuple(float(v) for v in arr))

    def as_array(self):
        return np.array(self.values)

    def phase(self, k):
        """(x0, y0, vx0, vy0) of phase k (1-based)."""
        x0, y0, vx0, vy0 = self.values[4 * (k - 1): 4 * k]
        return x0, y0, vx0, vy0


class AnalyticTrajectoryBackend:
    """Closed-form trajectory evaluation for constraint sampling.

    The exponent and coefficient table are computed once. Per candidate
    and phase, fitting the two branch weights is a 2x2 solve against a
    precomputed matrix, and states come from evaluating the series.
    """

    name = "analytic"

    def __init__(self, model, motion, terms=10):
        self.model = model
        self.motion = as_vertical_sinusoid(motion)
        self.basis = SolutionBasis.build(to_mathieu(model, self.motion),
                                         terms=terms)
        self._fit = {}

    def prepare(self, phase_starts):
        for t0 in phase_starts:
            m = self.basis.fit_matrix(t0)
            det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
            self._fit[t0] = (m, det)

    def states(self, t0, x0, v0, times):
        """Positions and velocities at ``times`` for the solution with
        state (x0, v0) at t0. One scalar axis per call."""
        m, det = self._fit[t0]
        a1 = (x0 * m[1, 1] - v0 * m[0, 1]) / det
        a2 = (v0 * m[0, 0] - x0 * m[1, 0]) / det
        b1, b2, db1, db2 = self.basis._components(times)
        return a1 * b1 + a2 * b2, a1 * db1 + a2 * db2


def _phase_times(spec, n_check):
    """Right-endpoint constraint-sampling times.

    Evenly spaced, excluding the phase start (it equals the previous
    phase's sampled endpoint through the continuity constraints) and
    including the phase end. Sampling the end against the phase's own
    support region keeps the trajectory from crossing a shared support
    edge early: the crossing is pushed into the following four-leg
    dwell, whose quadrilateral support covers both triangles.
    """
    width = (spec.end - spec.start) / n_check
    return spec.start + (np.arange(1, n_check + 1)) * width


def build_nlp(gait, motion, model, *, n_check=DEFAULT_N_CHECK, backend=None,
              pos_bound=DEFAULT_POS_BOUND, vel_bound=DEFAULT_VEL_BOUND,
              polygon_margin=0.0, cost=None):
    """Assemble the cycle NLP.

    Equalities (10): world-position continuity at the four landing events
    (cyclic, the cycle end connecting to the cycle start shifted by one
    stride) plus the average forward velocity and zero average lateral
    velocity. Inequalities (2 per sample time, n_check per phase):
    squared friction ratio and support-polygon membership (max over edge
    half-planes, with an optional inward margin). The 32 decision-bound
    inequalities are enforced natively by the solver.

    ``cost`` defaults to the trivial objective: the problem is a pure
    feasibility search unless a cost callable is supplied.
    """
    gait.validate_motion(motion)
    sinusoid = as_vertical_sinusoid(motion)
    if backend is None:
        backend = AnalyticTrajectoryBackend(model, sinusoid)
    phases = phase_specs(gait)
    backend.prepare([p.start for p in phases])

    sample_times = [_phase_times(p, n_check) for p in phases]
    stride = gait.stride
    period = gait.gait_period
    mu_f2 = gait.friction_coefficient ** 2
    z0_sq = model.z0 ** 2
    supports = [np.array(p.cop_reference) for p in phases]
    plane_sets = [
        [p.halfplanes_at(t) for t in times]
        for p, times in zip(phases, sample_times)
    ]

    def endpoints(alpha):
        """World position of each phase at its end time."""
        out = []
        for k, p in enumerate(phases):
            x0, y0, vx0, vy0 = alpha[4 * k: 4 * k + 4]
            te = np.array([p.end])
            xs, _ = backend.states(p.start, x0, vx0, te)
            ys, _ = backend.states(p.start, y0, vy0, te)
            out.append(supports[k] + np.array([float(xs[0]), float(ys[0])]))
        return out

    def equalities(alpha):
        ends = endpoints(alpha)
        res = np.empty(10)
        for k in range(3):
            start_next = supports[k + 1] + alpha[4 * (k + 1): 4 * (k + 1) + 2]
            res[2 * k: 2 * k + 2] = ends[k] - start_next
        wrap = supports[0] + alpha[0:2] + np.array([stride, 0.0])
        res[6:8] = ends[3] - wrap
        start = supports[0] + alpha[0:2]
        res[8] = (ends[3][0] - start[0]) / period - gait.avg_velocity
        res[9] = (ends[3][1] - start[1]) / period
        return res

    def inequalities(alpha):
        res = np.empty(2 * n_check * len(phases))
        i = 0
        for k, p in enumerate(phases):
            x0, y0, vx0, vy0 = alpha[4 * k: 4 * k + 4]
            times = sample_times[k]
            xs, _ = backend.states(p.start, x0, vx0, times)
            ys, _ = backend.states(p.start, y0, vy0, times)
            planes = plane_sets[k]
            sx, sy = supports[k]
            for j in range(n_check):
                res[i] = (xs[j] ** 2 + ys[j] ** 2) / z0_sq - mu_f2
                res[i + 1] = polygon_violation(
                    planes[j], sx + xs[j], sy + ys[j]) + polygon_margin
                i += 2
        return res

    lower = np.tile([-pos_bound, -pos_bound, -vel_bound, -vel_bound], 4)
    upper = -lower
    return NLProblem(
        dim=16,
        cost=cost or (lambda alpha: 0.0),
        equalities=equalities,
        inequalities=inequalities,
        lower=lower,
        upper=upper,
        n_eq=10,
        n_ineq=2 * n_check * len(phases),
        metadata={
            "phases": phases,
            "sample_times": sample_times,
            "backend": backend.name,
            "n_check": n_check,
            "gait": gait,
            "motion": sinusoid,
            "model": model,
        },
    )


@dataclass(frozen=True, eq=False)
class CoMPlan:
    """Fitted per-phase solutions plus the geometry to evaluate them."""

    gait: object
    motion: object            # vertical sinusoid used by the dynamics
    model: object
    phases: tuple
    solutions: tuple          # per phase: (solution_x, solution_y)

    def phase_at(self, t):
        t_cycle = t % self.gait.gait_period
        k = min(int(t_cycle / self.gait.phase_duration), 3)
        return k, t_cycle, int(t // self.gait.gait_period)

    def world_state(self, t):
        """World position and velocity of the mass at time t.

        Times beyond one cycle repeat the plan shifted by one stride per
        cycle (the cyclic constraints make that exact).
        """
        k, t_cycle, cycle = self.phase_at(t)
        spec = self.phases[k]
        sol_x, sol_y = self.solutions[k]
        x, vx = sol_x.evaluate(t_cycle)
        y, vy = sol_y.evaluate(t_cycle)
        sx, sy = spec.cop_reference
        shift = cycle * self.gait.stride
        return (np.array([sx + x + shift, sy + y]), np.array([vx, vy]))

    def relative_state(self, t):
        k, t_cycle, _ = self.phase_at(t)
        sol_x, sol_y = self.solutions[k]
        x, vx = sol_x.evaluate(t_cycle)
        y, vy = sol_y.evaluate(t_cycle)
        return np.array([x, y]), np.array([vx, vy])

    def boundary_discontinuities(self):
        """World-position jumps at the landing events (cyclic)."""
        jumps = []
        for k in range(4):
            spec = self.phases[k]
            end, _ = self._phase_world(k, spec.end)
            if k < 3:
                nxt, _ = self._phase_world(k + 1, spec.end)
            else:
                nxt, _ = self._phase_world(0, 0.0)
                nxt = nxt + np.array([self.gait.stride, 0.0])
            jumps.append(float(np.hypot(*(end - nxt))))
        return jumps

    def _phase_world(self, k, t):
        spec = self.phases[k]
        sol_x, sol_y = self.solutions[k]
        x, vx = sol_x.evaluate(t)
        y, vy = sol_y.evaluate(t)
        sx, sy = spec.cop_reference
        return np.array([sx + x, sy + y]), np.array([vx, vy])


def com_plan(alpha, gait, motion, model, terms=10):
    """Fit the four per-phase solution pairs for a decision vector."""
    if isinstance(alpha, DecisionVector):
        alpha = alpha.as_array()
    alpha = np.asarray(alpha, dtype=float)
    sinusoid = as_vertical_sinusoid(motion)
    basis = SolutionBasis.build(to_mathieu(model, sinusoid), terms=terms)
    phases = tuple(phase_specs(gait))
    solutions = []
    for k, spec in enumerate(phases):
        x0, y0, vx0, vy0 = alpha[4 * k: 4 * k + 4]
        solutions.append((basis.fit(x0, vx0, t0=spec.start),
                          basis.fit(y0, vy0, t0=spec.start)))
    return CoMPlan(gait=gait, motion=sinusoid, model=model,
                   phases=phases, solutions=tuple(solutions))


def feasibility_report(plan, n_random=100, rng=None, inflate=1e-6):
    """Post-check a plan at random times per phase.

    Returns a dict with the worst friction ratio, worst polygon
    violation (inflated polygons), and the boundary discontinuities.
    """
    import random as _random
    rnd = rng or _random.Random(0)
    worst_friction = 0.0
    worst_polygon = -np.inf
    for k, spec in enumerate(plan.phases):
        sol_x, sol_y = plan.solutions[k]
        for _ in range(n_random):
            t = rnd.uniform(spec.start, spec.end)
            x, _ = sol_x.evaluate(t)
            y, _ = sol_y.evaluate(t)
            worst_friction = max(worst_friction,
                                 np.hypot(x, y) / plan.model.z0)
            sx, sy = spec.cop_reference
            v = polygon_violation(spec.halfplanes_at(t), sx + x, sy + y)
            worst_polygon = max(worst_polygon, v - inflate)
    return {
        "worst_friction_ratio": float(worst_friction),
        "worst_polygon_violation": float(worst_polygon),
        "boundary_jumps_m": plan.boundary_discontinuities(),
    }
