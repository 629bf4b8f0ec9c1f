"""Lower planning layer: full-body Cartesian trajectories.

Pure interpolation around the mass-trajectory plan: the base follows the
planned mass position at constant height above the surface, base pitch
complies with the surface orientation, stance feet ride the surface, and
each swing foot follows a degree-6 Bezier connecting consecutive
footholds. Swing interpolation happens in the base frame, where both
foothold endpoints sit at height -z0 regardless of the surface motion,
so the surface oscillation cancels out of the clearance profile exactly.
"""

import math
from dataclasses import dataclass

import numpy as np

from ..model import Pitching, surface_height
from .gait import FEET

__all__ = ["BezierCurve", "swing_bezier", "FullBodyPlan", "lower_layer",
           "sample_plan", "PLAN_CSV_COLUMNS", "foot_mask"]

PLAN_CSV_COLUMNS = (
    ("t_s", "base_x_m", "base_y_m", "base_z_m", "base_pitch_rad")
    + tuple(f"foot{f}_{ax}_m" for f in FEET for ax in "xyz")
    + ("phase_id", "support_feet_mask")
)

# Fraction of the apex control height reached by the symmetric template:
# the middle three Bernstein polynomials of degree 6 sum to 50/64 at s=1/2.
_APEX_GAIN = 50.0 / 64.0

_BINOM6 = np.array([1, 6, 15, 20, 15, 6, 1], dtype=float)
_BINOM5 = np.array([1, 5, 10, 10, 5, 1], dtype=float)


@dataclass(frozen=True, eq=False)
class BezierCurve:
    """Degree-6 Bezier with 7 three-dimensional control points."""

    control: np.ndarray    # (7, 3)

    def __post_init__(self):
        if self.control.shape != (7, 3):
            raise ValueError(f"expected 7 control points, got {self.control.shape}")

    def position(self, s):
        s = float(s)
        w = _BINOM6 * (s ** np.arange(7)) * ((1.0 - s) ** np.arange(6, -1, -1))
        return w @ self.control

    def velocity(self, s):
        """Derivative with respect to the curve parameter s."""
        s = float(s)
        d = 6.0 * np.diff(self.control, axis=0)
        w = _BINOM5 * (s ** np.arange(6)) * ((1.0 - s) ** np.arange(5, -1, -1))
        return w @ d


def swing_bezier(start, end, clearance):
    """Symmetric swing template between two base-frame footholds.

    Repeated endpoint control points give zero velocity at lift-off and
    touch-down; the three middle points sit at a common apex height
    scaled so the curve's maximum clearance equals ``clearance`` exactly
    (the template peaks at s = 1/2 with gain 50/64).
    """
    if not (clearance > 0.0):
        raise ValueError(f"step clearance must be positive, got {clearance}")
    start = np.asarray(start, dtype=float)
    end = np.asarray(end, dtype=float)
    along = np.array([0.0, 0.0, 0.25, 0.5, 0.75, 1.0, 1.0])
    pts = start + np.outer(along, end - start)
    bump = clearance / _APEX_GAIN
    pts[2:5, 2] += bump
    return BezierCurve(control=pts)


def foot_mask(feet):
    """Bitmask over the canonical foot order (FR=1, FL=2, RR=4, RL=8)."""
    return sum(1 << FEET.index(f) for f in feet)


@dataclass(frozen=True, eq=False)
class FullBodyPlan:
    """Sampled-anywhere full-body trajectory over the gait cycle."""

    com: object                  # CoMPlan
    gait: object
    motion: object               # original surface motion (pitch source)
    swings: tuple                # per phase: (BezierCurve, t_lift, t_land)

    def base_position(self, t):
        pos, _ = self.com.world_state(t)
        z = surface_height(self.com.motion, t) + self.gait.z0
        return np.array([pos[0], pos[1], z])

    def base_pitch(self, t):
        if isinstance(self.motion, Pitching):
            return self.motion.pitch_angle(t)
        return 0.0

    def _cycle(self, t):
        period = self.gait.gait_period
        cycle = int(math.floor(t / period))
        return cycle, t - cycle * period

    def phase_index(self, t):
        _, t_c = self._cycle(t)
        return min(int(t_c / self.gait.phase_duration), 3)

    def support_feet(self, t):
        k = self.phase_index(t)
        spec = self.com.phases[k]
        _, t_c = self._cycle(t)
        if spec.dwell > 0.0 and t_c < spec.start + spec.dwell:
            return FEET
        return spec.support_feet

    def foot_position(self, foot, t):
        cycle, t_c = self._cycle(t)
        shift = np.array([cycle * self.gait.stride, 0.0, 0.0])
        seq = self.gait.contact_sequence
        k_f = seq.index(foot)
        curve, t_lift, t_land = self.swings[k_f]
        schedule = self.gait.schedule()
        if t_c < t_lift:
            fx, fy = schedule.initial[foot]
            return np.array([fx, fy, surface_height(self.com.motion, t)]) + shift
        if t_c >= t_land:
            fx, fy = schedule.landings[foot]
            return np.array([fx, fy, surface_height(self.com.motion, t)]) + shift
        s = (t_c - t_lift) / (t_land - t_lift)
        return self.base_position(t) + curve.position(s)


def lower_layer(com, gait, motion):
    """Interpolate the full-body plan from a mass-trajectory plan.

    Swing intervals start after the phase's four-leg dwell (where one is
    inserted) and end at the landing event. Bezier endpoints are the
    footholds expressed in the base frame at lift-off and touch-down,
    which places both at height -z0 exactly.
    """
    schedule = gait.schedule()
    swings = []
    plan = FullBodyPlan(com=com, gait=gait, motion=motion, swings=())
    for k, spec in enumerate(com.phases):
        foot = spec.swing_foot
        t_lift = spec.start + spec.dwell
        t_land = spec.end
        base_lift = plan.base_position(t_lift)
        base_land = plan.base_position(t_land)
        ox, oy = schedule.initial[foot]
        nx, ny = schedule.landings[foot]
        start = np.array([ox, oy, surface_height(com.motion, t_lift)]) - base_lift
        end = np.array([nx, ny, surface_height(com.motion, t_land)]) - base_land
        swings.append((swing_bezier(start, end, gait.max_step_height),
                       t_lift, t_land))
    return FullBodyPlan(com=com, gait=gait, motion=motion, swings=tuple(swings))


def sample_plan(plan, dt, horizon=None):
    """Uniformly sampled plan rows, one per time step.

    Returns (columns, rows) with the stable column order of
    ``PLAN_CSV_COLUMNS``; row count is floor(horizon / dt) + 1.
    """
    if not (dt > 0.0):
        raise ValueError(f"dt must be positive, got {dt}")
    if horizon is None:
        horizon = plan.gait.gait_period
    n_rows = int(math.floor(horizon / dt + 1e-9)) + 1
    rows = []
    for i in range(n_rows):
        t = i * dt
        base = plan.base_position(t)
        row = [t, base[0], base[1], base[2], plan.base_pitch(t)]
        for foot in FEET:
            row.extend(plan.foot_position(foot, t))
        row.append(plan.phase_index(t) + 1)
        row.append(foot_mask(plan.support_feet(t)))
        rows.append(tuple(row))
    return PLAN_CSV_COLUMNS, rows
