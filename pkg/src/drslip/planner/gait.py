"""Gait parameters, foothold schedules, and per-phase support geometry.

One gait cycle of quadrupedal walking consists of four continuous
phases, each with a single swing foot, separated by landing events.
When two consecutive triangles of support share only an edge (the body
diagonal), a brief four-leg-support dwell is inserted after the landing
so the mass can cross the diagonal; with the default lateral stepping
sequence that happens at the switches into phases 2 and 4.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import InfeasibleScheduleError
from ..model import as_vertical_sinusoid

__all__ = [
    "FEET",
    "GaitParams",
    "FootholdSchedule",
    "PhaseSpec",
    "default_foothold_schedule",
    "phase_specs",
    "polygon_halfplanes",
    "polygon_violation",
    "G1",
    "G2",
]

FEET = ("FR", "FL", "RR", "RL")
DEFAULT_SEQUENCE = ("FR", "RL", "FL", "RR")

# Degenerate-polygon area floor (m^2).
_MIN_POLYGON_AREA = 1e-9


@dataclass(frozen=True)
class FootholdSchedule:
    """World-frame footholds over one cycle.

    ``initial`` holds each foot's position at cycle start; ``landings``
    the position each foot reaches when it lands at the end of its swing
    phase. Over a full cycle every foot advances by one stride.
    """

    initial: dict
    landings: dict

    def position_during(self, foot, phase_index, sequence):
        """Foot position during a given phase (1-based index)."""
        swing_phase = sequence.index(foot) + 1
        return self.landings[foot] if swing_phase < phase_index else self.initial[foot]


@dataclass(frozen=True)
class GaitParams:
    """User-chosen gait description.

    ``foothold_schedule=None`` requests the built-in schedule, which
    centers each foothold over the moving body for the middle of its
    stance window. The four-leg dwell is a fraction of the gait period
    spent with all feet down after the diagonal-crossing landings.
    """

    friction_coefficient: float
    z0: float
    gait_period: float
    avg_velocity: float
    step_length: float
    max_step_height: float
    foothold_schedule: FootholdSchedule = None
    contact_sequence: tuple = DEFAULT_SEQUENCE
    stance_half_length: float = 0.22
    stance_half_width: float = 0.175
    four_leg_dwell_fraction: float = 0.05

    def __post_init__(self):
        for name in ("friction_coefficient", "z0", "gait_period",
                     "max_step_height"):
            value = getattr(self, name)
            if not (value > 0.0):
                raise ValueError(f"{name} must be positive, got {value}")
        # zero admits stepping in place
        for name in ("avg_velocity", "step_length"):
            value = getattr(self, name)
            if value < 0.0:
                raise ValueError(f"{name} must be >= 0, got {value}")
        if sorted(self.contact_sequence) != sorted(FEET):
            raise ValueError(
                f"contact sequence must be a permutation of {FEET}, "
                f"got {self.contact_sequence}")
        if not (0.0 <= self.four_leg_dwell_fraction < 0.25):
            raise ValueError("four-leg dwell fraction must lie in [0, 0.25)")

    @property
    def stride(self):
        """Body advance per gait cycle."""
        return self.avg_velocity * self.gait_period

    @property
    def phase_duration(self):
        return self.gait_period / 4.0

    @property
    def dwell_duration(self):
        return self.four_leg_dwell_fraction * self.gait_period

    def validate_motion(self, motion):
        """Check that the gait period divides the surface period (or the
        reverse), so consecutive cycles see the same surface phase."""
        sinusoid = as_vertical_sinusoid(motion)
        ratio = sinusoid.period / self.gait_period
        for q in (ratio, 1.0 / ratio):
            if abs(q - round(q)) < 1e-9 and round(q) >= 1:
                return
        raise ValueError(
            f"surface period {sinusoid.period:.6g} s and gait period "
            f"{self.gait_period:.6g} s are not integer multiples")

    def schedule(self):
        return self.foothold_schedule or default_foothold_schedule(self)


# Reference gait presets: a 2 s cycle at 5 cm/s with 10 cm steps, and a
# slower 2.5 s cycle at 6 cm/s with longer, flatter steps.
G1 = GaitParams(friction_coefficient=0.5, z0=0.42, gait_period=2.0,
                avg_velocity=0.05, step_length=0.10, max_step_height=0.05)
G2 = GaitParams(friction_coefficient=0.5, z0=0.42, gait_period=2.5,
                avg_velocity=0.06, step_length=0.15, max_step_height=0.04)


def _nominal_offsets(gait):
    lx, ly = gait.stance_half_length, gait.stance_half_width
    return {"FR": (lx, -ly), "FL": (lx, ly), "RR": (-lx, -ly), "RL": (-lx, ly)}


def default_foothold_schedule(gait):
    """Stance-midpoint foothold placement.

    The foot swinging in phase k lands at t = k T/4 and stays down for
    3T/4; placing the landing at the nominal offset from the body
    position at the middle of that stance window keeps the support
    pattern centered under the advancing body.
    """
    offsets = _nominal_offsets(gait)
    t_quarter = gait.phase_duration
    landings = {}
    initial = {}
    for k, foot in enumerate(gait.contact_sequence, start=1):
        ox, oy = offsets[foot]
        t_mid = (k * t_quarter + (k - 1) * t_quarter + gait.gait_period) / 2.0
        landings[foot] = (ox + gait.avg_velocity * t_mid, oy)
        initial[foot] = (landings[foot][0] - gait.step_length, oy)
    return FootholdSchedule(initial=initial, landings=landings)


def polygon_halfplanes(points):
    """Half-plane form of a convex polygon: list of (nx, ny, offset) with
    nx*x + ny*y <= offset inside. Normals are unit length so violations
    are metric distances."""
    pts = np.asarray(points, dtype=float)
    center = pts.mean(axis=0)
    order = np.argsort(np.arctan2(pts[:, 1] - center[1], pts[:, 0] - center[0]))
    pts = pts[order]
    # shoelace area as a degeneracy check
    x, y = pts[:, 0], pts[:, 1]
    area = 0.5 * abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))
    if area < _MIN_POLYGON_AREA:
        raise InfeasibleScheduleError(
            f"support polygon degenerate (area {area:.3e} m^2): {points}")
    planes = []
    for i in range(len(pts)):
        a, b = pts[i], pts[(i + 1) % len(pts)]
        edge = b - a
        normal = np.array([edge[1], -edge[0]])
        normal /= np.linalg.norm(normal)
        if normal @ (center - a) > 0.0:
            normal = -normal
        planes.append((normal[0], normal[1], float(normal @ a)))
    return tuple(planes)


def polygon_violation(halfplanes, x, y):
    """Signed distance-style violation: <= 0 inside, > 0 outside."""
    return max(nx * x + ny * y - b for nx, ny, b in halfplanes)


@dataclass(frozen=True)
class PhaseSpec:
    """One continuous phase of the cycle.

    ``polygon`` is the triangle of the three stance feet; during the
    leading four-leg dwell (if any) the effective support region is
    ``dwell_polygon``, the quadrilateral of all four feet. The model's
    support point for the phase is the triangle centroid.
    """

    index: int                 # 1..4
    start: float
    end: float
    swing_foot: str
    support_feet: tuple
    polygon: tuple             # stance triangle vertices
    cop_reference: tuple       # support point S (triangle centroid)
    dwell: float = 0.0
    dwell_polygon: tuple = None
    halfplanes: tuple = field(default=None, repr=False)
    dwell_halfplanes: tuple = field(default=None, repr=False)

    def support_polygon_at(self, t):
        if self.dwell > 0.0 and t < self.start + self.dwell:
            return self.dwell_polygon
        return self.polygon

    def halfplanes_at(self, t):
        if self.dwell > 0.0 and t < self.start + self.dwell:
            return self.dwell_halfplanes
        return self.halfplanes

    def contains(self, t):
        return self.start <= t < self.end


def phase_specs(gait):
    """The four phases of one cycle, with dwell intervals where two
    consecutive support triangles share only an edge."""
    schedule = gait.schedule()
    seq = gait.contact_sequence
    quarter = gait.phase_duration
    specs = []
    for k in range(1, 5):
        swing = seq[k - 1]
        stance = tuple(f for f in FEET if f != swing)
        tri = tuple(schedule.position_during(f, k, seq) for f in stance)
        quad = tuple(schedule.position_during(f, k, seq) for f in FEET)
        tri_arr = np.asarray(tri)
        centroid = (float(tri_arr[:, 0].mean()), float(tri_arr[:, 1].mean()))
        dwell = gait.dwell_duration if k in (2, 4) else 0.0
        specs.append(PhaseSpec(
            index=k,
            start=(k - 1) * quarter,
            end=k * quarter,
            swing_foot=swing,
            support_feet=stance,
            polygon=tri,
            cop_reference=centroid,
            dwell=dwell,
            dwell_polygon=quad if dwell > 0.0 else None,
            halfplanes=polygon_halfplanes(tri),
            dwell_halfplanes=polygon_halfplanes(quad) if dwell > 0.0 else None,
        ))
    return specs
