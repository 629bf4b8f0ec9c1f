"""Reduced-order pendulum model of walking on a vertically moving surface.

A point mass rides at constant height ``z0`` above a support point that is
attached to a rigid surface moving in the world frame. With the surface
acceleration known as a function of time, the horizontal dynamics of the
mass relative to the support point decouple per axis into

    x'' - ((g + z_ws''(t)) / z0) * x = 0,

a linear time-varying second-order equation. For a vertical sinusoidal
surface motion ``z_ws = A sin(w t + phase)`` the substitution
``tau = (pi/2 + w t + phase) / 2`` turns it into the standard Mathieu form

    d^2x/dtau^2 + (c0 - 2 c1 cos 2 tau) x = 0,

with ``c0 = -4 g / (w^2 z0)`` and ``c1 = 2 A / z0``. Everything downstream
(closed-form exponent, series solution, stability, planning) operates on
that pair of dimensionless coefficients.
"""

import math
from dataclasses import dataclass

__all__ = [
    "ModelParams",
    "VerticalSinusoid",
    "Pitching",
    "MathieuParams",
    "PendulumState",
    "surface_height",
    "surface_accel",
    "equivalent_vertical_sinusoid",
    "to_mathieu",
    "axial_force",
    "tau_of_t",
    "t_of_tau",
]

# Largest pitch amplitude (rad) for which the single-harmonic vertical
# approximation of a pitching surface is accepted.
MAX_PITCH_FOR_CONVERSION = math.radians(15.0)


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters: mass height, gravity, and total mass."""

    z0: float
    g: float = 9.81
    m: float = 25.0

    def __post_init__(self):
        if not (self.z0 > 0.0):
            raise ValueError(f"z0 must be positive, got {self.z0}")
        if not (self.g > 0.0):
            raise ValueError(f"g must be positive, got {self.g}")
        if not (self.m > 0.0):
            raise ValueError(f"m must be positive, got {self.m}")


@dataclass(frozen=True)
class VerticalSinusoid:
    """Vertical surface motion z_ws(t) = amplitude * sin(omega t + phase)."""

    amplitude: float
    omega: float
    phase: float = 0.0

    def __post_init__(self):
        if self.amplitude < 0.0:
            raise ValueError(f"amplitude must be >= 0, got {self.amplitude}")
        if not (self.omega > 0.0):
            raise ValueError(f"omega must be positive, got {self.omega}")

    @property
    def period(self):
        return 2.0 * math.pi / self.omega


@dataclass(frozen=True)
class Pitching:
    """Surface pitching about a horizontal axis.

    ``reference_radius`` is the distance of the contact point of interest
    from the rotation axis; points at different radii see different
    vertical displacements.
    """

    pitch_amplitude: float      # rad
    pitch_frequency: float      # Hz
    reference_radius: float     # m

    def __post_init__(self):
        if not (0.0 <= self.pitch_amplitude < math.pi / 2):
            raise ValueError(
                f"pitch amplitude must be in [0, pi/2), got {self.pitch_amplitude}")
        if not (self.pitch_frequency > 0.0):
            raise ValueError(
                f"pitch frequency must be positive, got {self.pitch_frequency}")
        if not (self.reference_radius > 0.0):
            raise ValueError(
                f"reference radius must be positive, got {self.reference_radius}")

    def pitch_angle(self, t):
        return self.pitch_amplitude * math.sin(2.0 * math.pi * self.pitch_frequency * t)


@dataclass(frozen=True)
class MathieuParams:
    """Dimensionless Mathieu coefficients plus the time mapping.

    ``omega`` and ``phase`` are retained so solutions can be mapped back
    to physical time through tau = (pi/2 + omega t + phase) / 2.
    """

    c0: float
    c1: float
    omega: float
    phase: float = 0.0

    def __post_init__(self):
        if not (self.c0 < 0.0):
            raise ValueError(f"c0 must be negative, got {self.c0}")
        if self.c1 < 0.0:
            raise ValueError(f"c1 must be >= 0, got {self.c1}")
        if not (self.omega > 0.0):
            raise ValueError(f"omega must be positive, got {self.omega}")


@dataclass(frozen=True)
class PendulumState:
    """Horizontal position and velocity of the mass relative to the support."""

    x: float
    v: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.v)):
            raise ValueError(f"state must be finite, got ({self.x}, {self.v})")


def surface_height(motion, t):
    """Vertical position of the tracked contact point at time t."""
    if isinstance(motion, VerticalSinusoid):
        return motion.amplitude * math.sin(motion.omega * t + motion.phase)
    if isinstance(motion, Pitching):
        return motion.reference_radius * math.sin(motion.pitch_angle(t))
    raise TypeError(f"unsupported surface motion {type(motion).__name__}")


def surface_accel(motion, t):
    """Analytic second time derivative of :func:`surface_height`."""
    if isinstance(motion, VerticalSinusoid):
        return -motion.amplitude * motion.omega ** 2 * math.sin(
            motion.omega * t + motion.phase)
    if isinstance(motion, Pitching):
        b = 2.0 * math.pi * motion.pitch_frequency
        theta = motion.pitch_amplitude * math.sin(b * t)
        dtheta = motion.pitch_amplitude * b * math.cos(b * t)
        ddtheta = -motion.pitch_amplitude * b * b * math.sin(b * t)
        return motion.reference_radius * (
            -math.sin(theta) * dtheta ** 2 + math.cos(theta) * ddtheta)
    raise TypeError(f"unsupported surface motion {type(motion).__name__}")


def equivalent_vertical_sinusoid(motion):
    """First-harmonic vertical sinusoid equivalent of a pitching motion.

    A point at radius r on a surface pitching by theta(t) = a sin(2 pi f t)
    moves vertically by r sin(theta(t)); for small a this is dominated by
    the first harmonic r sin(a) sin(2 pi f t). Rejected for amplitudes of
    15 degrees or more, where neglecting the induced horizontal
    acceleration is no longer defensible.
    """
    if not isinstance(motion, Pitching):
        raise TypeError("conversion applies to pitching motions only")
    if motion.pitch_amplitude >= MAX_PITCH_FOR_CONVERSION:
        raise ValueError(
            f"pitch amplitude {math.degrees(motion.pitch_amplitude):.1f} deg "
            "exceeds the 15 deg validity limit of the vertical-sinusoid "
            "approximation")
    return VerticalSinusoid(
        amplitude=motion.reference_radius * math.sin(motion.pitch_amplitude),
        omega=2.0 * math.pi * motion.pitch_frequency,
    )


def as_vertical_sinusoid(motion):
    """Return the motion itself or its vertical-sinusoid equivalent."""
    if isinstance(motion, VerticalSinusoid):
        return motion
    return equivalent_vertical_sinusoid(motion)


def to_mathieu(params, motion):
    """Mathieu coefficients of the relative dynamics under a sinusoid."""
    if not isinstance(motion, VerticalSinusoid):
        raise TypeError("to_mathieu expects a VerticalSinusoid; convert "
                        "pitching motions with equivalent_vertical_sinusoid")
    c0 = -4.0 * params.g / (motion.omega ** 2 * params.z0)
    c1 = 2.0 * motion.amplitude / params.z0
    return MathieuParams(c0=c0, c1=c1, omega=motion.omega, phase=motion.phase)


def axial_force(params, motion, state_xy, t):
    """Magnitude of the leg axial force supporting the mass at time t.

    The leg carries m (z_ws'' + g) / cos(theta), where theta is the leg
    angle from vertical; cos(theta) = z0 / sqrt(x^2 + y^2 + z0^2) > 0.
    """
    x, y = state_xy
    cos_theta = params.z0 / math.sqrt(x * x + y * y + params.z0 ** 2)
    return params.m * (surface_accel(motion, t) + params.g) / cos_theta


def tau_of_t(mathieu, t):
    """Physical time to Mathieu time."""
    return (math.pi / 2 + mathieu.omega * t + mathieu.phase) / 2.0


def t_of_tau(mathieu, tau):
    """Mathieu time back to physical time."""
    return (2.0 * tau - math.pi / 2 - mathieu.phase) / mathieu.omega
