"""Floquet stability classification and parameter sweeps.

The undamped Mathieu equation has the exponent pair {-mu, +mu}, so its
solutions are never uniformly attracted to zero: the model is unstable
whenever Re(mu) > 0 and at best marginally (boundedly) stable when the
pair is purely imaginary. Sweeps over surface amplitude, frequency, and
mass height map out where each case occurs.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DrsLipError
from .mathieu import SolutionBasis, characteristic_exponent
from .model import ModelParams, VerticalSinusoid, to_mathieu

__all__ = [
    "Classification",
    "StabilityReport",
    "SweepGrid",
    "SweepPoint",
    "classify",
    "sweep",
    "divergence_demo",
    "SWEEP_CSV_COLUMNS",
]

# Sweeps never evaluate omega = 0 (the coefficient c0 is undefined there).
DEFAULT_OMEGA_MIN = 0.1

SWEEP_CSV_COLUMNS = ("A_m", "omega_rad_s", "z0_m", "re_mu2", "classification")


class Classification(str, Enum):
    STABLE = "Stable"
    UNSTABLE = "Unstable"
    MARGINAL = "Marginal"
    ERROR = "Error"


@dataclass(frozen=True)
class StabilityReport:
    """Exponent pair and boundedness classification.

    mu1 is the Re <= 0 member and mu2 = -mu1 the Re >= 0 member. Since
    the pair is symmetric, Re(mu1) < 0 and Re(mu2) < 0 can never hold
    together: the model is Unstable for Re(mu2) > tol and Marginal when
    the pair sits on the imaginary axis within tolerance.
    """

    mu1: complex
    mu2: complex
    classification: Classification

    def __post_init__(self):
        if self.mu1 != -self.mu2:
            raise ValueError("exponents must form a symmetric pair")


def classify(params, motion, tol=1e-9):
    """Stability report for the given physical parameters and motion."""
    mp = to_mathieu(params, motion)
    mu2 = characteristic_exponent(mp).mu
    if mu2.real > tol:
        label = Classification.UNSTABLE
    elif abs(mu2.real) <= tol:
        label = Classification.MARGINAL
    else:  # unreachable for a Re >= 0 representative; kept for clarity
        label = Classification.STABLE
    return StabilityReport(mu1=-mu2, mu2=mu2, classification=label)


def _axis(lo, hi, count, half_open, floor=None):
    """Grid points on [lo, hi] or, for half-open (lo, hi], the right
    endpoints of a uniform partition."""
    if count < 1:
        raise ValueError(f"axis count must be >= 1, got {count}")
    if not (hi > lo):
        raise ValueError(f"axis range must be increasing, got [{lo}, {hi}]")
    if half_open:
        pts = np.linspace(lo, hi, count + 1)[1:]
    else:
        pts = np.linspace(lo, hi, count) if count > 1 else np.array([hi])
    if floor is not None:
        pts = np.maximum(pts, floor)
    return pts


@dataclass(frozen=True)
class SweepGrid:
    """Cartesian sweep over amplitude, frequency, and mass height.

    Amplitude and frequency ranges are half-open (a zero lower bound is
    excluded); the height range is closed. Frequency points are floored
    at ``omega_min``.
    """

    amplitude: tuple        # (min, max, count), half-open at min
    frequency: tuple        # (min, max, count), half-open at min
    height: tuple           # (min, max, count), closed
    omega_min: float = DEFAULT_OMEGA_MIN

    def amplitudes(self):
        lo, hi, n = self.amplitude
        return _axis(lo, hi, n, half_open=True)

    def frequencies(self):
        lo, hi, n = self.frequency
        return _axis(lo, hi, n, half_open=True, floor=self.omega_min)

    def heights(self):
        lo, hi, n = self.height
        return _axis(lo, hi, n, half_open=False)


# The operating box of interest: amplitudes up to 1 m, frequencies up to
# 2 pi rad/s, heights 0.3 to 0.55 m.
def operating_box_grid(count=5):
    return SweepGrid(
        amplitude=(0.0, 1.0, count),
        frequency=(0.0, 2.0 * math.pi, count),
        height=(0.3, 0.55, count),
    )


@dataclass(frozen=True)
class SweepPoint:
    amplitude: float
    omega: float
    z0: float
    re_mu2: float
    classification: Classification
    detail: str = ""

    def csv_row(self):
        return (self.amplitude, self.omega, self.z0, self.re_mu2,
                self.classification.value)


def sweep(grid, g=9.81, tol=1e-9, map_fn=map):
    """Classify every grid point; failures are recorded per row.

    ``map_fn`` lets callers plug in a parallel map; results come back in
    grid order (amplitude outermost, height innermost) regardless.
    """
    points = [(a, w, z) for a in grid.amplitudes()
              for w in grid.frequencies()
              for z in grid.heights()]

    def one(point):
        a, w, z = (float(v) for v in point)
        try:
            report = classify(ModelParams(z0=z, g=g),
                              VerticalSinusoid(amplitude=a, omega=w), tol)
            return SweepPoint(a, w, z, float(report.mu2.real),
                              report.classification)
        except (DrsLipError, ValueError, OverflowError) as exc:
            return SweepPoint(a, w, z, float("nan"), Classification.ERROR,
                              detail=str(exc))

    return list(map_fn(one, points))


def divergence_demo(params, motion, ic, horizon, threshold, terms=10):
    """First time |x| exceeds ``threshold`` on a 1 ms grid, or None.

    The zero initial state yields the identically zero solution and never
    crosses; any other state excites the growing branch (up to a measure
    zero set) and crosses in finite time when the model is unstable.
    """
    basis = SolutionBasis.build(to_mathieu(params, motion), terms=terms)
    sol = basis.fit(ic.x, ic.v)
    ts = np.arange(0.0, horizon + 1e-12, 1e-3)
    x, _ = sol.evaluate(ts)
    hits = np.nonzero(np.abs(x) > threshold)[0]
    if hits.size == 0:
        return None
    return float(ts[hits[0]])
