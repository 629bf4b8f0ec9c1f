"""Integrating trajectory backend for planner benchmarks.

Drop-in replacement for the closed-form backend: every state query
re-integrates the relative dynamics from the phase start with the
adaptive reference integrator. Produces the same constraint values to
integration accuracy, at a much higher cost per candidate, which is the
point of the comparison.
"""

from ..model import PendulumState, as_vertical_sinusoid
from ..oracle import IntegratorConfig, integrate_states

__all__ = ["NumericTrajectoryBackend"]


class NumericTrajectoryBackend:

    name = "numeric"

    def __init__(self, model, motion, config=None):
        self.model = model
        self.motion = as_vertical_sinusoid(motion)
        self.config = config or IntegratorConfig()

    def prepare(self, phase_starts):
        pass

    def states(self, t0, x0, v0, times):
        return integrate_states(self.model, self.motion,
                                PendulumState(x=x0, v=v0), t0, times,
                                self.config)
