"""Two-layer gait planner: per-phase initial-state NLP plus interpolation."""

from ..nlp import NLProblem, NLPResult, solve_nlp
from .gait import (FEET, G1, G2, FootholdSchedule, GaitParams, PhaseSpec,
                   default_foothold_schedule, phase_specs)
from .higher import (AnalyticTrajectoryBackend, CoMPlan, DecisionVector,
                     build_nlp, com_plan, feasibility_report)
from .lower import (PLAN_CSV_COLUMNS, BezierCurve, FullBodyPlan, foot_mask,
                    lower_layer, sample_plan, swing_bezier)
from .numeric_backend import NumericTrajectoryBackend

__all__ = [
    "FEET", "G1", "G2",
    "GaitParams", "FootholdSchedule", "PhaseSpec",
    "default_foothold_schedule", "phase_specs",
    "DecisionVector", "AnalyticTrajectoryBackend", "NumericTrajectoryBackend",
    "build_nlp", "com_plan", "CoMPlan", "feasibility_report",
    "NLProblem", "NLPResult", "solve_nlp",
    "BezierCurve", "swing_bezier", "FullBodyPlan", "lower_layer",
    "sample_plan", "PLAN_CSV_COLUMNS", "foot_mask",
]
