"""Pendulum walking on a vertically oscillating rigid surface.

Closed-form solution of the relative dynamics via Mathieu theory,
Floquet stability classification, an independent adaptive-integrator
oracle, and a two-layer gait planner built on the closed form.
"""

__version__ = "0.1.0"

from .errors import (ConfigError, DegenerateParameterError, DrsLipError,
                     InfeasibleScheduleError, MaxIterationsError,
                     SingularBasisError, StepSizeUnderflowError)
from .mathieu import (AnalyticSolution, CharacteristicExponent,
                      CoefficientTable, SolutionBasis, SolutionCoefficients,
                      beta, characteristic_exponent, coefficient_table,
                      fit_initial_conditions, hill_determinant_at_zero)
from .model import (MathieuParams, ModelParams, PendulumState, Pitching,
                    VerticalSinusoid, axial_force,
                    equivalent_vertical_sinusoid, surface_accel,
                    surface_height, t_of_tau, tau_of_t, to_mathieu)
from .oracle import (ErrorStats, IntegratorConfig, SampledTrajectory, compare,
                     integrate, monodromy_exponent, monodromy_matrix)
from .stability import (Classification, StabilityReport, SweepGrid, classify,
                        divergence_demo, sweep)

__all__ = [
    "__version__",
    # model
    "ModelParams", "VerticalSinusoid", "Pitching", "MathieuParams",
    "PendulumState", "surface_height", "surface_accel",
    "equivalent_vertical_sinusoid", "to_mathieu", "axial_force",
    "tau_of_t", "t_of_tau",
    # mathieu
    "CharacteristicExponent", "CoefficientTable", "SolutionCoefficients",
    "SolutionBasis", "AnalyticSolution", "beta", "hill_determinant_at_zero",
    "characteristic_exponent", "coefficient_table", "fit_initial_conditions",
    # oracle
    "IntegratorConfig", "SampledTrajectory", "ErrorStats", "integrate",
    "monodromy_matrix", "monodromy_exponent", "compare",
    # stability
    "Classification", "StabilityReport", "SweepGrid", "classify", "sweep",
    "divergence_demo",
    # errors
    "DrsLipError", "ConfigError", "DegenerateParameterError",
    "SingularBasisError", "StepSizeUnderflowError", "InfeasibleScheduleError",
    "MaxIterationsError",
]
