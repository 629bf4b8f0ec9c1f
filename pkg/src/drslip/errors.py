"""Exception types shared across the package.

The CLI maps these onto process exit codes: configuration problems exit
with 2, numerical failures with 3, and infeasible planning problems with 4.
"""


class DrsLipError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(DrsLipError):
    """Malformed or inconsistent configuration input.

    Carries the 1-based line number of the offending entry when the
    problem can be attributed to a specific line of a config file.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegenerateParameterError(DrsLipError):
    """A recurrence denominator is too close to zero to be trusted."""


class SingularBasisError(DrsLipError):
    """The two fundamental solutions cannot be fit to the initial state."""


class StepSizeUnderflowError(DrsLipError):
    """The adaptive integrator step fell below the representable floor."""


class InfeasibleScheduleError(DrsLipError):
    """Foothold schedule produces a degenerate support polygon."""


class MaxIterationsError(DrsLipError):
    """Optimizer ran out of iterations; carries the best iterate found."""

    def __init__(self, message, best=None, constraint_violation=None,
                 stationarity=None):
        super().__init__(message)
        self.best = best
        self.constraint_violation = constraint_violation
        self.stationarity = stationarity
