"""Small dense nonlinear programming via an augmented Lagrangian.

Equality and inequality constraints are folded into a smooth penalty
(Rockafellar form for the inequalities); the resulting bound-constrained
subproblems go to a quasi-Newton inner solver (L-BFGS-B). Multipliers
are updated between subproblems and the penalty grows only when the
constraint violation stalls. The method tolerates linearly dependent
equality constraints, which active-set SQP codes reject.

The solver is deterministic: no randomness, fixed evaluation order, so
identical inputs produce bit-identical iterates.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy.optimize import minimize

from .errors import MaxIterationsError

__all__ = ["NLProblem", "NLPResult", "solve_nlp"]


@dataclass(frozen=True)
class NLProblem:
    """A dense NLP: min cost(x) s.t. eq(x) = 0, ineq(x) <= 0, lo <= x <= hi.

    ``n_bound_ineq`` counts the simple bounds when reporting problem size
    (each finite bound is one inequality); the bounds themselves are
    enforced natively by the inner solver rather than penalized.
    """

    dim: int
    cost: Callable[[np.ndarray], float]
    equalities: Callable[[np.ndarray], np.ndarray]
    inequalities: Callable[[np.ndarray], np.ndarray]
    lower: np.ndarray
    upper: np.ndarray
    n_eq: int
    n_ineq: int
    metadata: dict = field(default_factory=dict)

    @property
    def n_bound_ineq(self):
        return int(np.isfinite(self.lower).sum() + np.isfinite(self.upper).sum())

    def describe(self):
        return (f"{self.dim} variables, {self.n_eq} equalities, "
                f"{self.n_ineq} path inequalities + {self.n_bound_ineq} bounds")

    def violation(self, x):
        """Infinity norm of the constraint violation at x."""
        parts = [0.0]
        if self.n_eq:
            parts.append(float(np.abs(self.equalities(x)).max()))
        if self.n_ineq:
            parts.append(float(max(self.inequalities(x).max(), 0.0)))
        return max(parts)


def _projected_gradient(jac, x, lower, upper):
    """Bound-projected gradient: zero where a bound blocks the descent."""
    pg = np.array(jac, dtype=float)
    at_lower = x <= lower
    at_upper = x >= upper
    pg[at_lower] = np.minimum(pg[at_lower], 0.0)
    pg[at_upper] = np.maximum(pg[at_upper], 0.0)
    return float(np.abs(pg).max()) if pg.size else 0.0


@dataclass
class NLPResult:
    x: np.ndarray
    constraint_violation: float
    stationarity: float
    outer_iterations: int
    inner_evaluations: int
    converged: bool
    eq_multipliers: np.ndarray
    ineq_multipliers: np.ndarray


def solve_nlp(problem, initial_guess=None, tol=1e-6,
              penalty0=1.0, penalty_growth=10.0,
              max_outer=30, inner_maxiter=500,
              stationarity_tol: Optional[float] = None):
    """Solve an :class:`NLProblem` to the requested feasibility tolerance.

    Parameters
    ----------
    problem : NLProblem
    initial_guess : array or None
        Starting point; defaults to the zero vector clipped to bounds.
    tol : float
        Target infinity-norm constraint violation (and, by default, the
        projected-gradient stationarity target of the inner solves).
    penalty0, penalty_growth : float
        Initial quadratic penalty weight and its growth factor, applied
        when the violation fails to shrink by 4x between outer rounds.
    max_outer, inner_maxiter : int
        Outer multiplier updates and inner L-BFGS-B iteration budget.

    Returns
    -------
    NLPResult

    Raises
    ------
    MaxIterationsError
        When the outer loop ends above tolerance; carries the best
        iterate and its residuals. A violation that has stopped
        improving while the penalty keeps growing is the usual
        infeasibility signature.
    """
    # finite-difference inner gradients carry noise around 1e-8 * |f|,
    # so demanding stationarity much below 1e-6 just stalls the loop
    if stationarity_tol is None:
        stationarity_tol = max(tol, 1e-6)
    x = np.zeros(problem.dim) if initial_guess is None else \
        np.array(initial_guess, dtype=float)
    x = np.clip(x, problem.lower, problem.upper)
    bounds = list(zip(problem.lower, problem.upper))

    lam = np.zeros(problem.n_eq)
    sig = np.zeros(problem.n_ineq)
    rho = penalty0
    evals = 0
    best = (np.inf, x.copy(), np.inf)
    prev_viol = np.inf

    for outer in range(1, max_outer + 1):

        def augmented(z):
            nonlocal evals
            evals += 1
            val = problem.cost(z)
            if problem.n_eq:
                ce = problem.equalities(z)
                val += lam @ ce + 0.5 * rho * (ce @ ce)
            if problem.n_ineq:
                gi = problem.inequalities(z)
                t = np.maximum(0.0, sig + rho * gi)
                val += float(t @ t - sig @ sig) / (2.0 * rho)
            return val

        res = minimize(augmented, x, method="L-BFGS-B", bounds=bounds,
                       options={"maxiter": inner_maxiter,
                                "ftol": 1e-14, "gtol": 1e-10})
        x = res.x
        ce = problem.equalities(x) if problem.n_eq else np.zeros(0)
        gi = problem.inequalities(x) if problem.n_ineq else np.zeros(0)
        viol = max(
            float(np.abs(ce).max()) if ce.size else 0.0,
            float(max(gi.max(), 0.0)) if gi.size else 0.0,
        )
        pg = (_projected_gradient(res.jac, x, problem.lower, problem.upper)
              if res.jac is not None else np.inf)
        if viol < best[0]:
            best = (viol, x.copy(), pg)

        if viol <= tol and pg <= stationarity_tol:
            return NLPResult(
                x=x, constraint_violation=viol, stationarity=pg,
                outer_iterations=outer, inner_evaluations=evals,
                converged=True, eq_multipliers=lam + rho * ce,
                ineq_multipliers=np.maximum(0.0, sig + rho * gi),
            )

        lam = lam + rho * ce
        sig = np.maximum(0.0, sig + rho * gi)
        if viol > 0.25 * prev_viol:
            rho *= penalty_growth
        prev_viol = viol

    raise MaxIterationsError(
        f"no convergence after {max_outer} outer iterations "
        f"(best violation {best[0]:.3e}, target {tol:.1e})",
        best=best[1], constraint_violation=best[0], stationarity=best[2])
