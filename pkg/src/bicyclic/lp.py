"""Dense linear programs, solved with the HiGHS dual simplex through scipy."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.optimize import linprog

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
FAILED = "failed"

_STATUS = {0: OPTIMAL, 2: INFEASIBLE, 3: UNBOUNDED}


@dataclass
class LinearProgram:
    """minimize (or maximize) objective @ x  s.t.  A_ub x <= b_ub, A_eq x = b_eq, bounds.

    ``bounds`` is a list of (lo, hi) pairs, ``None`` meaning unbounded; the
    default leaves every variable free.
    """

    objective: np.ndarray
    A_ub: Optional[np.ndarray] = None
    b_ub: Optional[np.ndarray] = None
    A_eq: Optional[np.ndarray] = None
    b_eq: Optional[np.ndarray] = None
    bounds: Optional[list] = None
    maximize: bool = False

    def __post_init__(self) -> None:
        self.objective = np.asarray(self.objective, dtype=float).reshape(-1)
        n = self.objective.size
        for A, b, name in ((self.A_ub, self.b_ub, "ub"), (self.A_eq, self.b_eq, "eq")):
            if (A is None) != (b is None):
                raise ValueError(f"A_{name} and b_{name} must be given together")
            if A is not None:
                A = np.atleast_2d(np.asarray(A, dtype=float))
                if A.shape[1] != n or A.shape[0] != np.asarray(b).size:
                    raise ValueError(f"A_{name} has shape {A.shape}, inconsistent with {n} variables")
                if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
                    raise ValueError(f"A_{name}/b_{name} contain non-finite entries")
        if self.bounds is None:
            self.bounds = [(None, None)] * n
        if len(self.bounds) != n:
            raise ValueError("one (lo, hi) bound pair per variable is required")

    @property
    def n_vars(self) -> int:
        return self.objective.size


@dataclass
class LPResult:
    status: str
    x: Optional[np.ndarray] = None
    value: Optional[float] = None
    residual: float = field(default=0.0)
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.status == OPTIMAL


def primal_residual(p: LinearProgram, x: np.ndarray) -> float:
    """Largest constraint violation of ``x`` (0 when feasible)."""
    r = 0.0
    if p.A_ub is not None:
        r = max(r, float(np.max(np.asarray(p.A_ub) @ x - p.b_ub, initial=0.0)))
    if p.A_eq is not None:
        r = max(r, float(np.max(np.abs(np.asarray(p.A_eq) @ x - p.b_eq), initial=0.0)))
    for xi, (lo, hi) in zip(x, p.bounds):
        if lo is not None:
            r = max(r, lo - xi)
        if hi is not None:
            r = max(r, xi - hi)
    return r


def lp_solve(p: LinearProgram, tol: float = 1e-10) -> LPResult:
    c = -p.objective if p.maximize else p.objective
    res = linprog(
        c,
        A_ub=p.A_ub,
        b_ub=p.b_ub,
        A_eq=p.A_eq,
        b_eq=p.b_eq,
        bounds=p.bounds,
        method="highs-ds",
        options={"primal_feasibility_tolerance": tol, "dual_feasibility_tolerance": tol},
    )
    status = _STATUS.get(res.status, FAILED)
    if status != OPTIMAL:
        return LPResult(status, message=res.message)
    x = np.asarray(res.x, dtype=float)
    value = float(p.objective @ x)
    return LPResult(status, x, value, primal_residual(p, x), res.message)
