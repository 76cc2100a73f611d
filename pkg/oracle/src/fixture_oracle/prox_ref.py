"""Reference proximal values by direct numeric minimization.

Each prox is the solution of min_z 0.5*||z - x||_F^2 + tau * g(z), posed
as a small convex program and solved by a general-purpose conic solver;
no closed forms are used anywhere in this module.
"""

from __future__ import annotations

import numpy as np
import cvxpy as cp

SOLVER_OPTS = {"tol_gap_abs": 1e-10, "tol_gap_rel": 1e-10, "tol_feas": 1e-10}

PROX_KINDS = ("l1", "group_l2", "stacked_group", "nuclear", "project_feasible")


def oracle_prox(kind: str, x, tau: float = 0.0, x2=None):
    """Minimize the prox objective numerically; returns the minimizer."""
    x = np.asarray(x, dtype=float)
    if kind == "stacked_group":
        x2 = np.asarray(x2, dtype=float)
        z1 = cp.Variable(x.shape)
        z2 = cp.Variable(x2.shape)
        penalty = cp.sum(cp.norm(cp.vstack([z1, z2]), axis=0))
        obj = 0.5 * cp.sum_squares(z1 - x) + 0.5 * cp.sum_squares(z2 - x2) + tau * penalty
        cp.Problem(cp.Minimize(obj)).solve(solver=cp.CLARABEL, **SOLVER_OPTS)
        return np.asarray(z1.value), np.asarray(z2.value)

    z = cp.Variable(x.shape)
    if kind == "l1":
        penalty = cp.sum(cp.abs(z))
    elif kind == "group_l2":
        penalty = cp.sum(cp.norm(z, axis=0))
    elif kind == "nuclear":
        penalty = cp.normNuc(z)
    elif kind == "project_feasible":
        # Euclidean projection onto the admissible shift-operator set.
        cons = [z == z.T, cp.diag(z) == 0, z >= 0, cp.sum(z[:, 0]) == 1]
        obj = 0.5 * cp.sum_squares(z - x)
        cp.Problem(cp.Minimize(obj), cons).solve(solver=cp.CLARABEL, **SOLVER_OPTS)
        return np.asarray(z.value)
    else:
        raise ValueError(f"unknown prox kind {kind!r}")
    obj = 0.5 * cp.sum_squares(z - x) + tau * penalty
    cp.Problem(cp.Minimize(obj)).solve(solver=cp.CLARABEL, **SOLVER_OPTS)
    return np.asarray(z.value)
