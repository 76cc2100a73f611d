"""CVXPY formulation of the joint-estimation program."""

from __future__ import annotations

import numpy as np
import cvxpy as cp

from .objective import _pairs, _pair_value, _vec_value, evaluate_objective

SOLVER_OPTS = {"tol_gap_abs": 1e-9, "tol_gap_rel": 1e-9, "tol_feas": 1e-9}


def build_problem(covariances, weights, hyper: dict):
    k = len(covariances)
    o = covariances[0].shape[0]
    mode = hyper.get("mode", "PGL")
    S = [cp.Variable((o, o), symmetric=True, name=f"s{i}") for i in range(k)]
    P = [cp.Variable((o, o), name=f"p{i}") for i in range(k)]
    obj = 0
    cons = []
    for i in range(k):
        obj += _vec_value(hyper["alpha"], i) * cp.sum(cp.multiply(weights[i], S[i]))
        cons += [S[i] >= 0, cp.diag(S[i]) == 0, cp.sum(S[i][:, 0]) == 1]
    for i, j in _pairs(k):
        b = _pair_value(hyper["beta"], i, j)
        if b > 0.0 and mode not in ("SEPARATE",):
            obj += b * cp.sum(cp.abs(S[i] - S[j]))
    if mode == "PNN":
        for i in range(k):
            g = _vec_value(hyper["gamma"], i)
            if g > 0.0:
                obj += g * cp.normNuc(P[i])
    elif mode != "NO_HIDDEN":
        for i in range(k):
            g = _vec_value(hyper["gamma"], i)
            if g > 0.0:
                obj += g * cp.sum(cp.norm(P[i], axis=0))
        if mode == "PGL":
            for i, j in _pairs(k):
                e = _pair_value(hyper["eta"], i, j)
                if e > 0.0:
                    obj += e * cp.sum(cp.norm(cp.vstack([P[i], P[j]]), axis=0))
    for i in range(k):
        m = _vec_value(hyper["mu"], i)
        if np.isinf(m):
            cons.append(
                covariances[i] @ S[i] + P[i] - S[i] @ covariances[i] - P[i].T == 0
            )
        elif m > 0.0:
            expr = covariances[i] @ S[i] + P[i] - S[i] @ covariances[i] - P[i].T
            obj += m * cp.sum_squares(expr)
    if mode == "NO_HIDDEN":
        cons += [P[i] == 0 for i in range(k)]
    return cp.Problem(cp.Minimize(obj), cons), S, P


def oracle_solve(covariances, weights, hyper: dict) -> dict:
    """Solve one instance to high accuracy; returns matrices and objective.

    The reported objective is re-evaluated in numpy at the returned point,
    so it can be reproduced exactly from the stored matrices.
    """
    prob, S, P = build_problem(covariances, weights, hyper)
    prob.solve(solver=cp.CLARABEL, **SOLVER_OPTS)
    if prob.status not in ("optimal", "optimal_inaccurate"):
        return {"status": prob.status}
    s_val = [np.asarray(s.value, dtype=float) for s in S]
    p_val = [np.asarray(p.value, dtype=float) for p in P]
    obj = evaluate_objective(s_val, p_val, covariances, weights, hyper)
    gap_proxy = abs(prob.value - obj) / max(1.0, abs(obj))
    return {
        "status": prob.status,
        "objective": obj,
        "solver_objective": float(prob.value),
        "objective_consistency": gap_proxy,
        "s": s_val,
        "p": p_val,
    }
