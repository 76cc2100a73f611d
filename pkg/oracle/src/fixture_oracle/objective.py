"""Standalone numpy evaluation of the joint-estimation objective.

Kept deliberately separate from both the CVXPY model and the main
package's implementation so fixtures can be re-validated against an
expression written down a third time.
"""

from __future__ import annotations

import numpy as np


def _pairs(k: int):
    return [(i, j) for i in range(k) for j in range(i + 1, k)]


def _pair_value(coef, i: int, j: int) -> float:
    arr = np.asarray(coef, dtype=float)
    if arr.ndim == 0:
        return float(arr)
    return float(arr[i, j])


def _vec_value(coef, i: int) -> float:
    arr = np.asarray(coef, dtype=float)
    if arr.ndim == 0:
        return float(arr)
    return float(arr[i])


def evaluate_objective(s, p, covariances, weights, hyper: dict) -> float:
    """Objective value at (s, p) for the given problem data.

    hyper carries alpha/beta/gamma/eta/mu (scalars or per-graph arrays)
    and the mode string.
    """
    k = len(covariances)
    mode = hyper.get("mode", "PGL")
    total = 0.0
    for i in range(k):
        total += _vec_value(hyper["alpha"], i) * float(np.sum(weights[i] * s[i]))
    for i, j in _pairs(k):
        b = _pair_value(hyper["beta"], i, j)
        if b > 0.0 and mode not in ("SEPARATE",):
            total += b * float(np.sum(np.abs(s[i] - s[j])))
    if mode == "PNN":
        for i in range(k):
            g = _vec_value(hyper["gamma"], i)
            if g > 0.0:
                total += g * float(np.sum(np.linalg.svd(p[i], compute_uv=False)))
    elif mode != "NO_HIDDEN":
        for i in range(k):
            g = _vec_value(hyper["gamma"], i)
            if g > 0.0:
                total += g * float(np.sum(np.linalg.norm(p[i], axis=0)))
        if mode == "PGL":
            for i, j in _pairs(k):
                e = _pair_value(hyper["eta"], i, j)
                if e > 0.0:
                    stacked = np.sqrt(np.sum(p[i] ** 2, axis=0) + np.sum(p[j] ** 2, axis=0))
                    total += e * float(np.sum(stacked))
    for i in range(k):
        m = _vec_value(hyper["mu"], i)
        if m > 0.0 and np.isfinite(m):
            res = covariances[i] @ s[i] + p[i] - s[i] @ covariances[i] - p[i].T
            total += m * float(np.sum(res * res))
    return total
