"""Closed-form proximal operators and projections used by the splitting solver.

All operators act on dense numpy arrays and return new arrays.  tau is the
proximal weight, i.e. the operator evaluates argmin_z 0.5*||z - x||_F^2 +
tau*g(z) for the relevant penalty g.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, NumericalError, ParameterError

__all__ = [
    "soft_threshold",
    "group_soft_threshold",
    "stacked_group_soft_threshold",
    "svd_soft_threshold",
    "project_feasible",
    "commutativity_residual",
    "column_support",
]


def _check_tau(tau: float) -> float:
    tau = float(tau)
    if tau < 0.0:
        raise ParameterError(f"shrinkage weight must be nonnegative, got {tau}")
    return tau


def soft_threshold(m: np.ndarray, tau: float) -> np.ndarray:
    """Elementwise sign(x) * max(|x| - tau, 0): prox of tau*||.||_1."""
    tau = _check_tau(tau)
    m = np.asarray(m, dtype=float)
    return np.sign(m) * np.maximum(np.abs(m) - tau, 0.0)


def group_soft_threshold(m: np.ndarray, tau: float) -> np.ndarray:
    """Shrink each column toward zero: prox of tau * sum of column l2 norms.

    A column with norm at or below tau maps to the zero column.
    """
    tau = _check_tau(tau)
    m = np.asarray(m, dtype=float)
    norms = np.linalg.norm(m, axis=0)
    scale = np.zeros_like(norms)
    nz = norms > 0.0
    scale[nz] = np.maximum(1.0 - tau / norms[nz], 0.0)
    return m * scale


def stacked_group_soft_threshold(
    a: np.ndarray, b: np.ndarray, tau: float
) -> tuple[np.ndarray, np.ndarray]:
    """Column shrinkage of the vertically stacked matrix [a; b], split back.

    Coupling the two matrices through the stacked column norms zeroes the
    same column index in both outputs whenever the joint norm falls below tau.
    """
    tau = _check_tau(tau)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise DimensionError(f"stacked shrinkage needs equal shapes, got {a.shape} and {b.shape}")
    norms = np.sqrt(np.sum(a * a, axis=0) + np.sum(b * b, axis=0))
    scale = np.zeros_like(norms)
    nz = norms > 0.0
    scale[nz] = np.maximum(1.0 - tau / norms[nz], 0.0)
    return a * scale, b * scale


def svd_soft_threshold(m: np.ndarray, tau: float) -> np.ndarray:
    """Shrink singular values by tau (floored at zero): prox of tau*||.||_*."""
    tau = _check_tau(tau)
    m = np.asarray(m, dtype=float)
    try:
        u, s, vt = np.linalg.svd(m, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalError("SVD failed to converge") from exc
    return (u * np.maximum(s - tau, 0.0)) @ vt


def _project_simplex(x: np.ndarray) -> np.ndarray:
    """Euclidean projection onto {v >= 0, sum v = 1} by dual bisection.

    Bisects the multiplier of the sum constraint to locate the active set,
    then solves for the multiplier exactly on that set.
    """
    lo = float(x.min()) - 1.0  # sum of max(x - lo, 0) >= len(x) >= 1
    hi = float(x.max())
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        if np.maximum(x - mid, 0.0).sum() >= 1.0:
            lo = mid
        else:
            hi = mid
    support = x - lo > 0.0
    theta = (x[support].sum() - 1.0) / support.sum()
    return np.maximum(x - theta, 0.0)


def project_feasible(m: np.ndarray) -> np.ndarray:
    """Euclidean projection onto the admissible shift-operator set.

    The set contains symmetric hollow nonnegative matrices whose first
    column sums to one (the scale-fixing convention).  Symmetry and the
    zero diagonal are linear, so the projection first symmetrizes and
    clears the diagonal; the free off-first entries are clamped at zero
    and the tied first row/column is projected onto the unit simplex.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"projection needs a square matrix, got shape {m.shape}")
    o = m.shape[0]
    if o < 2:
        raise DimensionError("the scale constraint is infeasible for a single hollow node")
    a = 0.5 * (m + m.T)
    np.fill_diagonal(a, 0.0)
    out = np.maximum(a, 0.0)
    v = _project_simplex(a[0, 1:])
    out[0, 1:] = v
    out[1:, 0] = v
    out[0, 0] = 0.0
    return out


def commutativity_residual(c_o: np.ndarray, s_o: np.ndarray, p: np.ndarray) -> float:
    """Frobenius norm of C S + P - S C - P^T on the observed block.

    Zero for exactly stationary covariances once P carries the hidden-block
    product; adding any symmetric matrix to P leaves the value unchanged.
    """
    c_o = np.asarray(c_o, dtype=float)
    s_o = np.asarray(s_o, dtype=float)
    p = np.asarray(p, dtype=float)
    if not (c_o.shape == s_o.shape == p.shape):
        raise DimensionError(
            f"residual needs equal shapes, got {c_o.shape}, {s_o.shape}, {p.shape}"
        )
    return float(np.linalg.norm(c_o @ s_o + p - s_o @ c_o - p.T))


def column_support(p: np.ndarray, tol: float = 1e-6) -> np.ndarray:
    """Indices of columns whose l2 norm exceeds tol.

    Diagnostic for lifted hidden-influence matrices, whose column support
    is expected to stay within the hidden-node count.
    """
    p = np.asarray(p, dtype=float)
    return np.nonzero(np.linalg.norm(p, axis=0) > tol)[0]
