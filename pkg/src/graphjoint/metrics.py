"""Recovery-error metric for estimated shift operators.

Estimates live on the scale fixed by the feasible set (first column sums
to one) while ground-truth graphs are typically binary, so the truth is
rescaled onto the same convention before comparison.  This makes the
metric invariant to the truth's original edge-weight scale.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, MetricError

__all__ = ["rescale_to_unit_first_column", "normalized_error"]


def rescale_to_unit_first_column(m: np.ndarray) -> np.ndarray:
    """Divide a matrix by its first-column sum so that sum equals one."""
    m = np.asarray(m, dtype=float)
    total = float(m[:, 0].sum())
    if total <= 0.0:
        raise MetricError(
            "cannot rescale: first column sums to zero (first observed node is isolated)"
        )
    return m / total


def normalized_error(truth, est) -> float:
    """Mean over graphs of ||T - E||_F^2 / ||T||_F^2 after scale alignment.

    Each truth matrix is rescaled to a unit first-column sum before the
    comparison; estimates are assumed to already follow that convention.
    """
    truth = [np.asarray(t, dtype=float) for t in truth]
    est = [np.asarray(e, dtype=float) for e in est]
    if len(truth) != len(est) or not truth:
        raise DimensionError("need matching nonempty lists of truth and estimate matrices")
    total = 0.0
    for t, e in zip(truth, est):
        if t.shape != e.shape:
            raise DimensionError(f"shape mismatch: truth {t.shape} vs estimate {e.shape}")
        if not np.any(t != 0.0):
            raise MetricError("normalized error is undefined for an all-zero truth matrix")
        t = rescale_to_unit_first_column(t)
        total += float(np.sum((t - e) ** 2)) / float(np.sum(t * t))
    return total / len(truth)
