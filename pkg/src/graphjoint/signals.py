"""Covariances of graph-stationary processes and Gaussian signal sampling.

A process is stationary on a graph when its covariance commutes with the
shift operator.  Two analytic constructions are provided: the square of a
polynomial graph filter, and the inverse of a shifted adjacency (a Gaussian
Markov random field on the graph).  Sampling draws i.i.d. zero-mean
Gaussians through a symmetric square root of the covariance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ModelError, NumericalError, ParameterError
from .graphs import Gso

__all__ = [
    "FilterCoeffs",
    "CovarianceSet",
    "graph_filter",
    "random_filter_coeffs",
    "cov_poly",
    "cov_mrf",
    "random_mrf_phi_margin",
    "sample_signals",
    "sample_covariance",
]

COV_KINDS = ("analytic_poly", "analytic_mrf", "sample")

# Tolerance below which a covariance eigenvalue counts as numerically PSD.
PSD_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class FilterCoeffs:
    """Coefficients h_0..h_{L-1} of a polynomial graph filter sum h_l S^l."""

    h: np.ndarray

    def __post_init__(self):
        h = np.atleast_1d(np.asarray(self.h, dtype=float))
        if h.ndim != 1 or h.size < 1:
            raise ParameterError("filter coefficients must be a nonempty vector")
        if not np.any(h != 0.0):
            raise ParameterError("filter coefficients must not all be zero")
        h.flags.writeable = False
        object.__setattr__(self, "h", h)

    @property
    def order(self) -> int:
        return self.h.size


@dataclass(frozen=True, eq=False)
class CovarianceSet:
    """Per-graph symmetric PSD covariance matrices with a provenance tag."""

    matrices: tuple[np.ndarray, ...]
    kind: str
    sample_counts: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in COV_KINDS:
            raise ParameterError(f"covariance kind must be one of {COV_KINDS}, got {self.kind!r}")
        mats = []
        for c in self.matrices:
            c = np.asarray(c, dtype=float)
            _check_psd(c)
            c = c.copy()
            c.flags.writeable = False
            mats.append(c)
        if self.kind == "sample":
            if self.sample_counts is None or len(self.sample_counts) != len(mats):
                raise ParameterError("sample covariances need one sample count per matrix")
            counts = tuple(int(m) for m in self.sample_counts)
            if any(m < 1 for m in counts):
                raise ParameterError("sample counts must be positive")
            object.__setattr__(self, "sample_counts", counts)
        object.__setattr__(self, "matrices", tuple(mats))

    @property
    def k(self) -> int:
        return len(self.matrices)


def _check_psd(c: np.ndarray) -> None:
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise ModelError(f"covariance must be square, got shape {c.shape}")
    if not np.allclose(c, c.T, rtol=0.0, atol=1e-12 * max(1.0, float(np.abs(c).max(initial=0.0)))):
        raise ModelError("covariance must be symmetric")
    eigs = np.linalg.eigvalsh(0.5 * (c + c.T))
    floor = -PSD_TOL * max(1.0, float(eigs[-1]))
    if eigs[0] < floor:
        raise ModelError(f"covariance is not PSD: min eigenvalue {eigs[0]:.3e}")


def graph_filter(g: Gso, coeffs: FilterCoeffs) -> np.ndarray:
    """Evaluate the matrix polynomial sum_l h_l S^l by Horner's rule."""
    s = g.weights
    h = coeffs.h
    out = h[-1] * np.eye(g.n)
    for l in range(h.size - 2, -1, -1):
        out = s @ out + h[l] * np.eye(g.n)
    return 0.5 * (out + out.T)


def random_filter_coeffs(g: Gso, order: int = 3, seed=None) -> FilterCoeffs:
    """Draw random filter coefficients scaled to a unit-spectral-norm filter.

    Coefficients start uniform on [-1, 1]; the constant term is redrawn until
    the filter's spectral norm clears 0.1, then all coefficients are divided
    by that norm so the resulting filter has spectral norm one.
    """
    if order < 1:
        raise ParameterError(f"filter order must be at least 1, got {order}")
    rng = np.random.default_rng(seed)
    h = rng.uniform(-1.0, 1.0, size=order)
    for _ in range(1000):
        norm = np.linalg.norm(graph_filter(g, FilterCoeffs(h)), ord=2)
        if norm >= 0.1:
            return FilterCoeffs(h / norm)
        h[0] = rng.uniform(-1.0, 1.0)
    raise NumericalError("could not draw a filter with spectral norm >= 0.1")


def cov_poly(g: Gso, coeffs: FilterCoeffs) -> np.ndarray:
    """Covariance of white noise pushed through a polynomial filter: C = H^2."""
    h = graph_filter(g, coeffs)
    c = h @ h
    return 0.5 * (c + c.T)


def cov_mrf(g: Gso, phi: float, margin: float) -> np.ndarray:
    """Markov-random-field covariance C = (sigma I + phi S)^{-1}.

    sigma is chosen as max(0, -phi * lambda_min(S)) + margin, the smallest
    shift (plus margin) that keeps the precision matrix positive definite.
    """
    if phi <= 0.0:
        raise ParameterError(f"phi must be positive, got {phi}")
    if margin <= 0.0:
        raise ParameterError(f"margin must be positive, got {margin}")
    s = g.weights
    lam_min = float(np.linalg.eigvalsh(s)[0])
    sigma = max(0.0, -phi * lam_min) + margin
    precision = sigma * np.eye(g.n) + phi * s
    try:
        c = np.linalg.inv(precision)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - margin > 0 prevents this
        raise NumericalError("precision matrix is singular") from exc
    return 0.5 * (c + c.T)


def random_mrf_phi_margin(g: Gso, seed=None) -> tuple[float, float]:
    """Draw phi uniform on (0, 1] and a conditioning margin 0.1*phi*(1+|lambda_min|)."""
    rng = np.random.default_rng(seed)
    phi = 1.0 - rng.random()  # uniform on (0, 1]
    lam_min = float(np.linalg.eigvalsh(g.weights)[0])
    margin = 0.1 * phi * (1.0 + abs(lam_min))
    return phi, margin


def sample_signals(cov: np.ndarray, m: int, seed=None) -> np.ndarray:
    """Draw m i.i.d. zero-mean Gaussian columns with the given covariance.

    Uses the symmetric eigendecomposition square root, which tolerates
    PSD-but-singular covariances.
    """
    if m < 1:
        raise ParameterError(f"sample count must be positive, got {m}")
    cov = np.asarray(cov, dtype=float)
    _check_psd(cov)
    eigvals, eigvecs = np.linalg.eigh(0.5 * (cov + cov.T))
    root = eigvecs @ np.diag(np.sqrt(np.clip(eigvals, 0.0, None))) @ eigvecs.T
    rng = np.random.default_rng(seed)
    white = rng.standard_normal((cov.shape[0], m))
    return root @ white


def sample_covariance(x: np.ndarray) -> np.ndarray:
    """Outer-product estimate (1/m) X X^T of the covariance of the columns of X."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 2 or x.shape[1] < 1:
        raise ParameterError(f"need an n-by-m signal matrix with m >= 1, got shape {x.shape}")
    return (x @ x.T) / x.shape[1]
