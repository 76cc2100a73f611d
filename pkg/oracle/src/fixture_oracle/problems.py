"""Deterministic small-instance generation for fixtures.

Self-contained re-implementations of the synthetic pipeline (random
graph, polynomial-filter covariance, observed-block extraction) so the
fixtures do not depend on the package under test.
"""

from __future__ import annotations

import numpy as np


def random_graph(n: int, p: float, rng) -> np.ndarray:
    iu = np.triu_indices(n, k=1)
    w = np.zeros((n, n))
    w[iu] = (rng.random(iu[0].size) < p).astype(float)
    return w + w.T


def filter_covariance(s: np.ndarray, rng, order: int = 3) -> np.ndarray:
    """C = H^2 for a random unit-spectral-norm polynomial filter H."""
    n = s.shape[0]
    for _ in range(100):
        coeffs = rng.uniform(-1.0, 1.0, size=order)
        h = np.zeros((n, n))
        power = np.eye(n)
        for c in coeffs:
            h += c * power
            power = power @ s
        norm = np.linalg.norm(h, ord=2)
        if norm >= 0.1:
            h /= norm
            c_mat = h @ h
            return 0.5 * (c_mat + c_mat.T)
    raise RuntimeError("failed to draw a usable filter")


def observed_block(m: np.ndarray, o: int) -> np.ndarray:
    return m[:o, :o]


def make_instance(o: int, k: int, h: int, seed, mode: str = "PGL", uniform_weights: bool = True):
    """One fixture problem: covariances, weights and hyperparameters."""
    rng = np.random.default_rng(seed)
    n = o + h
    s_full = random_graph(n, 0.45, rng)
    covariances = []
    weights = []
    for _ in range(k):
        c = filter_covariance(s_full, rng)
        covariances.append(observed_block(c, o))
        if uniform_weights:
            weights.append(np.full((o, o), 1.0 / (1.0 + 1e-3)))
        else:
            weights.append(rng.uniform(0.2, 2.0, size=(o, o)))
    hyper = {
        "alpha": 1.0,
        "beta": 0.75,
        "gamma": 2.5,
        "eta": 1.5,
        "mu": 40.0,
        "mode": mode,
    }
    return covariances, weights, hyper
