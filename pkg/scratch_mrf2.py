"""Scratch: PGL at mu=inf vs NO_HIDDEN on conditioned covariances (not shipped)."""
import sys
import time

import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er, matrix_blocks, perturb_related, select_hidden
from graphjoint.metrics import normalized_error
from graphjoint.signals import FilterCoeffs, cov_poly, graph_filter
from graphjoint.solver import AdmmOptions, SolverConfig, solve_reweighted


def gapped_random_filter(g, rng, order=3, min_gap=1e-3, max_tries=200):
    """Uniform coefficients, rejected until C = H^2 has healthy eigen-gaps."""
    best = None
    best_gap = -1.0
    for _ in range(max_tries):
        h = rng.uniform(-1.0, 1.0, size=order)
        norm = np.linalg.norm(graph_filter(g, FilterCoeffs(h)), ord=2)
        if norm < 0.1:
            continue
        coeffs = FilterCoeffs(h / norm)
        eigs = np.sort(np.linalg.eigvalsh(cov_poly(g, coeffs)))
        gap = float(np.diff(eigs).min() / eigs.max())
        if gap >= min_gap:
            return coeffs, gap
        if gap > best_gap:
            best, best_gap = coeffs, gap
    return best, best_gap


def run(gamma, eta, beta, n_real=5, kk=3, h=1, seed0=41):
    errs = {m: [] for m in ("PGL", "PNN", "NO_HIDDEN")}
    gaps = []
    for r in range(n_real):
        rng = np.random.default_rng([seed0, r])
        base = generate_er(20, 0.2, rng)
        graphs = [perturb_related(base, 0.1, rng) for _ in range(kk)]
        part = select_hidden(20, h, rng, policy="random")
        covs = []
        for g in graphs:
            coeffs, gap = gapped_random_filter(g, rng)
            gaps.append(gap)
            covs.append(cov_poly(g, coeffs))
        c_obs = [matrix_blocks(c, part).s_oo for c in covs]
        truth = [matrix_blocks(g.weights, part).s_oo for g in graphs]
        if any(t[:, 0].sum() <= 0 for t in truth):
            continue
        for m in errs:
            mu = 1e8 if m == "NO_HIDDEN" else np.inf
            cfg = SolverConfig(
                alpha=1.0, beta=beta, gamma=gamma, eta=eta, mu=mu, delta=1e-2,
                outer_iters=5, mode=m,
                admm=AdmmOptions(rho=10.0, max_iters=2000, primal_tol=1e-4, dual_tol=1e-4),
            )
            res = solve_reweighted(c_obs, cfg)
            errs[m].append(normalized_error(truth, res.s_hat))
    return errs, np.median(gaps)


if __name__ == "__main__":
    for gamma in (10.0, 30.0, 100.0):
        t0 = time.time()
        errs, medgap = run(gamma, gamma, 1.0)
        print(
            f"gamma=eta={gamma:5.0f}: PGL={np.mean(errs['PGL']):.3f} PNN={np.mean(errs['PNN']):.3f} "
            f"NO_HIDDEN={np.mean(errs['NO_HIDDEN']):.3f} (med gap {medgap:.1e}, {time.time()-t0:.0f}s)"
        )
