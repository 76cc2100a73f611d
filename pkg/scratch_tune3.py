"""Scratch: large-mu regime for analytic covariances (not shipped)."""
import sys
import time

import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er
from graphjoint.metrics import normalized_error
from graphjoint.signals import cov_poly, random_filter_coeffs
from graphjoint.solver import AdmmOptions, SolverConfig, solve_reweighted

n = 20
print("--- NO_HIDDEN K=1 H=0, huge mu")
for mu in (1e5, 1e6, 1e7, 1e8):
    errs, its, times = [], [], []
    for r in range(6):
        rng = np.random.default_rng([7, r])
        g = generate_er(n, 0.2, rng)
        c = cov_poly(g, random_filter_coeffs(g, 3, rng))
        cfg = SolverConfig(
            alpha=1.0, beta=0.0, mu=mu, delta=1e-2, outer_iters=5, mode="NO_HIDDEN",
            admm=AdmmOptions(max_iters=3000, primal_tol=1e-5, dual_tol=1e-5),
        )
        t0 = time.time()
        res = solve_reweighted([c], cfg)
        times.append(time.time() - t0)
        errs.append(normalized_error([g.weights], res.s_hat))
        its.append(sum(e["admm_iters"] for e in res.history))
    print(f"mu={mu:.0e} err={np.mean(errs):.4f} (max {np.max(errs):.3f}) iters={np.mean(its):6.0f} t={np.mean(times):.2f}s")
