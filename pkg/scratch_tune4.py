"""Scratch: rho0 / tolerance / outer-iters trade-offs at mu=1e8 (not shipped)."""
import sys
import time

import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er
from graphjoint.metrics import normalized_error
from graphjoint.signals import cov_poly, random_filter_coeffs
from graphjoint.solver import AdmmOptions, SolverConfig, solve_reweighted

n = 20
for rho0 in (1.0, 100.0, 1e4):
    for tol, miters, T in ((1e-5, 3000, 5), (1e-4, 1500, 5), (1e-4, 1500, 3)):
        errs, its, times = [], [], []
        for r in range(6):
            rng = np.random.default_rng([7, r])
            g = generate_er(n, 0.2, rng)
            c = cov_poly(g, random_filter_coeffs(g, 3, rng))
            cfg = SolverConfig(
                alpha=1.0, beta=0.0, mu=1e8, delta=1e-2, outer_iters=T, mode="NO_HIDDEN",
                admm=AdmmOptions(rho=rho0, max_iters=miters, primal_tol=tol, dual_tol=tol),
            )
            t0 = time.time()
            res = solve_reweighted([c], cfg)
            times.append(time.time() - t0)
            errs.append(normalized_error([g.weights], res.s_hat))
            its.append(sum(e["admm_iters"] for e in res.history))
        print(
            f"rho0={rho0:8.0f} tol={tol:.0e} maxit={miters} T={T} err={np.mean(errs):.4f} "
            f"(max {np.max(errs):.3f}) iters={np.mean(its):6.0f} t={np.mean(times):.2f}s"
        )
