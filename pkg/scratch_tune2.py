"""Scratch: gamma/mu balance study (not shipped)."""
import sys
import time

import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er, matrix_blocks, select_hidden
from graphjoint.metrics import normalized_error
from graphjoint.signals import cov_poly, random_filter_coeffs
from graphjoint.solver import AdmmOptions, SolverConfig, solve_reweighted

n = 20

print("--- NO_HIDDEN, K=1, H=0: does commutativity + reweighted l1 recover at all?")
for mu in (1e2, 1e3, 1e4):
    errs, iters = [], []
    for r in range(6):
        rng = np.random.default_rng([7, r])
        g = generate_er(n, 0.2, rng)
        c = cov_poly(g, random_filter_coeffs(g, 3, rng))
        cfg = SolverConfig(
            alpha=1.0, beta=0.0, mu=mu, delta=1e-2, outer_iters=5, mode="NO_HIDDEN",
            admm=AdmmOptions(max_iters=2000, primal_tol=1e-4, dual_tol=1e-4),
        )
        res = solve_reweighted([c], cfg)
        errs.append(normalized_error([g.weights], res.s_hat))
        iters.append(sum(e["admm_iters"] for e in res.history))
    print(f"mu={mu:8.0f} err={np.mean(errs):.4f} iters={np.mean(iters):6.0f}")

print("--- PGL, K=1, H=0: gamma must gate the P leak")
for mu in (1e3, 1e4):
    for gamma in (10, 100, 300, 1000):
        errs = []
        for r in range(6):
            rng = np.random.default_rng([7, r])
            g = generate_er(n, 0.2, rng)
            c = cov_poly(g, random_filter_coeffs(g, 3, rng))
            cfg = SolverConfig(
                alpha=1.0, beta=0.0, gamma=gamma, eta=0.0, mu=mu, delta=1e-2,
                outer_iters=5, mode="PGL",
                admm=AdmmOptions(max_iters=2000, primal_tol=1e-4, dual_tol=1e-4),
            )
            res = solve_reweighted([c], cfg)
            errs.append(normalized_error([g.weights], res.s_hat))
        print(f"mu={mu:8.0f} gamma={gamma:6.0f} err={np.mean(errs):.4f}")
