"""Scratch: hyperparameter scaling study on K=1 H=0 (not shipped)."""
import sys
import time

import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er, matrix_blocks, select_hidden
from graphjoint.metrics import normalized_error
from graphjoint.signals import cov_poly, random_filter_coeffs
from graphjoint.solver import AdmmOptions, SolverConfig, solve_reweighted

n = 20
for mu in (1e2, 1e3, 1e4, 1e5):
    for delta in (1e-3, 1e-2):
        errs = []
        iters = []
        t0 = time.time()
        for r in range(6):
            rng = np.random.default_rng([7, r])
            g = generate_er(n, 0.2, rng)
            part = select_hidden(n, 0, rng)
            c = cov_poly(g, random_filter_coeffs(g, 3, rng))
            cfg = SolverConfig(
                alpha=1.0, beta=0.0, gamma=10.0, eta=0.0, mu=mu, delta=delta,
                outer_iters=5, mode="PGL",
                admm=AdmmOptions(max_iters=2000, primal_tol=1e-4, dual_tol=1e-4),
            )
            res = solve_reweighted([c], cfg)
            errs.append(normalized_error([g.weights], res.s_hat))
            iters.append(sum(e["admm_iters"] for e in res.history))
        print(
            f"mu={mu:8.0f} delta={delta:.0e} err={np.mean(errs):.4f} "
            f"iters={np.mean(iters):6.0f} t={(time.time()-t0)/6:.2f}s/solve"
        )
