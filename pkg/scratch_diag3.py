"""Scratch: PGL mu=inf convergence + economics, monotone filters (not shipped)."""
import sys
import time

import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er, matrix_blocks, perturb_related, select_hidden
from graphjoint.metrics import normalized_error
from graphjoint.signals import FilterCoeffs, cov_poly, graph_filter
from graphjoint.solver import AdmmOptions, SolverConfig, objective_value, solve_inner

n, kk, h = 20, 3, 1
rng = np.random.default_rng([51, 0])
base = generate_er(n, 0.2, rng)
graphs = [perturb_related(base, 0.1, rng) for _ in range(kk)]
part = select_hidden(n, h, rng, policy="last")

covs = []
for g in graphs:
    lam = np.linalg.eigvalsh(g.weights)
    a = lam[0] - rng.uniform(0.1, 1.0)
    b = rng.uniform(0.0, 1.0)
    hh = np.array([a * a + b, -2.0 * a, 1.0])
    norm = np.linalg.norm(graph_filter(g, FilterCoeffs(hh)), ord=2)
    covs.append(cov_poly(g, FilterCoeffs(hh / norm)))

c_obs = [matrix_blocks(c, part).s_oo for c in covs]
truth = [matrix_blocks(g.weights, part).s_oo for g in graphs]
o = n - h
scale = [float(t[:, 0].sum()) for t in truth]
t_res = [t / sc for t, sc in zip(truth, scale)]
p_true = []
for k, (c, g) in enumerate(zip(covs, graphs)):
    cb = matrix_blocks(c, part)
    sb = matrix_blocks(g.weights, part)
    p_true.append(cb.s_oh @ (sb.s_oh / scale[k]).T)

for gamma in (10.0, 30.0, 100.0):
    cfg = SolverConfig(
        alpha=1.0, beta=1.0, gamma=gamma, eta=gamma, mu=np.inf, delta=1e-2,
        outer_iters=1, mode="PGL",
        admm=AdmmOptions(rho=10.0, max_iters=20000, primal_tol=1e-6, dual_tol=1e-6),
    )
    w = [np.full((o, o), 1.0 / 1.01) for _ in range(kk)]
    t0 = time.time()
    res = solve_inner(c_obs, w, cfg)
    j_est = objective_value(res.s_hat, res.p_hat, c_obs, w, cfg)
    j_tru = objective_value(t_res, p_true, c_obs, w, cfg)
    e = res.history[0]
    print(
        f"gamma={gamma:5.0f}: J(est)={j_est:9.2f} J(truth)={j_tru:9.2f} err={normalized_error(truth, res.s_hat):.3f} "
        f"it={e['admm_iters']} conv={res.converged} ({time.time()-t0:.0f}s)"
    )
