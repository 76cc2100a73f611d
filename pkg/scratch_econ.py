"""Scratch: truth-vs-optimum economics under flat filters (not shipped)."""
import sys

import numpy as np

sys.path.insert(0, "src")
from scratch_flat import flat_filter, instance
from graphjoint.graphs import generate_er, matrix_blocks, perturb_related, select_hidden
from graphjoint.metrics import normalized_error
from graphjoint.signals import cov_poly
from graphjoint.solver import AdmmOptions, SolverConfig, objective_value, solve_inner

kk, h = 3, 3
rng = np.random.default_rng([71, 0])
base = generate_er(20, 0.2, rng)
graphs = [perturb_related(base, 0.1, rng) for _ in range(kk)]
part = select_hidden(20, h, rng, policy="random")
covs = [cov_poly(g, flat_filter(g, rng)) for g in graphs]
c_obs = [matrix_blocks(c, part).s_oo for c in covs]
truth = [matrix_blocks(g.weights, part).s_oo for g in graphs]
o = 20 - h
scale = [float(t[:, 0].sum()) for t in truth]
t_res = [t / sc for t, sc in zip(truth, scale)]
p_true = []
for k, (c, g) in enumerate(zip(covs, graphs)):
    cb = matrix_blocks(c, part)
    sb = matrix_blocks(g.weights, part)
    p_true.append(cb.s_oh @ (sb.s_oh / scale[k]).T)

print("true P column-norm sums:", [f"{np.linalg.norm(p, axis=0).sum():.3f}" for p in p_true])
print("true S l1:", [f"{np.abs(t).sum():.1f}" for t in t_res])

w = [np.full((o, o), 1.0 / 1.01) for _ in range(kk)]
for gamma, eta in ((30.0, 30.0), (100.0, 100.0), (10.0, 100.0), (0.0, 150.0)):
    cfg = SolverConfig(
        alpha=1.0, beta=1.0, gamma=gamma, eta=eta, mu=np.inf, delta=1e-2,
        outer_iters=1, mode="PGL",
        admm=AdmmOptions(rho=10.0, max_iters=8000, primal_tol=1e-5, dual_tol=1e-5),
    )
    res = solve_inner(c_obs, w, cfg)
    j_est = objective_value(res.s_hat, res.p_hat, c_obs, w, cfg)
    j_tru = objective_value(t_res, p_true, c_obs, w, cfg)
    pmass_est = sum(np.linalg.norm(p, axis=0).sum() for p in res.p_hat)
    print(
        f"gamma={gamma:5.0f} eta={eta:5.0f}: J(est)={j_est:8.2f} J(truth)={j_tru:8.2f} "
        f"err={normalized_error(truth, res.s_hat):.3f} p_mass_est={pmass_est:.3f} "
        f"conv={res.converged} it={res.history[0]['admm_iters']}"
    )
