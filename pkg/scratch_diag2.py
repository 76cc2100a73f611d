"""Scratch: is J(estimate) < J(truth)? Full PGL decomposition (not shipped)."""
import sys

import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er, matrix_blocks, perturb_related, select_hidden
from graphjoint.metrics import normalized_error
from graphjoint.signals import cov_poly, random_filter_coeffs
from graphjoint.solver import AdmmOptions, SolverConfig, objective_value, solve_inner, solve_reweighted

n, kk, h = 20, 3, 1
rng = np.random.default_rng([21, 0])
base = generate_er(n, 0.2, rng)
graphs = [perturb_related(base, 0.1, rng) for _ in range(kk)]
part = select_hidden(n, h, rng, policy="last")
covs = [cov_poly(g, random_filter_coeffs(g, 3, rng)) for g in graphs]
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

gamma = 300.0
cfg = SolverConfig(
    alpha=1.0, beta=1.0, gamma=gamma, eta=gamma, mu=1e8, delta=1e-2,
    outer_iters=1, mode="PGL",
    admm=AdmmOptions(rho=100.0, max_iters=4000, primal_tol=1e-6, dual_tol=1e-6),
)
w_unif = [np.full((o, o), 1.0 / 1.01) for _ in range(kk)]
res = solve_inner(c_obs, w_unif, cfg)
j_est = objective_value(res.s_hat, res.p_hat, c_obs, w_unif, cfg)
j_tru = objective_value(t_res, p_true, c_obs, w_unif, cfg)
print(f"t=1 uniform weights, gamma={gamma}: J(est)={j_est:.3f}  J(truth)={j_tru:.3f}")
print(f"err(t=1) = {normalized_error(truth, res.s_hat):.3f}  converged={res.converged}")
for k in range(kk):
    d_est = c_obs[k] @ res.s_hat[k] - res.s_hat[k] @ c_obs[k]
    print(
        f"k={k}: l1(S_est)={np.abs(res.s_hat[k]).sum():6.2f} l1(S_tru)={np.abs(t_res[k]).sum():6.2f} "
        f"|P_est|21={np.linalg.norm(res.p_hat[k], axis=0).sum():.4f} |P_tru|21={np.linalg.norm(p_true[k], axis=0).sum():.4f} "
        f"|D(S_est)|F={np.linalg.norm(d_est):.4f} edges_est={(res.s_hat[k] > 0.01).sum() // 2} edges_tru={(t_res[k] > 0).sum() // 2}"
    )

# and after full reweighting
cfg5 = SolverConfig(
    alpha=1.0, beta=1.0, gamma=gamma, eta=gamma, mu=1e8, delta=1e-2,
    outer_iters=5, mode="PGL",
    admm=AdmmOptions(rho=100.0, max_iters=1500, primal_tol=1e-4, dual_tol=1e-4),
)
res5 = solve_reweighted(c_obs, cfg5)
print(f"err(T=5) = {normalized_error(truth, res5.s_hat):.3f}")
