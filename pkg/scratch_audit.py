"""Scratch: magnitude audit across H (not shipped)."""
import sys

import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er, matrix_blocks, perturb_related, select_hidden
from graphjoint.metrics import normalized_error
from graphjoint.signals import FilterCoeffs, cov_poly, graph_filter
from graphjoint.solver import AdmmOptions, SolverConfig, solve_reweighted


def monotone_cov(g, rng):
    lam = np.linalg.eigvalsh(g.weights)
    a = lam[0] - rng.uniform(0.1, 1.0)
    b = rng.uniform(0.0, 1.0)
    hh = np.array([a * a + b, -2.0 * a, 1.0])
    norm = np.linalg.norm(graph_filter(g, FilterCoeffs(hh)), ord=2)
    return cov_poly(g, FilterCoeffs(hh / norm))


kk = 3
for h in (1, 3, 5):
    defects, nh_errs, pgl_errs = [], [], []
    for r in range(4):
        rng = np.random.default_rng([61, r])
        base = generate_er(20, 0.2, rng)
        graphs = [perturb_related(base, 0.1, rng) for _ in range(kk)]
        part = select_hidden(20, h, rng, policy="random")
        covs = [monotone_cov(g, rng) for g in graphs]
        c_obs = [matrix_blocks(c, part).s_oo for c in covs]
        truth = [matrix_blocks(g.weights, part).s_oo for g in graphs]
        if any(t[:, 0].sum() <= 0 for t in truth):
            continue
        for k in range(kk):
            sc = truth[k][:, 0].sum()
            st = truth[k] / sc
            defects.append(np.linalg.norm(c_obs[k] @ st - st @ c_obs[k]))
        for mode, mu, store in (("NO_HIDDEN", 1e8, nh_errs), ("PGL", np.inf, pgl_errs)):
            cfg = SolverConfig(
                alpha=1.0, beta=1.0, gamma=30.0, eta=30.0, mu=mu, delta=1e-2,
                outer_iters=5, mode=mode,
                admm=AdmmOptions(rho=10.0, max_iters=2000, primal_tol=1e-4, dual_tol=1e-4),
            )
            res = solve_reweighted(c_obs, cfg)
            store.append(normalized_error(truth, res.s_hat))
    print(
        f"H={h}: |defect at truth|={np.mean(defects):.4f}  NO_HIDDEN={np.mean(nh_errs):.3f} "
        f"PGL(g30)={np.mean(pgl_errs):.3f}"
    )
