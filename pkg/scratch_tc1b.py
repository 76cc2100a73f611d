"""Scratch: tune gamma/eta/beta for hidden-node recovery (not shipped)."""
import sys
import time

import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er, matrix_blocks, perturb_related, select_hidden
from graphjoint.metrics import normalized_error, rescale_to_unit_first_column
from graphjoint.signals import cov_poly, random_filter_coeffs
from graphjoint.solver import AdmmOptions, SolverConfig, solve_reweighted


def run(n_real, kk, h_list, models, gamma, eta, beta, mu=1e8, seed0=0):
    out = {}
    for r in range(n_real):
        ss = np.random.SeedSequence([seed0, r])
        s_graphs, s_hidden, s_filters = ss.spawn(3)
        gseeds = s_graphs.spawn(7)
        base = generate_er(20, 0.2, np.random.default_rng(gseeds[0]))
        graphs = [perturb_related(base, 0.1, np.random.default_rng(gseeds[k + 1])) for k in range(kk)]
        fseeds = s_filters.spawn(6)
        covs_full = [cov_poly(g, random_filter_coeffs(g, 3, np.random.default_rng(fseeds[k]))) for k, g in enumerate(graphs)]
        hseeds = s_hidden.spawn(len(h_list))
        for hi, h in enumerate(h_list):
            part = select_hidden(20, h, np.random.default_rng(hseeds[hi]), policy="random")
            c_obs = [matrix_blocks(c, part).s_oo for c in covs_full]
            truth = [matrix_blocks(g.weights, part).s_oo for g in graphs]
            try:
                _ = [rescale_to_unit_first_column(t) for t in truth]
            except Exception:
                continue
            for model in models:
                cfg = SolverConfig(
                    alpha=1.0, beta=beta, gamma=gamma, eta=eta, mu=mu, delta=1e-2,
                    outer_iters=5, mode=model,
                    admm=AdmmOptions(rho=100.0, max_iters=1500, primal_tol=1e-4, dual_tol=1e-4),
                )
                res = solve_reweighted(c_obs, cfg)
                out.setdefault((model, h), []).append(normalized_error(truth, res.s_hat))
    return out


if __name__ == "__main__":
    n_real = 6
    for gamma in (300.0, 1000.0, 3000.0):
        t0 = time.time()
        out = run(n_real, 3, [1, 3], ["PGL"], gamma, gamma, 10.0)
        line = " ".join(
            f"H={h}:{np.mean(out[('PGL', h)]):.3f}" for h in (1, 3)
        )
        print(f"gamma=eta={gamma:6.0f} beta=10: PGL {line}  ({time.time()-t0:.0f}s)")
