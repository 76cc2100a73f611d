"""Scratch: test-case-1 style run to tune hyperparameters (not shipped)."""
import sys
import time

import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er, matrix_blocks, perturb_related, select_hidden
from graphjoint.metrics import normalized_error, rescale_to_unit_first_column
from graphjoint.signals import cov_poly, random_filter_coeffs
from graphjoint.solver import AdmmOptions, SolverConfig, solve_reweighted


def run(n_real, kk, h_list, cfgmk, seed0=0, n=20, p=0.2, rho_pert=0.1):
    out = {}  # (model, h) -> errors
    t0 = time.time()
    for r in range(n_real):
        ss = np.random.SeedSequence([seed0, r])
        s_graphs, s_hidden, s_filters = ss.spawn(3)
        gseeds = s_graphs.spawn(kk + 1)
        base = generate_er(n, p, np.random.default_rng(gseeds[0]))
        graphs = [perturb_related(base, rho_pert, np.random.default_rng(gseeds[k + 1])) for k in range(kk)]
        fseeds = s_filters.spawn(kk)
        covs_full = [cov_poly(g, random_filter_coeffs(g, 3, np.random.default_rng(fseeds[k]))) for k, g in enumerate(graphs)]
        hseeds = s_hidden.spawn(len(h_list))
        for hi, h in enumerate(h_list):
            part = select_hidden(n, h, np.random.default_rng(hseeds[hi]), policy="random")
            c_obs = [matrix_blocks(c, part).s_oo for c in covs_full]
            truth = [matrix_blocks(g.weights, part).s_oo for g in graphs]
            try:
                _ = [rescale_to_unit_first_column(t) for t in truth]
            except Exception:
                continue
            for model in ("PGL", "PNN", "NO_HIDDEN"):
                cfg = cfgmk(model)
                res = solve_reweighted(c_obs, cfg)
                err = normalized_error(truth, res.s_hat)
                out.setdefault((model, h), []).append(err)
    dt = time.time() - t0
    return out, dt


def cfgmk_default(model):
    return SolverConfig(
        alpha=1.0, beta=1.0, gamma=10.0, eta=10.0, mu=100.0, delta=1e-3,
        outer_iters=5, mode=model,
        admm=AdmmOptions(max_iters=1000, primal_tol=1e-4, dual_tol=1e-4),
    )


if __name__ == "__main__":
    n_real = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    out, dt = run(n_real, 3, [1, 2, 3], cfgmk_default)
    print(f"total {dt:.1f}s for {n_real} realizations x 3 H x 3 models (K=3)")
    for h in (1, 2, 3):
        row = " ".join(
            f"{m}={np.mean(out[(m, h)]):.3f}" for m in ("PGL", "PNN", "NO_HIDDEN")
        )
        print(f"H={h}: {row}")
