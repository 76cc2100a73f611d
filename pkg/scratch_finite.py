"""Scratch: finite moderate-mu regime for PGL (not shipped)."""
import sys
import time

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


def instance(r, kk, h, seed0=61):
    rng = np.random.default_rng([seed0, r])
    base = generate_er(20, 0.2, rng)
    graphs = [perturb_related(base, 0.1, rng) for _ in range(kk)]
    part = select_hidden(20, h, rng, policy="random")
    covs = [monotone_cov(g, rng) for g in graphs]
    c_obs = [matrix_blocks(c, part).s_oo for c in covs]
    truth = [matrix_blocks(g.weights, part).s_oo for g in graphs]
    if any(t[:, 0].sum() <= 0 for t in truth):
        return None
    return c_obs, truth


def solve(c_obs, mode, mu, gamma, eta, beta=1.0):
    cfg = SolverConfig(
        alpha=1.0, beta=beta, gamma=gamma, eta=eta, mu=mu, delta=1e-2,
        outer_iters=5, mode=mode,
        admm=AdmmOptions(rho=10.0, max_iters=1500, primal_tol=1e-4, dual_tol=1e-4),
    )
    return solve_reweighted(c_obs, cfg)


if __name__ == "__main__":
    # sanity: K=1 H=0 with monotone filters at mu=1e4
    errs = []
    for r in range(4):
        inst = instance(r, 1, 0)
        if inst is None:
            continue
        c_obs, truth = inst
        res = solve(c_obs, "PGL", 1e4, 10.0, 0.0)
        errs.append(normalized_error(truth, res.s_hat))
    print(f"sanity K=1 H=0 mu=1e4 gamma=10: err={np.mean(errs):.4f}")

    for mu in (1e3, 1e4):
        for gamma in (1.0, 3.0, 10.0, 30.0):
            t0 = time.time()
            line = []
            for h in (1, 3, 5):
                pgl, nh = [], []
                for r in range(4):
                    inst = instance(r, 3, h)
                    if inst is None:
                        continue
                    c_obs, truth = inst
                    pgl.append(normalized_error(truth, solve(c_obs, "PGL", mu, gamma, gamma).s_hat))
                    nh.append(normalized_error(truth, solve(c_obs, "NO_HIDDEN", mu, 0.0, 0.0).s_hat))
                line.append(f"H={h}: {np.mean(pgl):.3f}/{np.mean(nh):.3f}")
            print(f"mu={mu:.0e} gamma={gamma:4.0f} PGL/NH  " + "  ".join(line) + f"  ({time.time()-t0:.0f}s)")
