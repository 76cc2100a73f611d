"""Scratch: flat sign-definite filter response study (not shipped)."""
import sys
import time

import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er, matrix_blocks, perturb_related, select_hidden
from graphjoint.metrics import normalized_error
from graphjoint.signals import FilterCoeffs, cov_poly, graph_filter
from graphjoint.solver import AdmmOptions, SolverConfig, solve_reweighted


def flat_filter(g, rng, order=3, floor=0.3, max_tries=500):
    """Random coefficients, rejected until |h(lambda)| >= floor * max on the spectrum."""
    lam = np.linalg.eigvalsh(g.weights)
    for _ in range(max_tries):
        h = rng.uniform(-1.0, 1.0, size=order)
        vals = np.polyval(h[::-1], lam)
        if np.min(np.abs(vals)) >= floor * np.max(np.abs(vals)):
            norm = np.linalg.norm(graph_filter(g, FilterCoeffs(h)), ord=2)
            return FilterCoeffs(h / norm)
    return None


def instance(r, kk, h, seed0=71):
    rng = np.random.default_rng([seed0, r])
    base = generate_er(20, 0.2, rng)
    graphs = [perturb_related(base, 0.1, rng) for _ in range(kk)]
    part = select_hidden(20, h, rng, policy="random")
    covs = []
    for g in graphs:
        coeffs = flat_filter(g, rng)
        if coeffs is None:
            return None
        covs.append(cov_poly(g, coeffs))
    c_obs = [matrix_blocks(c, part).s_oo for c in covs]
    truth = [matrix_blocks(g.weights, part).s_oo for g in graphs]
    if any(t[:, 0].sum() <= 0 for t in truth):
        return None
    return c_obs, truth


def solve(c_obs, mode, mu, gamma, eta, beta=1.0, t_outer=5):
    cfg = SolverConfig(
        alpha=1.0, beta=beta, gamma=gamma, eta=eta, mu=mu, delta=1e-2,
        outer_iters=t_outer, mode=mode,
        admm=AdmmOptions(rho=10.0, max_iters=2000, primal_tol=1e-4, dual_tol=1e-4),
    )
    return solve_reweighted(c_obs, cfg)


if __name__ == "__main__":
    # sanity at H=0
    errs = []
    for r in range(4):
        inst = instance(r, 1, 0)
        if inst:
            errs.append(normalized_error(inst[1], solve(inst[0], "NO_HIDDEN", 1e8, 0, 0).s_hat))
    print(f"H=0 K=1 NO_HIDDEN mu=1e8: {np.mean(errs):.4f}")

    for h in (1, 3):
        nh = []
        for r in range(4):
            inst = instance(r, 3, h)
            if inst:
                nh.append(normalized_error(inst[1], solve(inst[0], "NO_HIDDEN", 1e8, 0, 0).s_hat))
        print(f"H={h}: NO_HIDDEN mu=1e8: {np.mean(nh):.3f}")
        for gamma in (3.0, 10.0, 30.0, 100.0, 300.0):
            t0 = time.time()
            pgl = []
            for r in range(4):
                inst = instance(r, 3, h)
                if inst:
                    pgl.append(normalized_error(inst[1], solve(inst[0], "PGL", np.inf, gamma, gamma).s_hat))
            print(f"H={h} gamma={gamma:5.0f}: PGL(inf)={np.mean(pgl):.3f} ({time.time()-t0:.0f}s)")
