"""Scratch check: ADMM vs cvxpy on small random instances (not shipped)."""
import sys
import time

import cvxpy as cp
import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er, matrix_blocks, select_hidden
from graphjoint.signals import cov_poly, random_filter_coeffs
from graphjoint.solver import AdmmOptions, SolverConfig, objective_value, solve_inner


def cvxpy_solve(c_list, w_list, cfg):
    kk = len(c_list)
    o = c_list[0].shape[0]
    r = cfg.resolve(kk)
    S = [cp.Variable((o, o), symmetric=True) for _ in range(kk)]
    P = [cp.Variable((o, o)) for _ in range(kk)]
    obj = 0
    cons = []
    for k in range(kk):
        obj += r.alpha[k] * cp.sum(cp.multiply(w_list[k], S[k]))
        cons += [S[k] >= 0, cp.diag(S[k]) == 0, cp.sum(S[k][:, 0]) == 1]
    for i in range(kk):
        for j in range(i + 1, kk):
            if r.beta[i, j] > 0:
                obj += r.beta[i, j] * cp.sum(cp.abs(S[i] - S[j]))
    if r.mode == "PNN":
        for k in range(kk):
            obj += r.gamma[k] * cp.normNuc(P[k])
    elif r.mode != "NO_HIDDEN":
        for k in range(kk):
            obj += r.gamma[k] * cp.sum(cp.norm(P[k], axis=0))
        for i in range(kk):
            for j in range(i + 1, kk):
                if r.eta[i, j] > 0:
                    obj += r.eta[i, j] * cp.sum(cp.norm(cp.vstack([P[i], P[j]]), axis=0))
    for k in range(kk):
        expr = c_list[k] @ S[k] + P[k] - S[k] @ c_list[k] - P[k].T
        obj += r.mu[k] * cp.sum_squares(expr)
    if r.mode == "NO_HIDDEN":
        cons += [P[k] == 0 for k in range(kk)]
    prob = cp.Problem(cp.Minimize(obj), cons)
    prob.solve(solver=cp.CLARABEL)
    return prob.value, [s.value for s in S], [p.value for p in P]


def make_instance(o, kk, h, seed, mode="PGL"):
    rng = np.random.default_rng(seed)
    n = o + h
    g = generate_er(n, 0.4, rng)
    part = select_hidden(n, h, rng, policy="last")
    c_list, w_list = [], []
    for k in range(kk):
        coeffs = random_filter_coeffs(g, 3, rng)
        c = cov_poly(g, coeffs)
        c_list.append(matrix_blocks(c, part).s_oo)
        w_list.append(np.full((o, o), 1.0 / (1.0 + 1e-3)))
    cfg = SolverConfig(
        alpha=1.0, beta=1.0, gamma=5.0, eta=5.0, mu=50.0, mode=mode,
        admm=AdmmOptions(max_iters=20000, primal_tol=1e-7, dual_tol=1e-7),
    )
    return c_list, w_list, cfg


for mode in ("PGL", "PNN", "NO_HIDDEN", "SEPARATE"):
    for (o, kk, h, seed) in [(4, 2, 0, 1), (5, 2, 1, 2), (5, 3, 1, 3)]:
        c_list, w_list, cfg = make_instance(o, kk, h, seed, mode)
        t0 = time.time()
        res = solve_inner(c_list, w_list, cfg)
        t_admm = time.time() - t0
        t0 = time.time()
        oval, s_cp, p_cp = cvxpy_solve(c_list, w_list, cfg)
        t_cp = time.time() - t0
        rel = abs(res.objective - oval) / max(1.0, abs(oval))
        print(
            f"{mode:10s} O={o} K={kk} H={h} admm={res.objective:.8f} ({res.history[0]['admm_iters']} it,"
            f" {t_admm:.2f}s, conv={res.converged}) cvxpy={oval:.8f} ({t_cp:.2f}s) rel={rel:.2e}"
        )
