"""Scratch: cvxpy exact-constraint at the new hyperparameters (not shipped)."""
import sys
import time

import cvxpy as cp
import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er, matrix_blocks, perturb_related, select_hidden
from graphjoint.metrics import normalized_error
from graphjoint.signals import cov_poly, random_filter_coeffs

n, kk, h = 20, 3, 1
gamma, eta, beta = 300.0, 300.0, 1.0


def solve_exact(c_obs, w, o):
    S = [cp.Variable((o, o), symmetric=True) for _ in range(kk)]
    P = [cp.Variable((o, o)) for _ in range(kk)]
    obj = 0
    cons = []
    for k in range(kk):
        obj += cp.sum(cp.multiply(w[k], S[k]))
        obj += gamma * cp.sum(cp.norm(P[k], axis=0))
        cons += [
            S[k] >= 0, cp.diag(S[k]) == 0, cp.sum(S[k][:, 0]) == 1,
            c_obs[k] @ S[k] + P[k] - S[k] @ c_obs[k] - P[k].T == 0,
        ]
    for i in range(kk):
        for j in range(i + 1, kk):
            obj += beta * cp.sum(cp.abs(S[i] - S[j]))
            obj += eta * cp.sum(cp.norm(cp.vstack([P[i], P[j]]), axis=0))
    prob = cp.Problem(cp.Minimize(obj), cons)
    prob.solve(solver=cp.CLARABEL)
    return prob.value, [np.maximum(s.value, 0) for s in S]


errs = []
for r in range(4):
    rng = np.random.default_rng([21, r])
    base = generate_er(n, 0.2, rng)
    graphs = [perturb_related(base, 0.1, rng) for _ in range(kk)]
    part = select_hidden(n, h, rng, policy="last")
    covs = [cov_poly(g, random_filter_coeffs(g, 3, rng)) for g in graphs]
    c_obs = [matrix_blocks(c, part).s_oo for c in covs]
    truth = [matrix_blocks(g.weights, part).s_oo for g in graphs]
    if any(t[:, 0].sum() <= 0 for t in truth):
        continue
    o = n - h
    s_prev = [np.ones((o, o)) - np.eye(o) for _ in range(kk)]
    t0 = time.time()
    for t in range(3):
        w = [1.0 / (sp + 1e-2) for sp in s_prev]
        val, s_hat = solve_exact(c_obs, w, o)
        s_prev = s_hat
        e = normalized_error(truth, s_hat)
        print(f"r={r} t={t + 1}: J={val:10.2f} err={e:.3f}  ({time.time()-t0:.0f}s)")
    errs.append(e)
print("mean err:", np.mean(errs))
