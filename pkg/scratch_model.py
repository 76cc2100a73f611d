"""Scratch: model-level study with cvxpy, exact commutativity (not shipped)."""
import sys

import cvxpy as cp
import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er, matrix_blocks, perturb_related, select_hidden
from graphjoint.metrics import normalized_error
from graphjoint.signals import cov_poly, random_filter_coeffs


def solve_rw(c_obs, gamma, beta, o, kk, t_outer=3, delta=1e-2):
    s_prev = [np.ones((o, o)) - np.eye(o) for _ in range(kk)]
    s_val = p_val = None
    for t in range(t_outer):
        w = [1.0 / (sp + delta) for sp in s_prev]
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
                obj += gamma * cp.sum(cp.norm(cp.vstack([P[i], P[j]]), axis=0))
        prob = cp.Problem(cp.Minimize(obj), cons)
        prob.solve(solver=cp.CLARABEL)
        s_val = [s.value for s in S]
        p_val = [p.value for p in P]
        s_prev = [np.maximum(s, 0.0) for s in s_val]
    return s_val, p_val


n, kk, h = 20, 3, 1
for gamma in (3.0, 10.0, 30.0, 100.0):
    errs = []
    for r in range(3):
        rng = np.random.default_rng([11, r])
        base = generate_er(n, 0.2, rng)
        graphs = [perturb_related(base, 0.1, rng) for _ in range(kk)]
        part = select_hidden(n, h, rng, policy="last")
        covs = [cov_poly(g, random_filter_coeffs(g, 3, rng)) for g in graphs]
        c_obs = [matrix_blocks(c, part).s_oo for c in covs]
        truth = [matrix_blocks(g.weights, part).s_oo for g in graphs]
        s_val, _ = solve_rw(c_obs, gamma, 10.0, n - h, kk)
        errs.append(normalized_error(truth, s_val))
    print(f"gamma={gamma:6.1f} beta=10: err={np.mean(errs):.4f}  {[f'{e:.3f}' for e in errs]}")
