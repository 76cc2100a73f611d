"""Scratch: objective at truth vs at estimate, term by term (not shipped)."""
import sys

import cvxpy as cp
import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er, matrix_blocks, perturb_related, select_hidden
from graphjoint.metrics import normalized_error, rescale_to_unit_first_column
from graphjoint.signals import cov_poly, random_filter_coeffs

n, kk, h = 20, 3, 1
rng = np.random.default_rng([11, 0])
base = generate_er(n, 0.2, rng)
graphs = [perturb_related(base, 0.1, rng) for _ in range(kk)]
part = select_hidden(n, h, rng, policy="last")
covs = [cov_poly(g, random_filter_coeffs(g, 3, rng)) for g in graphs]
c_obs = [matrix_blocks(c, part).s_oo for c in covs]
truth = [matrix_blocks(g.weights, part).s_oo for g in graphs]
o = n - h

# true lifted matrices at the rescaled-truth scale
scale = [float(t[:, 0].sum()) for t in truth]
t_res = [t / sc for t, sc in zip(truth, scale)]
p_true = []
for k, (c, g) in enumerate(zip(covs, graphs)):
    cb = matrix_blocks(c, part)
    sb = matrix_blocks(g.weights, part)
    p_true.append(cb.s_oh @ (sb.s_oh / scale[k]).T)

for k in range(kk):
    res = c_obs[k] @ t_res[k] + p_true[k] - t_res[k] @ c_obs[k] - p_true[k].T
    print(
        f"k={k}: commut residual at truth {np.linalg.norm(res):.2e}, "
        f"l1(S)={np.abs(t_res[k]).sum():.2f}, |P|_2,1={np.linalg.norm(p_true[k], axis=0).sum():.4f}, "
        f"P colsupport={np.sum(np.linalg.norm(p_true[k], axis=0) > 1e-9)}"
    )


def terms(s_list, p_list, w, gamma, beta):
    a = sum(float(np.sum(w[k] * s_list[k])) for k in range(kk))
    b = sum(
        float(np.sum(np.abs(s_list[i] - s_list[j])))
        for i in range(kk) for j in range(i + 1, kk)
    )
    gterm = sum(float(np.linalg.norm(p_list[k], axis=0).sum()) for k in range(kk))
    eterm = sum(
        float(np.sum(np.sqrt(np.sum(p_list[i] ** 2, axis=0) + np.sum(p_list[j] ** 2, axis=0))))
        for i in range(kk) for j in range(i + 1, kk)
    )
    return a, beta * b, gamma * gterm, gamma * eterm


for gamma in (3.0, 30.0):
    beta = 10.0
    w = [np.full((o, o), 1.0 / 1.01) for _ in range(kk)]
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
    cp.Problem(cp.Minimize(obj), cons).solve(solver=cp.CLARABEL)
    s_hat = [np.maximum(s.value, 0) for s in S]
    p_hat = [p.value for p in P]
    ta = terms(s_hat, p_hat, w, gamma, beta)
    tb = terms(t_res, p_true, w, gamma, beta)
    print(f"gamma={gamma}: err t=1: {normalized_error(truth, s_hat):.3f}")
    print(f"  estimate terms: alpha={ta[0]:.2f} beta={ta[1]:.2f} gamma={ta[2]:.2f} eta={ta[3]:.2f} total={sum(ta):.2f}")
    print(f"  truth    terms: alpha={tb[0]:.2f} beta={tb[1]:.2f} gamma={tb[2]:.2f} eta={tb[3]:.2f} total={sum(tb):.2f}")
    print(f"  estimate col-mass on first col: {[f'{s[:,0].sum():.2f}' for s in s_hat]}, edges>0.01: {[int((s>0.01).sum()//2) for s in s_hat]}")
