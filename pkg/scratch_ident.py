"""Scratch: identifiability check via exact commutant LP (not shipped)."""
import sys

import cvxpy as cp
import numpy as np

sys.path.insert(0, "src")
from graphjoint.graphs import generate_er
from graphjoint.metrics import normalized_error
from graphjoint.signals import cov_poly, graph_filter, random_filter_coeffs

n = 20
for r in range(4):
    rng = np.random.default_rng([7, r])
    g = generate_er(n, 0.2, rng)
    coeffs = random_filter_coeffs(g, 3, rng)
    h = graph_filter(g, coeffs)
    c = cov_poly(g, coeffs)
    eigs = np.linalg.eigvalsh(c)
    gaps = np.diff(np.sort(eigs))
    S = cp.Variable((n, n), symmetric=True)
    cons = [S >= 0, cp.diag(S) == 0, cp.sum(S[:, 0]) == 1, c @ S - S @ c == 0]
    prob = cp.Problem(cp.Minimize(cp.sum(cp.abs(S))), cons)
    prob.solve(solver=cp.CLARABEL)
    if S.value is None:
        print(f"r={r}: infeasible/failed: {prob.status}")
        continue
    err = normalized_error([g.weights], [S.value])
    print(
        f"r={r}: exact-commutant l1 err={err:.4f}  min eig gap of C={gaps.min():.2e} "
        f"(eig range {eigs.min():.3f}..{eigs.max():.3f}) h={np.round(coeffs.h,3)}"
    )

    # relax commutativity to a penalty at various mu, keeping exact l1
    for mu in (1e4,):
        S2 = cp.Variable((n, n), symmetric=True)
        cons2 = [S2 >= 0, cp.diag(S2) == 0, cp.sum(S2[:, 0]) == 1]
        obj = cp.sum(cp.abs(S2)) + mu * cp.sum_squares(c @ S2 - S2 @ c)
        cp.Problem(cp.Minimize(obj), cons2).solve(solver=cp.CLARABEL)
        print(f"      penalty mu={mu:.0e} err={normalized_error([g.weights], [S2.value]):.4f}")
