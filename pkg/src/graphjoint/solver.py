"""Splitting solver for joint shift-operator estimation with hidden nodes.

The convex program minimized for fixed entrywise weights W^(k) is

    sum_k  alpha_k <W^(k), S^(k)>
  + sum_{k<k'} beta_{k,k'} ||S^(k) - S^(k')||_1
  + sum_k  gamma_k ||P^(k)||_{2,1}
  + sum_{k<k'} eta_{k,k'} || [P^(k); P^(k')] ||_{2,1}
  + sum_k  mu_k || C^(k) S^(k) + P^(k) - S^(k) C^(k) - (P^(k))^T ||_F^2

subject to each S^(k) lying in the admissible set (symmetric, hollow,
nonnegative, first column summing to one).  S^(k) is the observed block of
the k-th shift operator and P^(k) the free lifted matrix absorbing the
influence of hidden nodes.

The solver is ADMM with one consensus copy of S^(k) per nonsmooth term
touching it (feasibility; one per pairwise l1 difference) and likewise for
P^(k) (column shrinkage; one per stacked pair penalty).  With that
splitting the quadratic x-update decouples per graph, and in the
eigenbasis of C^(k) it further decouples into independent per-entry
systems, so one iteration costs O(K O^2) plus a few O x O products.

Modes:
  PGL        full program above.
  PNN        per-graph nuclear norm on P^(k) instead of the two column
             shrinkage terms (eta is ignored).
  NO_HIDDEN  P^(k) pinned to zero, gamma and eta forced to zero.
  SEPARATE   beta and eta forced to zero; solved as K independent
             single-graph problems.

The entrywise weights realize a reiterated l1 scheme: each outer iteration
sets W_ij = 1/(S_ij + delta) from the previous estimate, starting from
uniform weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError
from .prox import (
    group_soft_threshold,
    project_feasible,
    soft_threshold,
    stacked_group_soft_threshold,
    svd_soft_threshold,
)
from .signals import CovarianceSet

__all__ = [
    "MODES",
    "AdmmOptions",
    "SolverConfig",
    "SolverResult",
    "update_weights",
    "objective_value",
    "log_surrogate_value",
    "solve_inner",
    "solve_reweighted",
]

MODES = ("PGL", "PNN", "NO_HIDDEN", "SEPARATE")


@dataclass(frozen=True)
class AdmmOptions:
    """Penalty parameter and stopping controls for the inner ADMM loop."""

    rho: float = 1.0
    max_iters: int = 2000
    primal_tol: float = 1e-5
    dual_tol: float = 1e-5
    adapt_rho: bool = True
    adapt_every: int = 10
    # Residual balancing is frozen after this many iterations; a penalty
    # that keeps moving can cycle and prevent convergence outright.
    adapt_until: int = 1000
    # Give the quadratic stationarity term its own consensus copy instead
    # of folding it into the x-update.  Keeps the x-update uniformly
    # conditioned, which matters when mu dwarfs the penalty parameter.
    split_quadratic: bool = False

    def __post_init__(self):
        if self.rho <= 0.0:
            raise ParameterError(f"penalty parameter must be positive, got {self.rho}")
        if self.max_iters < 1:
            raise ParameterError("max_iters must be at least 1")
        if self.primal_tol <= 0.0 or self.dual_tol <= 0.0:
            raise ParameterError("tolerances must be positive")


@dataclass(frozen=True)
class SolverConfig:
    """Hyperparameters of the joint program.

    Scalar values for alpha/beta/gamma/eta/mu are broadcast: vectors get one
    entry per graph, pair coefficients fill the strict upper triangle.
    """

    alpha: float | np.ndarray = 1.0
    beta: float | np.ndarray = 1.0
    gamma: float | np.ndarray = 10.0
    eta: float | np.ndarray = 10.0
    mu: float | np.ndarray = 100.0  # np.inf enforces stationarity exactly
    delta: float = 1e-3
    outer_iters: int = 5
    mode: str = "PGL"
    admm: AdmmOptions = field(default_factory=AdmmOptions)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ParameterError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.delta <= 0.0:
            raise ParameterError(f"delta must be positive, got {self.delta}")
        if self.outer_iters < 1:
            raise ParameterError("outer_iters must be at least 1")

    def resolve(self, k: int) -> "_Resolved":
        """Broadcast hyperparameters to K graphs and apply mode forcing."""
        alpha = _as_vector(self.alpha, k, "alpha")
        gamma = _as_vector(self.gamma, k, "gamma")
        mu = _as_vector(self.mu, k, "mu")
        if np.any(np.isinf(mu)) and self.mode == "NO_HIDDEN":
            raise ParameterError(
                "mu=inf (exact stationarity) needs a lifting matrix; "
                "NO_HIDDEN admits no exactly stationary point in general"
            )
        beta = _as_pair_matrix(self.beta, k, "beta")
        eta = _as_pair_matrix(self.eta, k, "eta")
        if self.mode == "SEPARATE":
            beta = np.zeros_like(beta)
            eta = np.zeros_like(eta)
        elif self.mode == "NO_HIDDEN":
            gamma = np.zeros_like(gamma)
            eta = np.zeros_like(eta)
        elif self.mode == "PNN":
            eta = np.zeros_like(eta)
        return _Resolved(
            alpha=alpha, beta=beta, gamma=gamma, eta=eta, mu=mu,
            delta=self.delta, mode=self.mode, admm=self.admm,
        )


@dataclass(frozen=True)
class _Resolved:
    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray
    eta: np.ndarray
    mu: np.ndarray
    delta: float
    mode: str
    admm: AdmmOptions

    def single(self, k: int) -> "_Resolved":
        """Restriction to graph k (pair couplings drop out)."""
        return _Resolved(
            alpha=self.alpha[k : k + 1],
            beta=np.zeros((1, 1)),
            gamma=self.gamma[k : k + 1],
            eta=np.zeros((1, 1)),
            mu=self.mu[k : k + 1],
            delta=self.delta,
            mode=self.mode,
            admm=self.admm,
        )


@dataclass
class SolverResult:
    """Estimated observed blocks and lifted matrices plus diagnostics."""

    s_hat: list[np.ndarray]
    p_hat: list[np.ndarray]
    objective: float
    history: list[dict]
    converged: bool


def _as_vector(x, k: int, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 0:
        arr = np.full(k, float(arr))
    if arr.shape != (k,):
        raise ParameterError(f"{name} must be a scalar or length-{k} vector, got shape {arr.shape}")
    if np.any(arr < 0.0):
        raise ParameterError(f"{name} entries must be nonnegative")
    return arr


def _as_pair_matrix(x, k: int, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 0:
        out = np.triu(np.full((k, k), float(arr)), k=1)
    elif arr.shape == (k, k):
        out = np.triu(arr, k=1)
    else:
        raise ParameterError(f"{name} must be a scalar or {k}x{k} matrix, got shape {arr.shape}")
    if np.any(out < 0.0):
        raise ParameterError(f"{name} entries must be nonnegative")
    return out


def _covariance_list(cov) -> list[np.ndarray]:
    mats = list(cov.matrices) if isinstance(cov, CovarianceSet) else [np.asarray(c, float) for c in cov]
    if not mats:
        raise ParameterError("need at least one covariance block")
    o = mats[0].shape[0]
    for c in mats:
        if c.ndim != 2 or c.shape != (o, o):
            raise ParameterError("covariance blocks must be square with a common size")
        if not np.allclose(c, c.T, rtol=0.0, atol=1e-9 * max(1.0, float(np.abs(c).max()))):
            raise ParameterError("covariance blocks must be symmetric")
    return [0.5 * (c + c.T) for c in mats]


def update_weights(prev_s: list[np.ndarray], delta: float) -> list[np.ndarray]:
    """Entrywise weights W_ij = 1/(S_ij + delta) from the previous estimate."""
    if delta <= 0.0:
        raise ParameterError(f"delta must be positive, got {delta}")
    out = []
    for s in prev_s:
        s = np.asarray(s, dtype=float)
        if np.any(s < 0.0):
            raise ParameterError("previous estimates must be nonnegative")
        out.append(1.0 / (s + delta))
    return out


def _uniform_feasible(o: int) -> np.ndarray:
    """All-ones hollow matrix rescaled so the first column sums to one."""
    s = (np.ones((o, o)) - np.eye(o)) / (o - 1)
    return s


def objective_value(s, p, cov, weights, cfg: SolverConfig) -> float:
    """Evaluate the mode-dependent objective at the given point."""
    c_list = _covariance_list(cov)
    k = len(c_list)
    r = cfg.resolve(k)
    s = [np.asarray(m, float) for m in s]
    p = [np.asarray(m, float) for m in p]
    w = [np.asarray(m, float) for m in weights]
    obj = 0.0
    for i in range(k):
        obj += r.alpha[i] * float(np.sum(w[i] * s[i]))
    for i in range(k):
        for j in range(i + 1, k):
            if r.beta[i, j] > 0.0:
                obj += r.beta[i, j] * float(np.sum(np.abs(s[i] - s[j])))
    if r.mode == "PNN":
        for i in range(k):
            if r.gamma[i] > 0.0:
                obj += r.gamma[i] * float(np.sum(np.linalg.svd(p[i], compute_uv=False)))
    else:
        for i in range(k):
            if r.gamma[i] > 0.0:
                obj += r.gamma[i] * float(np.sum(np.linalg.norm(p[i], axis=0)))
        for i in range(k):
            for j in range(i + 1, k):
                if r.eta[i, j] > 0.0:
                    stacked = np.sqrt(np.sum(p[i] ** 2, axis=0) + np.sum(p[j] ** 2, axis=0))
                    obj += r.eta[i, j] * float(np.sum(stacked))
    for i in range(k):
        # mu=inf marks exact stationarity enforcement: the term is a
        # constraint there, not part of the reported objective value.
        if r.mu[i] > 0.0 and np.isfinite(r.mu[i]):
            res = c_list[i] @ s[i] + p[i] - s[i] @ c_list[i] - p[i].T
            obj += r.mu[i] * float(np.sum(res * res))
    return obj


def log_surrogate_value(s, p, cov, weights_unused, cfg: SolverConfig) -> float:
    """Objective with the weighted l1 term replaced by its log parent penalty.

    The reiterated weighting scheme is majorization-minimization on
    sum_ij log(S_ij + delta); this is the quantity that decreases across
    outer iterations.
    """
    c_list = _covariance_list(cov)
    k = len(c_list)
    r = cfg.resolve(k)
    zeros = [np.zeros_like(np.asarray(m, float)) for m in s]
    base = objective_value(s, p, cov, zeros, cfg)
    for i in range(k):
        base += r.alpha[i] * float(np.sum(np.log(np.asarray(s[i], float) + r.delta)))
    return base


class _EigenBlock:
    """Per-graph quadratic x-update in the covariance eigenbasis.

    With C = V diag(lam) V^T, the map S -> CS - SC is entrywise
    multiplication by d_ij = lam_i - lam_j after rotating by V, and
    P - P^T only couples the (i,j)/(j,i) entry pairs, so the regularized
    least-squares step reduces to independent 3x3 systems solved in
    closed form.
    """

    def __init__(self, c: np.ndarray):
        lam, v = np.linalg.eigh(c)
        self.v = v
        self.d = lam[:, None] - lam[None, :]

    def solve_s(self, m_bar: np.ndarray, rho_ns: float, mu: float) -> np.ndarray:
        v = self.v
        mt = v.T @ m_bar @ v
        st = rho_ns * mt / (2.0 * mu * self.d ** 2 + rho_ns)
        return v @ st @ v.T

    def solve_sp(
        self, m_bar: np.ndarray, n_bar: np.ndarray, rho_ns: float, rho_np: float, mu: float
    ) -> tuple[np.ndarray, np.ndarray]:
        v, d = self.v, self.d
        mt = v.T @ m_bar @ v
        nt = v.T @ n_bar @ v
        nd = nt - nt.T
        if np.isinf(mu):
            # Exact stationarity: minimize the proximal terms subject to
            # d_ij S_ij + P_ij - P_ji = 0, which ties S_ij = S_ji and pins
            # the antisymmetric part of P to -d * S entrywise.
            t = (rho_ns * (mt + mt.T) - 0.5 * rho_np * d * nd) / (
                2.0 * rho_ns + 0.5 * rho_np * d ** 2
            )
            st = t
            u = -d * t
        else:
            a = 2.0 * mu * d ** 2 + rho_ns
            denom = 8.0 * mu + rho_np - 16.0 * mu ** 2 * d ** 2 / a
            u = (rho_np * nd - 4.0 * mu * d * rho_ns * (mt + mt.T) / a) / denom
            st = (rho_ns * mt - 2.0 * mu * d * u) / a
        pt = 0.5 * (nt + nt.T) + 0.5 * u
        return v @ st @ v.T, v @ pt @ v.T

    def solve_s_split(self, m_bar: np.ndarray, r_off: np.ndarray, n_s: float) -> np.ndarray:
        v, d = self.v, self.d
        mt = v.T @ m_bar @ v
        rt = v.T @ r_off @ v
        st = (n_s * mt + d * rt) / (n_s + d ** 2)
        return v @ st @ v.T

    def solve_sp_split(
        self, m_bar: np.ndarray, n_bar: np.ndarray, r_off: np.ndarray, n_s: float, n_p: float
    ) -> tuple[np.ndarray, np.ndarray]:
        # Same regularized least squares as solve_sp, with the quadratic
        # term replaced by a unit-weight consensus target r_off for the
        # stationarity expression CS - SC + P - P^T.
        v, d = self.v, self.d
        mt = v.T @ m_bar @ v
        nt = v.T @ n_bar @ v
        rt = v.T @ r_off @ v
        nd = nt - nt.T
        rd = rt - rt.T
        a = n_s + d ** 2
        denom = 2.0 + 0.5 * n_p - 2.0 * d ** 2 / a
        u = (0.5 * n_p * nd + rd - d * (n_s * (mt + mt.T) + d * rd) / a) / denom
        st = (n_s * mt + d * rt - d * u) / a
        pt = 0.5 * (nt + nt.T) + 0.5 * u
        return v @ st @ v.T, v @ pt @ v.T


def _admm(c_list, w_list, r: _Resolved, init_s, init_p):
    """Run one inner ADMM solve; returns variables and diagnostics."""
    kk = len(c_list)
    o = c_list[0].shape[0]
    opts = r.admm
    has_p = r.mode != "NO_HIDDEN"
    nuclear = r.mode == "PNN"

    beta_pairs = [
        (i, j, r.beta[i, j]) for i in range(kk) for j in range(i + 1, kk) if r.beta[i, j] > 0.0
    ]
    eta_pairs = (
        [(i, j, r.eta[i, j]) for i in range(kk) for j in range(i + 1, kk) if r.eta[i, j] > 0.0]
        if has_p and not nuclear
        else []
    )
    n_s = np.ones(kk)
    for i, j, _ in beta_pairs:
        n_s[i] += 1.0
        n_s[j] += 1.0
    n_p = np.ones(kk) if has_p else np.zeros(kk)
    for i, j, _ in eta_pairs:
        n_p[i] += 1.0
        n_p[j] += 1.0
    split = [bool(opts.split_quadratic and 0.0 < r.mu[k] < np.inf) for k in range(kk)]

    blocks = [_EigenBlock(c) for c in c_list]

    s = [m.copy() for m in init_s]
    p = [m.copy() for m in init_p] if has_p else [np.zeros((o, o)) for _ in range(kk)]

    def t_apply(k, s_k, p_k):
        out = c_list[k] @ s_k - s_k @ c_list[k]
        if has_p:
            out = out + p_k - p_k.T
        return out

    z_feas = [m.copy() for m in s]
    u_feas = [np.zeros((o, o)) for _ in range(kk)]
    sp_z = [[s[i].copy(), s[j].copy()] for i, j, _ in beta_pairs]
    sp_u = [[np.zeros((o, o)), np.zeros((o, o))] for _ in beta_pairs]
    z_grp = [m.copy() for m in p] if has_p else []
    u_grp = [np.zeros((o, o)) for _ in range(kk)] if has_p else []
    pp_z = [[p[i].copy(), p[j].copy()] for i, j, _ in eta_pairs]
    pp_u = [[np.zeros((o, o)), np.zeros((o, o))] for _ in eta_pairs]
    z_stat = [t_apply(k, s[k], p[k]) if split[k] else None for k in range(kk)]
    u_stat = [np.zeros((o, o)) if split[k] else None for k in range(kk)]

    s_pairs_by_k: dict[int, list[tuple[int, int]]] = {i: [] for i in range(kk)}
    for idx, (i, j, _) in enumerate(beta_pairs):
        s_pairs_by_k[i].append((idx, 0))
        s_pairs_by_k[j].append((idx, 1))
    p_pairs_by_k: dict[int, list[tuple[int, int]]] = {i: [] for i in range(kk)}
    for idx, (i, j, _) in enumerate(eta_pairs):
        p_pairs_by_k[i].append((idx, 0))
        p_pairs_by_k[j].append((idx, 1))

    rho = opts.rho
    pri = dual = np.inf
    converged = False
    iters = 0

    for it in range(1, opts.max_iters + 1):
        iters = it
        # x-update: per-graph regularized least squares in the eigenbasis.
        for k in range(kk):
            m_sum = z_feas[k] - u_feas[k]
            for idx, slot in s_pairs_by_k[k]:
                m_sum = m_sum + sp_z[idx][slot] - sp_u[idx][slot]
            m_bar = (m_sum - (r.alpha[k] / rho) * w_list[k]) / n_s[k]
            if has_p:
                n_sum = z_grp[k] - u_grp[k]
                for idx, slot in p_pairs_by_k[k]:
                    n_sum = n_sum + pp_z[idx][slot] - pp_u[idx][slot]
                n_bar = n_sum / n_p[k]
                s[k], p[k] = blocks[k].solve_sp(
                    m_bar, n_bar, rho * n_s[k], rho * n_p[k], r.mu[k]
                )
            else:
                s[k] = blocks[k].solve_s(m_bar, rho * n_s[k], r.mu[k])

        # z-update: proximal step per consensus copy.
        z_feas_old = [z.copy() for z in z_feas]
        sp_z_old = [[z[0].copy(), z[1].copy()] for z in sp_z]
        z_grp_old = [z.copy() for z in z_grp]
        pp_z_old = [[z[0].copy(), z[1].copy()] for z in pp_z]

        for k in range(kk):
            z_feas[k] = project_feasible(s[k] + u_feas[k])
        for idx, (i, j, b) in enumerate(beta_pairs):
            a1 = s[i] + sp_u[idx][0]
            a2 = s[j] + sp_u[idx][1]
            mean = 0.5 * (a1 + a2)
            diff = soft_threshold(a1 - a2, 2.0 * b / rho)
            sp_z[idx][0] = mean + 0.5 * diff
            sp_z[idx][1] = mean - 0.5 * diff
        if has_p:
            for k in range(kk):
                arg = p[k] + u_grp[k]
                if nuclear:
                    z_grp[k] = svd_soft_threshold(arg, r.gamma[k] / rho)
                else:
                    z_grp[k] = group_soft_threshold(arg, r.gamma[k] / rho)
        for idx, (i, j, e) in enumerate(eta_pairs):
            pp_z[idx][0], pp_z[idx][1] = stacked_group_soft_threshold(
                p[i] + pp_u[idx][0], p[j] + pp_u[idx][1], e / rho
            )

        # u-update and residual accumulation.
        pri_sq = cx_sq = z_sq = 0.0
        for k in range(kk):
            gap = s[k] - z_feas[k]
            u_feas[k] += gap
            pri_sq += float(np.sum(gap * gap))
            cx_sq += float(np.sum(s[k] * s[k]))
            z_sq += float(np.sum(z_feas[k] * z_feas[k]))
        for idx, (i, j, _) in enumerate(beta_pairs):
            for slot, k in ((0, i), (1, j)):
                gap = s[k] - sp_z[idx][slot]
                sp_u[idx][slot] += gap
                pri_sq += float(np.sum(gap * gap))
                cx_sq += float(np.sum(s[k] * s[k]))
                z_sq += float(np.sum(sp_z[idx][slot] ** 2))
        if has_p:
            for k in range(kk):
                gap = p[k] - z_grp[k]
                u_grp[k] += gap
                pri_sq += float(np.sum(gap * gap))
                cx_sq += float(np.sum(p[k] * p[k]))
                z_sq += float(np.sum(z_grp[k] ** 2))
        for idx, (i, j, _) in enumerate(eta_pairs):
            for slot, k in ((0, i), (1, j)):
                gap = p[k] - pp_z[idx][slot]
                pp_u[idx][slot] += gap
                pri_sq += float(np.sum(gap * gap))
                cx_sq += float(np.sum(p[k] * p[k]))
                z_sq += float(np.sum(pp_z[idx][slot] ** 2))

        # Dual residual: rho * C^T (z - z_old) aggregated per variable.
        dual_sq = ctu_sq = 0.0
        for k in range(kk):
            delta_s = z_feas[k] - z_feas_old[k]
            ctu_s = u_feas[k].copy()
            for idx, slot in s_pairs_by_k[k]:
                delta_s = delta_s + sp_z[idx][slot] - sp_z_old[idx][slot]
                ctu_s = ctu_s + sp_u[idx][slot]
            dual_sq += float(np.sum(delta_s * delta_s))
            ctu_sq += float(np.sum(ctu_s * ctu_s))
            if has_p:
                delta_p = z_grp[k] - z_grp_old[k]
                ctu_p = u_grp[k].copy()
                for idx, slot in p_pairs_by_k[k]:
                    delta_p = delta_p + pp_z[idx][slot] - pp_z_old[idx][slot]
                    ctu_p = ctu_p + pp_u[idx][slot]
                dual_sq += float(np.sum(delta_p * delta_p))
                ctu_sq += float(np.sum(ctu_p * ctu_p))

        pri = np.sqrt(pri_sq) / max(1.0, np.sqrt(cx_sq), np.sqrt(z_sq))
        dual = rho * np.sqrt(dual_sq) / max(1.0, rho * np.sqrt(ctu_sq))
        if pri <= opts.primal_tol and dual <= opts.dual_tol:
            converged = True
            break

        # Residual balancing keeps the two residuals within a decade.
        if opts.adapt_rho and it <= opts.adapt_until and it % opts.adapt_every == 0:
            scale = None
            if pri > 10.0 * dual and rho < 1e6:
                scale = 2.0
            elif dual > 10.0 * pri and rho > 1e-6:
                scale = 0.5
            if scale is not None:
                rho *= scale
                for k in range(kk):
                    u_feas[k] /= scale
                for u in sp_u:
                    u[0] /= scale
                    u[1] /= scale
                for k in range(kk):
                    if has_p:
                        u_grp[k] /= scale
                for u in pp_u:
                    u[0] /= scale
                    u[1] /= scale

    s_hat = [z.copy() for z in z_feas]
    p_hat = [z.copy() for z in z_grp] if has_p else [np.zeros((o, o)) for _ in range(kk)]
    return {
        "s_hat": s_hat,
        "p_hat": p_hat,
        "admm_iters": iters,
        "primal": float(pri),
        "dual": float(dual),
        "rho": float(rho),
        "converged": converged,
    }


def solve_inner(cov, weights, cfg: SolverConfig, init=None) -> SolverResult:
    """Solve the convex program once, for fixed entrywise weights.

    cov is a CovarianceSet or list of symmetric observed-block matrices,
    weights one strictly positive matrix per graph.  init optionally warm
    starts the variables with (s_list, p_list).
    """
    c_list = _covariance_list(cov)
    kk = len(c_list)
    o = c_list[0].shape[0]
    w_list = [np.asarray(w, dtype=float) for w in weights]
    if len(w_list) != kk:
        raise ParameterError(f"need {kk} weight matrices, got {len(w_list)}")
    for w in w_list:
        if w.shape != (o, o):
            raise ParameterError("weight matrices must match the covariance block size")
        if np.any(w <= 0.0):
            raise ParameterError("weights must be strictly positive")
    r = cfg.resolve(kk)

    if init is not None:
        init_s = [np.asarray(m, float).copy() for m in init[0]]
        init_p = [np.asarray(m, float).copy() for m in init[1]]
    else:
        init_s = [_uniform_feasible(o) for _ in range(kk)]
        init_p = [np.zeros((o, o)) for _ in range(kk)]

    coupled = np.any(r.beta > 0.0) or np.any(r.eta > 0.0)
    if kk > 1 and not coupled:
        # No pair couplings: identical to K independent single-graph solves.
        s_hat, p_hat, subs = [], [], []
        for k in range(kk):
            out = _admm(
                [c_list[k]], [w_list[k]], r.single(k), [init_s[k]], [init_p[k]]
            )
            s_hat.append(out["s_hat"][0])
            p_hat.append(out["p_hat"][0])
            subs.append(out)
        diag = {
            "admm_iters": max(d["admm_iters"] for d in subs),
            "primal": max(d["primal"] for d in subs),
            "dual": max(d["dual"] for d in subs),
            "rho": [d["rho"] for d in subs],
            "converged": all(d["converged"] for d in subs),
        }
    else:
        out = _admm(c_list, w_list, r, init_s, init_p)
        s_hat, p_hat = out["s_hat"], out["p_hat"]
        diag = {key: out[key] for key in ("admm_iters", "primal", "dual", "rho", "converged")}

    obj = objective_value(s_hat, p_hat, c_list, w_list, cfg)
    entry = {"outer": 1, "objective": obj, **diag}
    return SolverResult(
        s_hat=s_hat,
        p_hat=p_hat,
        objective=obj,
        history=[entry],
        converged=diag["converged"],
    )


def solve_reweighted(cov, cfg: SolverConfig, init=None) -> SolverResult:
    """Outer reiterated-l1 loop: update weights, re-solve, warm start.

    The first iteration seeds the weight rule with an all-ones off-diagonal
    estimate, so it reduces to an unweighted l1 solve.
    """
    c_list = _covariance_list(cov)
    kk = len(c_list)
    o = c_list[0].shape[0]
    seed_s = [np.ones((o, o)) - np.eye(o) for _ in range(kk)]

    prev_s = seed_s
    warm = init
    history: list[dict] = []
    result: SolverResult | None = None
    for t in range(1, cfg.outer_iters + 1):
        w_list = update_weights(prev_s, cfg.delta)
        result = solve_inner(c_list, w_list, cfg, init=warm)
        entry = dict(result.history[0])
        entry["outer"] = t
        entry["log_objective"] = log_surrogate_value(
            result.s_hat, result.p_hat, c_list, w_list, cfg
        )
        history.append(entry)
        prev_s = result.s_hat
        warm = (result.s_hat, result.p_hat)
    return SolverResult(
        s_hat=result.s_hat,
        p_hat=result.p_hat,
        objective=result.objective,
        history=history,
        converged=result.converged,
    )
