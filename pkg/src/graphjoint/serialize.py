"""JSON containers for graphs, covariances, problems, results and fixtures.

Dense matrices travel in a single container shape {"n": rows, "weights":
row-major list}; rectangular payloads additionally carry "cols".  All
writers emit sorted keys so identical inputs produce identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import ParameterError
from .graphs import GraphEnsemble, Gso, NodePartition
from .signals import CovarianceSet
from .solver import AdmmOptions, SolverConfig, SolverResult

__all__ = [
    "matrix_to_json",
    "matrix_from_json",
    "gso_to_json",
    "gso_from_json",
    "ensemble_to_json",
    "ensemble_from_json",
    "config_to_json",
    "config_from_json",
    "problem_to_json",
    "problem_from_json",
    "result_to_json",
    "result_from_json",
    "load_fixture",
    "dump_json",
    "loads_json",
    "load_json_file",
]

SCHEMA_VERSION = 1


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def loads_json(text: str):
    return json.loads(text)


def load_json_file(path):
    return json.loads(Path(path).read_text(encoding="utf-8"))


def matrix_to_json(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2:
        raise ParameterError(f"expected a matrix, got ndim={m.ndim}")
    out = {"n": m.shape[0], "weights": [float(x) for x in m.ravel(order="C")]}
    if m.shape[1] != m.shape[0]:
        out["cols"] = m.shape[1]
    return out


def matrix_from_json(d: dict) -> np.ndarray:
    n = int(d["n"])
    cols = int(d.get("cols", n))
    data = np.asarray(d["weights"], dtype=float)
    if data.size != n * cols:
        raise ParameterError(f"matrix payload has {data.size} entries, expected {n * cols}")
    return data.reshape((n, cols), order="C")


def gso_to_json(g: Gso) -> dict:
    return matrix_to_json(g.weights)


def gso_from_json(d: dict) -> Gso:
    return Gso(matrix_from_json(d))


def partition_to_json(part: NodePartition) -> dict:
    return {"observed": list(part.observed), "hidden": list(part.hidden)}


def partition_from_json(d: dict) -> NodePartition:
    return NodePartition(observed=tuple(d["observed"]), hidden=tuple(d.get("hidden", ())))


def ensemble_to_json(ens: GraphEnsemble) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "n": ens.n,
        "k": ens.k,
        "graphs": [gso_to_json(g) for g in ens.graphs],
        "partition": partition_to_json(ens.partition),
    }


def ensemble_from_json(d: dict) -> GraphEnsemble:
    graphs = tuple(gso_from_json(g) for g in d["graphs"])
    return GraphEnsemble(graphs=graphs, partition=partition_from_json(d["partition"]))


def _hyper_to_json(value) -> float | list:
    arr = np.asarray(value, dtype=float)
    if arr.ndim == 0:
        return float(arr)
    return arr.tolist()


def config_to_json(cfg: SolverConfig) -> dict:
    return {
        "alpha": _hyper_to_json(cfg.alpha),
        "beta": _hyper_to_json(cfg.beta),
        "gamma": _hyper_to_json(cfg.gamma),
        "eta": _hyper_to_json(cfg.eta),
        "mu": _hyper_to_json(cfg.mu),
        "delta": cfg.delta,
        "outer_iters": cfg.outer_iters,
        "mode": cfg.mode,
        "admm": {
            "rho": cfg.admm.rho,
            "max_iters": cfg.admm.max_iters,
            "primal_tol": cfg.admm.primal_tol,
            "dual_tol": cfg.admm.dual_tol,
            "adapt_rho": cfg.admm.adapt_rho,
            "adapt_every": cfg.admm.adapt_every,
        },
    }


def _hyper_from_json(value):
    if isinstance(value, list):
        return np.asarray(value, dtype=float)
    return float(value)


def config_from_json(d: dict) -> SolverConfig:
    admm = d.get("admm", {})
    return SolverConfig(
        alpha=_hyper_from_json(d.get("alpha", 1.0)),
        beta=_hyper_from_json(d.get("beta", 1.0)),
        gamma=_hyper_from_json(d.get("gamma", 10.0)),
        eta=_hyper_from_json(d.get("eta", 10.0)),
        mu=_hyper_from_json(d.get("mu", 100.0)),
        delta=float(d.get("delta", 1e-3)),
        outer_iters=int(d.get("outer_iters", 5)),
        mode=d.get("mode", "PGL"),
        admm=AdmmOptions(
            rho=float(admm.get("rho", 1.0)),
            max_iters=int(admm.get("max_iters", 2000)),
            primal_tol=float(admm.get("primal_tol", 1e-5)),
            dual_tol=float(admm.get("dual_tol", 1e-5)),
            adapt_rho=bool(admm.get("adapt_rho", True)),
            adapt_every=int(admm.get("adapt_every", 10)),
        ),
    )


def problem_to_json(
    cov: CovarianceSet,
    cfg: SolverConfig,
    partition: NodePartition | None = None,
    truth: list[np.ndarray] | None = None,
    weights: list[np.ndarray] | None = None,
) -> dict:
    d = {
        "schema_version": SCHEMA_VERSION,
        "k": cov.k,
        "cov_kind": cov.kind,
        "covariances": [matrix_to_json(c) for c in cov.matrices],
        "sample_counts": list(cov.sample_counts) if cov.sample_counts else None,
        "config": config_to_json(cfg),
    }
    if partition is not None:
        d["partition"] = partition_to_json(partition)
    if truth is not None:
        d["truth"] = [matrix_to_json(t) for t in truth]
    if weights is not None:
        d["weights"] = [matrix_to_json(w) for w in weights]
    return d


def problem_from_json(d: dict):
    """Return (CovarianceSet, SolverConfig, extras dict)."""
    cov = CovarianceSet(
        matrices=tuple(matrix_from_json(c) for c in d["covariances"]),
        kind=d.get("cov_kind", "analytic_poly"),
        sample_counts=tuple(d["sample_counts"]) if d.get("sample_counts") else None,
    )
    cfg = config_from_json(d.get("config", {}))
    extras = {}
    if d.get("partition") is not None:
        extras["partition"] = partition_from_json(d["partition"])
    if d.get("truth") is not None:
        extras["truth"] = [matrix_from_json(t) for t in d["truth"]]
    if d.get("weights") is not None:
        extras["weights"] = [matrix_from_json(w) for w in d["weights"]]
    return cov, cfg, extras


def result_to_json(res: SolverResult) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "s_hat": [matrix_to_json(s) for s in res.s_hat],
        "p_hat": [matrix_to_json(p) for p in res.p_hat],
        "objective": res.objective,
        "history": res.history,
        "converged": res.converged,
    }


def result_from_json(d: dict) -> SolverResult:
    return SolverResult(
        s_hat=[matrix_from_json(s) for s in d["s_hat"]],
        p_hat=[matrix_from_json(p) for p in d["p_hat"]],
        objective=float(d["objective"]),
        history=list(d.get("history", [])),
        converged=bool(d["converged"]),
    )


def load_fixture(path) -> dict:
    """Load a solver fixture: problem pieces plus the reference optimum."""
    d = load_json_file(path)
    cov_mats = [matrix_from_json(c) for c in d["problem"]["covariances"]]
    weights = [matrix_from_json(w) for w in d["problem"]["weights"]]
    cfg = config_from_json(d["problem"]["config"])
    return {
        "name": d.get("name", Path(path).stem),
        "schema_version": d.get("schema_version", SCHEMA_VERSION),
        "covariances": cov_mats,
        "weights": weights,
        "config": cfg,
        "oracle_objective": float(d["oracle_objective"]),
        "oracle_s": [matrix_from_json(s) for s in d["oracle_s"]],
        "oracle_p": [matrix_from_json(p) for p in d["oracle_p"]],
        "tolerance": float(d.get("tolerance", 1e-3)),
    }
