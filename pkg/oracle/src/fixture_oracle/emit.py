"""Fixture emission and regeneration checks."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .containers import SCHEMA_VERSION, dump_json, load_json, matrix_from_json, matrix_to_json
from .model import oracle_solve
from .objective import evaluate_objective
from .problems import make_instance
from .prox_ref import oracle_prox

# (name, O, K, H, mode, uniform weights)
SOLVER_FIXTURE_PLAN = [
    ("pgl_o4_k2_h0", 4, 2, 0, "PGL", True),
    ("pgl_o4_k2_h1", 4, 2, 1, "PGL", True),
    ("pgl_o4_k3_h1", 4, 3, 1, "PGL", True),
    ("pgl_o5_k2_h1", 5, 2, 1, "PGL", True),
    ("pgl_o5_k3_h0", 5, 3, 0, "PGL", True),
    ("pgl_o5_k3_h1_weighted", 5, 3, 1, "PGL", False),
    ("pnn_o5_k2_h1", 5, 2, 1, "PNN", True),
    ("nohidden_o5_k2_h1", 5, 2, 1, "NO_HIDDEN", True),
]

FIXTURE_TOLERANCE = 1e-3
REVALIDATE_TOL = 1e-8


def _hyper_to_config(hyper: dict) -> dict:
    return {
        "alpha": hyper["alpha"],
        "beta": hyper["beta"],
        "gamma": hyper["gamma"],
        "eta": hyper["eta"],
        "mu": hyper["mu"],
        "delta": 1e-3,
        "outer_iters": 1,
        "mode": hyper["mode"],
        "admm": {"rho": 1.0, "max_iters": 20000, "primal_tol": 1e-7, "dual_tol": 1e-7},
    }


def solve_fixture_plan_entry(name, o, k, h, mode, uniform):
    covariances, weights, hyper = make_instance(o, k, h, seed=[101, o, k, h], mode=mode,
                                                uniform_weights=uniform)
    out = oracle_solve(covariances, weights, hyper)
    if "objective" not in out:
        raise RuntimeError(f"{name}: solver returned status {out['status']}")
    if out["objective_consistency"] > 1e-6:
        raise RuntimeError(
            f"{name}: solver objective and numpy evaluation disagree by "
            f"{out['objective_consistency']:.2e}"
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "name": name,
        "problem": {
            "covariances": [matrix_to_json(c) for c in covariances],
            "weights": [matrix_to_json(w) for w in weights],
            "config": _hyper_to_config(hyper),
            "partition": {"observed": list(range(o)), "hidden": list(range(o, o + h))},
        },
        "oracle_objective": out["objective"],
        "oracle_s": [matrix_to_json(s) for s in out["s"]],
        "oracle_p": [matrix_to_json(p) for p in out["p"]],
        "tolerance": FIXTURE_TOLERANCE,
        "solver": {"name": "CLARABEL", "duality_gap_tol": 1e-7},
    }


def generate_solver_fixtures(out_dir) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for entry in SOLVER_FIXTURE_PLAN:
        fixture = solve_fixture_plan_entry(*entry)
        path = out_dir / f"{fixture['name']}.json"
        dump_json(fixture, path)
        paths.append(path)
    return paths


def _prox_cases():
    rng = np.random.default_rng(202)
    cases = []
    for i in range(3):
        cases.append(("l1", rng.normal(size=(4, 5)) * 2.0, float(rng.uniform(0.2, 1.5))))
    for i in range(3):
        cases.append(("group_l2", rng.normal(size=(5, 4)) * 2.0, float(rng.uniform(0.3, 2.0))))
    for i in range(3):
        a = rng.normal(size=(4, 4))
        b = rng.normal(size=(4, 4))
        cases.append(("stacked_group", (a, b), float(rng.uniform(0.3, 2.0))))
    for i in range(3):
        cases.append(("nuclear", rng.normal(size=(4, 5)), float(rng.uniform(0.2, 1.0))))
    for i in range(3):
        cases.append(("project_feasible", rng.normal(size=(5, 5)) * 2.0, 0.0))
    return cases


def generate_prox_fixtures(path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    cases_out = []
    for kind, data, tau in _prox_cases():
        if kind == "stacked_group":
            a, b = data
            oa, ob = oracle_prox(kind, a, tau, x2=b)
            cases_out.append(
                {
                    "kind": kind,
                    "tau": tau,
                    "input_a": matrix_to_json(a),
                    "input_b": matrix_to_json(b),
                    "expected_a": matrix_to_json(oa),
                    "expected_b": matrix_to_json(ob),
                }
            )
        else:
            out = oracle_prox(kind, data, tau)
            cases_out.append(
                {
                    "kind": kind,
                    "tau": tau,
                    "input": matrix_to_json(data),
                    "expected": matrix_to_json(out),
                }
            )
    dump_json({"schema_version": SCHEMA_VERSION, "cases": cases_out}, path)
    return path


def revalidate_fixture(path) -> tuple[bool, str]:
    """Re-evaluate the stored point; the objective must reproduce exactly."""
    d = load_json(path)
    covariances = [matrix_from_json(c) for c in d["problem"]["covariances"]]
    weights = [matrix_from_json(w) for w in d["problem"]["weights"]]
    hyper = d["problem"]["config"]
    s = [matrix_from_json(m) for m in d["oracle_s"]]
    p = [matrix_from_json(m) for m in d["oracle_p"]]
    obj = evaluate_objective(s, p, covariances, weights, hyper)
    gap = abs(obj - d["oracle_objective"]) / max(1.0, abs(d["oracle_objective"]))
    if gap > REVALIDATE_TOL:
        return False, f"stored objective off by {gap:.2e}"
    return True, f"objective reproduced to {gap:.2e}"


def regenerate_fixture(path) -> tuple[bool, str]:
    """Re-solve the stored problem; objectives must match to 1e-8."""
    d = load_json(path)
    covariances = [matrix_from_json(c) for c in d["problem"]["covariances"]]
    weights = [matrix_from_json(w) for w in d["problem"]["weights"]]
    out = oracle_solve(covariances, weights, d["problem"]["config"])
    if "objective" not in out:
        return False, f"resolve failed: {out['status']}"
    gap = abs(out["objective"] - d["oracle_objective"]) / max(1.0, abs(d["oracle_objective"]))
    if gap > REVALIDATE_TOL:
        return False, f"regenerated objective off by {gap:.2e}"
    return True, f"regenerated objective matches to {gap:.2e}"
