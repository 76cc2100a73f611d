import numpy as np
import pytest

from graphjoint.graphs import generate_er, select_hidden, GraphEnsemble
from graphjoint.serialize import (
    config_from_json,
    config_to_json,
    dump_json,
    ensemble_from_json,
    ensemble_to_json,
    gso_from_json,
    gso_to_json,
    load_json_file,
    matrix_from_json,
    matrix_to_json,
    problem_from_json,
    problem_to_json,
    result_from_json,
    result_to_json,
)
from graphjoint.signals import CovarianceSet
from graphjoint.solver import AdmmOptions, SolverConfig, SolverResult


class TestMatrixContainer:
    def test_square_round_trip(self):
        m = np.arange(9.0).reshape(3, 3)
        assert np.array_equal(matrix_from_json(matrix_to_json(m)), m)

    def test_rectangular_round_trip(self):
        m = np.arange(6.0).reshape(2, 3)
        assert np.array_equal(matrix_from_json(matrix_to_json(m)), m)

    def test_gso_round_trip(self):
        g = generate_er(8, 0.4, seed=0)
        back = gso_from_json(gso_to_json(g))
        assert np.array_equal(back.weights, g.weights)


class TestEnsembleContainer:
    def test_round_trip(self):
        graphs = tuple(generate_er(10, 0.3, seed=s) for s in range(3))
        ens = GraphEnsemble(graphs=graphs, partition=select_hidden(10, 2, seed=1))
        back = ensemble_from_json(ensemble_to_json(ens))
        assert back.partition == ens.partition
        for a, b in zip(back.graphs, ens.graphs):
            assert np.array_equal(a.weights, b.weights)


class TestConfigContainer:
    def test_scalar_round_trip(self):
        cfg = SolverConfig(alpha=2.0, mode="PNN", admm=AdmmOptions(rho=3.0, max_iters=55))
        back = config_from_json(config_to_json(cfg))
        assert back.alpha == 2.0
        assert back.mode == "PNN"
        assert back.admm.rho == 3.0
        assert back.admm.max_iters == 55

    def test_vector_round_trip(self):
        cfg = SolverConfig(alpha=np.array([1.0, 2.0]), beta=np.array([[0.0, 3.0], [0.0, 0.0]]))
        back = config_from_json(config_to_json(cfg))
        assert np.array_equal(np.asarray(back.alpha), [1.0, 2.0])
        assert np.asarray(back.beta)[0, 1] == 3.0

    def test_infinite_mu_round_trip(self):
        cfg = SolverConfig(mu=np.inf)
        back = config_from_json(config_to_json(cfg))
        assert np.isinf(back.mu)


class TestProblemResult:
    def test_problem_round_trip(self):
        cov = CovarianceSet(matrices=(np.eye(4), 2.0 * np.eye(4)), kind="sample", sample_counts=(10, 20))
        cfg = SolverConfig()
        part = select_hidden(5, 1, policy="last")
        d = problem_to_json(cov, cfg, partition=part, weights=[np.ones((4, 4))] * 2)
        cov2, cfg2, extras = problem_from_json(d)
        assert cov2.kind == "sample"
        assert cov2.sample_counts == (10, 20)
        assert extras["partition"] == part
        assert np.array_equal(extras["weights"][0], np.ones((4, 4)))

    def test_result_round_trip(self):
        res = SolverResult(
            s_hat=[np.eye(3)],
            p_hat=[np.zeros((3, 3))],
            objective=1.5,
            history=[{"outer": 1, "objective": 1.5}],
            converged=True,
        )
        back = result_from_json(result_to_json(res))
        assert back.objective == 1.5
        assert back.converged
        assert np.array_equal(back.s_hat[0], np.eye(3))

    def test_dump_is_deterministic(self, tmp_path):
        d = {"b": 1.25, "a": [1, 2, 3]}
        t1 = dump_json(d, tmp_path / "x.json")
        t2 = dump_json(d, tmp_path / "y.json")
        assert t1 == t2
        assert load_json_file(tmp_path / "x.json") == d
