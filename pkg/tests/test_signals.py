import numpy as np
import pytest

from graphjoint.errors import ModelError, ParameterError
from graphjoint.graphs import Gso, generate_er
from graphjoint.signals import (
    CovarianceSet,
    FilterCoeffs,
    cov_mrf,
    cov_poly,
    graph_filter,
    random_filter_coeffs,
    sample_covariance,
    sample_signals,
)


def two_node_edge() -> Gso:
    return Gso(np.array([[0.0, 1.0], [1.0, 0.0]]))


def commutation(c: np.ndarray, s: np.ndarray) -> float:
    return np.linalg.norm(c @ s - s @ c)


class TestGraphFilter:
    def test_constant_is_identity(self):
        g = generate_er(6, 0.5, seed=0)
        out = graph_filter(g, FilterCoeffs([1.0]))
        assert np.allclose(out, np.eye(6))

    def test_linear_is_adjacency(self):
        g = generate_er(6, 0.5, seed=0)
        out = graph_filter(g, FilterCoeffs([0.0, 1.0]))
        assert np.allclose(out, g.weights)

    def test_two_node_sum(self):
        out = graph_filter(two_node_edge(), FilterCoeffs([1.0, 1.0]))
        assert np.allclose(out, np.ones((2, 2)))

    def test_commutes_with_shift(self):
        g = generate_er(10, 0.3, seed=5)
        h = graph_filter(g, FilterCoeffs([0.5, -1.0, 0.25, 0.1]))
        assert commutation(h, g.weights) <= 1e-10 * np.linalg.norm(h) * np.linalg.norm(g.weights)

    def test_rejects_all_zero(self):
        with pytest.raises(ParameterError):
            FilterCoeffs([0.0, 0.0])


class TestCovPoly:
    def test_identity_filter(self):
        g = generate_er(5, 0.4, seed=1)
        assert np.allclose(cov_poly(g, FilterCoeffs([1.0])), np.eye(5))

    def test_two_node_hand_square(self):
        # H = I + A = [[1,1],[1,1]]; C = H^2 = [[2,2],[2,2]]
        c = cov_poly(two_node_edge(), FilterCoeffs([1.0, 1.0]))
        assert np.allclose(c, np.full((2, 2), 2.0))

    def test_commutation_residual(self):
        g = generate_er(12, 0.3, seed=2)
        coeffs = random_filter_coeffs(g, 3, seed=3)
        c = cov_poly(g, coeffs)
        s = g.weights
        assert commutation(c, s) <= 1e-8 * np.linalg.norm(c) * np.linalg.norm(s)

    def test_psd(self):
        g = generate_er(12, 0.3, seed=2)
        c = cov_poly(g, random_filter_coeffs(g, 3, seed=9))
        assert np.linalg.eigvalsh(c)[0] >= -1e-10


class TestRandomFilterCoeffs:
    def test_unit_spectral_norm(self):
        g = generate_er(15, 0.25, seed=4)
        coeffs = random_filter_coeffs(g, 3, seed=5)
        h = graph_filter(g, coeffs)
        assert np.linalg.norm(h, ord=2) == pytest.approx(1.0, abs=1e-9)

    def test_deterministic(self):
        g = generate_er(15, 0.25, seed=4)
        a = random_filter_coeffs(g, 3, seed=5)
        b = random_filter_coeffs(g, 3, seed=5)
        assert np.array_equal(a.h, b.h)


class TestCovMrf:
    def test_empty_graph(self):
        g = Gso(np.zeros((4, 4)))
        c = cov_mrf(g, phi=1.0, margin=0.5)
        assert np.allclose(c, 2.0 * np.eye(4))

    def test_two_node_hand_inverse(self):
        # sigma = 2, precision [[2,1],[1,2]], inverse = (1/3) [[2,-1],[-1,2]]
        c = cov_mrf(two_node_edge(), phi=1.0, margin=1.0)
        assert np.allclose(c, np.array([[2.0, -1.0], [-1.0, 2.0]]) / 3.0)

    def test_commutes(self):
        g = generate_er(10, 0.3, seed=6)
        c = cov_mrf(g, phi=0.7, margin=0.2)
        assert commutation(c, g.weights) <= 1e-8 * np.linalg.norm(c) * np.linalg.norm(g.weights)

    def test_eigenvalue_range(self):
        g = generate_er(10, 0.3, seed=6)
        margin = 0.3
        eigs = np.linalg.eigvalsh(cov_mrf(g, phi=0.9, margin=margin))
        assert eigs[0] > 0.0
        assert eigs[-1] <= 1.0 / margin + 1e-12

    def test_parameter_validation(self):
        g = two_node_edge()
        with pytest.raises(ParameterError):
            cov_mrf(g, phi=0.0, margin=0.1)
        with pytest.raises(ParameterError):
            cov_mrf(g, phi=1.0, margin=0.0)


class TestSampleSignals:
    def test_identity_covariance(self):
        m = 10_000
        x = sample_signals(np.eye(4), m, seed=0)
        chat = sample_covariance(x)
        assert np.max(np.abs(chat - np.eye(4))) <= 5.0 / np.sqrt(m)

    def test_zero_covariance(self):
        x = sample_signals(np.zeros((3, 3)), 10, seed=1)
        assert np.array_equal(x, np.zeros((3, 10)))

    def test_convergence_rate(self):
        g = generate_er(20, 0.2, seed=7)
        c = cov_poly(g, random_filter_coeffs(g, 3, seed=8))
        errs = []
        for m in (10**3, 10**4, 10**5):
            x = sample_signals(c, m, seed=9)
            errs.append(np.linalg.norm(sample_covariance(x) - c) / np.linalg.norm(c))
        assert errs[0] > errs[1] > errs[2]
        assert errs[-1] <= 0.05

    def test_rejects_indefinite(self):
        with pytest.raises(ModelError):
            sample_signals(np.array([[1.0, 0.0], [0.0, -1.0]]), 5, seed=0)

    def test_rejects_bad_m(self):
        with pytest.raises(ParameterError):
            sample_signals(np.eye(2), 0, seed=0)


class TestSampleCovariance:
    def test_single_basis_column(self):
        x = np.array([[1.0], [0.0], [0.0]])
        expected = np.zeros((3, 3))
        expected[0, 0] = 1.0
        assert np.array_equal(sample_covariance(x), expected)

    def test_zero_signals(self):
        assert np.array_equal(sample_covariance(np.zeros((3, 4))), np.zeros((3, 3)))

    def test_two_orthogonal_columns(self):
        x = np.array([[1.0, 0.0], [0.0, 1.0]])
        assert np.allclose(sample_covariance(x), 0.5 * np.eye(2))


class TestCovarianceSet:
    def test_sample_kind_needs_counts(self):
        with pytest.raises(ParameterError):
            CovarianceSet(matrices=(np.eye(3),), kind="sample")

    def test_rejects_non_psd(self):
        with pytest.raises(ModelError):
            CovarianceSet(matrices=(np.diag([1.0, -1.0]),), kind="analytic_poly")

    def test_round_numbers(self):
        cs = CovarianceSet(matrices=(np.eye(3), 2 * np.eye(3)), kind="sample", sample_counts=(5, 7))
        assert cs.k == 2
        assert cs.sample_counts == (5, 7)
