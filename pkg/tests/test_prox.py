import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphjoint.errors import DimensionError, ParameterError
from graphjoint.graphs import generate_er, matrix_blocks, select_hidden
from graphjoint.prox import (
    column_support,
    commutativity_residual,
    group_soft_threshold,
    project_feasible,
    soft_threshold,
    stacked_group_soft_threshold,
    svd_soft_threshold,
)
from graphjoint.serialize import load_fixture, load_json_file, matrix_from_json
from graphjoint.signals import cov_poly, random_filter_coeffs


def golden_section_min(f, lo, hi, tol=1e-9):
    """Scalar minimizer for oracle checks; independent of any closed form."""
    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c, d = b - invphi * (b - a), a + invphi * (b - a)
    while abs(b - a) > tol:
        if f(c) < f(d):
            b, d = d, c
            c = b - invphi * (b - a)
        else:
            a, c = c, d
            d = a + invphi * (b - a)
    return 0.5 * (a + b)


class TestSoftThreshold:
    def test_zero_tau_identity(self):
        m = np.array([[1.5, -2.0], [0.0, 3.0]])
        assert np.array_equal(soft_threshold(m, 0.0), m)

    def test_scalar_values(self):
        assert soft_threshold(np.array(3.0), 1.0) == pytest.approx(2.0)
        assert soft_threshold(np.array(-0.5), 1.0) == pytest.approx(0.0)

    @given(st.floats(-10, 10), st.floats(0, 5))
    @settings(max_examples=50, deadline=None)
    def test_matches_scalar_minimization(self, x, tau):
        # prox of tau*|.| solves min_z 0.5 (z - x)^2 + tau |z|
        got = float(soft_threshold(np.array(x), tau))
        oracle = golden_section_min(lambda z: 0.5 * (z - x) ** 2 + tau * abs(z), -15.0, 15.0)
        assert got == pytest.approx(oracle, abs=1e-6)

    def test_rejects_negative_tau(self):
        with pytest.raises(ParameterError):
            soft_threshold(np.zeros(2), -1.0)


class TestGroupSoftThreshold:
    def test_column_shrink_by_half(self):
        m = np.array([[3.0], [4.0]])
        assert np.allclose(group_soft_threshold(m, 2.5), np.array([[1.5], [2.0]]))

    def test_small_column_zeroed(self):
        m = np.array([[0.6], [0.8]])  # norm 1
        assert np.array_equal(group_soft_threshold(m, 1.0), np.zeros((2, 1)))

    def test_zero_tau_identity(self):
        m = np.random.default_rng(0).normal(size=(4, 4))
        assert np.array_equal(group_soft_threshold(m, 0.0), m)

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=30, deadline=None)
    def test_never_increases_column_norms(self, seed):
        rng = np.random.default_rng(seed)
        m = rng.normal(size=(5, 6))
        tau = rng.uniform(0.0, 3.0)
        out = group_soft_threshold(m, tau)
        assert np.all(
            np.linalg.norm(out, axis=0) <= np.linalg.norm(m, axis=0) + 1e-12
        )


class TestStackedGroupSoftThreshold:
    def test_joint_column_scaling(self):
        a = np.array([[3.0], [0.0]])
        b = np.array([[0.0], [4.0]])
        oa, ob = stacked_group_soft_threshold(a, b, 2.5)
        assert np.allclose(oa, np.array([[1.5], [0.0]]))
        assert np.allclose(ob, np.array([[0.0], [2.0]]))

    def test_zero_tau(self):
        rng = np.random.default_rng(1)
        a, b = rng.normal(size=(3, 3)), rng.normal(size=(3, 3))
        oa, ob = stacked_group_soft_threshold(a, b, 0.0)
        assert np.array_equal(oa, a) and np.array_equal(ob, b)

    def test_zero_inputs(self):
        oa, ob = stacked_group_soft_threshold(np.zeros((2, 2)), np.zeros((2, 2)), 1.0)
        assert np.array_equal(oa, np.zeros((2, 2)))
        assert np.array_equal(ob, np.zeros((2, 2)))

    def test_same_columns_zeroed(self):
        rng = np.random.default_rng(2)
        a, b = rng.normal(size=(4, 5)), rng.normal(size=(4, 5))
        oa, ob = stacked_group_soft_threshold(a, b, 1.5)
        dead_a = np.linalg.norm(oa, axis=0) == 0
        dead_b = np.linalg.norm(ob, axis=0) == 0
        assert np.array_equal(dead_a, dead_b)

    def test_shape_mismatch(self):
        with pytest.raises(DimensionError):
            stacked_group_soft_threshold(np.zeros((2, 2)), np.zeros((3, 3)), 1.0)


class TestSvdSoftThreshold:
    def test_zero_tau_reconstructs(self):
        rng = np.random.default_rng(3)
        m = rng.normal(size=(5, 5))
        assert np.allclose(svd_soft_threshold(m, 0.0), m, atol=1e-10)

    def test_diagonal_case(self):
        out = svd_soft_threshold(np.diag([3.0, 1.0]), 2.0)
        assert np.allclose(out, np.diag([1.0, 0.0]), atol=1e-12)

    def test_zero_iff_tau_above_sigma_max(self):
        rng = np.random.default_rng(4)
        m = rng.normal(size=(5, 5))
        smax = np.linalg.svd(m, compute_uv=False)[0]
        assert np.allclose(svd_soft_threshold(m, smax), 0.0, atol=1e-10)
        assert np.linalg.norm(svd_soft_threshold(m, 0.99 * smax)) > 1e-6

    def test_rank_never_increases(self):
        rng = np.random.default_rng(5)
        m = rng.normal(size=(6, 4))
        for tau in (0.0, 0.5, 2.0):
            out = svd_soft_threshold(m, tau)
            assert np.linalg.matrix_rank(out, tol=1e-9) <= np.linalg.matrix_rank(m, tol=1e-9)


def in_feasible_set(s: np.ndarray, tol: float = 1e-10) -> bool:
    return (
        np.all(np.abs(s - s.T) <= tol)
        and np.all(np.abs(np.diagonal(s)) <= tol)
        and np.all(s >= -tol)
        and abs(s[:, 0].sum() - 1.0) <= tol
    )


class TestProjectFeasible:
    def test_zero_matrix_uniform_first_column(self):
        out = project_feasible(np.zeros((5, 5)))
        expected = np.zeros((5, 5))
        expected[0, 1:] = 0.25
        expected[1:, 0] = 0.25
        assert np.allclose(out, expected, atol=1e-12)

    def test_idempotent_on_feasible(self):
        rng = np.random.default_rng(6)
        m = np.abs(rng.normal(size=(6, 6)))
        m = 0.5 * (m + m.T)
        np.fill_diagonal(m, 0.0)
        m[0, 1:] /= m[0, 1:].sum()
        m[1:, 0] = m[0, 1:]
        out = project_feasible(m)
        assert np.allclose(out, m, atol=1e-10)

    def test_two_node_singleton(self):
        out = project_feasible(np.array([[0.0, 3.0], [3.0, 0.0]]))
        assert np.allclose(out, np.array([[0.0, 1.0], [1.0, 0.0]]), atol=1e-12)

    def test_feasibility_on_random_inputs(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            out = project_feasible(rng.normal(size=(8, 8)) * 3.0)
            assert in_feasible_set(out)

    def test_projection_idempotence(self):
        rng = np.random.default_rng(8)
        for _ in range(20):
            once = project_feasible(rng.normal(size=(7, 7)))
            twice = project_feasible(once)
            assert np.allclose(once, twice, atol=1e-10)

    def test_nonexpansive(self):
        rng = np.random.default_rng(9)
        for _ in range(30):
            x, y = rng.normal(size=(6, 6)), rng.normal(size=(6, 6))
            px, py = project_feasible(x), project_feasible(y)
            assert np.linalg.norm(px - py) <= np.linalg.norm(x - y) + 1e-12

    def test_rejects_single_node(self):
        with pytest.raises(DimensionError):
            project_feasible(np.zeros((1, 1)))


class TestCommutativityResidual:
    def test_identity_commutes(self):
        rng = np.random.default_rng(10)
        s = rng.normal(size=(5, 5))
        assert commutativity_residual(np.eye(5), s, np.zeros((5, 5))) == pytest.approx(0.0)

    def test_symmetric_lift_cancels(self):
        rng = np.random.default_rng(11)
        c = np.diag(rng.uniform(1, 2, size=4))
        s = np.diag(rng.uniform(1, 2, size=4))
        q = rng.normal(size=(4, 4))
        q = q + q.T
        assert commutativity_residual(c, s, q) == pytest.approx(0.0, abs=1e-12)

    def test_invariant_under_symmetric_shift(self):
        rng = np.random.default_rng(12)
        c, s, p = rng.normal(size=(5, 5)), rng.normal(size=(5, 5)), rng.normal(size=(5, 5))
        q = rng.normal(size=(5, 5))
        q = q + q.T
        r1 = commutativity_residual(c, s, p)
        r2 = commutativity_residual(c, s, p + q)
        assert r1 == pytest.approx(r2, rel=1e-12)

    def test_exact_lift_from_true_blocks(self):
        # keystone: the lifted product built from the true covariance and
        # shift blocks drives the observed-block residual to zero
        for trial in range(20):
            rng = np.random.default_rng([13, trial])
            g = generate_er(20, 0.3, rng)
            coeffs = random_filter_coeffs(g, 3, rng)
            c = cov_poly(g, coeffs)
            h = int(rng.integers(1, 5))
            part = select_hidden(20, h, rng, policy="random")
            cb = matrix_blocks(c, part)
            sb = matrix_blocks(g.weights, part)
            p = cb.s_oh @ sb.s_oh.T
            res = commutativity_residual(cb.s_oo, sb.s_oo, p)
            assert res <= 1e-8 * np.linalg.norm(c) * np.linalg.norm(g.weights)


class TestProxLocalOptimality:
    """Each prox value should beat random perturbations on its objective."""

    def prox_objective(self, z, x, tau, penalty):
        return 0.5 * np.sum((z - x) ** 2) + tau * penalty(z)

    @pytest.mark.parametrize(
        "op,penalty",
        [
            (soft_threshold, lambda z: np.sum(np.abs(z))),
            (group_soft_threshold, lambda z: np.sum(np.linalg.norm(z, axis=0))),
            (svd_soft_threshold, lambda z: np.sum(np.linalg.svd(z, compute_uv=False))),
        ],
    )
    def test_beats_perturbations(self, op, penalty):
        rng = np.random.default_rng(14)
        x = rng.normal(size=(4, 4))
        tau = 0.8
        z = op(x, tau)
        base = self.prox_objective(z, x, tau, penalty)
        for _ in range(1000):
            pert = z + rng.normal(size=z.shape) * rng.choice([1e-3, 1e-2, 1e-1])
            assert self.prox_objective(pert, x, tau, penalty) >= base - 1e-12


class TestColumnSupport:
    def test_reports_nonzero_columns(self):
        p = np.zeros((4, 4))
        p[:, 2] = 1.0
        assert column_support(p).tolist() == [2]


class TestCommittedProxFixtures:
    """Closed forms must match the numeric-minimization reference values."""

    def test_fixture_cases(self, fixture_dir):
        cases = load_json_file(fixture_dir / "prox_fixtures.json")["cases"]
        assert len(cases) >= 10
        for case in cases:
            kind = case["kind"]
            tau = case["tau"]
            if kind == "stacked_group":
                a = matrix_from_json(case["input_a"])
                b = matrix_from_json(case["input_b"])
                oa, ob = stacked_group_soft_threshold(a, b, tau)
                assert np.allclose(oa, matrix_from_json(case["expected_a"]), atol=1e-6)
                assert np.allclose(ob, matrix_from_json(case["expected_b"]), atol=1e-6)
                continue
            x = matrix_from_json(case["input"])
            expected = matrix_from_json(case["expected"])
            if kind == "l1":
                out = soft_threshold(x, tau)
            elif kind == "group_l2":
                out = group_soft_threshold(x, tau)
            elif kind == "nuclear":
                out = svd_soft_threshold(x, tau)
            elif kind == "project_feasible":
                out = project_feasible(x)
            else:
                raise AssertionError(f"unknown fixture kind {kind}")
            assert np.allclose(out, expected, atol=1e-6), kind
