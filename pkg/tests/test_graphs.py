import numpy as np
import pytest

from graphjoint.errors import ParameterError, PartitionError
from graphjoint.graphs import (
    Gso,
    NodePartition,
    generate_er,
    matrix_blocks,
    partition_blocks,
    perturb_related,
    reassemble,
    select_hidden,
)


def gso_invariants(g: Gso):
    w = g.weights
    assert np.array_equal(w, w.T)
    assert np.all(np.diagonal(w) == 0)
    assert np.all(w >= 0)


class TestGso:
    def test_rejects_asymmetric(self):
        with pytest.raises(ParameterError):
            Gso(np.array([[0.0, 1.0], [0.5, 0.0]]))

    def test_rejects_nonzero_diagonal(self):
        with pytest.raises(ParameterError):
            Gso(np.array([[1.0, 0.0], [0.0, 0.0]]))

    def test_rejects_negative(self):
        with pytest.raises(ParameterError):
            Gso(np.array([[0.0, -1.0], [-1.0, 0.0]]))

    def test_weights_read_only(self):
        g = generate_er(5, 0.5, seed=0)
        with pytest.raises(ValueError):
            g.weights[0, 1] = 3.0


class TestGenerateEr:
    def test_p_zero_empty(self):
        g = generate_er(5, 0.0, seed=1)
        assert g.edge_count() == 0

    def test_p_one_complete(self):
        g = generate_er(5, 1.0, seed=1)
        assert g.edge_count() == 10

    def test_invariants_and_determinism(self):
        a = generate_er(20, 0.2, seed=42)
        b = generate_er(20, 0.2, seed=42)
        gso_invariants(a)
        assert np.array_equal(a.weights, b.weights)

    def test_invalid_parameters(self):
        with pytest.raises(ParameterError):
            generate_er(1, 0.5)
        with pytest.raises(ParameterError):
            generate_er(5, 1.5)
        with pytest.raises(ParameterError):
            generate_er(5, -0.1)

    def test_expected_edge_count(self):
        # mean edge count of G(20, 0.2) is 0.2 * 190 = 38; Monte Carlo mean
        # over 10^4 seeded draws stays within 3 standard errors
        draws = 10_000
        rng = np.random.default_rng(7)
        counts = [generate_er(20, 0.2, rng).edge_count() for _ in range(draws)]
        se = np.sqrt(190 * 0.2 * 0.8 / draws)
        assert abs(np.mean(counts) - 38.0) <= 3 * se


class TestPerturbRelated:
    def test_rho_zero_identity(self):
        base = generate_er(12, 0.3, seed=3)
        out = perturb_related(base, 0.0, seed=4)
        assert np.array_equal(out.weights, base.weights)

    def test_rho_one_complement(self):
        base = generate_er(12, 0.3, seed=3)
        out = perturb_related(base, 1.0, seed=4)
        expected = np.ones((12, 12)) - np.eye(12)
        expected[base.weights != 0] = 0.0
        assert np.array_equal(out.weights, expected)

    def test_determinism_and_invariants(self):
        base = generate_er(12, 0.3, seed=3)
        a = perturb_related(base, 0.25, seed=9)
        b = perturb_related(base, 0.25, seed=9)
        gso_invariants(a)
        assert np.array_equal(a.weights, b.weights)

    def test_expected_edit_distance(self):
        # flips are Bernoulli(rho) over n(n-1)/2 pairs: expected Hamming
        # distance for rho=0.1 on 20 nodes is 0.1 * 190 = 19
        base = generate_er(20, 0.2, seed=5)
        draws = 10_000
        rng = np.random.default_rng(11)
        dists = []
        for _ in range(draws):
            out = perturb_related(base, 0.1, rng)
            dists.append(np.count_nonzero(np.triu(out.weights != base.weights, k=1)))
        se = np.sqrt(190 * 0.1 * 0.9 / draws)
        assert abs(np.mean(dists) - 19.0) <= 3 * se

    def test_invalid_rho(self):
        base = generate_er(5, 0.5, seed=0)
        with pytest.raises(ParameterError):
            perturb_related(base, 1.2)


class TestSelectHidden:
    def test_no_hidden(self):
        part = select_hidden(20, 0, seed=0)
        assert part.hidden == ()
        assert part.observed == tuple(range(20))

    def test_last_policy(self):
        part = select_hidden(20, 1, policy="last")
        assert part.hidden == (19,)

    def test_random_reproducible(self):
        a = select_hidden(32, 1, seed=123, policy="random")
        b = select_hidden(32, 1, seed=123, policy="random")
        assert a == b
        assert len(a.hidden) == 1

    def test_as1_violation(self):
        with pytest.raises(PartitionError):
            select_hidden(10, 5)

    def test_unknown_policy(self):
        with pytest.raises(ParameterError):
            select_hidden(10, 1, policy="first")


class TestPartitionBlocks:
    def test_empty_hidden(self):
        g = generate_er(6, 0.5, seed=2)
        part = select_hidden(6, 0)
        blocks = partition_blocks(g, part)
        assert np.array_equal(blocks.s_oo, g.weights)
        assert blocks.s_oh.shape == (6, 0)
        assert blocks.s_hh.shape == (0, 0)

    def test_path_graph_blocks(self):
        w = np.zeros((3, 3))
        w[0, 1] = w[1, 0] = 1.0
        w[1, 2] = w[2, 1] = 1.0
        g = Gso(w)
        part = NodePartition(observed=(0, 1), hidden=(2,))
        blocks = partition_blocks(g, part)
        assert np.array_equal(blocks.s_oo, np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert np.array_equal(blocks.s_oh, np.array([[0.0], [1.0]]))
        assert np.array_equal(blocks.s_hh, np.array([[0.0]]))

    def test_round_trip(self):
        g = generate_er(20, 0.4, seed=8)
        part = select_hidden(20, 4, seed=9, policy="random")
        blocks = partition_blocks(g, part)
        back = reassemble(blocks, part)
        assert np.array_equal(back.weights, g.weights)

    def test_out_of_range(self):
        g = generate_er(5, 0.5, seed=0)
        part = select_hidden(6, 1, policy="last")
        with pytest.raises(PartitionError):
            partition_blocks(g, part)

    def test_matrix_blocks_matches_manual(self):
        g = generate_er(8, 0.5, seed=14)
        part = select_hidden(8, 2, seed=3, policy="random")
        blocks = matrix_blocks(g.weights, part)
        obs, hid = list(part.observed), list(part.hidden)
        assert np.array_equal(blocks.s_oh, g.weights[np.ix_(obs, hid)])


class TestNodePartition:
    def test_rejects_overlap(self):
        with pytest.raises(PartitionError):
            NodePartition(observed=(0, 1, 2), hidden=(2,))

    def test_rejects_hidden_majority(self):
        with pytest.raises(PartitionError):
            NodePartition(observed=(0,), hidden=(1, 2))
