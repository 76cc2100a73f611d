"""Graph-shift operators, synthetic ensembles, and observed/hidden block views.

The shift operator used throughout is the weighted adjacency matrix of an
undirected graph: symmetric, hollow (zero diagonal) and entrywise
nonnegative.  A shared :class:`NodePartition` splits the node set into
observed and hidden subsets; block extraction reorders nodes so observed
ones come first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, PartitionError

__all__ = [
    "Gso",
    "NodePartition",
    "GraphEnsemble",
    "GsoBlocks",
    "generate_er",
    "perturb_related",
    "select_hidden",
    "partition_blocks",
    "matrix_blocks",
    "reassemble",
]


def _validated_weights(weights) -> np.ndarray:
    w = np.array(weights, dtype=float)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise ParameterError(f"weights must be a square matrix, got shape {w.shape}")
    if not np.array_equal(w, w.T):
        raise ParameterError("weights must be exactly symmetric")
    if np.any(np.diagonal(w) != 0.0):
        raise ParameterError("weights must have a zero diagonal (no self-loops)")
    if np.any(w < 0.0):
        raise ParameterError("weights must be nonnegative")
    return w


@dataclass(frozen=True, eq=False)
class Gso:
    """Graph-shift operator: symmetric hollow nonnegative adjacency matrix."""

    weights: np.ndarray

    def __post_init__(self):
        w = _validated_weights(self.weights)
        w.flags.writeable = False
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    def edge_count(self) -> int:
        return int(np.count_nonzero(np.triu(self.weights, k=1)))

    def edge_set(self) -> set[tuple[int, int]]:
        i, j = np.nonzero(np.triu(self.weights, k=1))
        return set(zip(i.tolist(), j.tolist()))


@dataclass(frozen=True)
class NodePartition:
    """Ordered split of {0..n-1} into observed and hidden index lists."""

    observed: tuple[int, ...]
    hidden: tuple[int, ...] = ()

    def __post_init__(self):
        observed = tuple(int(i) for i in self.observed)
        hidden = tuple(int(i) for i in self.hidden)
        n = len(observed) + len(hidden)
        if sorted(observed + hidden) != list(range(n)):
            raise PartitionError("observed and hidden must disjointly cover 0..n-1")
        if len(hidden) >= len(observed):
            raise PartitionError(
                f"need fewer hidden than observed nodes, got H={len(hidden)} O={len(observed)}"
            )
        object.__setattr__(self, "observed", observed)
        object.__setattr__(self, "hidden", hidden)

    @property
    def n(self) -> int:
        return len(self.observed) + len(self.hidden)

    @property
    def n_observed(self) -> int:
        return len(self.observed)

    @property
    def n_hidden(self) -> int:
        return len(self.hidden)

    def permutation(self) -> np.ndarray:
        """Node ordering with observed indices first, hidden last."""
        return np.array(self.observed + self.hidden, dtype=int)


@dataclass(frozen=True)
class GraphEnsemble:
    """K shift operators on a common node set with one shared partition."""

    graphs: tuple[Gso, ...]
    partition: NodePartition

    def __post_init__(self):
        graphs = tuple(self.graphs)
        if len(graphs) < 1:
            raise ParameterError("ensemble needs at least one graph")
        n = graphs[0].n
        if any(g.n != n for g in graphs):
            raise ParameterError("all graphs in an ensemble must share the node count")
        if self.partition.n != n:
            raise PartitionError(
                f"partition covers {self.partition.n} nodes but graphs have {n}"
            )
        object.__setattr__(self, "graphs", graphs)

    @property
    def k(self) -> int:
        return len(self.graphs)

    @property
    def n(self) -> int:
        return self.graphs[0].n


@dataclass(frozen=True, eq=False)
class GsoBlocks:
    """Observed/hidden blocks of a shift operator under a partition."""

    s_oo: np.ndarray
    s_oh: np.ndarray
    s_hh: np.ndarray


def generate_er(n: int, p: float, seed=None) -> Gso:
    """Draw an Erdős–Rényi graph G(n, p) with unit edge weights."""
    if n < 2:
        raise ParameterError(f"need n >= 2 nodes, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    iu = np.triu_indices(n, k=1)
    w = np.zeros((n, n))
    w[iu] = (rng.random(iu[0].size) < p).astype(float)
    w += w.T
    return Gso(w)


def perturb_related(base: Gso, rho: float, seed=None) -> Gso:
    """Flip each node pair's edge indicator independently with probability rho.

    Surviving edges keep their original weight; created edges get weight 1.
    """
    if not 0.0 <= rho <= 1.0:
        raise ParameterError(f"flip probability must lie in [0, 1], got {rho}")
    rng = np.random.default_rng(seed)
    n = base.n
    iu = np.triu_indices(n, k=1)
    old = base.weights[iu]
    present = old != 0.0
    flip = rng.random(iu[0].size) < rho
    new = np.where(present ^ flip, np.where(present, old, 1.0), 0.0)
    w = np.zeros((n, n))
    w[iu] = new
    w += w.T
    return Gso(w)


def select_hidden(n: int, h: int, seed=None, policy: str = "random") -> NodePartition:
    """Choose h hidden nodes out of n, keeping hidden strictly fewer than observed."""
    if h < 0:
        raise ParameterError(f"hidden count must be nonnegative, got {h}")
    if h >= n - h:
        raise PartitionError(
            f"hidden count {h} must stay below observed count {n - h}"
        )
    if policy == "last":
        hidden = tuple(range(n - h, n))
    elif policy == "random":
        rng = np.random.default_rng(seed)
        hidden = tuple(sorted(rng.choice(n, size=h, replace=False).tolist()))
    else:
        raise ParameterError(f"unknown hidden-selection policy {policy!r}")
    observed = tuple(i for i in range(n) if i not in set(hidden))
    return NodePartition(observed=observed, hidden=hidden)


def matrix_blocks(m: np.ndarray, part: NodePartition) -> GsoBlocks:
    """Extract observed/observed, observed/hidden and hidden/hidden blocks.

    Works for any symmetric node-indexed matrix (shift operators and
    covariances share the same block structure).
    """
    m = np.asarray(m, dtype=float)
    if m.shape[0] != part.n or m.shape[1] != part.n:
        raise PartitionError(
            f"partition covers {part.n} nodes but matrix is {m.shape[0]}x{m.shape[1]}"
        )
    obs = np.array(part.observed, dtype=int)
    hid = np.array(part.hidden, dtype=int)
    return GsoBlocks(
        s_oo=m[np.ix_(obs, obs)],
        s_oh=m[np.ix_(obs, hid)],
        s_hh=m[np.ix_(hid, hid)],
    )


def partition_blocks(g: Gso, part: NodePartition) -> GsoBlocks:
    """Block view of a shift operator with observed nodes ordered first."""
    return matrix_blocks(g.weights, part)


def reassemble(blocks: GsoBlocks, part: NodePartition) -> Gso:
    """Invert :func:`partition_blocks`, restoring the original node order."""
    o, h = part.n_observed, part.n_hidden
    if blocks.s_oo.shape != (o, o) or blocks.s_oh.shape != (o, h) or blocks.s_hh.shape != (h, h):
        raise PartitionError("block shapes do not match the partition sizes")
    n = part.n
    stacked = np.zeros((n, n))
    stacked[:o, :o] = blocks.s_oo
    stacked[:o, o:] = blocks.s_oh
    stacked[o:, :o] = blocks.s_oh.T
    stacked[o:, o:] = blocks.s_hh
    perm = part.permutation()
    w = np.zeros((n, n))
    w[np.ix_(perm, perm)] = stacked
    return Gso(w)
