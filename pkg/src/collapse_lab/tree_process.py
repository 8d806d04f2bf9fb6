"""Poisson Galton-Watson trees with root-preserving leaf pruning.

The branching picture: a depth-t tree models the t-neighborhood of a vertex in
a sparse random graph.  Pruning removes, in synchronized rounds, every
non-root vertex of degree 1 (in a tree those are exactly the dominated
vertices), and never touches the root.  gamma_t is the probability that the
root is isolated after at most t-1 rounds, and the surviving root degree
after t-1 rounds follows a thinned Poisson law.

Trees live in flat numpy arrays in BFS order: children of each node are
contiguous, so parent / first_child / n_children columns encode the shape
with no per-node objects.  Offspring counts are Poisson sampled by inversion:
a cached cdf table plus searchsorted, equivalent to the textbook sequential
search but batched per layer.

Reproducibility: estimate_gamma gives trial i its own generator seeded with
mix_seed(seed, i), so any single tree can be re-drawn in isolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graph_core import AdjacencyGraph, mix_seed, rng_from_seed

_CDF_TAIL = 1e-16


@lru_cache(maxsize=64)
def _poisson_cdf(lam: float) -> np.ndarray:
    """Cumulative Poisson(lam) table, long enough that the tail is < 1e-16."""
    if lam < 0:
        raise ValueError(f"rate must be >= 0, got {lam}")
    term = math.exp(-lam)
    total = term
    cdf = [total]
    k = 0
    while total < 1.0 - _CDF_TAIL and k < 10_000:
        k += 1
        term *= lam / k
        total += term
        cdf.append(total)
    out = np.array(cdf)
    out.setflags(write=False)
    return out


def _poisson_counts(cdf: np.ndarray, rng: np.random.Generator, size: int) -> np.ndarray:
    # inversion: count = #{k : cdf[k] <= u} = searchsorted right
    return np.searchsorted(cdf, rng.random(size), side="right")


@dataclass(frozen=True)
class PoissonTree:
    """Depth-truncated offspring tree in BFS layout.

    parent[0] is -1; first_child[v] is -1 for childless v.  layer_offsets has
    one entry per depth plus a terminal size entry, so the nodes at depth d
    occupy indices layer_offsets[d]:layer_offsets[d+1].
    """

    parent: np.ndarray
    first_child: np.ndarray
    n_children: np.ndarray
    depth: np.ndarray
    trunc_depth: int
    layer_offsets: np.ndarray

    @property
    def size(self) -> int:
        return len(self.parent)

    def root_degree(self) -> int:
        return int(self.n_children[0])

    def to_graph(self) -> AdjacencyGraph:
        """The same tree as an adjacency graph on vertex ids 0..size-1."""
        edges = [(int(self.parent[v]), v) for v in range(1, self.size)]
        return AdjacencyGraph.from_edges(self.size, edges)


def sample_tree(c: float, depth: int, rng: np.random.Generator) -> PoissonTree:
    """Grow a Galton-Watson tree with Poisson(c) offspring, cut at trunc depth."""
    if c < 0:
        raise ValueError(f"offspring mean must be >= 0, got {c}")
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    cdf = _poisson_cdf(float(c))
    parents = [np.array([-1], dtype=np.int64)]
    counts_per_layer: list[np.ndarray] = []
    offsets = [0, 1]
    layer_start = 0
    layer_size = 1
    for _ in range(depth):
        counts = _poisson_counts(cdf, rng, layer_size)
        counts_per_layer.append(counts)
        n_next = int(counts.sum())
        if n_next == 0:
            break
        node_ids = np.arange(layer_start, layer_start + layer_size, dtype=np.int64)
        parents.append(np.repeat(node_ids, counts))
        layer_start += layer_size
        layer_size = n_next
        offsets.append(layer_start + layer_size)
    # boundary layer (or extinct tail) has no offspring draws
    parent = np.concatenate(parents)
    size = len(parent)
    n_children = np.zeros(size, dtype=np.int64)
    pos = 0
    for counts in counts_per_layer:
        n_children[pos : pos + len(counts)] = counts
        pos += len(counts)
    first_child = np.full(size, -1, dtype=np.int64)
    have = n_children > 0
    first_child[have] = np.cumsum(n_children)[have] - n_children[have] + 1
    depths = np.zeros(size, dtype=np.int64)
    for d in range(1, len(offsets) - 1):
        depths[offsets[d] : offsets[d + 1]] = d
    return PoissonTree(
        parent=parent,
        first_child=first_child,
        n_children=n_children,
        depth=depths,
        trunc_depth=depth,
        layer_offsets=np.array(offsets, dtype=np.int64),
    )


# -- pruning -----------------------------------------------------------------


def root_collapse(tree: PoissonTree, max_steps: int) -> int | None:
    """Prune rounds until the root is isolated; None if max_steps is not enough.

    Each round simultaneously removes every non-root vertex with tree degree 1
    and returns the first round index after which the root has degree 0 (0 for
    a bare root).  Literal simulation; estimate_gamma uses the height shortcut
    and the tests hold the two equal.
    """
    if max_steps < 0:
        raise ValueError(f"max_steps must be >= 0, got {max_steps}")
    alive = np.ones(tree.size, dtype=bool)
    kids = tree.n_children.copy()
    if kids[0] == 0:
        return 0
    for step in range(1, max_steps + 1):
        removable = alive & (kids == 0)
        removable[0] = False
        if not removable.any():
            break
        alive[removable] = False
        dec = np.bincount(tree.parent[removable], minlength=tree.size)
        kids -= dec
        if kids[0] == 0:
            return step
    return None


def _subtree_heights(tree: PoissonTree) -> np.ndarray:
    """Height of each vertex's descendant subtree inside the truncation."""
    h = np.zeros(tree.size, dtype=np.int64)
    offsets = tree.layer_offsets
    for d in range(len(offsets) - 2, 0, -1):
        lo, hi = int(offsets[d]), int(offsets[d + 1])
        if lo == hi:
            continue
        np.maximum.at(h, tree.parent[lo:hi], h[lo:hi] + 1)
    return h


def _isolation_step(tree: PoissonTree) -> int:
    # a non-root vertex v disappears at round height(v) + 1, so the root is
    # first isolated at 1 + max over children, and at 0 when born childless
    if tree.n_children[0] == 0:
        return 0
    h = _subtree_heights(tree)
    return int(h[0])


def root_degree_after(tree: PoissonTree, steps: int) -> int:
    """Root degree once `steps` pruning rounds have run."""
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    k = tree.root_degree()
    if k == 0 or steps == 0:
        return k
    h = _subtree_heights(tree)
    lo = int(tree.first_child[0])
    child_h = h[lo : lo + k]
    # child with subtree height m is removed at round m + 1
    return int((child_h >= steps).sum())


# -- Monte-Carlo gamma estimation ---------------------------------------------


@dataclass(frozen=True)
class TreeTrialStats:
    """Aggregates over many depth-t trees pruned for t-1 rounds."""

    c: float
    t: int
    trials: int
    isolated_by_step: tuple[int, ...]
    root_degree_hist: tuple[int, ...]

    @property
    def gamma_hat(self) -> float:
        return self.isolated_by_step[self.t - 1] / self.trials

    @property
    def stderr(self) -> float:
        g = self.gamma_hat
        return math.sqrt(g * (1.0 - g) / self.trials)

    def pmf_hat(self, k: int) -> float:
        if 0 <= k < len(self.root_degree_hist):
            return self.root_degree_hist[k] / self.trials
        return 0.0


def estimate_gamma(c: float, t: int, trials: int, seed: int) -> TreeTrialStats:
    """Sample depth-t trees and estimate gamma_t and the root-degree law.

    isolated_by_step[s] counts trials whose root was isolated after at most s
    rounds (s = 0..t-1, non-decreasing); gamma_hat reads the s = t-1 entry.
    The degree histogram is taken after t-1 rounds, whose k = 0 bucket is the
    isolation event again.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    iso = np.zeros(t, dtype=np.int64)
    hist: dict[int, int] = {}
    for i in range(trials):
        rng = rng_from_seed(mix_seed(seed, i))
        tree = sample_tree(c, t, rng)
        if tree.n_children[0] == 0:
            iso += 1
            hist[0] = hist.get(0, 0) + 1
            continue
        h = _subtree_heights(tree)
        iso_step = int(h[0])
        if iso_step < t:
            iso[iso_step:] += 1
        k = tree.root_degree()
        lo = int(tree.first_child[0])
        deg = int((h[lo : lo + k] >= t - 1).sum()) if t > 1 else k
        hist[deg] = hist.get(deg, 0) + 1
    kmax = max(hist)
    return TreeTrialStats(
        c=float(c),
        t=t,
        trials=trials,
        isolated_by_step=tuple(int(x) for x in iso),
        root_degree_hist=tuple(hist.get(k, 0) for k in range(kmax + 1)),
    )
