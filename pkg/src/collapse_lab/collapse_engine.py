"""Domination testing and the two-epoch collapse process on clique-complex skeletons.

A vertex v is dominated when some neighbor w satisfies N[v] subset-of N[w];
removing a dominated vertex is an elementary strong collapse and preserves the
homotopy type of the clique complex.  The engine never stores more than the
1-skeleton: induced links stay determined by the graph.

Epoch 1 runs pruning phases.  A phase snapshots the currently dominated set,
walks it in ascending id order, re-verifies each vertex against the *current*
graph and removes it only if still dominated.  Blind simultaneous deletion of
the snapshot would be unsound (in a triangle all three vertices are dominated;
deleting all of them changes the homotopy type), so re-verification is what
keeps every single removal elementary.  Ties among mutually dominated vertices
therefore resolve by ascending id.

Epoch 2 removes one uniformly chosen dominated vertex at a time, logging for
each step the number of vertices that became dominated because of that single
deletion (the Y_i statistic).

Locality fact used throughout: deleting b can only change the domination
status of b's neighbors.  For any v outside N[b], N[v] is untouched and every
candidate dominator of v at most shrinks by an element not in N[v], so the
containment verdict is unchanged.  The dominated set is therefore maintained
incrementally during epoch 2; tests cross-check against full rescans.
"""

from __future__ import annotations

import json
from bisect import insort, bisect_left
from dataclasses import dataclass, asdict

import numpy as np

from .graph_core import AdjacencyGraph


# -- trace records ----------------------------------------------------------


@dataclass(frozen=True)
class PhaseReport:
    """One pruning phase: who was removed, f0 afterwards, newly isolated count."""

    phase_index: int
    removed: list[int]
    f0_after: int
    isolated_created: int


@dataclass(frozen=True)
class CollapseTrace:
    phases: list[PhaseReport]
    initial_f0: int
    reached_core: bool

    def final_f0(self) -> int:
        return self.phases[-1].f0_after if self.phases else self.initial_f0

    def removed_total(self) -> int:
        return sum(len(ph.removed) for ph in self.phases)

    def to_json(self) -> str:
        return json.dumps(
            {
                "initial_f0": self.initial_f0,
                "reached_core": self.reached_core,
                "phases": [asdict(ph) for ph in self.phases],
            }
        )

    def csv_rows(self) -> list[str]:
        """Per-phase rows under the frozen header "phase,f0_after,removed_count"."""
        rows = ["phase,f0_after,removed_count"]
        rows += [f"{ph.phase_index},{ph.f0_after},{len(ph.removed)}" for ph in self.phases]
        return rows


@dataclass(frozen=True)
class Epoch2Trace:
    steps: int
    removed: list[int]
    y_values: list[int]
    deleted_total: int

    def to_json(self) -> str:
        return json.dumps(asdict(self))


# -- domination -------------------------------------------------------------


def _is_dominated(g: AdjacencyGraph, v: int) -> bool:
    """Containment test against every neighbor; isolated vertices never qualify."""
    nv = g.neighbor_view(v)
    target = len(nv) - 1
    # N[v] within N[w] for a neighbor w iff |N(v) & N(w)| == deg(v) - 1: the
    # intersection misses exactly w itself (open neighborhoods omit the owner).
    # Direct _adj reads: hot path, every w in nv is alive by invariant.
    adj = g._adj
    return any(len(nv & adj[w]) == target for w in nv)


def find_dominator(g: AdjacencyGraph, v: int) -> int | None:
    """Smallest-id neighbor w with N[v] subset-of N[w], or None."""
    nv = g.neighbor_view(v)
    target = len(nv) - 1
    adj = g._adj
    for w in sorted(nv):
        if len(nv & adj[w]) == target:
            return w
    return None


def dominated_set(g: AdjacencyGraph) -> list[int]:
    """All alive dominated vertices, ascending."""
    return [v for v in g.alive_ids() if _is_dominated(g, v)]


# -- epoch 1: pruning phases -------------------------------------------------


def prune_phase(
    g: AdjacencyGraph,
    phase_index: int = 1,
    order_rng: np.random.Generator | None = None,
) -> PhaseReport:
    """Snapshot the dominated set, then remove its members that re-verify.

    Processing order is ascending id; `order_rng` substitutes a random
    permutation (used by the core-uniqueness checks, not by the experiments).
    """
    snapshot = dominated_set(g)
    if order_rng is not None:
        snapshot = [snapshot[i] for i in order_rng.permutation(len(snapshot))]
    f0_before = g.non_isolated_count()
    removed: list[int] = []
    for v in snapshot:
        if _is_dominated(g, v):
            g.remove_vertex(v)
            removed.append(v)
    f0_after = g.non_isolated_count()
    return PhaseReport(
        phase_index=phase_index,
        removed=removed,
        f0_after=f0_after,
        isolated_created=f0_before - len(removed) - f0_after,
    )


def run_epoch1(g: AdjacencyGraph, t: int) -> CollapseTrace:
    """Run up to t pruning phases, stopping early once a phase removes nothing."""
    if t < 0:
        raise ValueError(f"phase count must be >= 0, got {t}")
    initial_f0 = g.non_isolated_count()
    phases: list[PhaseReport] = []
    reached_core = False
    for i in range(1, t + 1):
        report = prune_phase(g, phase_index=i)
        phases.append(report)
        if not report.removed:
            reached_core = True
            break
    return CollapseTrace(phases=phases, initial_f0=initial_f0, reached_core=reached_core)


def run_core(
    g: AdjacencyGraph,
    order_rng: np.random.Generator | None = None,
) -> CollapseTrace:
    """Prune until a phase removes nothing; the survivor has no dominated vertex."""
    initial_f0 = g.non_isolated_count()
    phases: list[PhaseReport] = []
    i = 0
    while True:
        i += 1
        report = prune_phase(g, phase_index=i, order_rng=order_rng)
        phases.append(report)
        if not report.removed:
            break
    return CollapseTrace(phases=phases, initial_f0=initial_f0, reached_core=True)


def core_vertices(g: AdjacencyGraph) -> list[int]:
    """Alive non-isolated vertices, the canonical basis for core comparisons."""
    return [v for v in g.alive_ids() if g.degree(v) > 0]


# -- epoch 2: one uniform dominated vertex at a time --------------------------


def newly_dominated_after_deletion(g: AdjacencyGraph, b: int) -> set[int]:
    """Vertices that are dominated in g minus b but were not dominated in g.

    Measures by delete-and-restore; g is left exactly as it was.  By the
    locality fact only members of N(b) can change status, so only they are
    examined.
    """
    nb = g.neighbors(b)
    was = {u: _is_dominated(g, u) for u in nb}
    g.remove_vertex(b)
    newly = {u for u in nb if not was[u] and _is_dominated(g, u)}
    g.restore_vertex(b, nb)
    return newly


def run_epoch2(g: AdjacencyGraph, rng: np.random.Generator) -> Epoch2Trace:
    """Remove uniformly chosen dominated vertices until none remain.

    Per step logs Y_i = how many vertices the single deletion newly dominated.
    The dominated pool is kept sorted and updated incrementally (only the
    removed vertex's neighbors can change status), which matches a full
    rescan-and-choose loop decision for decision.
    """
    pool = dominated_set(g)
    members = set(pool)
    removed: list[int] = []
    y_values: list[int] = []
    while pool:
        idx = int(rng.integers(len(pool)))
        v = pool[idx]
        nb = g.neighbors(v)
        g.remove_vertex(v)
        del pool[idx]
        members.discard(v)
        y = 0
        for u in nb:
            now = _is_dominated(g, u)
            before = u in members
            if now and not before:
                y += 1
                insort(pool, u)
                members.add(u)
            elif before and not now:
                del pool[bisect_left(pool, u)]
                members.discard(u)
        removed.append(v)
        y_values.append(y)
    return Epoch2Trace(
        steps=len(removed),
        removed=removed,
        y_values=y_values,
        deleted_total=len(removed),
    )


# -- phase-transition statistics ----------------------------------------------


def count_dominated_pairs(g: AdjacencyGraph) -> int:
    """Ordered pairs (u, w) with u != w and N[u] subset-of N[w].

    Containment forces u adjacent to w, so only adjacent ordered pairs are
    scanned.  A mutually dominating edge contributes 2.
    """
    count = 0
    adj = g._adj
    for u in g.alive_ids():
        nu = adj[u]
        target = len(nu) - 1
        if target < 0:
            continue
        for w in nu:
            if len(nu & adj[w]) == target:
                count += 1
    return count


def has_universal_vertex(g: AdjacencyGraph) -> bool:
    """Whether some alive vertex is adjacent to every other alive vertex."""
    others = g.alive_count() - 1
    if others < 0:
        return False
    return any(g.degree(v) == others for v in g.alive_ids())
