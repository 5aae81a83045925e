"""Backtracking search for good edge colorings at desk scale.

Edges are assigned in canonical pair order; after each assignment only the
subgraphs through the new edge are checked, so a partial class never
contains its target.  Infeasible is reported only after the full tree has
been enumerated (modulo the declared color-permutation reduction on the
first edge); budget exhaustion is always reported as Unknown.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from . import targets as tg
from .graphs import EdgeColoring, SimpleGraph, contains_target, is_good_coloring, pair_iter
from .targets import CYCLE4, TargetGraph, clique

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = 50_000_000
    time_limit: float = 600.0
    thread_hint: int = 1

    def __post_init__(self):
        if self.node_limit < 1 or self.time_limit <= 0 or self.thread_hint < 1:
            raise ValueError("budget limits must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # feasible | infeasible | unknown
    nodes_explored: int
    wall_time: float
    witness: Optional[EdgeColoring] = None
    certificate_note: str = ""

    def to_dict(self) -> dict:
        from .graphs import coloring_to_text

        return {
            "status": self.status,
            "nodes": self.nodes_explored,
            "wall_time": self.wall_time,
            "witness": coloring_to_text(self.witness) if self.witness else None,
            "certificate_note": self.certificate_note,
        }


class _Budget(Exception):
    pass


def _effective_target(t: TargetGraph, n: int) -> Optional[TargetGraph]:
    """Reduce a target for an n-vertex search; None means unconstrainable."""
    if t.kind == tg.WITH_ISOLATED:
        return _effective_target(t.base, n) if n >= t.vertex_count else None
    if t.kind == tg.EMPTY:
        # handled by the caller as an immediate outcome
        return t
    return t if n >= t.vertex_count else None


def _clique_in(adj: list[int], cand: int, need: int) -> bool:
    if need == 0:
        return True
    if cand.bit_count() < need:
        return False
    while cand:
        b = cand & -cand
        v = b.bit_length() - 1
        cand ^= b
        if cand.bit_count() + 1 < need:
            return False
        if _clique_in(adj, cand & adj[v], need - 1):
            return True
    return False


def _creates(t: TargetGraph, adj: list[int], u: int, v: int) -> bool:
    """Would adding edge uv to the class with adjacency adj create target t?

    The class is assumed target-free before the addition, so only copies
    through the new edge need checking.
    """
    kind = t.kind
    if kind == tg.PATH3_KIND:
        return adj[u] != 0 or adj[v] != 0
    if kind == tg.STAR:
        return adj[u].bit_count() >= t.k - 1 or adj[v].bit_count() >= t.k - 1
    if kind == tg.CYCLE4_KIND:
        # a new 4-cycle contains both u and v, hence some vertex pair
        # involving u or v gains a second common neighbor
        au = adj[u] | 1 << v
        av = adj[v] | 1 << u
        for x in range(len(adj)):
            ax = au if x == u else av if x == v else adj[x]
            if x != u and (au & ax).bit_count() >= 2:
                return True
            if x != v and (av & ax).bit_count() >= 2:
                return True
        return False
    if kind == tg.CLIQUE:
        common = adj[u] & adj[v]
        return _clique_in(adj, common, t.k - 2)
    if kind == tg.BOOK:
        # spine uv: pages are common neighbors of u and v; otherwise uv is a
        # page edge and the spine is (u, x) or (v, x) for an existing edge
        if (adj[u] & adj[v]).bit_count() >= t.k:
            return True
        au = adj[u] | 1 << v
        av = adj[v] | 1 << u
        for end, anew in ((u, au), (v, av)):
            rest = adj[end]
            while rest:
                b = rest & -rest
                x = b.bit_length() - 1
                rest ^= b
                if (anew & adj[x]).bit_count() >= t.k:
                    return True
        return False
    raise ValueError(f"unsupported incremental target {t}")


def _search_edges(
    n: int,
    edge_list: list[tuple[int, int]],
    targets: Sequence[TargetGraph],
    budget: SearchBudget,
    degree_caps: Optional[Sequence[int]] = None,
    symmetry_break: bool = True,
) -> tuple[str, Optional[list[int]], int]:
    """Core backtracking over a fixed edge list.

    Returns (status, assignment or None, nodes).  The assignment is indexed
    parallel to edge_list.
    """
    c = len(targets)
    if degree_caps is not None and len(degree_caps) != c:
        raise ValueError(f"need {c} degree caps, got {len(degree_caps)}")
    eff = [_effective_target(t, n) for t in targets]
    for i, t in enumerate(targets):
        if _is_forced_empty(t, n):
            return INFEASIBLE, None, 0
    adj = [[0] * n for _ in range(c)]
    deg = [[0] * n for _ in range(c)]
    assignment = [-1] * len(edge_list)
    nodes = 0
    start = time.monotonic()
    deadline = start + budget.time_limit

    # color-permutation reduction: on the first edge, only the first color of
    # each group of identical declared targets is tried
    if symmetry_break and edge_list:
        seen: dict[TargetGraph, int] = {}
        first_allowed = []
        for i, t in enumerate(targets):
            if t not in seen:
                seen[t] = i
                first_allowed.append(i)
    else:
        first_allowed = list(range(c))

    sys.setrecursionlimit(max(sys.getrecursionlimit(), len(edge_list) + 100))

    def rec(idx: int) -> bool:
        nonlocal nodes
        if idx == len(edge_list):
            return True
        u, v = edge_list[idx]
        for col in first_allowed if idx == 0 else range(c):
            nodes += 1
            if nodes > budget.node_limit:
                raise _Budget
            if nodes % 4096 == 0 and time.monotonic() > deadline:
                raise _Budget
            if degree_caps is not None and (
                deg[col][u] + 1 > degree_caps[col] or deg[col][v] + 1 > degree_caps[col]
            ):
                continue
            t = eff[col]
            if t is not None and t.kind != tg.EMPTY and _creates(t, adj[col], u, v):
                continue
            adj[col][u] |= 1 << v
            adj[col][v] |= 1 << u
            deg[col][u] += 1
            deg[col][v] += 1
            assignment[idx] = col
            if degree_caps is None or _caps_feasible(deg, degree_caps, u, v, idx):
                if rec(idx + 1):
                    return True
            adj[col][u] &= ~(1 << v)
            adj[col][v] &= ~(1 << u)
            deg[col][u] -= 1
            deg[col][v] -= 1
            assignment[idx] = -1
        return False

    remaining_at = _remaining_degree_table(n, edge_list)

    def _caps_feasible(deg, caps, u, v, idx) -> bool:
        # counting cut: a vertex must be able to host all its unassigned edges
        # within the per-color degree headroom
        for w in (u, v):
            headroom = sum(caps[i] - deg[i][w] for i in range(c))
            if remaining_at[idx + 1][w] > headroom:
                return False
        return True

    try:
        found = rec(0)
    except _Budget:
        return UNKNOWN, None, nodes
    if found:
        return FEASIBLE, list(assignment), nodes
    return INFEASIBLE, None, nodes


def _is_forced_empty(t: TargetGraph, n: int) -> bool:
    """True if the target is edgeless (possibly via isolated padding) and fits."""
    if t.kind == tg.EMPTY:
        return n >= t.k
    if t.kind == tg.WITH_ISOLATED:
        return t.base.kind == tg.EMPTY and n >= t.vertex_count
    return False


def _remaining_degree_table(n: int, edge_list: list[tuple[int, int]]) -> list[list[int]]:
    """remaining[i][v] = number of edges at v among edge_list[i:]."""
    remaining = [[0] * n for _ in range(len(edge_list) + 1)]
    for i in range(len(edge_list) - 1, -1, -1):
        u, v = edge_list[i]
        row = list(remaining[i + 1])
        row[u] += 1
        row[v] += 1
        remaining[i] = row
    return remaining


def search_coloring(
    n: int,
    targets: Sequence[TargetGraph],
    budget: Optional[SearchBudget] = None,
    degree_caps: Optional[Sequence[int]] = None,
) -> SearchOutcome:
    """Search for a good coloring of K_n avoiding targets[i] in color i."""
    if not 1 <= n <= 128:
        raise ValueError(f"n must be in [1, 128], got {n}")
    budget = budget or SearchBudget()
    start = time.monotonic()
    edge_list = list(pair_iter(n))
    status, assignment, nodes = _search_edges(n, edge_list, targets, budget, degree_caps)
    wall = time.monotonic() - start
    if status == FEASIBLE:
        witness = EdgeColoring(n, len(targets))
        for (u, v), col in zip(edge_list, assignment):
            witness.set(u, v, col)
        if not is_good_coloring(witness, list(targets)):
            raise RuntimeError("internal error: search produced a bad witness")
        return SearchOutcome(FEASIBLE, nodes, wall, witness, "witness verified")
    if status == INFEASIBLE:
        return SearchOutcome(
            INFEASIBLE, nodes, wall, None,
            "exhaustive modulo first-edge color-permutation reduction",
        )
    return SearchOutcome(UNKNOWN, nodes, wall, None, "budget exhausted")


def ramsey_by_search(
    targets: Sequence[TargetGraph],
    n_min: int,
    n_max: int,
    budget: Optional[SearchBudget] = None,
) -> dict[int, SearchOutcome]:
    """Per-N search outcomes over [n_min, n_max]."""
    if not 1 <= n_min <= n_max <= 128:
        raise ValueError(f"bad range [{n_min}, {n_max}]")
    return {
        n: search_coloring(n, targets, budget) for n in range(n_min, n_max + 1)
    }


def computed_ramsey(outcomes: dict[int, SearchOutcome]) -> Optional[int]:
    """Least infeasible N when all smaller N in range are feasible, else None."""
    for n in sorted(outcomes):
        st = outcomes[n].status
        if st == INFEASIBLE:
            return n
        if st != FEASIBLE:
            return None
    return None


def partition_check(
    g: SimpleGraph,
    pair_targets: tuple[TargetGraph, TargetGraph] = (clique(3), clique(4)),
    budget: Optional[SearchBudget] = None,
) -> SearchOutcome:
    """Can g's non-edges be split into two classes avoiding the pair targets?

    g must be C4-free.  A feasible outcome carries the full 3-colored
    witness (g's edges in color 0, the split in colors 1 and 2), verified
    good for (C4, pair_targets[0], pair_targets[1]).
    """
    if contains_target(g, CYCLE4):
        raise ValueError("input graph contains a C4; partition kernel requires C4-free input")
    budget = budget or SearchBudget()
    start = time.monotonic()
    comp_edges = g.complement().edges()
    status, assignment, nodes = _search_edges(
        g.n, comp_edges, list(pair_targets), budget,
        symmetry_break=pair_targets[0] == pair_targets[1],
    )
    wall = time.monotonic() - start
    if status == FEASIBLE:
        witness = EdgeColoring(g.n, 3)
        for (u, v) in g.edges():
            witness.set(u, v, 0)
        for (u, v), col in zip(comp_edges, assignment):
            witness.set(u, v, col + 1)
        if not is_good_coloring(witness, [CYCLE4, pair_targets[0], pair_targets[1]]):
            raise RuntimeError("internal error: partition produced a bad witness")
        return SearchOutcome(FEASIBLE, nodes, wall, witness, "3-colored witness verified")
    if status == INFEASIBLE:
        note = "exhaustive over all non-edge splits"
        if pair_targets[0] == pair_targets[1]:
            note += " modulo first-edge color swap"
        return SearchOutcome(INFEASIBLE, nodes, wall, None, note)
    return SearchOutcome(UNKNOWN, nodes, wall, None, "budget exhausted")


def merge_colors(coloring: EdgeColoring, i: int, j: int) -> EdgeColoring:
    """Recolor class j as i and shift colors above j down."""
    if i == j:
        raise ValueError("merge needs two distinct colors")
    coloring._check_color(i)
    coloring._check_color(j)
    if coloring.c < 2:
        raise ValueError("cannot merge below one color")
    out = EdgeColoring(coloring.n, coloring.c - 1)
    for idx, col in enumerate(coloring.colors):
        if col == j:
            col = i
        if col > j:
            col -= 1
        out.colors[idx] = col
    return out
