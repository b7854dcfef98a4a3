"""Exact radio numbers for small prisms by branch-and-bound over vertex orders.

Any radio labeling is determined by the order in which it sorts the vertices:
given the order, the cheapest labels are forced greedily (label 1 for the
first vertex, then for each next vertex the smallest integer exceeding the
previous label that satisfies the radio condition against everything already
placed).  ``greedy_span_for_order`` computes that forced span for one order;
``exact_radio_number`` searches the tree of all orders depth-first, keeping
the best completed labeling as incumbent and pruning a branch as soon as its
forced span plus an admissible bound on the remaining vertices reaches the
incumbent.

The remaining-vertex bound is (m - 1) for m vertices left, sharpened by
floor(m / 2) * (phi(n, s) - 2) when phi pruning is enabled: labels two apart
in sorted order must differ by at least phi, so m more labels cost at least
floor(m / 2) * phi (+1 if m is odd) beyond the current maximum.  Pruning is
tie-preserving (only branches strictly worse than the incumbent are cut), so
the search always recovers an optimal witness.  Phi pruning is only sound
where the phi table applies and raising is preferred over silently ignoring
a misconfiguration.

The search is single-threaded and deterministic: children are expanded in
ascending (forced label, vertex index) order, so nodes_explored is
reproducible for a given configuration.  ``upper_bound_hint`` seeds the
incumbent and must be a genuine upper bound (e.g. the span of a known valid
labeling); a hint below the optimum makes the search inconclusive and raises.
Without a hint the incumbent is seeded from ``construct_labeling`` when that
covers (n, s), else from a greedy labeling, so a witness always exists even
when the time budget runs out.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .bounds import in_phi_scope, phi
from .graphs import PrismGraph, Vertex
from .labeling import Labeling, construct_labeling

__all__ = ["SearchConfig", "ExactResult", "greedy_span_for_order", "exact_radio_number"]

_BUDGET_CHECK_INTERVAL = 4096


@dataclass
class SearchConfig:
    """Knobs for the exact search.

    upper_bound_hint: initial incumbent span; must be a true upper bound.
    time_budget: wall-clock seconds before the search stops with its best
        incumbent (proven_optimal False).
    use_phi_pruning: sharpen the remaining-vertex bound with phi(n, s);
        requires (n, s) inside the phi table's scope.
    fix_first_vertex: place a fixed vertex first, cutting a symmetry factor;
        engaged only after an automorphism check confirms the instance is
        vertex-transitive, otherwise ignored.
    """

    upper_bound_hint: int | None = None
    time_budget: float | None = None
    use_phi_pruning: bool = False
    fix_first_vertex: bool = False


@dataclass(frozen=True)
class ExactResult:
    """Outcome of the search; witness always verifies with span == rn.

    When proven_optimal is False (time budget exhausted), rn is only the best
    upper bound found.
    """

    rn: int
    witness: Labeling
    nodes_explored: int
    proven_optimal: bool


def greedy_span_for_order(
    g: PrismGraph, order: Sequence[Vertex | tuple[int, int]]
) -> tuple[int, list[int]]:
    """Minimal span achievable with the given sorted order, plus its labels.

    Labels are forced: the first vertex gets 1 and each later one the
    smallest integer above its predecessor satisfying the radio condition
    against all earlier vertices.  This greedy choice is optimal for the
    fixed order because every constraint is a lower bound on the next label.
    """
    verts = [v if isinstance(v, Vertex) else Vertex(*v) for v in order]
    if sorted(verts) != sorted(g.vertices()):
        raise ValueError("not a permutation of the vertex set")
    idxs = [g.index(v) for v in verts]
    dist = g.dist
    required = g.diameter + 1
    labels = [1]
    for t in range(1, len(idxs)):
        c = labels[-1] + 1
        vi = idxs[t]
        for j in range(t):
            lo = labels[j] + required - int(dist[idxs[j], vi])
            if lo > c:
                c = lo
        labels.append(c)
    return labels[-1], labels


def _rotation_perm(n: int) -> list[int]:
    return [(i // n) * n + (i % n + 1) % n for i in range(2 * n)]


def _is_vertex_transitive(g: PrismGraph) -> bool:
    """Confirm transitivity from explicitly verified automorphisms.

    Candidate maps (position rotation; cycle swaps (1,p) -> (2,p+t),
    (2,p) -> (1,p+u)) are checked edge-by-edge against the graph; the orbit
    of one vertex under the verified maps must cover all of V.
    """
    n, nv = g.n, 2 * g.n
    dist = g.dist
    edges = [(i, j) for i in range(nv) for j in range(i + 1, nv) if dist[i, j] == 1]

    def is_automorphism(perm: list[int]) -> bool:
        return all(dist[perm[a], perm[b]] == 1 for a, b in edges)

    generators = []
    rot = _rotation_perm(n)
    if is_automorphism(rot):
        generators.append(rot)
    for t in range(n):
        found = False
        for u in range(n):
            perm = [0] * nv
            for p in range(n):
                perm[p] = n + (p + t) % n
                perm[n + p] = (p + u) % n
            if is_automorphism(perm):
                generators.append(perm)
                found = True
                break
        if found:
            break

    orbit = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for perm in generators:
            y = perm[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return len(orbit) == nv


def exact_radio_number(g: PrismGraph, config: SearchConfig | None = None) -> ExactResult:
    """Branch-and-bound search for the radio number of g.

    Deterministic for a fixed configuration.  Disabling phi pruning never
    changes rn, only nodes_explored.
    """
    cfg = config or SearchConfig()
    n = g.n
    nv = 2 * n
    if cfg.use_phi_pruning and not in_phi_scope(n, g.s):
        raise ValueError(
            f"outside theorem scope: phi pruning is unavailable for (n={n}, s={g.s})"
        )
    pair_step = phi(n, g.s) - 2 if cfg.use_phi_pruning else 0
    required = g.diameter + 1
    verts = list(g.vertices())
    dist = [[int(x) for x in row] for row in g.dist]

    best_span: int | None = None
    best_assignment: dict[Vertex, int] | None = None
    if cfg.upper_bound_hint is None:
        try:
            seed = construct_labeling(n, g.s)
            best_span = seed.span
            best_assignment = dict(seed.assignment)
        except (ValueError, RuntimeError):
            pass
    if best_assignment is None:
        span0, labels0 = greedy_span_for_order(g, verts)
        best_span = span0
        best_assignment = dict(zip(verts, labels0))
    prune_ref = best_span
    if cfg.upper_bound_hint is not None:
        prune_ref = min(prune_ref, cfg.upper_bound_hint)

    first_pool: Sequence[int] = range(nv)
    if cfg.fix_first_vertex and _is_vertex_transitive(g):
        first_pool = [0]

    placed = [False] * nv
    lb = [0] * nv  # forced minimum label of each unplaced vertex
    trail: list[tuple[int, int]] = []
    nodes = 0
    stopped = False
    deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget

    def rem_bound(m: int) -> int:
        return m - 1 + (m // 2) * pair_step

    def dfs(depth: int, last_label: int) -> None:
        nonlocal nodes, best_span, best_assignment, prune_ref, stopped
        m = nv - depth
        pool = first_pool if depth == 0 else range(nv)
        children = []
        for v in pool:
            if not placed[v]:
                c = lb[v] if lb[v] > last_label else last_label + 1
                children.append((c, v))
        children.sort()
        tail_bound = rem_bound(m - 1)
        for c, v in children:
            if stopped:
                return
            if c + tail_bound >= prune_ref:
                break  # children are label-sorted: the rest are no better
            nodes += 1
            if deadline is not None and nodes % _BUDGET_CHECK_INTERVAL == 0:
                if time.monotonic() > deadline:
                    stopped = True
                    return
            if m == 1:
                # order complete; the cut above guarantees c <= prune_ref
                best_span = c
                best_assignment = {verts[w]: cw for w, cw in trail}
                best_assignment[verts[v]] = c
                prune_ref = min(prune_ref, c)
                continue
            placed[v] = True
            trail.append((v, c))
            saved = []
            row = dist[v]
            for u in range(nv):
                if not placed[u]:
                    need = c + required - row[u]
                    if need > lb[u]:
                        saved.append((u, lb[u]))
                        lb[u] = need
            dfs(depth + 1, c)
            for u, old in saved:
                lb[u] = old
            trail.pop()
            placed[v] = False

    dfs(0, 0)

    proven = not stopped
    if (
        proven
        and cfg.upper_bound_hint is not None
        and best_span > cfg.upper_bound_hint
    ):
        raise ValueError(
            "upper_bound_hint was below the optimum; search pruned against an "
            "infeasible bound and is inconclusive"
        )
    witness = Labeling(n=n, s=g.s, assignment=best_assignment)
    return ExactResult(
        rn=best_span,
        witness=witness,
        nodes_explored=nodes,
        proven_optimal=proven,
    )
