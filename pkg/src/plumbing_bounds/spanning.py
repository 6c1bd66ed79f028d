"""Spanning trees of a Seifert graph and the sign bookkeeping built on them.

A tree edge is signed by depth: edges hanging below depth ``d - 1`` get
``top_sign * (-1) ** (d - 1)``. On a bipartite graph (every Seifert graph)
the tree path joining the ends of a non-tree edge then always sums to
``+1`` or ``-1``.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field

from .errors import GraphError, InvariantViolation
from .graph import SeifertGraph, require_connected

POLICIES = ("min-beta", "min-bound")

EXHAUSTIVE_MAX_TREE_EDGES = 20


@dataclass(frozen=True)
class SpanningTree:
    root: int
    parent: dict  # vertex -> (parent vertex, edge id); root absent
    depth: dict  # vertex -> depth
    tree_edge_ids: frozenset

    def child_of(self, edge_id: int) -> int:
        return self._child[edge_id]

    @property
    def _child(self) -> dict:
        cache = self.__dict__.get("_child_cache")
        if cache is None:
            cache = {eid: v for v, (_, eid) in self.parent.items()}
            object.__setattr__(self, "_child_cache", cache)
        return cache

    def path_edges(self, u: int, v: int) -> list[int]:
        """Edge ids on the unique tree path from ``u`` to ``v``."""
        up, down = [], []
        while u != v:
            if self.depth[u] >= self.depth[v]:
                u, eid = self.parent[u]
                up.append(eid)
            else:
                v, eid = self.parent[v]
                down.append(eid)
        return up + down[::-1]


@dataclass(frozen=True)
class DepthSigning:
    assignment: dict  # tree edge id -> +1/-1
    top_sign: int


@dataclass(frozen=True)
class Augmentation:
    edge_ids: frozenset
    exact: bool


@dataclass
class TreeAnalysis:
    tree: SpanningTree
    signing: DepthSigning
    beta: int
    gamma: int
    path_sums: dict  # non-tree edge id -> signed sum along its tree path
    policy: str = "min-beta"
    bound: int = field(init=False)

    def __post_init__(self):
        self.bound = self.beta + self.gamma + 3 * (len(self.path_sums) - self.gamma)


def tree_from_edges(g: SeifertGraph, edge_ids, root: int = 1) -> SpanningTree:
    """Root a set of ``s - 1`` edges forming a spanning tree of ``g``."""
    edge_ids = frozenset(edge_ids)
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in g.vertices}
    for eid in edge_ids:
        e = g.edge(eid)
        adj[e.u].append((e.v, eid))
        adj[e.v].append((e.u, eid))
    parent, depth = {}, {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w, eid in sorted(adj[v]):
            if w not in depth:
                depth[w] = depth[v] + 1
                parent[w] = (v, eid)
                queue.append(w)
    if len(depth) != g.s or len(edge_ids) != g.s - 1:
        raise GraphError(f"edges {sorted(edge_ids)} do not form a spanning tree")
    return SpanningTree(root, parent, depth, edge_ids)


def bfs_spanning_tree(g: SeifertGraph, root: int = 1) -> SpanningTree:
    """Breadth-first tree, exploring neighbours by ascending (vertex id, edge id)."""
    require_connected(g)
    adj = g.adjacency()
    parent, depth = {}, {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w, eid in adj[v]:
            if w not in depth:
                depth[w] = depth[v] + 1
                parent[w] = (v, eid)
                queue.append(w)
    return SpanningTree(root, parent, depth, frozenset(eid for _, eid in parent.values()))


def alternating_depth_signing(t: SpanningTree, top_sign: int) -> DepthSigning:
    assignment = {}
    for v, (_, eid) in t.parent.items():
        assignment[eid] = top_sign * (-1) ** (t.depth[v] - 1)
    return DepthSigning(assignment, top_sign)


def tree_path_sign_sum(t: SpanningTree, signing: DepthSigning, u: int, v: int) -> int:
    return sum(signing.assignment[eid] for eid in t.path_edges(u, v))


def _path_sums(g: SeifertGraph, t: SpanningTree, signing: DepthSigning) -> dict[int, int]:
    return {
        e.id: tree_path_sign_sum(t, signing, e.u, e.v)
        for e in g.edges
        if e.id not in t.tree_edge_ids
    }


def check_sign_sum_lemma(g: SeifertGraph, t: SpanningTree, signing: DepthSigning) -> bool:
    return all(x in (1, -1) for x in _path_sums(g, t, signing).values())


def compute_gamma(g: SeifertGraph, t: SpanningTree, signing: DepthSigning) -> int:
    """Number of non-tree edges whose sign differs from their tree-path sum."""
    sums = _path_sums(g, t, signing)
    return sum(1 for eid, total in sums.items() if g.edge(eid).sign != total)


def _mismatches(g: SeifertGraph, signing: DepthSigning) -> int:
    return sum(1 for eid, sg in signing.assignment.items() if g.edge(eid).sign != sg)


def compute_beta(g: SeifertGraph, t: SpanningTree) -> tuple[int, DepthSigning]:
    """Fewest tree edges needing a sign change, over the two global reversals.

    Ties go to the reversal with the larger gamma, then to ``top_sign = +1``.
    """
    require_connected(g)
    options = []
    for top in (1, -1):
        signing = alternating_depth_signing(t, top)
        options.append((_mismatches(g, signing), -compute_gamma(g, t, signing), -top, signing))
    beta, _, _, signing = min(options, key=lambda o: o[:3])
    if beta > math.ceil((g.s - 1) / 2):
        raise InvariantViolation(f"beta={beta} exceeds ceil((s-1)/2) for s={g.s}")
    return beta, signing


def analyze(g: SeifertGraph, t: SpanningTree, signing: DepthSigning, policy: str) -> TreeAnalysis:
    return TreeAnalysis(
        tree=t,
        signing=signing,
        beta=_mismatches(g, signing),
        gamma=compute_gamma(g, t, signing),
        path_sums=_path_sums(g, t, signing),
        policy=policy,
    )


def analyze_min_beta(g: SeifertGraph, t: SpanningTree) -> TreeAnalysis:
    _, signing = compute_beta(g, t)
    return analyze(g, t, signing, "min-beta")


def analyze_both_signings(g: SeifertGraph, t: SpanningTree) -> list[TreeAnalysis]:
    return [analyze(g, t, alternating_depth_signing(t, top), "min-bound") for top in (1, -1)]


# -- flat plumbing refinement ------------------------------------------------


def _reachable(target: int, kept: int, free: int) -> bool:
    # free positions contribute any of +1/-1, so the sum ranges over kept+j
    # with |j| <= free and j of the same parity as free
    gap = target - kept
    return abs(gap) <= free and (gap - free) % 2 == 0


def _path_table(g: SeifertGraph, t: SpanningTree) -> list[tuple[int, list[int]]]:
    """(target sum, tree path) for every non-tree edge; the target is minus its sign."""
    return [
        (-e.sign, t.path_edges(e.u, e.v)) for e in g.edges if e.id not in t.tree_edge_ids
    ]


def augmentation_feasible(g: SeifertGraph, t: SpanningTree, chosen) -> bool:
    """Whether doubling the tree edges in ``chosen`` lets every non-tree path hit its target."""
    chosen = set(chosen)
    for target, path in _path_table(g, t):
        free = sum(1 for eid in path if eid in chosen)
        kept = sum(g.edge(eid).sign for eid in path if eid not in chosen)
        if not _reachable(target, kept, free):
            return False
    return True


def minimal_augmentation_fp(g: SeifertGraph, t: SpanningTree) -> Augmentation | None:
    """Smallest set of tree edges to flank with a +/- annulus pair.

    After the pair is plumbed, a tree position may be traversed with either
    sign. Exact search by increasing size when the tree has at most
    ``EXHAUSTIVE_MAX_TREE_EDGES`` edges, greedy otherwise. Returns ``None``
    when even doubling every tree edge does not suffice, which only happens
    for graphs with an odd cycle.
    """
    require_connected(g)
    table = _path_table(g, t)
    if not augmentation_feasible(g, t, t.tree_edge_ids):
        return None
    violated = [
        (target, path)
        for target, path in table
        if not _reachable(target, sum(g.edge(eid).sign for eid in path), 0)
    ]
    if not violated:
        return Augmentation(frozenset(), True)
    # feasibility only grows with the chosen set, and edges off every violated
    # path cannot help, so the search can stay inside those paths
    candidates = sorted({eid for _, path in violated for eid in path})
    if len(t.tree_edge_ids) <= EXHAUSTIVE_MAX_TREE_EDGES:
        for size in range(1, len(candidates) + 1):
            for combo in itertools.combinations(candidates, size):
                if augmentation_feasible(g, t, combo):
                    return Augmentation(frozenset(combo), True)
        raise InvariantViolation("exhaustive augmentation search found nothing")
    chosen: set[int] = set()
    while not augmentation_feasible(g, t, chosen):
        score: dict[int, int] = {}
        for target, path in table:
            free = sum(1 for eid in path if eid in chosen)
            kept = sum(g.edge(eid).sign for eid in path if eid not in chosen)
            if not _reachable(target, kept, free):
                for eid in path:
                    if eid not in chosen:
                        score[eid] = score.get(eid, 0) + 1
        chosen.add(min(score, key=lambda eid: (-score[eid], eid)))
    return Augmentation(frozenset(chosen), False)


# -- enumeration ---------------------------------------------------------------


@dataclass
class TreeEnumeration:
    trees: list
    truncated: bool


def enumerate_spanning_trees(g: SeifertGraph, limit: int = 10_000, root: int = 1) -> TreeEnumeration:
    """All spanning trees, in lexicographic order of their sorted edge ids.

    Stops after ``limit`` trees and sets ``truncated``.
    """
    require_connected(g)
    edges = sorted(g.edges, key=lambda e: e.id)
    need = g.s - 1
    found: list[frozenset] = []
    truncated = False

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def still_connectable(chosen, start):
        parent = {v: v for v in g.vertices}
        for e in chosen:
            parent[find(parent, e.u)] = find(parent, e.v)
        for e in edges[start:]:
            parent[find(parent, e.u)] = find(parent, e.v)
        return len({find(parent, v) for v in g.vertices}) == 1

    def walk(start, chosen):
        nonlocal truncated
        if truncated:
            return
        if len(chosen) == need:
            if len(found) >= limit:
                truncated = True
                return
            found.append(frozenset(e.id for e in chosen))
            return
        if start == len(edges) or not still_connectable(chosen, start):
            return
        e = edges[start]
        parent = {v: v for v in g.vertices}
        for f in chosen:
            parent[find(parent, f.u)] = find(parent, f.v)
        if find(parent, e.u) != find(parent, e.v):
            walk(start + 1, chosen + [e])
        walk(start + 1, chosen)

    walk(0, [])
    return TreeEnumeration([tree_from_edges(g, ids, root) for ids in found], truncated)
