"""Trees: end-deletion, leaf orders, weighted equivalence, enumeration.

The enumeration of free trees (one representative per isomorphism class, in a
deterministic order) is the brute-force substrate used by the oracles and the
verification sweeps.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import EnumerationLimitError, NotATreeError
from .graphs import LabeledGraph, all_pairs_distances, induced_subgraph, is_connected

DEFAULT_MAX_ORDER = 12


class Tree:
    """A LabeledGraph satisfying the tree invariant (p=0 allowed: empty tree)."""

    __slots__ = ("graph",)

    def __init__(self, graph: LabeledGraph):
        if not is_tree(graph):
            raise NotATreeError(f"graph with p={graph.p}, m={len(graph.edges)} is not a tree")
        self.graph = graph

    @classmethod
    def from_edges(cls, p: int, edges: Iterable[Iterable[int]]) -> "Tree":
        return cls(LabeledGraph(p, edges))

    @property
    def p(self) -> int:
        return self.graph.p

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.graph.neighbors(v)

    def degree(self, v: int) -> int:
        return self.graph.degree(v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.graph == other.graph

    def __hash__(self) -> int:
        return hash(self.graph)

    def __repr__(self) -> str:
        return f"Tree(p={self.p}, edges={self.graph.edge_list()})"


@dataclass(frozen=True)
class LeafOrderPartition:
    """Vertex sets L_0, L_1, ..., L_m: leaves of the i-times end-deleted tree."""

    orders: tuple[frozenset[int], ...]

    def order_of(self, v: int) -> int:
        for i, s in enumerate(self.orders):
            if v in s:
                return i
        raise ValueError(f"vertex {v} not covered by the partition")

    @property
    def m(self) -> int:
        return len(self.orders) - 1


class WeightedTree:
    """End-deleted skeleton plus per-vertex counts of attached leaves."""

    __slots__ = ("skeleton", "weights")

    def __init__(self, skeleton: Tree, weights: Iterable[int]):
        weights = tuple(weights)
        if skeleton.p == 0:
            raise ValueError("weighted tree needs a nonempty skeleton")
        if len(weights) != skeleton.p:
            raise ValueError("one weight per skeleton vertex required")
        if any(w < 0 for w in weights):
            raise ValueError("weights must be non-negative")
        for v in range(skeleton.p):
            deg = skeleton.degree(v)
            if deg == 1 and weights[v] < 1:
                raise ValueError(f"pendant skeleton vertex {v} needs weight >= 1")
            if deg == 0 and weights[v] < 2:
                # isolated skeleton (single vertex): anything less than a star
                # on 3 vertices would not survive end-deletion intact
                raise ValueError(f"isolated skeleton vertex {v} needs weight >= 2")
        self.skeleton = skeleton
        self.weights = weights

    @property
    def total_leaves(self) -> int:
        return sum(self.weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedTree):
            return NotImplemented
        return self.skeleton == other.skeleton and self.weights == other.weights

    def __repr__(self) -> str:
        return f"WeightedTree(skeleton={self.skeleton!r}, weights={self.weights})"


def is_tree(G: LabeledGraph) -> bool:
    """Connected with exactly p-1 edges; the empty graph counts as a tree."""
    if G.p == 0:
        return not G.edges
    return len(G.edges) == G.p - 1 and is_connected(G)


def leaves(T: Tree) -> frozenset[int]:
    """Degree-1 vertices; the sole vertex of a 1-vertex tree counts as a leaf."""
    if T.p == 0:
        return frozenset()
    if T.p == 1:
        return frozenset({0})
    return frozenset(v for v in range(T.p) if T.degree(v) == 1)


def _end_deleted_with_map(T: Tree) -> tuple[Tree, list[int]]:
    keep = sorted(set(range(T.p)) - leaves(T))
    sub, old_ids = induced_subgraph(T.graph, keep)
    return Tree(sub), old_ids


def end_deleted(T: Tree) -> Tree:
    """Induced subtree on the non-leaf vertices (densely relabeled).

    Both P1 and P2 end-delete to the empty tree.
    """
    return _end_deleted_with_map(T)[0]


def leaf_orders(T: Tree) -> LeafOrderPartition:
    """Partition vertices by the end-deletion round that removes them."""
    deg = [T.degree(v) for v in range(T.p)]
    alive = set(range(T.p))
    orders = []
    while alive:
        layer = frozenset(v for v in alive if deg[v] <= 1)
        orders.append(layer)
        for v in layer:
            alive.discard(v)
            for u in T.neighbors(v):
                if u in alive:
                    deg[u] -= 1
    return LeafOrderPartition(tuple(orders))


def core_vertices(T: Tree, k: int) -> frozenset[int]:
    """Vertices (original ids) surviving k rounds of end-deletion."""
    if k < 0:
        raise ValueError("deletion count must be non-negative")
    lo = leaf_orders(T)
    out: set[int] = set()
    for s in lo.orders[k:]:
        out |= s
    return frozenset(out)


def k_periphery(T: Tree, subtree_vertices: Iterable[int], k: int) -> frozenset[int]:
    """Vertices at distance exactly k from a connected subtree."""
    if k < 0:
        raise ValueError("periphery distance must be non-negative")
    sub = sorted(set(subtree_vertices))
    if not sub:
        raise ValueError("subtree must be nonempty")
    for v in sub:
        T.graph._check_vertex(v)
    block, _ = induced_subgraph(T.graph, sub)
    if not is_connected(block) or len(block.edges) != len(sub) - 1:
        raise ValueError("vertex set does not induce a connected subtree")
    d = all_pairs_distances(T.graph)._rows
    out = []
    for v in range(T.p):
        dv = min(d[v][u] for u in sub)
        if dv == k:
            out.append(v)
    return frozenset(out)


def weighted_form(T: Tree) -> WeightedTree:
    """Collapse T to its end-deleted skeleton with per-vertex leaf counts."""
    if T.p <= 2:
        raise ValueError("weighted form needs a tree with at least 3 vertices")
    skeleton, old_ids = _end_deleted_with_map(T)
    leaf_set = leaves(T)
    weights = []
    for old in old_ids:
        weights.append(sum(1 for u in T.neighbors(old) if u in leaf_set))
    return WeightedTree(skeleton, weights)


def expand(W: WeightedTree) -> Tree:
    """Reattach the counted leaves; inverse of weighted_form up to isomorphism."""
    q = W.skeleton.p
    edges = list(W.skeleton.graph.edges)
    nxt = q
    for v in range(q):
        for _ in range(W.weights[v]):
            edges.append((v, nxt))
            nxt += 1
    return Tree(LabeledGraph(nxt, edges))


def terminal_edges(T: Tree) -> frozenset[tuple[int, int]]:
    """Edges with at least one degree-1 endpoint."""
    return frozenset(e for e in T.graph.edges if T.degree(e[0]) == 1 or T.degree(e[1]) == 1)


def kth_order_terminal_edges(T: Tree, k: int) -> frozenset[tuple[int, int]]:
    """Terminal edges of the k-times end-deleted tree, in original vertex ids."""
    core = core_vertices(T, k)
    if not core:
        raise ValueError(f"tree exhausted after {k} end-deletions")
    deg = {v: sum(1 for u in T.neighbors(v) if u in core) for v in core}
    return frozenset(
        e for e in T.graph.edges
        if e[0] in core and e[1] in core and (deg[e[0]] == 1 or deg[e[1]] == 1)
    )


# ── free-tree enumeration ─────────────────────────────────────────────


def _ahu_rooted(T: Tree, root: int, parent: int) -> str:
    kids = sorted(_ahu_rooted(T, w, root) for w in T.neighbors(root) if w != parent)
    return "(" + "".join(kids) + ")"


def centers(T: Tree) -> frozenset[int]:
    """The 1- or 2-vertex core left by repeated leaf removal."""
    if T.p == 0:
        return frozenset()
    return leaf_orders(T).orders[-1]


def ahu_code(T: Tree) -> str:
    """Canonical string for free trees: equal iff isomorphic."""
    if T.p == 0:
        return ""
    c = sorted(centers(T))
    if len(c) == 1:
        return _ahu_rooted(T, c[0], -1)
    a, b = c
    halves = sorted([_ahu_rooted(T, a, b), _ahu_rooted(T, b, a)])
    return "[" + "".join(halves) + "]"


def max_enumeration_order() -> int:
    """Enumeration safety cap; TREECUBE_MAX_ORDER overrides the default of 12."""
    raw = os.environ.get("TREECUBE_MAX_ORDER")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"TREECUBE_MAX_ORDER must be an integer, got {raw!r}") from None
    return DEFAULT_MAX_ORDER


@lru_cache(maxsize=None)
def _tree_reps(p: int) -> tuple[Tree, ...]:
    if p == 1:
        return (Tree(LabeledGraph(1)),)
    by_code: dict[str, Tree] = {}
    for small in _tree_reps(p - 1):
        base = list(small.graph.edges)
        for attach in range(p - 1):
            cand = Tree(LabeledGraph(p, base + [(attach, p - 1)]))
            code = ahu_code(cand)
            if code not in by_code:
                by_code[code] = cand
    return tuple(by_code[c] for c in sorted(by_code))


def enumerate_trees(p: int) -> list[Tree]:
    """One representative per isomorphism class of free trees on p vertices.

    Output order is deterministic (sorted by canonical tree code). Grows by
    leaf augmentation from the single 1-vertex tree, deduplicating by code.
    """
    if p < 1:
        raise ValueError("tree order must be at least 1")
    cap = max_enumeration_order()
    if p > cap:
        raise EnumerationLimitError(
            f"order {p} exceeds the enumeration cap {cap} (set TREECUBE_MAX_ORDER to raise it)")
    return list(_tree_reps(p))
