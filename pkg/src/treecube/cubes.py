"""Clique structure of tree cubes and cube-root extraction.

A non-complete cube of a tree decomposes into maximal cliques that are the
1-spans of the internal tree edges. Root extraction inverts that structure
constructively (clique intersections recover the end-deleted skeleton and the
leaf counts), verifies the candidate by recubing, and falls back to exhaustive
enumeration when the constructive path fails. Every positive answer is
verified, so correctness never rests on the heuristic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .errors import AmbiguousStructureError, EnumerationLimitError, NotACubeError
from .graphs import (
    CanonicalForm,
    LabeledGraph,
    canonical_form,
    diameter,
    edge_span,
    induced_subgraph,
    is_complete,
    is_connected,
    is_isomorphic,
    isomorphism,
    power,
)
from .trees import (
    Tree,
    WeightedTree,
    core_vertices,
    enumerate_trees,
    expand,
    leaf_orders,
    leaves,
    max_enumeration_order,
)


@dataclass(frozen=True)
class CliqueRecord:
    """A maximal clique of a cube together with the tree edge it is centered on."""

    members: frozenset[int]
    clique_edge: tuple[int, int] | None = None


class RootKind(enum.Enum):
    UNIQUE = "unique"
    AMBIGUOUS_COMPLETE = "ambiguous-complete"
    NOT_A_CUBE = "not-a-cube"


@dataclass(frozen=True)
class RootResult:
    """Outcome of cube-root extraction.

    ``tree`` is set for unique roots. For complete inputs on at least 3
    vertices, ``roots`` lists every diameter-<=3 tree of that order;
    ``roots_enumerated`` is False when the order exceeds the enumeration cap
    and the list was left empty.
    """

    kind: RootKind
    tree: Tree | None = None
    roots: tuple[Tree, ...] = ()
    roots_enumerated: bool = True

    @classmethod
    def unique(cls, tree: Tree) -> "RootResult":
        return cls(RootKind.UNIQUE, tree=tree)

    @classmethod
    def ambiguous_complete(cls, roots: tuple[Tree, ...], enumerated: bool = True) -> "RootResult":
        return cls(RootKind.AMBIGUOUS_COMPLETE, roots=roots, roots_enumerated=enumerated)

    @classmethod
    def not_a_cube(cls) -> "RootResult":
        return cls(RootKind.NOT_A_CUBE)

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind.value}
        if self.tree is not None:
            out["root_edges"] = self.tree.graph.edge_list()
            out["root_certificate"] = canonical_form(self.tree.graph).hex()
        if self.kind is RootKind.AMBIGUOUS_COMPLETE:
            out["roots_enumerated"] = self.roots_enumerated
            out["roots"] = [T.graph.edge_list() for T in self.roots]
            out["root_certificates"] = [canonical_form(T.graph).hex() for T in self.roots]
        return out


def maximal_cliques(G: LabeledGraph) -> list[frozenset[int]]:
    """All inclusion-maximal cliques, in a deterministic order."""
    masks = _kernels.maximal_cliques(G.p, G._adj)
    out = []
    for m in masks:
        members = []
        while m:
            members.append((m & -m).bit_length() - 1)
            m &= m - 1
        out.append(frozenset(members))
    return out


def clique_edges_of_tree(T: Tree) -> frozenset[tuple[int, int]]:
    """Tree edges with both endpoints internal; exactly the skeleton's edges."""
    leaf_set = leaves(T)
    return frozenset(e for e in T.graph.edges if e[0] not in leaf_set and e[1] not in leaf_set)


def cliques_of_cube(T: Tree) -> list[CliqueRecord]:
    """One record per clique edge, members being its 1-span in T.

    For trees of diameter at least 4 these are exactly the maximal cliques of
    the cube.
    """
    return [CliqueRecord(edge_span(T.graph, e, 1), e) for e in sorted(clique_edges_of_tree(T))]


def terminal_cliques(T: Tree) -> list[CliqueRecord]:
    """Cliques centered on pendant skeleton edges (an endpoint in L_1)."""
    if diameter(T.graph) < 4:
        raise AmbiguousStructureError("cube is complete: no terminal clique structure")
    l1 = leaf_orders(T).orders[1]
    return [r for r in cliques_of_cube(T) if r.clique_edge[0] in l1 or r.clique_edge[1] in l1]


def kth_order_terminal_cliques(G_or_T: LabeledGraph | Tree, k: int) -> list[CliqueRecord]:
    """Terminal cliques of the k-times end-deleted tree's cube.

    Accepts the tree itself or its cube; for a cube the records are reported
    in the labels of the extracted root.
    """
    if k < 0:
        raise ValueError("order must be non-negative")
    if isinstance(G_or_T, Tree):
        T = G_or_T
    else:
        r = cube_root(G_or_T)
        if r.kind is RootKind.NOT_A_CUBE:
            raise NotACubeError("input graph is not the cube of a tree")
        if r.kind is RootKind.AMBIGUOUS_COMPLETE:
            raise AmbiguousStructureError("complete cube: the root tree is not unique")
        T = r.tree
    if k == 0:
        return terminal_cliques(T)
    core = core_vertices(T, k)
    if not core:
        raise ValueError(f"tree exhausted after {k} end-deletions")
    sub, old_ids = induced_subgraph(T.graph, sorted(core))
    out = []
    for r in terminal_cliques(Tree(sub)):
        e = (old_ids[r.clique_edge[0]], old_ids[r.clique_edge[1]])
        out.append(CliqueRecord(frozenset(old_ids[v] for v in r.members), e))
    return out


# ── constructive root extraction ──────────────────────────────────────


def _constructive_root(G: LabeledGraph) -> Tree | None:
    """Propose a root for a connected non-complete graph, or None.

    Rebuilds the end-deleted skeleton from the maximal cliques: cliques
    sharing at least 3 vertices are centered on skeleton edges with a common
    endpoint, so the maximal groups of pairwise-overlapping cliques are the
    edge stars of the skeleton's internal vertices (Krausz classes). Clique
    intersections pin down closed neighborhoods, which yield the leaf count
    at every skeleton vertex. Any structural inconsistency returns None; the
    caller re-verifies by cubing, so this routine may be wrong but never
    silently so.
    """
    cliques = maximal_cliques(G)
    m = len(cliques)
    if m < 2:
        return None
    overlap = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if len(cliques[i] & cliques[j]) >= 3:
                overlap[i] |= 1 << j
                overlap[j] |= 1 << i
    class_masks = _kernels.maximal_cliques(m, overlap)
    classes: list[list[int]] = []
    for mask in class_masks:
        members = []
        while mask:
            members.append((mask & -mask).bit_length() - 1)
            mask &= mask - 1
        if len(members) < 2:
            return None
        classes.append(members)
    for i in range(len(classes)):
        si = set(classes[i])
        for j in range(i + 1, len(classes)):
            if len(si.intersection(classes[j])) > 1:
                return None
    cover: list[list[int]] = [[] for _ in range(m)]
    for ci, members in enumerate(classes):
        for e in members:
            cover[e].append(ci)
    if any(len(c) == 0 or len(c) > 2 for c in cover):
        return None

    t = len(classes)
    xi_edges = []
    pendant_of: list[int] = []  # clique index -> pendant vertex id, parallel lists
    pendant_ids: list[int] = []
    nxt = t
    for e, cov in enumerate(cover):
        if len(cov) == 2:
            xi_edges.append((cov[0], cov[1]))
        else:
            xi_edges.append((cov[0], nxt))
            pendant_of.append(e)
            pendant_ids.append(nxt)
            nxt += 1
    if len(set(map(frozenset, xi_edges))) != m or nxt != m + 1:
        return None
    try:
        skeleton = Tree(LabeledGraph(nxt, xi_edges))
    except Exception:
        return None

    neighborhoods = []
    for members in classes:
        nb = cliques[members[0]]
        for e in members[1:]:
            nb = nb & cliques[e]
        neighborhoods.append(nb)
    weights = [0] * nxt
    for ci, members in enumerate(classes):
        w = len(neighborhoods[ci]) - len(members) - 1
        if w < 0:
            return None
        weights[ci] = w
    for e, pv in zip(pendant_of, pendant_ids):
        b = cover[e][0]
        w = len(cliques[e]) - len(neighborhoods[b])
        if w < 1:
            return None
        weights[pv] = w
    if nxt + sum(weights) != G.p:
        return None
    try:
        return expand(WeightedTree(skeleton, weights))
    except ValueError:
        return None


@lru_cache(maxsize=None)
def _cube_certificate(T: Tree) -> CanonicalForm:
    return canonical_form(power(T.graph, 3))


def cube_root(G: LabeledGraph) -> RootResult:
    """Extract the tree root of a cube.

    Unique for connected non-complete cubes; complete graphs on at least 3
    vertices are ambiguous (any tree of diameter below 4 works); everything
    else is not a cube. Constructive extraction is tried first and always
    verified by recubing; on failure the tree enumeration is scanned, so a
    negative answer within the enumeration cap is exhaustive.
    """
    p = G.p
    if p == 0 or not is_connected(G):
        return RootResult.not_a_cube()
    if p <= 2:
        return RootResult.unique(Tree(LabeledGraph(p, [(0, 1)] if p == 2 else [])))
    if is_complete(G):
        cap = max_enumeration_order()
        if p > cap:
            return RootResult.ambiguous_complete((), enumerated=False)
        roots = tuple(T for T in enumerate_trees(p) if diameter(T.graph) <= 3)
        return RootResult.ambiguous_complete(roots)
    cand = _constructive_root(G)
    if cand is not None and is_isomorphic(power(cand.graph, 3), G):
        return RootResult.unique(cand)
    if p <= max_enumeration_order():
        target = canonical_form(G)
        for T in enumerate_trees(p):
            if _cube_certificate(T) == target:
                return RootResult.unique(T)
    return RootResult.not_a_cube()


def cube_root_oracle(G: LabeledGraph) -> RootResult:
    """Brute-force root extraction: test every tree of the same order."""
    p = G.p
    if p > max_enumeration_order():
        raise EnumerationLimitError(
            f"oracle needs the tree enumeration, capped at {max_enumeration_order()}")
    if p == 0 or not is_connected(G):
        return RootResult.not_a_cube()
    target = canonical_form(G)
    matches = [T for T in enumerate_trees(p) if _cube_certificate(T) == target]
    if not matches:
        return RootResult.not_a_cube()
    if p >= 3 and is_complete(G):
        return RootResult.ambiguous_complete(tuple(matches))
    return RootResult.unique(matches[0])


def is_tree_cube(G: LabeledGraph) -> bool:
    """True iff some tree cubes to G (unique or complete-ambiguous)."""
    return cube_root(G).kind is not RootKind.NOT_A_CUBE


def tree_of_cliques(G: LabeledGraph) -> Tree:
    """The tree formed by the clique edges, isomorphic to the root's skeleton."""
    if G.p and is_complete(G):
        raise AmbiguousStructureError("complete cube: clique structure is degenerate")
    r = cube_root(G)
    if r.kind is RootKind.NOT_A_CUBE:
        raise NotACubeError("input graph is not the cube of a tree")
    skeleton, _ = induced_subgraph(
        r.tree.graph, sorted(set(range(r.tree.p)) - leaves(r.tree)))
    return Tree(skeleton)


def terminal_vertices(G: LabeledGraph) -> frozenset[int]:
    """Leaves of the unique root, reported as vertices of G."""
    r = cube_root(G)
    if r.kind is RootKind.NOT_A_CUBE:
        raise NotACubeError("input graph is not the cube of a tree")
    if r.kind is RootKind.AMBIGUOUS_COMPLETE:
        raise AmbiguousStructureError("complete cube: the root tree is not unique")
    phi = isomorphism(power(r.tree.graph, 3), G)
    return frozenset(phi[v] for v in leaves(r.tree))
