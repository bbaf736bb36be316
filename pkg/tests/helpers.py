"""Independent test oracles: deliberately avoid the library's kernel paths."""

from __future__ import annotations

import random
from collections import deque
from itertools import permutations

from treecube.graphs import LabeledGraph


def bfs_distances_oracle(G: LabeledGraph) -> list[list[int | None]]:
    """Plain deque BFS over an adjacency dict built from the edge set."""
    adj: dict[int, list[int]] = {v: [] for v in range(G.p)}
    for u, v in G.edges:
        adj[u].append(v)
        adj[v].append(u)
    out = []
    for s in range(G.p):
        dist: list[int | None] = [None] * G.p
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if dist[y] is None:
                    dist[y] = dist[x] + 1
                    q.append(y)
        out.append(dist)
    return out


def brute_force_isomorphic(G: LabeledGraph, H: LabeledGraph) -> bool:
    """Try every bijection; only usable for small orders."""
    if G.p != H.p or len(G.edges) != len(H.edges):
        return False
    target = {frozenset(e) for e in H.edges}
    for perm in permutations(range(G.p)):
        if {frozenset((perm[u], perm[v])) for u, v in G.edges} == target:
            return True
    return False


def brute_force_maximal_cliques(G: LabeledGraph) -> list[frozenset[int]]:
    """All maximal cliques by subset enumeration (p <= ~12)."""
    cliques = []
    for mask in range(1, 1 << G.p):
        members = [v for v in range(G.p) if mask >> v & 1]
        if all(G.has_edge(u, v) for i, u in enumerate(members) for v in members[i + 1:]):
            if not any(all(G.has_edge(u, w) for u in members)
                       for w in range(G.p) if w not in members):
                cliques.append(frozenset(members))
    return sorted(cliques, key=sorted)


def prufer_to_edges(seq: list[int]) -> list[tuple[int, int]]:
    """Decode a Pruefer sequence into labeled tree edges."""
    p = len(seq) + 2
    degree = [1] * p
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq

    leaf_heap = [v for v in range(p) if degree[v] == 1]
    heapq.heapify(leaf_heap)
    for x in seq:
        leaf = heapq.heappop(leaf_heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaf_heap, x)
    u = heapq.heappop(leaf_heap)
    v = heapq.heappop(leaf_heap)
    edges.append((u, v))
    return edges


def random_prufer_tree(rng: random.Random, p: int) -> LabeledGraph:
    if p == 1:
        return LabeledGraph(1)
    if p == 2:
        return LabeledGraph(2, [(0, 1)])
    seq = [rng.randrange(p) for _ in range(p - 2)]
    return LabeledGraph(p, prufer_to_edges(seq))


def all_free_trees_brute(p: int) -> list[LabeledGraph]:
    """Every isomorphism class on p vertices via Pruefer enumeration plus
    brute-force deduplication; independent of the library's enumeration."""
    if p == 1:
        return [LabeledGraph(1)]
    if p == 2:
        return [LabeledGraph(2, [(0, 1)])]
    reps: list[LabeledGraph] = []
    for code in range(p ** (p - 2)):
        seq = []
        x = code
        for _ in range(p - 2):
            seq.append(x % p)
            x //= p
        G = LabeledGraph(p, prufer_to_edges(seq))
        if not any(brute_force_isomorphic(G, R) for R in reps):
            reps.append(G)
    return reps
