"""Simple undirected graphs: parsing, distances, powers, spans, certificates.

Vertices are dense integers ``0..p-1``. Values are immutable after
construction and safe to share across workers; every operation here is a pure
function.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Iterable

from . import _kernels
from .errors import DisconnectedError, GraphParseError

Edge = tuple[int, int]


def _norm_edge(e: Iterable[int]) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


class LabeledGraph:
    """Simple undirected graph on vertices 0..p-1 (no loops, no multi-edges)."""

    __slots__ = ("p", "edges", "_adj", "_dist", "_canon")

    def __init__(self, p: int, edges: Iterable[Iterable[int]] = ()):
        if p < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        adj = [0] * p
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < p and 0 <= v < p):
                raise ValueError(f"edge ({u}, {v}) out of range for p={p}")
            norm.add((u, v) if u < v else (v, u))
        for u, v in norm:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.p = p
        self.edges = frozenset(norm)
        self._adj = adj
        self._dist: DistanceMatrix | None = None
        self._canon: tuple[bytes, tuple[int, ...]] | None = None

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        m = self._adj[v]
        out = []
        while m:
            out.append((m & -m).bit_length() - 1)
            m &= m - 1
        return tuple(out)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return bin(self._adj[v]).count("1")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.p):
            raise ValueError(f"vertex {v} out of range for p={self.p}")

    def _check_edge(self, e: Iterable[int]) -> Edge:
        e = _norm_edge(e)
        if e not in self.edges:
            raise ValueError(f"edge {e} not present in the graph")
        return e

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.p == other.p and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.p, self.edges))

    def __repr__(self) -> str:
        return f"LabeledGraph(p={self.p}, edges={self.edge_list()})"


class DistanceMatrix:
    """All-pairs hop counts; unreachable pairs are reported as ``None``."""

    __slots__ = ("p", "_rows")

    def __init__(self, rows: list[list[int]]):
        self.p = len(rows)
        self._rows = tuple(tuple(r) for r in rows)

    def get(self, u: int, v: int) -> int | None:
        d = self._rows[u][v]
        return None if d < 0 else d

    def reachable(self, u: int, v: int) -> bool:
        return self._rows[u][v] >= 0

    def row(self, u: int) -> tuple[int | None, ...]:
        return tuple(None if d < 0 else d for d in self._rows[u])


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Byte certificate identifying an isomorphism class.

    Equal certificates iff isomorphic graphs; stable across runs and
    platforms. The encoding (vertex count plus canonical adjacency bits) is
    invertible, see :meth:`to_graph`.
    """

    certificate: bytes

    @property
    def order(self) -> int:
        return struct.unpack(">I", self.certificate[:4])[0]

    def hex(self) -> str:
        return self.certificate.hex()

    @classmethod
    def from_hex(cls, s: str) -> "CanonicalForm":
        return cls(bytes.fromhex(s))

    def to_graph(self) -> LabeledGraph:
        """Decode the canonical representative of this isomorphism class."""
        p = self.order
        bits = self.certificate[4:]
        edges = []
        k = 0
        for i in range(p):
            for j in range(i + 1, p):
                if bits[k >> 3] >> (7 - (k & 7)) & 1:
                    edges.append((i, j))
                k += 1
        return LabeledGraph(p, edges)


# ── construction helpers ──────────────────────────────────────────────


def path_graph(p: int) -> LabeledGraph:
    return LabeledGraph(p, [(i, i + 1) for i in range(p - 1)])


def cycle_graph(p: int) -> LabeledGraph:
    if p < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return LabeledGraph(p, [(i, (i + 1) % p) for i in range(p)])


def complete_graph(p: int) -> LabeledGraph:
    return LabeledGraph(p, [(i, j) for i in range(p) for j in range(i + 1, p)])


def star_graph(p: int) -> LabeledGraph:
    """Star on p vertices: center 0 joined to 1..p-1."""
    return LabeledGraph(p, [(0, i) for i in range(1, p)])


def complete_bipartite_graph(a: int, b: int) -> LabeledGraph:
    return LabeledGraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def relabel(G: LabeledGraph, perm: Iterable[int]) -> LabeledGraph:
    """Apply a vertex permutation: vertex v becomes perm[v]."""
    perm = list(perm)
    if sorted(perm) != list(range(G.p)):
        raise ValueError("perm must be a permutation of 0..p-1")
    return LabeledGraph(G.p, [(perm[u], perm[v]) for u, v in G.edges])


def induced_subgraph(G: LabeledGraph, vertices: Iterable[int]) -> tuple[LabeledGraph, list[int]]:
    """Induced subgraph on the given vertices, densely relabeled.

    Returns ``(H, old_ids)`` where ``old_ids[i]`` is the G-vertex that became
    vertex ``i`` of H; the relabeling preserves the original order.
    """
    old_ids = sorted(set(vertices))
    for v in old_ids:
        G._check_vertex(v)
    pos = {v: i for i, v in enumerate(old_ids)}
    edges = [(pos[u], pos[v]) for u, v in G.edges if u in pos and v in pos]
    return LabeledGraph(len(old_ids), edges), old_ids


def delete_vertex(G: LabeledGraph, v: int) -> LabeledGraph:
    """Vertex-deleted subgraph, densely relabeled (order-preserving)."""
    G._check_vertex(v)
    return induced_subgraph(G, (u for u in range(G.p) if u != v))[0]


def delete_vertices(G: LabeledGraph, vs: Iterable[int]) -> LabeledGraph:
    drop = set(vs)
    return induced_subgraph(G, (u for u in range(G.p) if u not in drop))[0]


# ── distances, powers, spans ──────────────────────────────────────────


def all_pairs_distances(G: LabeledGraph) -> DistanceMatrix:
    """Breadth-first hop counts per component; unreachable pairs marked."""
    if G._dist is None:
        G._dist = DistanceMatrix(_kernels.all_pairs_distances(G.p, G._adj))
    return G._dist


def is_connected(G: LabeledGraph) -> bool:
    if G.p <= 1:
        return True
    d = all_pairs_distances(G)
    return all(d.reachable(0, v) for v in range(1, G.p))


def power(G: LabeledGraph, k: int) -> LabeledGraph:
    """k-th power: joins distinct vertices at distance between 1 and k."""
    if k < 1:
        raise ValueError("power index must be at least 1")
    d = all_pairs_distances(G)._rows
    edges = [(u, v) for u in range(G.p) for v in range(u + 1, G.p) if 1 <= d[u][v] <= k]
    return LabeledGraph(G.p, edges)


def is_complete(G: LabeledGraph) -> bool:
    return len(G.edges) == G.p * (G.p - 1) // 2


def eccentricity(G: LabeledGraph, v: int) -> int:
    """Maximum distance from v; requires a connected graph."""
    G._check_vertex(v)
    d = all_pairs_distances(G)._rows[v]
    if any(x < 0 for x in d):
        raise DisconnectedError("eccentricity is undefined on a disconnected graph")
    return max(d)


def peripheral_vertices(G: LabeledGraph) -> frozenset[int]:
    """Vertices attaining the maximum eccentricity."""
    if G.p == 0:
        raise ValueError("peripheral vertices are undefined on the empty graph")
    ecc = [eccentricity(G, v) for v in range(G.p)]
    top = max(ecc)
    return frozenset(v for v in range(G.p) if ecc[v] == top)


def diameter(G: LabeledGraph) -> int:
    if G.p == 0:
        raise ValueError("diameter is undefined on the empty graph")
    return max(eccentricity(G, v) for v in range(G.p))


def edge_distance(G: LabeledGraph, e1: Iterable[int], e2: Iterable[int]) -> int:
    """Distance between two edges: 1 + the closest endpoint distance.

    Identical edges are at distance 0 by convention.
    """
    e1 = G._check_edge(e1)
    e2 = G._check_edge(e2)
    if e1 == e2:
        return 0
    d = all_pairs_distances(G)._rows
    best = min((d[u][v] for u in e1 for v in e2 if d[u][v] >= 0), default=-1)
    if best < 0:
        raise DisconnectedError(f"edges {e1} and {e2} are in different components")
    return best + 1


def edge_vertex_distance(G: LabeledGraph, e: Iterable[int], v: int) -> int:
    """Minimum distance from v to either endpoint of e."""
    e = G._check_edge(e)
    G._check_vertex(v)
    d = all_pairs_distances(G)._rows
    best = min((d[u][v] for u in e if d[u][v] >= 0), default=-1)
    if best < 0:
        raise DisconnectedError(f"vertex {v} cannot reach edge {e}")
    return best


def vertex_span(G: LabeledGraph, v: int, k: int) -> frozenset[int]:
    """All vertices at distance at most k from v (always contains v)."""
    G._check_vertex(v)
    if k < 0:
        raise ValueError("span radius must be non-negative")
    d = all_pairs_distances(G)._rows[v]
    return frozenset(u for u in range(G.p) if 0 <= d[u] <= k)


def edge_span(G: LabeledGraph, e: Iterable[int], k: int) -> frozenset[int]:
    """Union of the k-spans of the edge's endpoints."""
    u, v = G._check_edge(e)
    return vertex_span(G, u, k) | vertex_span(G, v, k)


# ── isomorphism certificates ──────────────────────────────────────────


def _canonical(G: LabeledGraph) -> tuple[bytes, tuple[int, ...]]:
    if G._canon is None:
        bits, perm = _kernels.canonical_labeling(G.p, G._adj)
        G._canon = (bits, tuple(perm))
    return G._canon


def canonical_form(G: LabeledGraph) -> CanonicalForm:
    """Certificate equal across relabelings, distinct across classes."""
    bits, _ = _canonical(G)
    return CanonicalForm(struct.pack(">I", G.p) + bits)


def canonical_order(G: LabeledGraph) -> tuple[int, ...]:
    """A labeling realizing the certificate: entry i is the vertex placed at
    canonical position i."""
    return _canonical(G)[1]


def is_isomorphic(G: LabeledGraph, H: LabeledGraph) -> bool:
    if G.p != H.p or len(G.edges) != len(H.edges):
        return False
    return _canonical(G)[0] == _canonical(H)[0]


def isomorphism(G: LabeledGraph, H: LabeledGraph) -> dict[int, int] | None:
    """An explicit edge-preserving bijection G -> H, or None."""
    if not is_isomorphic(G, H):
        return None
    pg = _canonical(G)[1]
    ph = _canonical(H)[1]
    return {pg[i]: ph[i] for i in range(G.p)}


# ── text formats ──────────────────────────────────────────────────────


def to_edgelist(G: LabeledGraph) -> str:
    """Native format: vertex count line, then one "u v" line per edge."""
    lines = [str(G.p)]
    lines.extend(f"{u} {v}" for u, v in G.edge_list())
    return "\n".join(lines) + "\n"


def _parse_edgelist(text: str) -> LabeledGraph:
    lines = text.splitlines()
    header = None
    header_no = 0
    for no, raw in enumerate(lines, start=1):
        if raw.strip():
            header = raw.strip()
            header_no = no
            break
    if header is None:
        raise GraphParseError("empty input")
    try:
        p = int(header)
    except ValueError:
        raise GraphParseError(f"expected vertex count, got {header!r}", line=header_no) from None
    if p < 0:
        raise GraphParseError("vertex count must be non-negative", line=header_no)
    edges = []
    seen = set()
    for no, raw in enumerate(lines[header_no:], start=header_no + 1):
        stripped = raw.strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {stripped!r}", line=no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer endpoint in {stripped!r}", line=no) from None
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line=no)
        if not (0 <= u < p and 0 <= v < p):
            raise GraphParseError(f"edge ({u}, {v}) out of range for p={p}", line=no)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphParseError(f"duplicate edge ({u}, {v})", line=no)
        seen.add(e)
        edges.append(e)
    return LabeledGraph(p, edges)


def to_graph6(G: LabeledGraph) -> str:
    """Encode in the standard graph6 byte format."""
    n = G.p
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    else:
        head = [63, 63] + [n >> (6 * i) & 63 for i in range(5, -1, -1)]
    bits = []
    for j in range(1, n):
        aj = G._adj[j]
        for i in range(j):
            bits.append(aj >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    groups = [int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)]
    return "".join(chr(63 + x) for x in head + groups)


def _parse_graph6(text: str, line: int = 1) -> LabeledGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphParseError("empty graph6 string", line=line)
    data = []
    for off, ch in enumerate(s):
        x = ord(ch) - 63
        if not (0 <= x <= 63):
            raise GraphParseError(f"invalid graph6 character {ch!r}", line=line, offset=off)
        data.append(x)
    if data[0] < 63:
        n, idx = data[0], 1
    elif len(data) >= 2 and data[1] < 63:
        if len(data) < 4:
            raise GraphParseError("truncated graph6 size field", line=line)
        n, idx = (data[1] << 12) | (data[2] << 6) | data[3], 4
    else:
        if len(data) < 8:
            raise GraphParseError("truncated graph6 size field", line=line)
        n = 0
        for x in data[2:8]:
            n = n << 6 | x
        idx = 8
    nbits = n * (n - 1) // 2
    if len(data) - idx != (nbits + 5) // 6:
        raise GraphParseError(
            f"graph6 payload length {len(data) - idx} does not match order {n}", line=line)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if data[idx + k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return LabeledGraph(n, edges)


def parse_graph(text: str, fmt: str | None = None) -> LabeledGraph:
    """Parse a graph from edge-list or graph6 text.

    With ``fmt=None`` the format is detected: edge-list input starts with a
    digit (the vertex count), anything else is treated as graph6.
    """
    if fmt not in (None, "edgelist", "graph6"):
        raise ValueError(f"unknown format {fmt!r}")
    if fmt is None:
        stripped = text.lstrip()
        fmt = "edgelist" if stripped[:1].isdigit() else "graph6"
    if fmt == "edgelist":
        return _parse_edgelist(text)
    return _parse_graph6(text)


def serialize_graph(G: LabeledGraph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return to_edgelist(G)
    if fmt == "graph6":
        return to_graph6(G) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
