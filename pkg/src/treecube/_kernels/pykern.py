"""Pure-Python kernels: BFS distances, canonical labeling, maximal cliques.

Adjacency is passed as a list of integer bitmasks (``adj[v]`` has bit ``u``
set iff ``u`` and ``v`` are adjacent). All functions are deterministic and
label-independent where they claim to be; the compiled backend in
``_ckern.pyx`` must produce byte-identical results.
"""

from __future__ import annotations

BACKEND = "python"


def all_pairs_distances(p: int, adj: list[int]) -> list[list[int]]:
    """BFS hop counts from every source; -1 marks unreachable pairs."""
    dist = [[-1] * p for _ in range(p)]
    for s in range(p):
        row = dist[s]
        row[s] = 0
        visited = 1 << s
        frontier = visited
        d = 0
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= adj[v]
            nxt &= ~visited
            d += 1
            m = nxt
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                row[v] = d
            visited |= nxt
            frontier = nxt
    return dist


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out.append(v)
    return out


def _refine(p: int, adj: list[int], colors: list[int]) -> list[int]:
    # 1-D color refinement to a stable equitable partition. New color ids are
    # ranks of (old color, neighbor color counts), so the result depends only
    # on the isomorphism class of the colored graph.
    while True:
        k = max(colors) + 1
        sigs = []
        for v in range(p):
            counts = [0] * k
            for u in _bits(adj[v]):
                counts[colors[u]] += 1
            sigs.append((colors[v], tuple(counts)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[sigs[v]] for v in range(p)]
        if new == colors:
            return colors
        colors = new


def _cells_of(p: int, colors: list[int]) -> list[list[int]]:
    ncolors = max(colors) + 1 if p else 0
    cells: list[list[int]] = [[] for _ in range(ncolors)]
    for v in range(p):
        cells[colors[v]].append(v)
    return cells


def _is_homogeneous(adj: list[int], cells: list[list[int]]) -> bool:
    # A stable partition is homogeneous when every within-cell graph is
    # complete or empty and every cross-cell bipartite graph is complete or
    # empty; then any cell-respecting bijection is an automorphism.
    masks = [0] * len(cells)
    for c, members in enumerate(cells):
        m = 0
        for v in members:
            m |= 1 << v
        masks[c] = m
    for c, members in enumerate(cells):
        v0 = members[0]
        for c2, members2 in enumerate(cells):
            cnt = bin(adj[v0] & masks[c2]).count("1")
            full = len(members2) - 1 if c2 == c else len(members2)
            if cnt != 0 and cnt != full:
                return False
    return True


def _emit(p: int, adj: list[int], perm: list[int]) -> bytes:
    # Pack the upper triangle (row-major, i < j) of the relabeled adjacency
    # matrix, MSB-first.
    out = bytearray()
    acc = 0
    nbits = 0
    for i in range(p):
        ai = adj[perm[i]]
        for j in range(i + 1, p):
            acc = (acc << 1) | ((ai >> perm[j]) & 1)
            nbits += 1
            if nbits == 8:
                out.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(acc << (8 - nbits))
    return bytes(out)


def _canon_search(p: int, adj: list[int], colors: list[int],
                  best: list) -> None:
    colors = _refine(p, adj, colors)
    cells = _cells_of(p, colors)
    if all(len(c) == 1 for c in cells) or _is_homogeneous(adj, cells):
        perm = [v for cell in cells for v in cell]
        bits = _emit(p, adj, perm)
        if best[0] is None or bits < best[0]:
            best[0] = bits
            best[1] = perm
        return
    # Branch on the smallest non-singleton cell (ties: lowest color).
    target = min((c for c in cells if len(c) > 1), key=len)
    fresh = len(cells)
    for v in target:
        branch = list(colors)
        branch[v] = fresh
        _canon_search(p, adj, branch, best)


def canonical_labeling(p: int, adj: list[int]) -> tuple[bytes, list[int]]:
    """Canonical adjacency bits and a labeling realizing them.

    Returns ``(bits, perm)`` where ``perm[i]`` is the input vertex placed at
    canonical position ``i``. ``bits`` is equal for two graphs iff they are
    isomorphic; ``perm`` is one labeling achieving the minimum.
    """
    if p == 0:
        return b"", []
    best: list = [None, None]
    _canon_search(p, adj, [0] * p, best)
    return best[0], best[1]


def maximal_cliques(p: int, adj: list[int]) -> list[int]:
    """All inclusion-maximal cliques as bitmasks, sorted by vertex tuple."""
    out: list[int] = []

    def bk(r: int, cand: int, excl: int) -> None:
        if not cand and not excl:
            out.append(r)
            return
        pux = cand | excl
        pivot = -1
        pivot_cnt = -1
        m = pux
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            cnt = bin(cand & adj[u]).count("1")
            if cnt > pivot_cnt:
                pivot_cnt = cnt
                pivot = u
        ext = cand & ~adj[pivot]
        while ext:
            v = (ext & -ext).bit_length() - 1
            ext &= ext - 1
            bit = 1 << v
            bk(r | bit, cand & adj[v], excl & adj[v])
            cand &= ~bit
            excl |= bit

    if p:
        bk(0, (1 << p) - 1, 0)
    out.sort(key=_bits)
    return out
