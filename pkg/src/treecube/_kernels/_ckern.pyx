# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for graphs on at most 64 vertices.

Mirror of ``pykern``: same algorithms, same deterministic tie-breaking, same
output bytes, with uint64 bitsets and C loops in the hot paths. The dispatcher
in ``__init__.py`` routes larger graphs to the pure-Python fallback.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

BACKEND = "cython"

DEF MAXP = 64


cdef inline int _ctz(uint64_t m) nogil:
    return __builtin_ctzll(m)


cdef int _load_adj(int p, list adj, uint64_t* a) except -1:
    cdef int i
    if p > MAXP:
        raise ValueError("compiled kernels handle at most 64 vertices")
    for i in range(p):
        a[i] = <uint64_t> adj[i]
    return 0


def all_pairs_distances(int p, list adj):
    """BFS hop counts from every source; -1 marks unreachable pairs."""
    cdef uint64_t a[MAXP]
    cdef uint64_t visited, frontier, nxt, m
    cdef int s, v, d
    _load_adj(p, adj, a)
    dist = []
    for s in range(p):
        row = [-1] * p
        row[s] = 0
        visited = (<uint64_t> 1) << s
        frontier = visited
        d = 0
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = _ctz(m)
                m &= m - 1
                nxt |= a[v]
            nxt &= ~visited
            d += 1
            m = nxt
            while m:
                v = _ctz(m)
                m &= m - 1
                row[v] = d
            visited |= nxt
            frontier = nxt
        dist.append(row)
    return dist


cdef list _refine(int p, uint64_t* a, list colors_in):
    cdef int col[MAXP]
    cdef int counts[MAXP]
    cdef int v, u, k, i, changed
    cdef uint64_t m
    for v in range(p):
        col[v] = colors_in[v]
    while True:
        k = 0
        for v in range(p):
            if col[v] >= k:
                k = col[v] + 1
        sigs = []
        for v in range(p):
            for i in range(k):
                counts[i] = 0
            m = a[v]
            while m:
                u = _ctz(m)
                m &= m - 1
                counts[col[u]] += 1
            sigs.append((col[v], tuple([counts[i] for i in range(k)])))
        rank = {}
        for s in sorted(set(sigs)):
            rank[s] = len(rank)
        changed = 0
        for v in range(p):
            i = rank[sigs[v]]
            if i != col[v]:
                changed = 1
            col[v] = i
        if not changed:
            return [col[v] for v in range(p)]


cdef list _cells_of(int p, list colors):
    cdef int ncolors = 0, v
    for v in range(p):
        if colors[v] >= ncolors:
            ncolors = colors[v] + 1
    cells = [[] for _ in range(ncolors)]
    for v in range(p):
        cells[colors[v]].append(v)
    return cells


cdef int _is_homogeneous(uint64_t* a, list cells):
    cdef uint64_t masks[MAXP]
    cdef int c, c2, cnt, full, v
    cdef int ncells = len(cells)
    for c in range(ncells):
        masks[c] = 0
        for v in cells[c]:
            masks[c] |= (<uint64_t> 1) << v
    for c in range(ncells):
        v = cells[c][0]
        for c2 in range(ncells):
            cnt = __builtin_popcountll(a[v] & masks[c2])
            full = len(cells[c2]) - (1 if c2 == c else 0)
            if cnt != 0 and cnt != full:
                return 0
    return 1


cdef bytes _emit(int p, uint64_t* a, list perm):
    cdef int pc[MAXP]
    cdef int i, j, nbits = 0
    cdef unsigned int acc = 0
    cdef uint64_t ai
    for i in range(p):
        pc[i] = perm[i]
    out = bytearray()
    for i in range(p):
        ai = a[pc[i]]
        for j in range(i + 1, p):
            acc = (acc << 1) | <unsigned int> ((ai >> pc[j]) & 1)
            nbits += 1
            if nbits == 8:
                out.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(acc << (8 - nbits))
    return bytes(out)


cdef void _canon_search(int p, uint64_t* a, list colors, list best):
    colors = _refine(p, a, colors)
    cells = _cells_of(p, colors)
    cdef int discrete = 1
    for cell in cells:
        if len(cell) > 1:
            discrete = 0
            break
    if discrete or _is_homogeneous(a, cells):
        perm = [v for cell in cells for v in cell]
        bits = _emit(p, a, perm)
        if best[0] is None or bits < best[0]:
            best[0] = bits
            best[1] = perm
        return
    target = min((c for c in cells if len(c) > 1), key=len)
    cdef int fresh = len(cells)
    for v in target:
        branch = list(colors)
        branch[v] = fresh
        _canon_search(p, a, branch, best)


def canonical_labeling(int p, list adj):
    """Canonical adjacency bits and a labeling realizing them."""
    cdef uint64_t a[MAXP]
    if p == 0:
        return b"", []
    _load_adj(p, adj, a)
    best = [None, None]
    _canon_search(p, a, [0] * p, best)
    return best[0], best[1]


cdef void _bk(uint64_t* a, uint64_t r, uint64_t cand, uint64_t excl, list out):
    cdef uint64_t pux, m, ext, bit
    cdef int u, v, cnt, pivot, pivot_cnt
    if not cand and not excl:
        out.append(r)
        return
    pux = cand | excl
    pivot = -1
    pivot_cnt = -1
    m = pux
    while m:
        u = _ctz(m)
        m &= m - 1
        cnt = __builtin_popcountll(cand & a[u])
        if cnt > pivot_cnt:
            pivot_cnt = cnt
            pivot = u
    ext = cand & ~a[pivot]
    while ext:
        v = _ctz(ext)
        ext &= ext - 1
        bit = (<uint64_t> 1) << v
        _bk(a, r | bit, cand & a[v], excl & a[v], out)
        cand &= ~bit
        excl |= bit


def maximal_cliques(int p, list adj):
    """All inclusion-maximal cliques as bitmasks, sorted by vertex tuple."""
    cdef uint64_t a[MAXP]
    cdef uint64_t full
    if p == 0:
        return []
    _load_adj(p, adj, a)
    out = []
    full = ((<uint64_t> 1) << (p - 1))
    full = full | (full - 1)
    _bk(a, 0, full, 0, out)

    def key(mask):
        bits = []
        m = mask
        while m:
            bits.append((m & -m).bit_length() - 1)
            m &= m - 1
        return bits

    out.sort(key=key)
    return out
