# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bitmask graph kernels (uint64 masks, at most 64 vertices).

Mirrors the interface of ``_pykernels``; see that module for semantics.
"""

cdef extern from *:
    """
    #define raag_ctzll(x) __builtin_ctzll(x)
    #define raag_popcountll(x) __builtin_popcountll(x)
    """
    int raag_ctzll(unsigned long long) nogil
    int raag_popcountll(unsigned long long) nogil

BACKEND = "compiled"

ctypedef unsigned long long u64


cdef int _load(object adj, u64* buf) except -1:
    cdef Py_ssize_t n = len(adj)
    cdef Py_ssize_t i
    if n > 64:
        raise ValueError("compiled kernels support at most 64 vertices")
    for i in range(n):
        buf[i] = adj[i]
    return <int> n


cdef u64 _component(u64* adj, u64 mask, u64 start) nogil:
    cdef u64 comp = start
    cdef u64 frontier = start
    cdef u64 grow, low
    while frontier:
        grow = 0
        while frontier:
            low = frontier & (~frontier + 1)
            frontier ^= low
            grow |= adj[raag_ctzll(low)]
        frontier = grow & mask & ~comp
        comp |= frontier
    return comp


def component_bits(object adj, object mask, object start_bit):
    cdef u64 buf[64]
    _load(adj, buf)
    return _component(buf, <u64> mask, <u64> start_bit)


def components_bits(object adj, object mask):
    cdef u64 buf[64]
    cdef u64 rest, comp
    _load(adj, buf)
    rest = <u64> mask
    out = []
    while rest:
        comp = _component(buf, <u64> mask, rest & (~rest + 1))
        out.append(comp)
        rest &= ~comp
    return out


def is_connected_bits(object adj, object mask):
    cdef u64 buf[64]
    cdef u64 m = <u64> mask
    if m & (m - 1) == 0:
        return True
    _load(adj, buf)
    return _component(buf, m, m & (~m + 1)) == m


cdef void _bk(u64* adj, u64 r, u64 p, u64 x, list out):
    cdef u64 px, low, cand
    cdef int v, best, cover, best_cover
    if p == 0 and x == 0:
        out.append(r)
        return
    best = -1
    best_cover = -1
    px = p | x
    while px:
        low = px & (~px + 1)
        px ^= low
        v = raag_ctzll(low)
        cover = raag_popcountll(adj[v] & p)
        if cover > best_cover:
            best = v
            best_cover = cover
    cand = p & ~adj[best]
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        v = raag_ctzll(low)
        _bk(adj, r | low, p & adj[v], x & adj[v], out)
        p &= ~low
        x |= low


def maximal_cliques_bits(object adj, object mask):
    cdef u64 buf[64]
    out = []
    if not mask:
        return out
    _load(adj, buf)
    _bk(buf, 0, <u64> mask, 0, out)
    return out


cdef void _maxcl(u64* adj, int size, u64 p, u64 x, int* best) nogil:
    cdef u64 px, low, cand
    cdef int v, best_v, cover, best_cover
    if p == 0 and x == 0:
        if size > best[0]:
            best[0] = size
        return
    if size + raag_popcountll(p) <= best[0]:
        return
    best_v = -1
    best_cover = -1
    px = p | x
    while px:
        low = px & (~px + 1)
        px ^= low
        v = raag_ctzll(low)
        cover = raag_popcountll(adj[v] & p)
        if cover > best_cover:
            best_v = v
            best_cover = cover
    cand = p & ~adj[best_v]
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        v = raag_ctzll(low)
        _maxcl(adj, size + 1, p & adj[v], x & adj[v], best)
        p &= ~low
        x |= low


def max_clique_size_bits(object adj, object mask):
    cdef u64 buf[64]
    cdef int best = 0
    if not mask:
        return 0
    _load(adj, buf)
    _maxcl(buf, 0, <u64> mask, 0, &best)
    return best


cdef bint _first_clique(u64* adj, u64 chosen, u64 cand, int need, u64* result) nogil:
    cdef u64 low, narrowed
    cdef int v
    if need == 0:
        result[0] = chosen
        return True
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        if raag_popcountll(cand) + 1 < need:
            return False
        v = raag_ctzll(low)
        narrowed = cand & adj[v]
        if need == 1 or raag_popcountll(narrowed) >= need - 1:
            if _first_clique(adj, chosen | low, narrowed, need - 1, result):
                return True
    return False


def first_clique_of_size_bits(object adj, object candidates, object size):
    cdef u64 buf[64]
    cdef u64 result = 0
    cdef int need = <int> size
    if need == 0:
        return 0
    if raag_popcountll(<u64> candidates) < need:
        return None
    _load(adj, buf)
    if _first_clique(buf, 0, <u64> candidates, need, &result):
        return result
    return None
