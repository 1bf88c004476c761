# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonical labeling kernel; same algorithm as _canon_py."""
from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long x) nogil
    int __builtin_ctzll(unsigned long long x) nogil


cdef struct State:
    int n
    uint64_t adj[64]
    uint64_t twins[64]
    int have_best
    int best_order[64]
    uint64_t best_cols[64]


cdef inline uint64_t bit(int v) nogil:
    return (<uint64_t>1) << v


cdef int refine(State* st, uint64_t* cells, int ncells) nogil:
    cdef int s = 0, c, i, v, mn, mx, cnt, ng, split
    cdef uint64_t splitter, cell, rest, low, g
    cdef int counts[64]
    cdef uint64_t groups[65]
    while s < ncells:
        splitter = cells[s]
        split = 0
        for c in range(ncells):
            cell = cells[c]
            if (cell & (cell - 1)) == 0:
                continue
            mn = 65
            mx = -1
            rest = cell
            while rest:
                low = rest & (~rest + 1)
                v = __builtin_ctzll(low)
                cnt = __builtin_popcountll(st.adj[v] & splitter)
                counts[v] = cnt
                if cnt < mn:
                    mn = cnt
                if cnt > mx:
                    mx = cnt
                rest ^= low
            if mn == mx:
                continue
            ng = 0
            for cnt in range(mn, mx + 1):
                g = 0
                rest = cell
                while rest:
                    low = rest & (~rest + 1)
                    v = __builtin_ctzll(low)
                    if counts[v] == cnt:
                        g |= low
                    rest ^= low
                if g:
                    groups[ng] = g
                    ng += 1
            i = ncells - 1
            while i > c:
                cells[i + ng - 1] = cells[i]
                i -= 1
            for i in range(ng):
                cells[c + i] = groups[i]
            ncells += ng - 1
            split = 1
            break
        if split:
            s = 0
        else:
            s += 1
    return ncells


cdef void leaf(State* st, uint64_t* cells) nogil:
    cdef int order[64]
    cdef uint64_t cols[64]
    cdef int n = st.n, i, j, cmp = 0
    cdef uint64_t col, row
    for i in range(n):
        order[i] = __builtin_ctzll(cells[i])
    for j in range(1, n):
        row = st.adj[order[j]]
        col = 0
        for i in range(j):
            col = (col << 1) | ((row >> order[i]) & 1)
        cols[j] = col
        if cmp == 0 and st.have_best:
            if col < st.best_cols[j]:
                cmp = -1
            elif col > st.best_cols[j]:
                return
    if st.have_best and cmp == 0:
        return
    st.have_best = 1
    for i in range(n):
        st.best_order[i] = order[i]
        st.best_cols[i] = cols[i]


cdef void search(State* st, uint64_t* cells_in, int ncells) nogil:
    cdef uint64_t cells[64]
    cdef uint64_t child[64]
    cdef uint64_t cell, rest, low
    cdef int i, t, v
    for i in range(ncells):
        cells[i] = cells_in[i]
    ncells = refine(st, cells, ncells)
    if ncells == st.n:
        leaf(st, cells)
        return
    t = 0
    while (cells[t] & (cells[t] - 1)) == 0:
        t += 1
    cell = cells[t]
    rest = cell
    while rest:
        low = rest & (~rest + 1)
        v = __builtin_ctzll(low)
        rest ^= low
        if st.twins[v] & cell & (low - 1):
            continue
        for i in range(t):
            child[i] = cells[i]
        child[t] = low
        child[t + 1] = cell ^ low
        for i in range(t + 1, ncells):
            child[i + 1] = cells[i]
        search(st, child, ncells + 1)


def canonical_order(int n, adj):
    """Vertices in canonical order; ``adj`` holds one neighbor bitmask per vertex."""
    if n < 1 or n > 64:
        raise ValueError(f"n must be in 1..64, got {n}")
    cdef State st
    cdef int u, v
    cdef uint64_t start[1]
    st.n = n
    st.have_best = 0
    for u in range(n):
        st.adj[u] = <uint64_t>adj[u]
        st.twins[u] = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (st.adj[u] & ~bit(v)) == (st.adj[v] & ~bit(u)):
                st.twins[u] |= bit(v)
                st.twins[v] |= bit(u)
    start[0] = ~(<uint64_t>0) if n == 64 else bit(n) - 1
    with nogil:
        search(&st, start, 1)
    return [st.best_order[i] for i in range(n)]
