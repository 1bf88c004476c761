"""Pure-Python canonical labeling kernel.

Mirrors ``_canon_c.pyx`` step for step so both backends return the same
canonical order. Vertex sets are int bitmasks; a partition is an ordered
list of cell masks.
"""
from __future__ import annotations


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _refine(adj, cells):
    s = 0
    while s < len(cells):
        splitter = cells[s]
        split = False
        for c, cell in enumerate(cells):
            if cell & (cell - 1) == 0:
                continue
            groups: dict[int, int] = {}
            for v in _bits(cell):
                k = (adj[v] & splitter).bit_count()
                groups[k] = groups.get(k, 0) | (1 << v)
            if len(groups) > 1:
                cells[c:c + 1] = [groups[k] for k in sorted(groups)]
                split = True
                break
        s = 0 if split else s + 1
    return cells


def _twins(n, adj):
    out = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                out[u] |= 1 << v
                out[v] |= 1 << u
    return out


def canonical_order(n: int, adj) -> list[int]:
    """Return the vertices in canonical order (position i gets label i).

    ``adj`` holds one neighbor bitmask per vertex. The order minimizes the
    column-major upper-triangle adjacency bitstring over the leaves of an
    individualization-refinement search; twin vertices are only branched on
    once since swapping them is an automorphism.
    """
    if not 1 <= n <= 64:
        raise ValueError(f"n must be in 1..64, got {n}")
    adj = list(adj)
    twins = _twins(n, adj)
    best_key = -1
    best_order: list[int] = []

    def search(cells):
        nonlocal best_key, best_order
        cells = _refine(adj, cells)
        if len(cells) == n:
            order = [c.bit_length() - 1 for c in cells]
            key = 0
            for j in range(1, n):
                row = adj[order[j]]
                for i in range(j):
                    key = (key << 1) | ((row >> order[i]) & 1)
            if best_key < 0 or key < best_key:
                best_key = key
                best_order = order
            return
        t = next(i for i, c in enumerate(cells) if c & (c - 1))
        cell = cells[t]
        for v in _bits(cell):
            if twins[v] & cell & ((1 << v) - 1):
                continue
            bit = 1 << v
            search(cells[:t] + [bit, cell ^ bit] + cells[t + 1:])

    search([(1 << n) - 1])
    return best_order
