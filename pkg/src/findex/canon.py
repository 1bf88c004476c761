"""Canonical certificates for isomorphism classes.

The certificate is the graph6 text of the canonically relabeled graph, as
bytes. The labeling kernel is the compiled ``_canon_c`` extension when it
was built, otherwise the pure-Python ``_canon_py``. Setting
``FINDEX_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os

from findex import _canon_py
from findex.graph import Graph, from_masks
from findex.graph6 import encode_bits

try:
    if os.environ.get("FINDEX_PURE_PYTHON"):
        raise ImportError("pure-Python backend requested")
    from findex import _canon_c as _kernel
    BACKEND = "cython"
except ImportError:
    _kernel = _canon_py
    BACKEND = "python"


def canonical_order(g: Graph, kernel=None) -> list[int]:
    return (kernel or _kernel).canonical_order(g.n, g.masks)


def certificate_from_masks(n: int, masks, kernel=None) -> bytes:
    """Certificate for a graph given as ``n`` neighbor bitmasks."""
    order = (kernel or _kernel).canonical_order(n, masks)
    bits = ((masks[order[j]] >> order[i]) & 1 for j in range(1, n) for i in range(j))
    return encode_bits(n, bits).encode("ascii")


def canonical_certificate(g: Graph, kernel=None) -> bytes:
    """Label-invariant certificate; equal iff the graphs are isomorphic."""
    return certificate_from_masks(g.n, g.masks, kernel)


def canonical_form(g: Graph, kernel=None) -> Graph:
    """The canonically relabeled copy of ``g``."""
    order = canonical_order(g, kernel)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    masks = [0] * g.n
    for v in range(g.n):
        m = 0
        for w in g.adj[v]:
            m |= 1 << pos[w]
        masks[pos[v]] = m
    return from_masks(g.n, masks)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count == h.edge_count and \
        canonical_certificate(g) == canonical_certificate(h)
