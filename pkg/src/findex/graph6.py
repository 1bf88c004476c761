"""graph6 encoding and decoding.

Bits of the upper triangle are taken column by column, (0,1), (0,2), (1,2),
(0,3), ..., packed six to a byte, most significant bit first, and offset by
63. Sizes up to 62 use a single header byte; 63..64 use the ``~`` form.
"""
from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from findex.graph import MAX_VERTICES, Graph, make_graph


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    raise Graph6Error(f"unsupported size n={n}")


def encode_bits(n: int, bits: Iterable[int]) -> str:
    """Encode an upper-triangle bit stream (graph6 order) for an ``n``-vertex graph."""
    out = [_encode_n(n)]
    acc = 0
    k = 0
    for b in bits:
        acc = (acc << 1) | b
        k += 1
        if k == 6:
            out.append(chr(63 + acc))
            acc = 0
            k = 0
    if k:
        out.append(chr(63 + (acc << (6 - k))))
    return "".join(out)


def encode_graph6(g: Graph) -> str:
    masks = g.masks
    return encode_bits(g.n, ((masks[j] >> i) & 1
                             for j in range(1, g.n) for i in range(j)))


def decode_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 line")
    codes = [ord(c) - 63 for c in s]
    if any(c < 0 or c > 63 for c in codes):
        raise Graph6Error(f"character outside graph6 range in {line.strip()!r}")
    if codes[0] == 63:
        if len(codes) < 4 or codes[1] == 63:
            raise Graph6Error(f"unsupported size header in {line.strip()!r}")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        body = codes[4:]
    else:
        n = codes[0]
        body = codes[1:]
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"unsupported size n={n}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if (body[pos // 6] >> (5 - pos % 6)) & 1:
                edges.append((i, j))
            pos += 1
    return make_graph(n, edges)


def read_graph6(fh: TextIO) -> Iterator[Graph]:
    for line in fh:
        if line.strip():
            yield decode_graph6(line)


def write_graph6(fh: TextIO, graphs: Iterable[Graph]) -> None:
    for g in graphs:
        fh.write(encode_graph6(g) + "\n")
