"""Exhaustive unicyclic graphs on n vertices, one per isomorphism class.

Free trees come from canonical level sequences (Beyer-Hedetniemi successor
restricted to center-rooted sequences, as in Wright, Richmond, Odlyzko and
McKay). Every tree is closed by each possible extra edge and the results
are deduplicated by canonical certificate.
"""
from __future__ import annotations

import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Optional

from findex import canon
from findex.graph import Graph, girth, is_unicyclic, make_graph
from findex.graph6 import decode_graph6
from findex.indices import f_index

log = logging.getLogger(__name__)

MAX_TREE_N = 12
MIN_CATALOG_N = 3
MAX_CATALOG_N = 12


class CatalogError(ValueError):
    pass


def _successor(seq: list[int], p: Optional[int] = None) -> Optional[list[int]]:
    """Next rooted level sequence in reverse lexicographic order, or None."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    shift = p - q
    for i in range(p, len(out)):
        out[i] = out[i - shift]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """(first subtree of the root, tree with that subtree removed), re-leveled."""
    m = len(seq)
    for i in range(2, len(seq)):
        if seq[i] == 1:
            m = i
            break
    return [d - 1 for d in seq[1:m]], [0] + seq[m:]


def _free_or_jump(seq: list[int]) -> list[int]:
    """Return ``seq`` if it is center-rooted, else the next candidate to try."""
    left, rest = _split(seq)
    lh, rh = max(left), max(rest)
    ok = rh > lh or (rh == lh and (len(left) < len(rest) or
                                   (len(left) == len(rest) and left <= rest)))
    if ok:
        return seq
    p = len(left)
    nxt = _successor(seq, p)
    if seq[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def level_sequences(n: int) -> Iterator[list[int]]:
    """Center-rooted level sequences, one per free tree on ``n`` vertices."""
    if n <= 2:
        yield list(range(n))
        return
    seq: Optional[list[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _free_or_jump(seq)
        if seq is None:
            break
        yield seq
        seq = _successor(seq)


def tree_from_levels(seq: list[int]) -> Graph:
    edges = []
    last_at: dict[int, int] = {}
    for v, d in enumerate(seq):
        if d > 0:
            edges.append((last_at[d - 1], v))
        last_at[d] = v
    return make_graph(len(seq), edges)


def all_trees(n: int) -> list[Graph]:
    if not 1 <= n <= MAX_TREE_N:
        raise CatalogError(f"tree enumeration needs 1 <= n <= {MAX_TREE_N}, got {n}")
    return [tree_from_levels(s) for s in level_sequences(n)]


@dataclass(frozen=True)
class Member:
    graph: Graph
    graph6: str
    f: int
    girth: int


@dataclass(frozen=True)
class Catalog:
    n: int
    members: tuple[Member, ...]
    by_girth: dict[int, tuple[Member, ...]] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.members)

    def certificates(self) -> set[str]:
        return {m.graph6 for m in self.members}


def _close_trees(args: tuple[int, list[tuple[int, ...]]]) -> set[bytes]:
    """Certificates of all single-edge closures of the given trees (bitmask form)."""
    n, trees = args
    out: set[bytes] = set()
    for masks in trees:
        for u in range(n):
            for v in range(u + 1, n):
                if (masks[u] >> v) & 1:
                    continue
                m = list(masks)
                m[u] |= 1 << v
                m[v] |= 1 << u
                out.add(canon.certificate_from_masks(n, m))
    return out


def _make_catalog(n: int, certs) -> Catalog:
    members = []
    for c in sorted(certs):
        text = c.decode("ascii") if isinstance(c, bytes) else c
        g = decode_graph6(text)
        members.append(Member(g, text, f_index(g), girth(g)))
    groups: dict[int, list[Member]] = {}
    for m in members:
        groups.setdefault(m.girth, []).append(m)
    return Catalog(n, tuple(members), {k: tuple(v) for k, v in sorted(groups.items())})


def build_catalog(n: int, workers: int = 1) -> Catalog:
    """All unicyclic graphs on ``n`` vertices up to isomorphism.

    With ``workers > 1`` the tree list is split across processes; the
    certificate sets are merged, so the result does not depend on the split.
    """
    if not MIN_CATALOG_N <= n <= MAX_CATALOG_N:
        raise CatalogError(
            f"catalog needs {MIN_CATALOG_N} <= n <= {MAX_CATALOG_N}, got {n}")
    trees = [t.masks for t in all_trees(n)]
    if workers > 1 and len(trees) > workers:
        chunks = [(n, trees[i::workers]) for i in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            certs = set().union(*pool.map(_close_trees, chunks))
    else:
        certs = _close_trees((n, trees))
    log.debug("n=%d: %d trees, %d unicyclic classes", n, len(trees), len(certs))
    return _make_catalog(n, certs)


def members_with_girth(c: Catalog, k: int) -> list[Graph]:
    if not 3 <= k <= c.n:
        raise CatalogError(f"girth must be in 3..{c.n}, got {k}")
    return [m.graph for m in c.by_girth.get(k, ())]


def catalog_paths(directory: Path, n: int) -> tuple[Path, Path]:
    base = Path(directory) / f"unicyclic_n{n}"
    return base.with_suffix(".g6"), base.with_suffix(".csv")


def save_catalog(c: Catalog, g6_path: Path, csv_path: Optional[Path] = None) -> None:
    """Write sorted graph6 lines plus a ``graph6,girth,f_index`` sidecar."""
    g6_path = Path(g6_path)
    csv_path = Path(csv_path) if csv_path else g6_path.with_suffix(".csv")
    g6_path.parent.mkdir(parents=True, exist_ok=True)
    g6_path.write_text("".join(m.graph6 + "\n" for m in c.members))
    with csv_path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["graph6", "girth", "f_index"])
        for m in c.members:
            w.writerow([m.graph6, m.girth, m.f])


def load_catalog(g6_path: Path, n: int) -> Catalog:
    """Read a saved catalog back, re-checking every line and the sidecar."""
    lines = [ln.strip() for ln in Path(g6_path).read_text().splitlines() if ln.strip()]
    for ln in lines:
        g = decode_graph6(ln)
        if g.n != n or not is_unicyclic(g):
            raise CatalogError(f"{g6_path}: {ln!r} is not a unicyclic graph on {n} vertices")
        if canon.canonical_certificate(g).decode("ascii") != ln:
            raise CatalogError(f"{g6_path}: {ln!r} is not in canonical form")
    if len(set(lines)) != len(lines) or lines != sorted(lines):
        raise CatalogError(f"{g6_path}: lines are not sorted and unique")
    cat = _make_catalog(n, lines)
    csv_path = Path(g6_path).with_suffix(".csv")
    if csv_path.exists():
        with csv_path.open(newline="") as fh:
            rows = list(csv.DictReader(fh))
        expect = [(m.graph6, str(m.girth), str(m.f)) for m in cat.members]
        if [(r["graph6"], r["girth"], r["f_index"]) for r in rows] != expect:
            raise CatalogError(f"{csv_path}: sidecar disagrees with the graph6 file")
    return cat


@lru_cache(maxsize=None)
def _memory_catalog(n: int) -> Catalog:
    return build_catalog(n)


def get_catalog(n: int, cache_dir: Optional[Path] = None) -> Catalog:
    """Catalog for ``n``, memoized in process and optionally persisted under ``cache_dir``."""
    if cache_dir is None:
        return _memory_catalog(n)
    g6_path, _ = catalog_paths(cache_dir, n)
    if g6_path.exists():
        try:
            return load_catalog(g6_path, n)
        except CatalogError as exc:
            log.warning("discarding cached catalog: %s", exc)
    cat = _memory_catalog(n)
    save_catalog(cat, g6_path)
    return cat
