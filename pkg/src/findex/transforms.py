"""Executable F-index-monotone graph rewrites.

Each kind has a site finder, a rewrite, and a closed-form prediction of
``F(result) - F(input)``:

A      move all leaves of a stem ``v`` onto its only non-leaf neighbor ``u``
B      move all leaves of stem ``u`` onto stem ``v``
C      at ``x`` with two pendant paths, detach arm ``a`` and hang it from the end of arm ``b``
D      detach the pendant path at ``u`` (first vertex ``u1``) and hang it from ``v``,
       or from the end of ``v``'s pendant path starting at ``v1``
E      replace the leaves of the single stem ``u`` of a cycle-plus-leaves graph by one path
F      as E but split the leaves into two paths of lengths ``s`` and ``t``
slide  drop cycle edge ``u1 u2`` and join ``u2`` to a leaf ``v1`` hanging below ``u1``
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Optional

from findex.graph import Graph, GraphError, is_connected, is_unicyclic, two_core
from findex.indices import f_index


class TransformError(ValueError):
    pass


class StaleSiteError(TransformError):
    """The site does not describe an applicable rewrite of this graph."""


class Kind(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    SLIDE = "slide"

    def __str__(self) -> str:
        return self.value


ROLES: dict[Kind, tuple[str, ...]] = {
    Kind.A: ("v", "u"),
    Kind.B: ("u", "v"),
    Kind.C: ("x", "a", "b"),
    Kind.D: ("u", "u1", "v", "v1"),
    Kind.E: ("u",),
    Kind.F: ("u", "s", "t"),
    Kind.SLIDE: ("u1", "u2", "v1"),
}

_UNICYCLIC_ONLY = (Kind.E, Kind.F, Kind.SLIDE)


def parse_kind(text: str) -> Kind:
    t = text.strip()
    if t.lower() in ("edgeslide", "edge-slide"):
        return Kind.SLIDE
    for k in Kind:
        if t == k.value or t.lower() in (k.value.lower(), k.name.lower()):
            return k
    raise TransformError(f"unknown transformation kind {text!r}; expected A..F or slide")


@dataclass(frozen=True, order=True)
class Site:
    kind: Kind
    anchors: tuple[tuple[str, int], ...]

    def __getitem__(self, role: str) -> int:
        for name, val in self.anchors:
            if name == role:
                return val
        raise KeyError(role)

    def get(self, role: str, default=None):
        try:
            return self[role]
        except KeyError:
            return default

    def __str__(self) -> str:
        return f"{self.kind}:" + ",".join(f"{k}={v}" for k, v in self.anchors)


def make_site(kind: Kind, **roles: Optional[int]) -> Site:
    return Site(kind, tuple((r, roles[r]) for r in ROLES[kind]
                            if roles.get(r) is not None))


_SITE_RE = re.compile(r"^\s*([A-Za-z]+)\s*:\s*(.*)$")


def parse_site(text: str, kind: Optional[Kind] = None) -> Site:
    """Parse ``KIND:role=int,...``; the ``KIND:`` prefix is optional when ``kind`` is given."""
    m = _SITE_RE.match(text)
    if m:
        kind = parse_kind(m.group(1))
        body = m.group(2)
    elif kind is not None:
        body = text
    else:
        raise TransformError(f"cannot parse site {text!r}; expected KIND:role=int,...")
    roles: dict[str, int] = {}
    for part in filter(None, (p.strip() for p in body.split(","))):
        key, eq, val = part.partition("=")
        if not eq or key.strip() not in ROLES[kind]:
            raise TransformError(
                f"bad site field {part!r}; {kind} roles are {', '.join(ROLES[kind])}")
        try:
            roles[key.strip()] = int(val)
        except ValueError:
            raise TransformError(f"site field {part!r} is not an integer") from None
    return make_site(kind, **roles)


@dataclass(frozen=True)
class TransformOutcome:
    site: Site
    result: Graph
    f_before: int
    f_after: int
    predicted_delta: int

    @property
    def measured_delta(self) -> int:
        return self.f_after - self.f_before


def _arm(g: Graph, x: int, y: int) -> Optional[list[int]]:
    """The pendant path ``y, ...`` hanging from ``x`` through ``y``, or None."""
    path = [y]
    prev, cur = x, y
    while g.degree(cur) == 2:
        a, b = g.adj[cur]
        nxt = b if a == prev else a
        if nxt == x or nxt in path:
            return None
        path.append(nxt)
        prev, cur = cur, nxt
    return path if g.degree(cur) == 1 else None


def _arms(g: Graph, x: int) -> list[list[int]]:
    out = []
    for y in g.adj[x]:
        arm = _arm(g, x, y)
        if arm is not None:
            out.append(arm)
    return out


def _star_leaves(g: Graph) -> Optional[tuple[int, list[int]]]:
    """(u, leaves) when every non-cycle vertex is a leaf on the one cycle vertex u."""
    core = two_core(g)
    outside = [v for v in range(g.n) if v not in core]
    if not outside:
        return None
    u = g.adj[outside[0]][0]
    if u in core and all(g.adj[w] == (u,) for w in outside):
        return u, outside
    return None


def _sites_a(g: Graph) -> list[Site]:
    out = []
    for v in range(g.n):
        leaves = g.leaves_of(v)
        others = [w for w in g.adj[v] if g.degree(w) != 1]
        if leaves and len(others) == 1 and g.degree(others[0]) >= 2:
            out.append(make_site(Kind.A, v=v, u=others[0]))
    return out


def _stems(g: Graph) -> list[int]:
    return [v for v in range(g.n)
            if g.leaves_of(v) and len(g.leaves_of(v)) < g.degree(v)]


def _sites_b(g: Graph) -> list[Site]:
    stems = _stems(g)
    return [make_site(Kind.B, u=u, v=v) for u in stems for v in stems if u != v]


def _sites_c(g: Graph) -> list[Site]:
    out = []
    for x in range(g.n):
        if g.degree(x) < 3:
            continue
        arms = _arms(g, x)
        for a in arms:
            for b in arms:
                if a is not b:
                    out.append(make_site(Kind.C, x=x, a=a[0], b=b[0]))
    return out


def _sites_d(g: Graph) -> list[Site]:
    out = []
    for u in range(g.n):
        du = g.degree(u) - 1
        if du < 2:
            continue
        for arm_u in _arms(g, u):
            blocked = set(arm_u) | {u}
            for v in range(g.n):
                if v in blocked:
                    continue
                if 1 < g.degree(v) <= du:
                    out.append(make_site(Kind.D, u=u, u1=arm_u[0], v=v))
                dv = g.degree(v) - 1
                if 1 < dv <= du:
                    for arm_v in _arms(g, v):
                        out.append(make_site(Kind.D, u=u, u1=arm_u[0], v=v, v1=arm_v[0]))
    return out


def _sites_e(g: Graph) -> list[Site]:
    found = _star_leaves(g)
    return [make_site(Kind.E, u=found[0])] if found else []


def _sites_f(g: Graph) -> list[Site]:
    found = _star_leaves(g)
    if not found:
        return []
    u, leaves = found
    m = len(leaves)
    if m < 3:
        return []
    return [make_site(Kind.F, u=u, s=s, t=m - s) for s in range(1, m // 2 + 1)]


def _hanging(g: Graph, root: int, core: set[int]) -> list[int]:
    """Vertices of the trees hanging from cycle vertex ``root``."""
    seen = {root}
    stack = [w for w in g.adj[root] if w not in core]
    seen.update(stack)
    out = []
    while stack:
        v = stack.pop()
        out.append(v)
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return out


def _sites_slide(g: Graph) -> list[Site]:
    core = two_core(g)
    out = []
    for u1 in sorted(core):
        if g.degree(u1) < 3:
            continue
        tips = sorted(v for v in _hanging(g, u1, core) if g.degree(v) == 1)
        for u2 in (w for w in g.adj[u1] if w in core):
            for v1 in tips:
                out.append(make_site(Kind.SLIDE, u1=u1, u2=u2, v1=v1))
    return out


_FINDERS = {
    Kind.A: _sites_a, Kind.B: _sites_b, Kind.C: _sites_c, Kind.D: _sites_d,
    Kind.E: _sites_e, Kind.F: _sites_f, Kind.SLIDE: _sites_slide,
}


def applicable_sites(g: Graph, kind: Kind) -> list[Site]:
    """Every site where ``kind`` applies to ``g``, sorted."""
    kind = Kind(kind)
    if kind in _UNICYCLIC_ONLY:
        if not is_unicyclic(g):
            raise TransformError(f"transformation {kind} needs a unicyclic graph")
    elif not is_connected(g):
        raise TransformError(f"transformation {kind} needs a connected graph")
    return sorted(_FINDERS[kind](g))


def _rewrite(g: Graph, site: Site) -> tuple[Graph, int]:
    """Rewritten graph and the closed-form delta, without applicability checks."""
    k = site.kind
    deg = g.degree
    if k is Kind.A:
        v, u = site["v"], site["u"]
        ws = g.leaves_of(v)
        s, du = len(ws), deg(u)
        res = g.rewire([(v, w) for w in ws], [(u, w) for w in ws])
        return res, 3 * s * (du - 1) * (du + s + 1)
    if k is Kind.B:
        u, v = site["u"], site["v"]
        ws = g.leaves_of(u)
        s, du, dv = len(ws), deg(u), deg(v)
        res = g.rewire([(u, w) for w in ws], [(v, w) for w in ws])
        return res, 3 * s * (du + dv) * (dv - du + s)
    if k is Kind.C:
        x, a, b = site["x"], site["a"], site["b"]
        end = _arm(g, x, b)[-1]
        d = deg(x)
        return g.rewire([(x, a)], [(a, end)]), -(3 * d * d - 3 * d - 6)
    if k is Kind.D:
        u, u1, v, v1 = site["u"], site["u1"], site["v"], site.get("v1")
        du = deg(u) - 1
        if v1 is None:
            dv = deg(v)
            return g.rewire([(u, u1)], [(v, u1)]), -3 * (du - dv) * (du + dv + 1)
        end = _arm(g, v, v1)[-1]
        return g.rewire([(u, u1)], [(end, u1)]), -(3 * du * du + 3 * du - 6)
    if k in (Kind.E, Kind.F):
        u = site["u"]
        leaves = sorted(g.leaves_of(u))
        m = len(leaves)
        lengths = [m] if k is Kind.E else [site["s"], site["t"]]
        remove, add = [], []
        pos = 0
        for ln in lengths:
            chain = leaves[pos:pos + ln]
            pos += ln
            for prev, w in zip(chain, chain[1:]):
                remove.append((u, w))
                add.append((prev, w))
        const = 12 if k is Kind.E else 42
        return g.rewire(remove, add), -(m ** 3 + 6 * m * m + 5 * m - const)
    if k is Kind.SLIDE:
        u1, u2, v1 = site["u1"], site["u2"], site["v1"]
        d1, dv = deg(u1), deg(v1)
        return g.rewire([(u1, u2)], [(u2, v1)]), -3 * (d1 + dv) * (d1 - dv - 1)
    raise TransformError(f"unknown kind {k!r}")


def _outcome(g: Graph, site: Site, f_before: Optional[int] = None) -> TransformOutcome:
    res, predicted = _rewrite(g, site)
    before = f_index(g) if f_before is None else f_before
    return TransformOutcome(site, res, before, f_index(res), predicted)


def apply(g: Graph, site: Site) -> TransformOutcome:
    """Apply ``site`` to ``g``; the site must be one :func:`applicable_sites` reports."""
    try:
        ok = site in applicable_sites(g, site.kind)
    except (GraphError, IndexError):
        ok = False
    if not ok:
        raise StaleSiteError(f"site {site} does not apply to this graph")
    return _outcome(g, site)


def apply_b(g: Graph, u: int, v: int) -> tuple[TransformOutcome, TransformOutcome]:
    """Both leaf migrations: ``u``'s leaves to ``v``, and ``v``'s leaves to ``u``."""
    if u == v:
        raise TransformError("transformation B needs two distinct vertices")
    for w in (u, v):
        if not 0 <= w < g.n or not g.leaves_of(w):
            raise TransformError(f"vertex {w} carries no leaf")
    return (apply(g, make_site(Kind.B, u=u, v=v)),
            apply(g, make_site(Kind.B, u=v, v=u)))


def normalization_path(g: Graph) -> list[TransformOutcome]:
    """The A-then-B steps taken by :func:`normalize_to_star_cycle`.

    A is applied at its first site while any exists. Then B is applied to
    the first pair of stems in the direction of larger delta; on an exact
    tie the leaves move to the lower-indexed vertex.
    """
    if not is_unicyclic(g):
        raise TransformError("normalization needs a unicyclic graph")
    steps: list[TransformOutcome] = []
    cur = g
    while True:
        sites = _sites_a(cur)
        if sites:
            step = _outcome(cur, min(sites))
        else:
            stems = _stems(cur)
            if len(stems) < 2:
                return steps
            u, v = stems[0], stems[1]
            fwd = _outcome(cur, make_site(Kind.B, u=v, v=u))  # leaves move to u
            back = _outcome(cur, make_site(Kind.B, u=u, v=v))
            step = fwd if fwd.measured_delta >= back.measured_delta else back
        steps.append(step)
        cur = step.result


def normalize_to_star_cycle(g: Graph) -> Graph:
    """Rewrite ``g`` with F-increasing A and B steps until no step applies.

    The fixpoint is a cycle with all remaining vertices as leaves on a single
    cycle vertex, isomorphic to ``Gk1(n, girth)``; a bare cycle is returned
    unchanged.
    """
    steps = normalization_path(g)
    return steps[-1].result if steps else g
