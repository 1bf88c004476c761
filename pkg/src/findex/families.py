"""Named parametric unicyclic families, their constructors and closed-form F-values.

Text form of a family member is ``Tag(name=value,...)``, e.g. ``Gk1(n=9,k=3)``.

===========  ===========  ==================================================
tag          parameters   graph
===========  ===========  ==================================================
Cycle        n            C_n
Path         n            P_n
Star         n            K_{1,n-1}
Gk1          n, k         C_k with n-k leaves on one cycle vertex
Gk2          n, k         C_k, n-k-1 leaves on u, one leaf on a neighbor of u
Spqr         p, q, r      triangle with p, q, r leaves on its vertices
Rijkl        i, j, k, l   Spqr(i, j, k) plus l leaves on one leaf of the k-star
Rkl          k, l         Rijkl(0, 0, k, l)
G33          n            Spqr(n-5, 2, 0)
G34          n            Spqr(n-5, 1, 1)
G43          n            C_4, n-5 leaves on u, one leaf opposite u
G41prime     n            Gk1(n-1, 4) with one leaf extended by a leaf
Lollipop     n, k         C_k joined to an end of P_{n-k}
===========  ===========  ==================================================

G_{4,2} has no tag of its own; it is ``Gk2(n, 4)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional

from findex.canon import canonical_certificate
from findex.graph import MAX_VERTICES, Graph, cycle_graph, make_graph, path_graph, star_graph


class FamilyError(ValueError):
    pass


class UnknownFamilyError(FamilyError):
    pass


class FamilySyntaxError(FamilyError):
    pass


class FamilyParamError(FamilyError):
    pass


PARAMS: dict[str, tuple[str, ...]] = {
    "Cycle": ("n",),
    "Path": ("n",),
    "Star": ("n",),
    "Gk1": ("n", "k"),
    "Gk2": ("n", "k"),
    "Spqr": ("p", "q", "r"),
    "Rijkl": ("i", "j", "k", "l"),
    "Rkl": ("k", "l"),
    "G33": ("n",),
    "G34": ("n",),
    "G43": ("n",),
    "G41prime": ("n",),
    "Lollipop": ("n", "k"),
}

UNICYCLIC_TAGS = tuple(t for t in PARAMS if t not in ("Path", "Star"))


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    args: tuple[int, ...]

    def __post_init__(self):
        if self.tag not in PARAMS:
            raise UnknownFamilyError(
                f"unknown family {self.tag!r}; known: {', '.join(PARAMS)}")
        if len(self.args) != len(PARAMS[self.tag]):
            raise FamilySyntaxError(
                f"{self.tag} takes parameters {PARAMS[self.tag]}, got {self.args}")

    def __getattr__(self, name: str) -> int:
        names = PARAMS.get(self.__dict__.get("tag", ""), ())
        if name in names:
            return self.args[names.index(name)]
        raise AttributeError(name)

    @property
    def n(self) -> int:
        if "n" in PARAMS[self.tag]:
            return self.args[0]
        return sum(self.args) + 3

    def __str__(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in zip(PARAMS[self.tag], self.args))
        return f"{self.tag}({inner})"


def spec(tag: str, *args: int) -> FamilySpec:
    return FamilySpec(tag, tuple(args))


_SPEC_RE = re.compile(r"^\s*([A-Za-z][A-Za-z0-9_]*)\s*\((.*)\)\s*$")
GRAMMAR = "Tag(name=int,...), e.g. Gk1(n=9,k=3); tags: " + ", ".join(
    f"{t}({','.join(p)})" for t, p in PARAMS.items())


def parse_spec(text: str, partial: bool = False) -> FamilySpec | tuple[str, dict[str, int]]:
    """Parse the text form.

    With ``partial=True`` a bare tag or a subset of parameters is accepted
    and ``(tag, fixed_params)`` is returned instead of a spec.
    """
    text = text.strip()
    m = _SPEC_RE.match(text)
    if m is None:
        if partial and re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", text):
            tag, body = text, ""
        else:
            raise FamilySyntaxError(f"cannot parse {text!r}; expected {GRAMMAR}")
    else:
        tag, body = m.group(1), m.group(2)
    if tag not in PARAMS:
        raise UnknownFamilyError(f"unknown family {tag!r}; expected {GRAMMAR}")
    names = PARAMS[tag]
    values: dict[str, int] = {}
    parts = [p.strip() for p in body.split(",")] if body.strip() else []
    for pos, part in enumerate(parts):
        if "=" in part:
            key, _, val = part.partition("=")
            key = key.strip()
        else:
            if pos >= len(names):
                raise FamilySyntaxError(f"too many parameters in {text!r}")
            key, val = names[pos], part
        if key not in names:
            raise FamilySyntaxError(f"{tag} has no parameter {key!r}; expected {GRAMMAR}")
        try:
            values[key] = int(val)
        except ValueError:
            raise FamilySyntaxError(f"parameter {key}={val.strip()!r} is not an integer") from None
    if partial:
        return tag, values
    missing = [k for k in names if k not in values]
    if missing:
        raise FamilySyntaxError(f"{tag} is missing {', '.join(missing)}; expected {GRAMMAR}")
    return FamilySpec(tag, tuple(values[k] for k in names))


def _require(cond: bool, s: FamilySpec, what: str) -> None:
    if not cond:
        raise FamilyParamError(f"{s}: requires {what}")


def validate(s: FamilySpec) -> None:
    """Raise :class:`FamilyParamError` naming the first violated constraint."""
    a = dict(zip(PARAMS[s.tag], s.args))
    for k, v in a.items():
        _require(v >= 0, s, f"{k} >= 0")
    t = s.tag
    if t == "Cycle":
        _require(a["n"] >= 3, s, "n >= 3")
    elif t in ("Path", "Star"):
        _require(a["n"] >= 1, s, "n >= 1")
    elif t == "Gk1":
        _require(a["k"] >= 3, s, "k >= 3")
        _require(a["n"] - a["k"] >= 1, s, "n - k >= 1")
    elif t == "Gk2":
        _require(a["k"] >= 3, s, "k >= 3")
        _require(a["n"] - a["k"] >= 2, s, "n - k >= 2")
    elif t in ("Rijkl", "Rkl"):
        _require(a["k"] >= 1, s, "k >= 1")
        _require(a["l"] >= 1, s, "l >= 1")
    elif t in ("G33", "G34"):
        _require(a["n"] >= 5, s, "n >= 5")
    elif t in ("G43", "G41prime"):
        _require(a["n"] >= 6, s, "n >= 6")
    elif t == "Lollipop":
        _require(a["k"] >= 3, s, "k >= 3")
        _require(a["k"] <= a["n"] - 1, s, "k <= n - 1")
    _require(s.n <= MAX_VERTICES, s, f"n <= {MAX_VERTICES}")


def _cycle_with_leaves(n: int, k: int, leaves: list[int]) -> Graph:
    """C_k on 0..k-1 with ``leaves[i]`` leaves hung on cycle vertex i."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    nxt = k
    for i, cnt in enumerate(leaves):
        for _ in range(cnt):
            edges.append((i, nxt))
            nxt += 1
    assert nxt == n
    return make_graph(n, edges)


def _rijkl(i: int, j: int, k: int, l: int) -> Graph:
    n = i + j + k + l + 3
    edges = [(0, 1), (1, 2), (2, 0)]
    nxt = 3
    for center, cnt in ((0, i), (1, j), (2, k)):
        for _ in range(cnt):
            edges.append((center, nxt))
            nxt += 1
    hub = 3 + i + j  # first leaf of the k-star
    for _ in range(l):
        edges.append((hub, nxt))
        nxt += 1
    return make_graph(n, edges)


def build(s: FamilySpec) -> Graph:
    validate(s)
    t, a = s.tag, s.args
    if t == "Cycle":
        return cycle_graph(a[0])
    if t == "Path":
        return path_graph(a[0])
    if t == "Star":
        return star_graph(a[0])
    if t == "Gk1":
        n, k = a
        return _cycle_with_leaves(n, k, [n - k])
    if t == "Gk2":
        n, k = a
        return _cycle_with_leaves(n, k, [n - k - 1, 1])
    if t == "Spqr":
        return _cycle_with_leaves(s.n, 3, list(a))
    if t == "Rijkl":
        return _rijkl(*a)
    if t == "Rkl":
        return _rijkl(0, 0, *a)
    if t == "G33":
        return _cycle_with_leaves(a[0], 3, [a[0] - 5, 2, 0])
    if t == "G34":
        return _cycle_with_leaves(a[0], 3, [a[0] - 5, 1, 1])
    if t == "G43":
        return _cycle_with_leaves(a[0], 4, [a[0] - 5, 0, 1, 0])
    if t == "G41prime":
        n = a[0]
        g = _cycle_with_leaves(n - 1, 4, [n - 5])
        return make_graph(n, g.edges() + [(4, n - 1)])
    if t == "Lollipop":
        n, k = a
        edges = [(i, (i + 1) % k) for i in range(k)]
        edges += [(i, i + 1) for i in range(k - 1, n - 1)]
        return make_graph(n, edges)
    raise UnknownFamilyError(t)


# Closed forms, derived by counting degrees in the constructions above.
def _path_f(n: int) -> int:
    return {1: 0, 2: 2}.get(n, 8 * (n - 2) + 2)


def _star_f(n: int) -> int:
    return {1: 0, 2: 2}.get(n, (n - 1) ** 3 + (n - 1))


def _r_f(i: int, j: int, k: int, l: int) -> int:
    n = i + j + k + l + 3
    return (i + 2) ** 3 + (j + 2) ** 3 + (k + 2) ** 3 + (l + 1) ** 3 + (n - 4)


DERIVED: dict[str, Callable[..., int]] = {
    "Cycle": lambda n: 8 * n,
    "Path": _path_f,
    "Star": _star_f,
    "Gk1": lambda n, k: (n - k + 2) ** 3 + 8 * (k - 1) + (n - k),
    "Gk2": lambda n, k: (n - k + 1) ** 3 + 27 + 8 * (k - 2) + (n - k),
    "Spqr": lambda p, q, r: (p + 2) ** 3 + (q + 2) ** 3 + (r + 2) ** 3 + p + q + r,
    "Rijkl": _r_f,
    "Rkl": lambda k, l: _r_f(0, 0, k, l),
    "G33": lambda n: n ** 3 - 9 * n ** 2 + 28 * n + 42,
    "G34": lambda n: n ** 3 - 9 * n ** 2 + 28 * n + 24,
    "G43": lambda n: n ** 3 - 9 * n ** 2 + 28 * n + 12,
    "G41prime": lambda n: n ** 3 - 9 * n ** 2 + 28 * n,
    "Lollipop": lambda n, k: 8 * n + 12,
}

DERIVED_TEXT: dict[str, str] = {
    "Cycle": "8n",
    "Path": "8(n-2)+2 (n>=3)",
    "Star": "(n-1)^3+(n-1) (n>=3)",
    "Gk1": "(n-k+2)^3+8(k-1)+(n-k)",
    "Gk2": "(n-k+1)^3+27+8(k-2)+(n-k)",
    "Spqr": "(p+2)^3+(q+2)^3+(r+2)^3+p+q+r",
    "Rijkl": "(i+2)^3+(j+2)^3+(k+2)^3+(l+1)^3+(n-4)",
    "Rkl": "(k+2)^3+16+(l+1)^3+(n-4)",
    "G33": "n^3-9n^2+28n+42",
    "G34": "n^3-9n^2+28n+24",
    "G43": "n^3-9n^2+28n+12",
    "G41prime": "n^3-9n^2+28n",
    "Lollipop": "8n+12",
}


@dataclass(frozen=True)
class PrintedFormula:
    applies: Callable[[FamilySpec], bool]
    value: Callable[[FamilySpec], int]
    text: str


# Values as printed in the source, where it prints one.
PRINTED: dict[str, PrintedFormula] = {
    "Gk2": PrintedFormula(lambda s: s.k == 3,
                          lambda s: s.n ** 3 - 6 * s.n ** 2 + 13 * s.n + 24,
                          "n^3-6n^2+13n+24 (k=3)"),
    "Gk1": PrintedFormula(lambda s: s.k == 4,
                          lambda s: 24 + (s.n - 2) ** 3 + (s.n - 4),
                          "2^3+2^3+2^3+(n-2)^3+(n-4) (k=4)"),
    "Rkl": PrintedFormula(lambda s: s.l == 1,
                          lambda s: s.n ** 3 - 6 * s.n ** 2 + 13 * s.n + 12,
                          "n^3-6n^2+13n+12 (l=1)"),
    "G33": PrintedFormula(lambda s: True,
                          lambda s: s.n ** 3 - 9 * s.n ** 2 + 28 * s.n + 43,
                          "n^3-9n^2+28n+43"),
    "G34": PrintedFormula(lambda s: True,
                          lambda s: s.n ** 3 - 9 * s.n ** 2 + 28 * s.n + 25,
                          "n^3-9n^2+28n+25"),
    "G43": PrintedFormula(lambda s: True,
                          lambda s: s.n ** 3 - 9 * s.n ** 2 + 28 * s.n + 12,
                          "n^3-9n^2+28n+12"),
    "Lollipop": PrintedFormula(lambda s: True, lambda s: 8 * s.n + 14, "8n+14"),
}


def closed_form_f(s: FamilySpec) -> int:
    """Exact F-value from the family's closed form; equals f_index(build(s))."""
    validate(s)
    return DERIVED[s.tag](*s.args)


def printed_f(s: FamilySpec) -> Optional[int]:
    p = PRINTED.get(s.tag)
    if p is None or not p.applies(s):
        return None
    return p.value(s)


@dataclass(frozen=True)
class Discrepancy:
    family: str
    derived: int
    printed: int
    derived_text: str
    printed_text: str

    def as_dict(self) -> dict:
        return {"kind": "constant-discrepancy", "family": self.family,
                "derived": self.derived, "printed": self.printed,
                "derived_formula": self.derived_text,
                "printed_formula": self.printed_text}


def discrepancy(s: FamilySpec) -> Optional[Discrepancy]:
    """Non-None when the printed closed form disagrees with the construction."""
    printed = printed_f(s)
    if printed is None:
        return None
    derived = closed_form_f(s)
    if printed == derived:
        return None
    return Discrepancy(str(s), derived, printed, DERIVED_TEXT[s.tag], PRINTED[s.tag].text)


# identify() prefers earlier entries when several names fit one graph.
_PRIORITY = ("Cycle", "Gk1", "Gk2", "Spqr", "Lollipop", "G43", "G41prime",
             "Rkl", "Rijkl", "G33", "G34")


def candidates(n: int) -> Iterator[FamilySpec]:
    """Every unicyclic family member on ``n`` vertices, one name per symmetric variant."""
    for tag in _PRIORITY:
        if tag == "Cycle" and n >= 3:
            yield spec(tag, n)
        elif tag in ("Gk1", "Lollipop"):
            for k in range(3, n):
                yield spec(tag, n, k)
        elif tag == "Gk2":
            for k in range(3, n - 1):
                yield spec(tag, n, k)
        elif tag == "Spqr":
            m = n - 3
            for p in range(m, -1, -1):
                for q in range(min(p, m - p), -1, -1):
                    r = m - p - q
                    if r <= q:
                        yield spec(tag, p, q, r)
        elif tag in ("G33", "G34") and n >= 5:
            yield spec(tag, n)
        elif tag in ("G43", "G41prime") and n >= 6:
            yield spec(tag, n)
        elif tag == "Rkl":
            for k in range(1, n - 3):
                yield spec(tag, k, n - 3 - k)
        elif tag == "Rijkl":
            m = n - 3
            for i in range(0, m + 1):
                for j in range(0, i + 1):
                    if i == 0 and j == 0:
                        continue
                    for k in range(1, m - i - j):
                        yield spec(tag, i, j, k, m - i - j - k)


@lru_cache(maxsize=None)
def _name_table(n: int) -> dict[bytes, tuple[FamilySpec, ...]]:
    table: dict[bytes, list[FamilySpec]] = {}
    for s in candidates(n):
        table.setdefault(canonical_certificate(build(s)), []).append(s)
    return {c: tuple(v) for c, v in table.items()}


def identify_all(g: Graph) -> tuple[FamilySpec, ...]:
    """All family names whose construction is isomorphic to ``g``."""
    if g.n < 3 or g.n > MAX_VERTICES:
        return ()
    return _name_table(g.n).get(canonical_certificate(g), ())


def identify(g: Graph) -> Optional[FamilySpec]:
    names = identify_all(g)
    return names[0] if names else None
