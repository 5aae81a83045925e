"""Closed family of forbidden target graphs.

The family is: cliques K_k, the 4-cycle C4, stars K_{1,k} (written S<k>),
books B_k = K2 + kK1, edgeless graphs kK1, the path P3, and any of those
with extra isolated vertices (base + tK1).  The family is closed under
single-vertex deletion, which is what makes the recursive bound planner
total.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional

CLIQUE = "clique"
CYCLE4_KIND = "cycle4"
STAR = "star"
BOOK = "book"
EMPTY = "empty"
PATH3_KIND = "path3"
WITH_ISOLATED = "with_isolated"


@dataclass(frozen=True)
class TargetGraph:
    """One member of the forbidden-graph family.

    Use the factory functions (clique, star, ...) instead of constructing
    directly: they normalize degenerate forms (K1 = 1K1, nested isolated
    unions are flattened) so that structural equality is plain ==.
    """

    kind: str
    k: int = 0
    base: Optional["TargetGraph"] = None

    @property
    def vertex_count(self) -> int:
        if self.kind == CLIQUE:
            return self.k
        if self.kind == CYCLE4_KIND:
            return 4
        if self.kind == STAR:
            return self.k + 1
        if self.kind == BOOK:
            return self.k + 2
        if self.kind == EMPTY:
            return self.k
        if self.kind == PATH3_KIND:
            return 3
        if self.kind == WITH_ISOLATED:
            return self.base.vertex_count + self.k
        raise ValueError(f"unknown target kind {self.kind!r}")

    def __str__(self) -> str:
        return render_target(self)


CYCLE4 = TargetGraph(CYCLE4_KIND)
PATH3 = TargetGraph(PATH3_KIND)


def clique(k: int) -> TargetGraph:
    if k < 1:
        raise ValueError(f"clique size must be >= 1, got {k}")
    if k == 1:
        return empty_graph(1)
    return TargetGraph(CLIQUE, k)


def star(k: int) -> TargetGraph:
    if k < 1:
        raise ValueError(f"star K_{{1,k}} needs k >= 1, got {k}")
    return TargetGraph(STAR, k)


def book(k: int) -> TargetGraph:
    if k < 1:
        raise ValueError(f"book B_k needs k >= 1, got {k}")
    return TargetGraph(BOOK, k)


def empty_graph(k: int) -> TargetGraph:
    if k < 1:
        raise ValueError(f"kK1 needs k >= 1, got {k}")
    return TargetGraph(EMPTY, k)


def with_isolated(base: TargetGraph, t: int = 1) -> TargetGraph:
    if t < 1:
        raise ValueError(f"base + tK1 needs t >= 1, got {t}")
    # flatten: (b + sK1) + tK1 = b + (s+t)K1 ; kK1 + tK1 = (k+t)K1
    if base.kind == WITH_ISOLATED:
        return with_isolated(base.base, base.k + t)
    if base.kind == EMPTY:
        return empty_graph(base.k + t)
    return TargetGraph(WITH_ISOLATED, t, base)


def target_edges(t: TargetGraph) -> list[tuple[int, int]]:
    """Concrete edge list of t on vertices 0..vertex_count-1."""
    if t.kind == CLIQUE:
        return [(i, j) for j in range(t.k) for i in range(j)]
    if t.kind == CYCLE4_KIND:
        return [(0, 1), (1, 2), (2, 3), (0, 3)]
    if t.kind == STAR:
        return [(0, i) for i in range(1, t.k + 1)]
    if t.kind == BOOK:
        edges = [(0, 1)]
        for p in range(2, t.k + 2):
            edges += [(0, p), (1, p)]
        return edges
    if t.kind == EMPTY:
        return []
    if t.kind == PATH3_KIND:
        return [(0, 1), (1, 2)]
    if t.kind == WITH_ISOLATED:
        return target_edges(t.base)
    raise ValueError(f"unknown target kind {t.kind!r}")


def delete_options(t: TargetGraph) -> set[TargetGraph]:
    """All non-isomorphic results of deleting a single vertex from t."""
    if t.vertex_count < 2:
        raise ValueError(f"cannot delete a vertex from {t} (single vertex)")
    if t.kind == CLIQUE:
        return {clique(t.k - 1)}
    if t.kind == CYCLE4_KIND:
        return {PATH3}
    if t.kind == STAR:
        leaf = star(t.k - 1) if t.k >= 2 else empty_graph(1)
        return {leaf, empty_graph(t.k)}
    if t.kind == BOOK:
        page = book(t.k - 1) if t.k >= 2 else clique(2)
        return {star(t.k), page}
    if t.kind == EMPTY:
        return {empty_graph(t.k - 1)}
    if t.kind == PATH3_KIND:
        return {clique(2), empty_graph(2)}
    if t.kind == WITH_ISOLATED:
        opts = {with_isolated(b, t.k) for b in delete_options(t.base)}
        opts.add(t.base if t.k == 1 else with_isolated(t.base, t.k - 1))
        return opts
    raise ValueError(f"unknown target kind {t.kind!r}")


def render_target(t: TargetGraph) -> str:
    if t.kind == CLIQUE:
        return f"K{t.k}"
    if t.kind == CYCLE4_KIND:
        return "C4"
    if t.kind == STAR:
        return f"S{t.k}"
    if t.kind == BOOK:
        return f"B{t.k}"
    if t.kind == EMPTY:
        return f"{t.k}K1"
    if t.kind == PATH3_KIND:
        return "P3"
    if t.kind == WITH_ISOLATED:
        return f"{render_target(t.base)}+{t.k}K1"
    raise ValueError(f"unknown target kind {t.kind!r}")


class TargetParseError(ValueError):
    """Raised on malformed target expressions; carries the error position."""

    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_SIMPLE_RE = re.compile(r"(C4|P3|K(\d+)|S(\d+)|B(\d+)|(\d+)K1)$")


def _parse_simple(text: str, part: str, pos: int) -> TargetGraph:
    m = _SIMPLE_RE.match(part)
    if not m or m.group(0) != part:
        raise TargetParseError(text, pos, f"unsupported target {part!r}")
    if part == "C4":
        return CYCLE4
    if part == "P3":
        return PATH3
    if m.group(2) is not None:
        return clique(int(m.group(2)))
    if m.group(3) is not None:
        k = int(m.group(3))
        if k < 1:
            raise TargetParseError(text, pos, "star needs k >= 1")
        return star(k)
    if m.group(4) is not None:
        k = int(m.group(4))
        if k < 1:
            raise TargetParseError(text, pos, "book needs k >= 1")
        return book(k)
    return empty_graph(int(m.group(5)))


def parse_target(text: str) -> TargetGraph:
    """Parse one target expression, e.g. "K11", "B17", "K3+1K1"."""
    s = text.strip()
    if not s:
        raise TargetParseError(text, 0, "empty target expression")
    parts = s.split("+")
    pos = 0
    base = _parse_simple(text, parts[0].strip(), pos)
    pos += len(parts[0]) + 1
    result = base
    for part in parts[1:]:
        p = part.strip()
        m = re.fullmatch(r"(\d*)K1", p)
        if not m:
            raise TargetParseError(text, pos, f"expected <t>K1 after '+', got {p!r}")
        t = int(m.group(1)) if m.group(1) else 1
        if t < 1:
            raise TargetParseError(text, pos, "isolated-vertex count must be >= 1")
        result = with_isolated(result, t)
        pos += len(part) + 1
    return result


def _sort_key(t: TargetGraph) -> tuple:
    return (t.vertex_count, render_target(t))


@dataclass(frozen=True)
class TargetList:
    """Canonically ordered target list: C4 entries first, rest sorted.

    m is the count of leading C4 entries, n the count of the rest
    (the split the bound formulas operate on).
    """

    targets: tuple[TargetGraph, ...]

    def __post_init__(self):
        c4s = tuple(t for t in self.targets if t.kind == CYCLE4_KIND)
        rest = sorted((t for t in self.targets if t.kind != CYCLE4_KIND), key=_sort_key)
        object.__setattr__(self, "targets", c4s + tuple(rest))

    @property
    def m(self) -> int:
        return sum(1 for t in self.targets if t.kind == CYCLE4_KIND)

    @property
    def n(self) -> int:
        return len(self.targets) - self.m

    @property
    def others(self) -> tuple[TargetGraph, ...]:
        return self.targets[self.m:]

    def key(self) -> str:
        return ",".join(render_target(t) for t in self.targets)

    def __iter__(self) -> Iterator[TargetGraph]:
        return iter(self.targets)

    def __len__(self) -> int:
        return len(self.targets)

    def __str__(self) -> str:
        return self.key()

    def replace_other(self, i: int, new: TargetGraph) -> "TargetList":
        """New list with the i-th non-C4 entry replaced (re-canonicalized)."""
        others = list(self.others)
        others[i] = new
        return TargetList(self.targets[: self.m] + tuple(others))


def parse_targets(text: str) -> TargetList:
    return TargetList(tuple(parse_target(p) for p in text.split(",")))


def parse_target_sequence(text: str) -> list[TargetGraph]:
    """Parse a comma-separated target list preserving the given color order."""
    return [parse_target(p) for p in text.split(",")]


def union_k1_rewrite(targets: TargetList) -> tuple[TargetList, list[int]]:
    """Strip one isolated vertex from every non-C4 target.

    Applicable when every non-C4 entry has the shape H + 1K1 (and at least
    one C4 is present).  Returns the inner list (C4s, H_1, ..., H_n) and the
    vertex-count floors |V(H_i)| + 1; the bound for the original list is
    max(bound(inner), floors...).
    """
    if targets.m < 1:
        raise ValueError("union-with-K1 rewrite needs a leading C4")
    if targets.n < 1:
        raise ValueError("union-with-K1 rewrite needs at least one non-C4 target")
    inner: list[TargetGraph] = []
    floors: list[int] = []
    for t in targets.others:
        if t.kind == WITH_ISOLATED and t.k == 1:
            base = t.base
        elif t.kind == EMPTY and t.k >= 2:
            base = empty_graph(t.k - 1)
        else:
            raise ValueError(f"target {t} does not have the H+1K1 shape")
        inner.append(base)
        floors.append(base.vertex_count + 1)
    return TargetList(targets.targets[: targets.m] + tuple(inner)), floors


def strip_k2(targets: TargetList) -> tuple[TargetList, int]:
    """Drop K2 entries: a color that may not contain a single edge is unused,
    so the Ramsey number is unchanged.  Returns (stripped list, #dropped).
    Keeps the list nonempty."""
    kept = tuple(t for t in targets if not (t.kind == CLIQUE and t.k == 2))
    dropped = len(targets) - len(kept)
    if not kept:
        return targets, 0
    return TargetList(kept), dropped
