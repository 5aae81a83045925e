"""Bitset-backed simple graphs and edge colorings of complete graphs.

Vertex capacity is fixed at 128.  Adjacency rows are Python ints used as
bitsets; edge colors live in a flat triangular array indexed by
pair_index(u, v) = v*(v-1)//2 + u for u < v, i.e. the pairs in the order
(0,1), (0,2), (1,2), (0,3), ... — the same column-major order graph6 uses,
so one pair-order serves both serializers.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from . import targets as tg
from .targets import TargetGraph

MAX_VERTICES = 128
UNASSIGNED = -1


def pair_index(u: int, v: int) -> int:
    """Canonical index of the unordered pair {u, v}."""
    if u == v:
        raise ValueError("no self-pairs")
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def pair_iter(n: int) -> Iterable[tuple[int, int]]:
    """All pairs of range(n) in canonical pair order."""
    for v in range(1, n):
        for u in range(v):
            yield (u, v)


class SimpleGraph:
    """Undirected simple graph on n <= 128 vertices, adjacency as bitsets."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {n}")
        self.n = n
        self.adj = [0] * n
        for u, v in edges:
            self.add_edge(u, v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")

    def add_edge(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError("self-loops are not allowed")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for (u, v) in pair_iter(self.n) if self.adj[u] >> v & 1]

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def copy(self) -> "SimpleGraph":
        g = SimpleGraph.__new__(SimpleGraph)
        g.n = self.n
        g.adj = list(self.adj)
        return g

    def complement(self) -> "SimpleGraph":
        g = SimpleGraph(self.n)
        mask = (1 << self.n) - 1
        for v in range(self.n):
            g.adj[v] = mask & ~self.adj[v] & ~(1 << v)
        return g

    def delete_vertex(self, v: int) -> "SimpleGraph":
        if self.n < 2:
            raise ValueError("cannot delete the last vertex")
        self._check_vertex(v)
        g = SimpleGraph(self.n - 1)
        low = (1 << v) - 1
        for w in range(self.n):
            if w == v:
                continue
            row = self.adj[w]
            row = (row & low) | ((row >> (v + 1)) << v)
            g.adj[w if w < v else w - 1] = row
        return g

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, tuple(self.adj)))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"


def _has_clique(g: SimpleGraph, k: int) -> bool:
    """Branch-and-bound clique search over candidate bitsets."""
    if k <= 1:
        return g.n >= k
    adj = g.adj

    def grow(cand: int, need: int) -> bool:
        if need == 0:
            return True
        if cand.bit_count() < need:
            return False
        while cand:
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            if cand.bit_count() + 1 < need:
                return False
            if grow(cand & adj[v], need - 1):
                return True
        return False

    return grow((1 << g.n) - 1, k)


def contains_target(g: SimpleGraph, t: TargetGraph) -> bool:
    """Subgraph (not induced) containment of a target-family graph."""
    adj = g.adj
    n = g.n
    if t.kind == tg.PATH3_KIND:
        return any(a.bit_count() >= 2 for a in adj)
    if t.kind == tg.CYCLE4_KIND:
        return any(
            (adj[u] & adj[v]).bit_count() >= 2 for u in range(n) for v in range(u + 1, n)
        )
    if t.kind == tg.CLIQUE:
        return n >= t.k and _has_clique(g, t.k)
    if t.kind == tg.STAR:
        return any(a.bit_count() >= t.k for a in adj)
    if t.kind == tg.BOOK:
        return any(
            (adj[u] & adj[v]).bit_count() >= t.k for (u, v) in g.edges()
        )
    if t.kind == tg.EMPTY:
        return n >= t.k
    if t.kind == tg.WITH_ISOLATED:
        return n >= t.vertex_count and contains_target(g, t.base)
    raise ValueError(f"unsupported target {t}")


def find_target_copy(g: SimpleGraph, t: TargetGraph) -> Optional[tuple[int, ...]]:
    """A concrete vertex tuple hosting a copy of t, or None.

    Brute-force injection search; used for counterexample reporting, not on
    the hot search path.
    """
    k = t.vertex_count
    if g.n < k:
        return None
    edges = tg.target_edges(t)

    def extend(assign: list[int], used: int) -> Optional[tuple[int, ...]]:
        i = len(assign)
        if i == k:
            return tuple(assign)
        for v in range(g.n):
            if used >> v & 1:
                continue
            ok = True
            for (a, b) in edges:
                if b == i and a < i and not (g.adj[assign[a]] >> v & 1):
                    ok = False
                    break
                if a == i and b < i and not (g.adj[assign[b]] >> v & 1):
                    ok = False
                    break
            if ok:
                assign.append(v)
                res = extend(assign, used | 1 << v)
                if res is not None:
                    return res
                assign.pop()
        return None

    return extend([], 0)


class EdgeColoring:
    """Edge coloring of K_n with c colors; may be partial during search."""

    __slots__ = ("n", "c", "colors")

    def __init__(self, n: int, c: int, colors: Optional[Sequence[int]] = None):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {n}")
        if c < 1:
            raise ValueError(f"color count must be >= 1, got {c}")
        self.n = n
        self.c = c
        npairs = n * (n - 1) // 2
        if colors is None:
            self.colors = [UNASSIGNED] * npairs
        else:
            colors = list(colors)
            if len(colors) != npairs:
                raise ValueError(f"expected {npairs} pair colors, got {len(colors)}")
            for col in colors:
                if col != UNASSIGNED and not 0 <= col < c:
                    raise ValueError(f"color {col} out of range for c={c}")
            self.colors = colors

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")

    def _check_color(self, i: int) -> None:
        if not 0 <= i < self.c:
            raise IndexError(f"color {i} out of range for c={self.c}")

    def get(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        return self.colors[pair_index(u, v)]

    def set(self, u: int, v: int, color: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if color != UNASSIGNED:
            self._check_color(color)
        self.colors[pair_index(u, v)] = color

    def is_complete(self) -> bool:
        return UNASSIGNED not in self.colors

    def copy(self) -> "EdgeColoring":
        return EdgeColoring(self.n, self.c, list(self.colors))

    def color_class(self, i: int) -> SimpleGraph:
        self._check_color(i)
        g = SimpleGraph(self.n)
        for (u, v) in pair_iter(self.n):
            if self.colors[pair_index(u, v)] == i:
                g.add_edge(u, v)
        return g

    def degree(self, color: int, v: int) -> int:
        """Number of assigned edges at v with the given color."""
        self._check_color(color)
        self._check_vertex(v)
        return sum(
            1
            for w in range(self.n)
            if w != v and self.colors[pair_index(v, w)] == color
        )

    def delete_vertex(self, v: int) -> "EdgeColoring":
        if self.n < 2:
            raise ValueError("cannot delete the last vertex")
        self._check_vertex(v)
        out = EdgeColoring(self.n - 1, self.c)
        for (a, b) in pair_iter(self.n):
            if a == v or b == v:
                continue
            na = a if a < v else a - 1
            nb = b if b < v else b - 1
            out.colors[pair_index(na, nb)] = self.colors[pair_index(a, b)]
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EdgeColoring)
            and self.n == other.n
            and self.c == other.c
            and self.colors == other.colors
        )

    def __hash__(self):
        return hash((self.n, self.c, tuple(self.colors)))

    def __repr__(self):
        done = "complete" if self.is_complete() else "partial"
        return f"EdgeColoring(n={self.n}, c={self.c}, {done})"


def degree(coloring: EdgeColoring, color: int, v: int) -> int:
    return coloring.degree(color, v)


def delete_vertex(coloring: EdgeColoring, v: int) -> EdgeColoring:
    return coloring.delete_vertex(v)


class IncompleteColoringError(ValueError):
    pass


def is_good_coloring(coloring: EdgeColoring, target_list: Sequence[TargetGraph]) -> bool:
    """True iff no color class contains its target (an (H_1,...,H_c)-coloring)."""
    if len(target_list) != coloring.c:
        raise ValueError(
            f"need {coloring.c} targets (one per color), got {len(target_list)}"
        )
    if not coloring.is_complete():
        raise IncompleteColoringError("coloring is partial; goodness undefined")
    return all(
        not contains_target(coloring.color_class(i), t)
        for i, t in enumerate(target_list)
    )


# ---------------------------------------------------------------------------
# graph6 serialization


class Graph6Error(ValueError):
    pass


def _g6_pack(bits: list[int]) -> str:
    out = []
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def graph6_encode(g: SimpleGraph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = chr(126) + _g6_pack([(n >> (17 - i)) & 1 for i in range(18)])
    bits = [1 if g.adj[u] >> v & 1 else 0 for (u, v) in pair_iter(n)]
    return head + _g6_pack(bits)


def graph6_decode(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 byte {ch!r}")
    if ord(s[0]) == 126:
        if len(s) < 4 or ord(s[1]) == 126:
            raise Graph6Error("unsupported graph6 size encoding")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"graph order {n} outside supported range [1, {MAX_VERTICES}]")
    npairs = n * (n - 1) // 2
    expected = (npairs + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"expected {expected} body bytes for n={n}, got {len(body)}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - i)) & 1 for i in range(6))
    if any(bits[npairs:]):
        raise Graph6Error("nonzero padding bits")
    g = SimpleGraph(n)
    for bit, (u, v) in zip(bits, pair_iter(n)):
        if bit:
            g.add_edge(u, v)
    return g


# ---------------------------------------------------------------------------
# Coloring text format: line 1 "N c", then "u v color" per pair in canonical
# order ('-' for unassigned); '#' starts a comment.


def coloring_to_text(coloring: EdgeColoring) -> str:
    lines = [f"{coloring.n} {coloring.c}"]
    for (u, v) in pair_iter(coloring.n):
        col = coloring.colors[pair_index(u, v)]
        lines.append(f"{u} {v} {col if col != UNASSIGNED else '-'}")
    return "\n".join(lines) + "\n"


def coloring_from_text(text: str) -> EdgeColoring:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty coloring document")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header {rows[0]!r}; expected 'N c'")
    n, c = int(head[0]), int(head[1])
    coloring = EdgeColoring(n, c)
    seen = set()
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"bad pair line {line!r}; expected 'u v color'")
        u, v = int(parts[0]), int(parts[1])
        idx = pair_index(u, v)
        if idx in seen:
            raise ValueError(f"duplicate pair {u} {v}")
        seen.add(idx)
        col = UNASSIGNED if parts[2] == "-" else int(parts[2])
        coloring.set(u, v, col)
    return coloring
