"""Simple connected graphs with canonical edge indexing.

Edges are stored as ``(u, v)`` pairs with ``u < v`` and sorted
lexicographically, so the index of an edge is reproducible from the edge
set alone.  Edge subsets throughout the package are Python ints used as
bitmasks over these indices.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_GRAPH6_VERTICES = 62


class GraphError(ValueError):
    """Invalid graph: loop, multi-edge, disconnected, out-of-range vertex."""


class ParseError(ValueError):
    """Malformed input text."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    conflict: tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 1:
            raise GraphError("graph must have at least one vertex")
        seen: set[tuple[int, int]] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        ordered = tuple(sorted(seen))

        adj: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(ordered):
            adj[u].append(i)
            adj[v].append(i)
        incident = [0] * n
        for x in range(n):
            for i in adj[x]:
                incident[x] |= 1 << i
        conflict = tuple(
            (incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(ordered)
        )
        g = cls(n, ordered, tuple(tuple(a) for a in adj), conflict)
        if not g._connected():
            raise GraphError("graph is disconnected")
        return g

    def _connected(self) -> bool:
        seen = {0}
        todo = [0]
        while todo:
            x = todo.pop()
            for y in self.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == self.n

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.edges)) - 1

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adjacency)

    def neighbors(self, x: int) -> list[int]:
        out = []
        for i in self.adjacency[x]:
            u, v = self.edges[i]
            out.append(v if u == x else u)
        return out

    def edge_index(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        for i in self.adjacency[key[0]]:
            if self.edges[i] == key:
                return i
        raise KeyError(key)

    def incident_mask(self, x: int) -> int:
        mask = 0
        for i in self.adjacency[x]:
            mask |= 1 << i
        return mask

    def is_tree(self) -> bool:
        return self.m == self.n - 1

    def edges_of(self, mask: int) -> list[tuple[int, int]]:
        return [self.edges[i] for i in iter_bits(mask)]

    def mask_of(self, pairs: Iterable[Sequence[int]]) -> int:
        mask = 0
        for u, v in pairs:
            mask |= 1 << self.edge_index(u, v)
        return mask

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``x`` renamed ``perm[x]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def add_leaf(self, x: int) -> "Graph":
        return Graph.from_edges(self.n + 1, list(self.edges) + [(x, self.n)])

    def remove_edge(self, i: int) -> "Graph":
        return Graph.from_edges(self.n, [e for j, e in enumerate(self.edges) if j != i])


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


# ---------------------------------------------------------------------------
# constructions


@dataclass(frozen=True)
class CaterpillarSpec:
    d: tuple[int, ...]

    def __post_init__(self):
        if len(self.d) < 1:
            raise GraphError("caterpillar needs at least one spine vertex")
        if any(x < 0 for x in self.d):
            raise GraphError(f"negative entry in CAT{self.d}")

    def __str__(self):
        return "CAT(" + ",".join(str(x) for x in self.d) + ")"


def build_caterpillar(spec: CaterpillarSpec | Sequence[int]) -> Graph:
    """Caterpillar whose spine vertex ``x_i`` has degree ``d_i + 2``.

    Spine vertices are ``0..t-1``; leaves follow, grouped by spine vertex.
    The end vertices ``x_1`` and ``x_t`` carry ``d + 1`` leaves, inner ones
    ``d`` leaves.  A one-vertex spine gets ``d + 2`` leaves (a star).
    """
    if not isinstance(spec, CaterpillarSpec):
        spec = CaterpillarSpec(tuple(spec))
    d = spec.d
    t = len(d)
    edges = [(i, i + 1) for i in range(t - 1)]
    nxt = t
    for i, di in enumerate(d):
        spine_deg = (i > 0) + (i < t - 1)
        for _ in range(di + 2 - spine_deg):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def path_graph(k: int) -> Graph:
    """Path with ``k`` edges."""
    return Graph.from_edges(k + 1, [(i, i + 1) for i in range(k)])


def star_graph(k: int) -> Graph:
    """Star K_{1,k}."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def cycle_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def k6_with_pendants() -> Graph:
    """K6 on vertices 0..5 with a pendant edge ``(i, i + 6)`` at each."""
    clique = [(i, j) for i in range(6) for j in range(i + 1, 6)]
    return Graph.from_edges(12, clique + [(i, i + 6) for i in range(6)])


# ---------------------------------------------------------------------------
# structure


def distances_from(g: Graph, s: int) -> list[int]:
    dist = [-1] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        x = q.popleft()
        for y in g.neighbors(x):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def diameter(g: Graph) -> int:
    return max(max(distances_from(g, s)) for s in range(g.n))


def is_caterpillar(g: Graph) -> bool:
    """True iff g is a tree and deleting its leaves leaves a path (or nothing)."""
    if not g.is_tree():
        return False
    inner = [x for x in range(g.n) if g.degree(x) >= 2]
    inner_set = set(inner)
    for x in inner:
        if sum(1 for y in g.neighbors(x) if y in inner_set) > 2:
            return False
    return True


def graph_stats(g: Graph) -> dict:
    return {
        "max_degree": g.max_degree,
        "edge_count": g.m,
        "diameter": diameter(g),
        "is_tree": g.is_tree(),
        "is_caterpillar": is_caterpillar(g),
    }


def tree_centers(g: Graph) -> list[int]:
    deg = [g.degree(x) for x in range(g.n)]
    layer = [x for x in range(g.n) if deg[x] <= 1]
    remaining = g.n
    removed = [False] * g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for x in layer:
            removed[x] = True
            for y in g.neighbors(x):
                if not removed[y]:
                    deg[y] -= 1
                    if deg[y] == 1:
                        nxt.append(y)
        layer = nxt
    return sorted(x for x in range(g.n) if not removed[x])


def _rooted_code(g: Graph, root: int) -> str:
    parent = {root: -1}
    order = [root]
    for x in order:
        for y in g.neighbors(x):
            if y not in parent:
                parent[y] = x
                order.append(y)
    codes: dict[int, list[str]] = {x: [] for x in order}
    out = {}
    for x in reversed(order):
        out[x] = "(" + "".join(sorted(codes[x])) + ")"
        if parent[x] >= 0:
            codes[parent[x]].append(out[x])
    return out[root]


def canonical_tree_code(g: Graph) -> str:
    """Center-rooted AHU parenthesis code; equal iff the trees are isomorphic."""
    if not g.is_tree():
        raise GraphError("canonical_tree_code needs a tree")
    return min(_rooted_code(g, c) for c in tree_centers(g))


def tree_from_code(code: str) -> Graph:
    """Inverse of the rooted parenthesis code (root gets vertex 0, BFS-free DFS order)."""
    edges = []
    stack: list[int] = []
    nxt = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], nxt))
            stack.append(nxt)
            nxt += 1
        elif ch == ")":
            stack.pop()
        else:
            raise ParseError(f"bad character {ch!r} in tree code")
    return Graph.from_edges(nxt, edges)


# ---------------------------------------------------------------------------
# formats


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_GRAPH6_VERTICES:
        raise GraphError(f"graph6 writer supports at most {MAX_GRAPH6_VERTICES} vertices")
    present = set(g.edges)
    bits = [1 if (i, j) in present else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise ParseError(f"graph6 string {s!r} has characters outside 63..126")
    n = ord(s[0]) - 63
    if n > MAX_GRAPH6_VERTICES:
        raise ParseError(f"graph6 with more than {MAX_GRAPH6_VERTICES} vertices is not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    bits = []
    for c in body:
        val = ord(c) - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def from_edge_list(text: str) -> Graph:
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex in {raw!r}")
        edges.append((u, v))
        top = max(top, u, v)
    if not edges:
        raise ParseError("edge list is empty")
    return Graph.from_edges(top + 1, edges)


_CAT_RE = re.compile(r"^\s*CAT\s*\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\s*$")


def parse_cat(text: str) -> CaterpillarSpec:
    mt = _CAT_RE.match(text)
    if not mt:
        raise ParseError(f"not a CAT(d1,...,dt) string: {text!r}")
    return CaterpillarSpec(tuple(int(x) for x in mt.group(1).split(",")))


def to_cat(g: Graph) -> str:
    """CAT notation for a caterpillar built by :func:`build_caterpillar`."""
    if not is_caterpillar(g):
        raise GraphError("not a caterpillar")
    inner = [x for x in range(g.n) if g.degree(x) >= 2]
    if not inner:
        raise GraphError("a single edge has no spine")
    inner_set = set(inner)
    ends = [x for x in inner if sum(y in inner_set for y in g.neighbors(x)) <= 1]
    start = ends[0]
    spine = [start]
    prev = -1
    while True:
        nxt = [y for y in g.neighbors(spine[-1]) if y in inner_set and y != prev]
        if not nxt:
            break
        prev = spine[-1]
        spine.append(nxt[0])
    d = [g.degree(x) - 2 for x in spine]
    rev = d[::-1]
    return str(CaterpillarSpec(tuple(min(d, rev))))


FORMATS = ("graph6", "edge-list", "cat-notation")


def load_graph(text: str, format: str) -> Graph:
    if format == "graph6":
        return from_graph6(text)
    if format == "edge-list":
        return from_edge_list(text)
    if format == "cat-notation":
        return build_caterpillar(parse_cat(text))
    raise ParseError(f"unknown format {format!r}; expected one of {FORMATS}")


def serialize(g: Graph, format: str) -> str:
    if format == "graph6":
        return to_graph6(g)
    if format == "edge-list":
        return to_edge_list(g)
    if format == "cat-notation":
        return to_cat(g)
    raise ParseError(f"unknown format {format!r}; expected one of {FORMATS}")
