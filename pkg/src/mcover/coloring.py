"""Exact chromatic index, equalized colorings and the matching balancing exchange."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, iter_bits, popcount
from .matchings import is_matching


class PreconditionError(ValueError):
    pass


@dataclass
class ColorClasses:
    """A list of matchings (edge masks).

    In proper mode every edge lies in exactly one class; covers may share edges.
    """

    classes: list[int]
    proper: bool = False

    @property
    def covered(self) -> int:
        out = 0
        for c in self.classes:
            out |= c
        return out

    def sizes(self) -> list[int]:
        return [popcount(c) for c in self.classes]

    def validate(self, g: Graph) -> None:
        for c in self.classes:
            if not is_matching(g, c):
                raise PreconditionError(f"class {sorted(iter_bits(c))} is not a matching")
        if self.proper:
            seen = 0
            for c in self.classes:
                if seen & c:
                    raise PreconditionError("proper coloring has an edge in two classes")
                seen |= c
            if seen != g.full_mask:
                raise PreconditionError("proper coloring leaves edges uncolored")


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    side[0] = 0
    todo = [0]
    while todo:
        x = todo.pop()
        for y in g.neighbors(x):
            if side[y] < 0:
                side[y] = 1 - side[x]
                todo.append(y)
            elif side[y] == side[x]:
                return False
    return True


def edge_coloring(g: Graph, k: int) -> list[int] | None:
    """A proper edge coloring with at most ``k`` colors, or None if none exists.

    Backtracking over edges in saturation order; a new color may only be the
    lowest unused one.
    """
    nedges = g.m
    if nedges == 0:
        return []
    if g.max_degree > k:
        return None
    cap = g.n // 2
    if nedges > k * cap:
        return None

    color = [-1] * nedges
    vertex_used = [0] * g.n
    class_size = [0] * k
    edges = g.edges
    all_colors = (1 << k) - 1
    neighbours_of = [list(iter_bits(c)) for c in g.conflict]

    def pick():
        best = -1
        best_key = None
        for i in range(nedges):
            if color[i] >= 0:
                continue
            u, v = edges[i]
            used = vertex_used[u] | vertex_used[v]
            key = (popcount(used), len(neighbours_of[i]))
            if best_key is None or key > best_key:
                best, best_key = i, key
        return best

    def rec(done: int, opened: int) -> bool:
        if done == nedges:
            return True
        room = 0
        for c in range(opened):
            room += cap - class_size[c]
        room += (k - opened) * cap
        if room < nedges - done:
            return False
        i = pick()
        u, v = edges[i]
        free = all_colors & ~(vertex_used[u] | vertex_used[v])
        for c in iter_bits(free):
            if c > opened:
                break
            bit = 1 << c
            color[i] = c
            vertex_used[u] |= bit
            vertex_used[v] |= bit
            class_size[c] += 1
            if rec(done + 1, max(opened, c + 1)):
                return True
            class_size[c] -= 1
            vertex_used[u] &= ~bit
            vertex_used[v] &= ~bit
            color[i] = -1
        return False

    if not rec(0, 0):
        return None
    classes = [0] * k
    for i, c in enumerate(color):
        classes[c] |= 1 << i
    return classes


def proper_coloring(g: Graph) -> list[int]:
    """A proper coloring with exactly ``chromatic_index(g)`` classes (some may be empty only if g has no edges)."""
    delta = g.max_degree if g.m else 0
    for k in (delta, delta + 1):
        got = edge_coloring(g, k)
        if got is not None:
            return got
    raise AssertionError("Vizing bound violated")


def chromatic_index(g: Graph) -> int:
    """Exact chromatic index; Delta for bipartite graphs (trees included)."""
    if g.m == 0:
        return 0
    delta = g.max_degree
    if is_bipartite(g):
        return delta
    return delta if edge_coloring(g, delta) is not None else delta + 1


# ---------------------------------------------------------------------------
# balancing


def _alternating_components(g: Graph, a: int, b: int) -> list[int]:
    """Components (as edge masks) of the symmetric difference of matchings a and b."""
    diff = a ^ b
    comps = []
    rest = diff
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            grow = 0
            for i in iter_bits(frontier):
                grow |= g.conflict[i] & diff
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def exchange_once(g: Graph, small: int, large: int) -> tuple[int, int]:
    """Swap edges along an odd alternating path that starts and ends in ``large``.

    Among candidate components the lexicographically least (by sorted edge
    indices) is used.  Returns the new ``(small, large)``.
    """
    best = None
    for comp in _alternating_components(g, small, large):
        if popcount(comp & large) == popcount(comp & small) + 1:
            key = sorted(iter_bits(comp))
            if best is None or key < best[0]:
                best = (key, comp)
    if best is None:
        raise AssertionError("no odd alternating path between unequal matchings")
    comp = best[1]
    return (small & ~comp) | (comp & large), (large & ~comp) | (comp & small)


def balance_matchings(g: Graph, classes: ColorClasses | Sequence[int], m: int) -> list[int]:
    """Turn matchings with total size ``m * s`` covering E(G) into ``s`` matchings of size ``m``.

    Repeatedly pairs the smallest with the largest class (lowest index on
    ties) and exchanges along an odd alternating path.  The covered edge set
    never changes.
    """
    masks = list(classes.classes if isinstance(classes, ColorClasses) else classes)
    s = len(masks)
    for c in masks:
        if not is_matching(g, c):
            raise PreconditionError(f"class {sorted(iter_bits(c))} is not a matching")
    covered = 0
    for c in masks:
        covered |= c
    if covered != g.full_mask:
        raise PreconditionError("classes do not cover every edge")
    if sum(popcount(c) for c in masks) != m * s:
        raise PreconditionError(f"class sizes sum to {sum(popcount(c) for c in masks)}, expected {m * s}")

    def deviation():
        return sum(abs(popcount(c) - m) for c in masks)

    dev = deviation()
    while dev:
        sizes = [popcount(c) for c in masks]
        lo = min(range(s), key=lambda i: (sizes[i], i))
        hi = max(range(s), key=lambda i: (sizes[i], -i))
        masks[lo], masks[hi] = exchange_once(g, masks[lo], masks[hi])
        new_dev = deviation()
        assert new_dev < dev, "balancing exchange made no progress"
        dev = new_dev
    return masks


def equalize(g: Graph, classes: Sequence[int]) -> list[int]:
    """Balance a proper coloring until class sizes differ by at most one."""
    masks = list(classes)
    while masks:
        sizes = [popcount(c) for c in masks]
        lo = min(range(len(masks)), key=lambda i: (sizes[i], i))
        hi = max(range(len(masks)), key=lambda i: (sizes[i], -i))
        if sizes[hi] - sizes[lo] <= 1:
            break
        masks[lo], masks[hi] = exchange_once(g, masks[lo], masks[hi])
    return masks


def equalized_coloring(g: Graph) -> ColorClasses:
    out = ColorClasses(equalize(g, proper_coloring(g)), proper=True)
    return out
