"""Fixed-size matchings as edge bitmasks."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, iter_bits, popcount


def is_matching(g: Graph, mask: int) -> bool:
    for i in iter_bits(mask):
        if g.conflict[i] & mask:
            return False
    return True


def enumerate_matchings(g: Graph, m: int, within: int | None = None) -> Iterator[int]:
    """Yield every matching of exactly ``m`` edges, lexicographic by sorted indices.

    ``within`` restricts the candidate edges to a mask.
    """
    allowed = g.full_mask if within is None else within & g.full_mask
    if m == 0:
        yield 0
        return
    conflict = g.conflict
    nedges = g.m

    def rec(start: int, chosen: int, avail: int, need: int):
        # avail only holds edges >= start that are compatible with chosen
        if popcount(avail) < need:
            return
        for i in range(start, nedges):
            bit = 1 << i
            if not avail & bit:
                continue
            if need == 1:
                yield chosen | bit
            else:
                yield from rec(i + 1, chosen | bit, avail & ~conflict[i] & ~((bit << 1) - 1), need - 1)
            avail &= ~bit
            if popcount(avail) < need:
                return

    yield from rec(0, 0, allowed, m)


def matching_count(g: Graph, m: int) -> int:
    return sum(1 for _ in enumerate_matchings(g, m))


def extends_to(g: Graph, mask: int, m: int) -> bool:
    """True iff some matching of size ``m`` contains ``mask`` (equality counts)."""
    k = popcount(mask)
    if k > m or not is_matching(g, mask):
        return False
    if k == m:
        return True
    blocked = mask
    for i in iter_bits(mask):
        blocked |= g.conflict[i]
    free = g.full_mask & ~blocked
    for _ in enumerate_matchings(g, m - k, within=free):
        return True
    return False


def max_matching_size(g: Graph) -> int:
    k = 0
    while True:
        if next(enumerate_matchings(g, k + 1), None) is None:
            return k
        k += 1


def is_maximal(g: Graph, mask: int) -> bool:
    blocked = mask
    for i in iter_bits(mask):
        blocked |= g.conflict[i]
    return blocked == g.full_mask


def min_maximal_matching_size(g: Graph) -> int:
    """Smallest maximal matching, by increasing-size search."""
    if g.m == 0:
        return 0
    k = 1
    while True:
        for mask in enumerate_matchings(g, k):
            if is_maximal(g, mask):
                return k
        k += 1


class MatchingIndex:
    """All ``m``-matchings of a graph, with per-edge lookup.

    The full list is built once; ``containing(e)`` is cached per edge.
    """

    def __init__(self, g: Graph, m: int):
        self.g = g
        self.m = m
        self.all = list(enumerate_matchings(g, m))
        self.union = 0
        for mask in self.all:
            self.union |= mask
        self._by_edge: dict[int, list[int]] = {}

    def containing(self, e: int) -> list[int]:
        got = self._by_edge.get(e)
        if got is None:
            bit = 1 << e
            got = [mask for mask in self.all if mask & bit]
            self._by_edge[e] = got
        return got

    def coverable(self) -> bool:
        # an edgeless graph has no m-matching to cover with
        return bool(self.all) and self.union == self.g.full_mask

    def uncoverable_edges(self) -> list[int]:
        return list(iter_bits(self.g.full_mask & ~self.union))


@lru_cache(maxsize=4096)
def matching_index(g: Graph, m: int) -> MatchingIndex:
    return MatchingIndex(g, m)


def is_m_coverable(g: Graph, m: int) -> bool:
    if m < 1 or m > g.m:
        return False
    return matching_index(g, m).coverable()
