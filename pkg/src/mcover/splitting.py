"""Splitting sets and t-splitting sets.

An order-t splitting set for matching size m is an edge set S in which no
(t+1)-matching lies inside an m-matching of G.  For t = 1 the set must also
not be a star; for t >= 2 it must contain at least one (t+1)-matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, iter_bits, popcount
from .matchings import enumerate_matchings, extends_to, matching_index


@dataclass(frozen=True)
class SplittingCertificate:
    edge_set: int
    m: int
    t: int

    @property
    def size(self) -> int:
        return popcount(self.edge_set)


def is_star(g: Graph, mask: int) -> bool:
    """True iff mask is non-empty and all its edges share one vertex."""
    if not mask:
        return False
    common = None
    for i in iter_bits(mask):
        ends = set(g.edges[i])
        common = ends if common is None else common & ends
        if not common:
            return False
    return True


def has_witness(g: Graph, mask: int, t: int) -> bool:
    if t == 1:
        return bool(mask) and not is_star(g, mask)
    return next(enumerate_matchings(g, t + 1, within=mask), None) is not None


def is_splitting_set(g: Graph, mask: int, m: int, t: int = 1) -> bool:
    if t < 1 or m < 1:
        raise ValueError("need t >= 1 and m >= 1")
    if mask & ~g.full_mask:
        raise ValueError("edge set is not a subset of E(G)")
    if not has_witness(g, mask, t):
        return False
    for sub in enumerate_matchings(g, t + 1, within=mask):
        if extends_to(g, sub, m):
            return False
    return True


def forbidden_sets(g: Graph, m: int, t: int) -> set[int]:
    """All (t+1)-matchings that lie inside some m-matching."""
    out: set[int] = set()
    if t + 1 > m:
        return out
    for mm in matching_index(g, m).all:
        for sub in combinations(iter_bits(mm), t + 1):
            mask = 0
            for i in sub:
                mask |= 1 << i
            out.add(mask)
    return out


def tree_splitting_prune(g: Graph, mask: int, m: int) -> bool:
    """Necessary conditions for a t = 1 splitting set of an m-coverable tree.

    False when some vertex has all its tree edges inside ``mask`` or when
    ``mask`` has more than ``m`` edges.
    """
    if not g.is_tree():
        raise GraphError("tree_splitting_prune needs a tree")
    if popcount(mask) > m:
        return False
    for x in range(g.n):
        inc = g.incident_mask(x)
        if inc and inc & mask == inc:
            return False
    return True


def splitting_number(g: Graph, m: int, t: int = 1, use_tree_prune: bool = True) -> tuple[int, SplittingCertificate | None]:
    """Largest order-t splitting set, with a witness (size 0 and None if none).

    Exact include/exclude branch and bound over edges.  ``candidates`` only
    holds edges that can still be added without completing a forbidden
    (t+1)-matching.  Ties between maximum sets go to the lexicographically
    least edge set, which the include-first order finds first.
    """
    if m < 1 or t < 1:
        raise ValueError("need m >= 1 and t >= 1")
    forb = forbidden_sets(g, m, t)
    by_edge: list[list[int]] = [[] for _ in range(g.m)]
    for f in forb:
        for i in iter_bits(f):
            by_edge[i].append(f)

    # every valid set contains one of these: an unforbidden (t+1)-matching, or a triangle when t = 1
    witnesses = [w for w in enumerate_matchings(g, t + 1) if w not in forb]
    if t == 1:
        witnesses += _triangles(g)
    if not witnesses:
        return 0, None

    tree_mode = use_tree_prune and t == 1 and g.is_tree()
    cap = m if tree_mode else g.m
    incident = [g.incident_mask(x) for x in range(g.n)]
    edges = g.edges

    best_size = 0
    best_mask = 0

    def rec(chosen: int, size: int, candidates: int):
        nonlocal best_size, best_mask
        if size > best_size and has_witness(g, chosen, t):
            best_size, best_mask = size, chosen
        if not candidates or size >= cap:
            return
        if size + popcount(candidates) <= best_size:
            return
        reach = chosen | candidates
        if not any(w & reach == w for w in witnesses):
            return
        low = candidates & -candidates
        e = low.bit_length() - 1
        rest = candidates ^ low

        new = chosen | low
        ok = True
        if tree_mode:
            for x in edges[e]:
                if new & incident[x] == incident[x]:
                    ok = False
                    break
        if ok:
            cand = rest
            for f in by_edge[e]:
                left = f & ~new
                if left & (left - 1) == 0:
                    cand &= ~left
            rec(new, size + 1, cand)
        rec(chosen, size, rest)

    rec(0, 0, g.full_mask)
    if best_size == 0:
        return 0, None
    return best_size, SplittingCertificate(best_mask, m, t)


def _triangles(g: Graph) -> list[int]:
    out = []
    for i, (u, v) in enumerate(g.edges):
        for j in g.adjacency[v]:
            a, b = g.edges[j]
            w = b if a == v else a
            if w <= v:
                continue
            try:
                k = g.edge_index(u, w)
            except KeyError:
                continue
            out.append((1 << i) | (1 << j) | (1 << k))
    return out


def naive_splitting_number(g: Graph, m: int, t: int = 1) -> int:
    """Exhaustive maximum over all edge subsets; test oracle for small graphs."""
    best = 0
    for mask in range(1 << g.m):
        size = popcount(mask)
        if size > best and is_splitting_set(g, mask, m, t):
            best = size
    return best
