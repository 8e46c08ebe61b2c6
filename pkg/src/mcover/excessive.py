"""Excessive [m]-index: lower bounds, exact solver and closed formulas."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .coloring import balance_matchings, chromatic_index, equalized_coloring
from .graph import Graph, GraphError, iter_bits, popcount
from .matchings import is_matching, matching_index, min_maximal_matching_size
from .splitting import SplittingCertificate, splitting_number

INFINITE = math.inf
DEFAULT_NODE_LIMIT = 10**8


class NotCoverableError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, msg: str, proven_lower: int):
        super().__init__(msg)
        self.proven_lower = proven_lower


class FormulaMismatch(AssertionError):
    """A closed formula value admits no cover of that size."""


class CertificateError(AssertionError):
    pass


@dataclass
class CoverCertificate:
    m: int
    matchings: list[int]

    def multiplicity(self, g: Graph) -> list[int]:
        out = [0] * g.m
        for mm in self.matchings:
            for i in iter_bits(mm):
                out[i] += 1
        return out

    def validate(self, g: Graph) -> None:
        for mm in self.matchings:
            if popcount(mm) != self.m:
                raise CertificateError(f"matching {sorted(iter_bits(mm))} has size {popcount(mm)}, expected {self.m}")
            if not is_matching(g, mm):
                raise CertificateError(f"{sorted(iter_bits(mm))} is not a matching")
        if min(self.multiplicity(g), default=1) < 1:
            raise CertificateError("cover misses an edge")

    def as_edge_lists(self, g: Graph) -> list[list[tuple[int, int]]]:
        return [g.edges_of(mm) for mm in self.matchings]


@dataclass
class IndexResult:
    value: float  # int, or INFINITE
    m: int
    lower_bounds: dict = field(default_factory=dict)
    witness: Optional[CoverCertificate] = None
    method: str = "exact-search"
    splitting_witnesses: dict = field(default_factory=dict)
    nodes: int = 0

    @property
    def finite(self) -> bool:
        return self.value != INFINITE

    def to_dict(self, g: Graph | None = None) -> dict:
        out = {
            "m": self.m,
            "value": int(self.value) if self.finite else "INFINITE",
            "method": self.method,
            "lower_bounds": self.lower_bounds,
        }
        if self.witness is not None and g is not None:
            out["witness"] = [[list(e) for e in ml] for ml in self.witness.as_edge_lists(g)]
        return out


def density_bound(g: Graph, m: int) -> int:
    return -(-g.m // m)


def lower_bound(g: Graph, m: int, ts=None) -> dict:
    """Valid lower bounds on the excessive [m]-index.

    ``splitting`` maps t to ceil(s^t / t); ``witnesses`` keeps the splitting
    certificates.  ``max`` is the largest of all terms.
    """
    if not matching_index(g, m).coverable():
        raise NotCoverableError(f"graph is not [{m}]-coverable")
    chi = chromatic_index(g)
    dens = density_bound(g, m)
    ts = range(1, m) if ts is None else ts
    split = {}
    witnesses: dict[int, SplittingCertificate | None] = {}
    for t in ts:
        s, cert = splitting_number(g, m, t)
        split[t] = -(-s // t)
        witnesses[t] = cert
    best = max([chi, dens, *split.values()])
    return {"chromatic": chi, "density": dens, "splitting": split, "max": best, "witnesses": witnesses}


class _CoverSearch:
    """Branch and bound for a cover of E(G) by at most k m-matchings."""

    def __init__(self, g: Graph, m: int, node_limit: int):
        self.g = g
        self.m = m
        self.index = matching_index(g, m)
        self.incident = [g.incident_mask(x) for x in range(g.n) if g.degree(x)]
        self.node_limit = node_limit
        self.nodes = 0
        self.failed: dict[int, int] = {}

    def feasible(self, k: int) -> list[int] | None:
        picked = self._rec(self.g.full_mask, k)
        if picked is None:
            return None
        # pad with repeats so the cover has exactly k members
        while len(picked) < k:
            picked.append(picked[0] if picked else self.index.all[0])
        return picked

    def _rec(self, uncovered: int, r: int) -> list[int] | None:
        if not uncovered:
            return []
        if r == 0:
            return None
        if self.failed.get(uncovered, -1) >= r:
            return None
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise BudgetExceeded(f"node limit {self.node_limit} exceeded", 0)
        count = popcount(uncovered)
        if count > r * self.m:
            self.failed[uncovered] = max(self.failed.get(uncovered, -1), r)
            return None
        for inc in self.incident:
            if popcount(uncovered & inc) > r:
                self.failed[uncovered] = max(self.failed.get(uncovered, -1), r)
                return None

        # fail-first: uncovered edge with fewest containing matchings, lowest index
        best_e, best_n = -1, None
        for e in iter_bits(uncovered):
            nopt = len(self.index.containing(e))
            if best_n is None or nopt < best_n:
                best_e, best_n = e, nopt
        traces: dict[int, int] = {}
        for mm in self.index.containing(best_e):
            tr = mm & uncovered
            if tr not in traces:
                traces[tr] = mm
        # drop options whose newly covered edges are a subset of another option's
        keys = sorted(traces, key=lambda x: (-popcount(x), x))
        kept: list[int] = []
        for tr in keys:
            if not any(tr & other == tr for other in kept):
                kept.append(tr)
        for tr in kept:
            sub = self._rec(uncovered & ~tr, r - 1)
            if sub is not None:
                return [traces[tr]] + sub
        self.failed[uncovered] = max(self.failed.get(uncovered, -1), r)
        return None


def find_cover(g: Graph, m: int, k: int, node_limit: int = DEFAULT_NODE_LIMIT) -> CoverCertificate | None:
    """A cover by exactly ``k`` m-matchings, or None if none exists."""
    if not matching_index(g, m).coverable():
        return None
    got = _CoverSearch(g, m, node_limit).feasible(k)
    return None if got is None else CoverCertificate(m, got)


def exact_excessive_index(
    g: Graph,
    m: int,
    node_limit: int = DEFAULT_NODE_LIMIT,
    start: int | None = None,
    splitting_bounds: bool = False,
) -> IndexResult:
    """Exact excessive [m]-index by iterative deepening.

    Deepening starts at max(chromatic index, ceil(|E|/m)), or at ``start``
    when a caller supplies a proven lower bound.  Splitting lower bounds are
    recorded (and used as the start) only with ``splitting_bounds=True``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    idx = matching_index(g, m)
    if not idx.coverable():
        return IndexResult(INFINITE, m, method="exact-search")
    if splitting_bounds:
        lb = lower_bound(g, m)
        witnesses = lb.pop("witnesses")
    else:
        lb = {"chromatic": chromatic_index(g), "density": density_bound(g, m)}
        lb["max"] = max(lb.values())
        witnesses = {}
    k = lb["max"] if start is None else start
    search = _CoverSearch(g, m, node_limit)
    while True:
        try:
            got = search.feasible(k)
        except BudgetExceeded as exc:
            raise BudgetExceeded(str(exc), k) from None
        if got is not None:
            cert = CoverCertificate(m, got)
            cert.validate(g)
            return IndexResult(k, m, lb, cert, "exact-search", witnesses, search.nodes)
        k += 1


def _seeded_witness(g: Graph, m: int, k: int, node_limit: int) -> CoverCertificate:
    cert = find_cover(g, m, k, node_limit)
    if cert is None:
        raise FormulaMismatch(f"no [{m}]-cover of size {k}")
    cert.validate(g)
    return cert


def formula_index_small_m(g: Graph, m: int, node_limit: int = DEFAULT_NODE_LIMIT) -> IndexResult:
    """Closed formula for m = 1, 2, 3 with a witness cover of that size."""
    if m not in (1, 2, 3):
        raise ValueError("closed formula only for m in {1, 2, 3}")
    if not matching_index(g, m).coverable():
        raise NotCoverableError(f"graph is not [{m}]-coverable")
    if m == 1:
        lb = {"chromatic": chromatic_index(g), "density": g.m}
        value = g.m
    else:
        lb = lower_bound(g, m, ts=(1,) if m == 3 else ())
        lb.pop("witnesses")
        value = lb["max"]
    lb["max"] = max(lb["chromatic"], lb["density"], *lb.get("splitting", {}).values())
    witness = _seeded_witness(g, m, value, node_limit)
    return IndexResult(value, m, lb, witness, f"formula-m{m}")


def tree_index_m4(t: Graph, node_limit: int = DEFAULT_NODE_LIMIT) -> IndexResult:
    """max{Delta, ceil(|E|/4), s} for a [4]-coverable tree, with a witness.

    When every maximal matching has at least four edges and Delta is the
    formula value, each class of an equalized Delta-coloring is greedily
    grown to four edges.  Otherwise the cover search is run at the formula
    value.
    """
    if not t.is_tree():
        raise GraphError("tree_index_m4 needs a tree")
    if not matching_index(t, 4).coverable():
        raise NotCoverableError("tree is not [4]-coverable")
    delta = t.max_degree
    dens = density_bound(t, 4)
    s, cert = splitting_number(t, 4, 1)
    value = max(delta, dens, s)
    lb = {"chromatic": delta, "density": dens, "splitting": {1: s}, "max": value}

    if value == delta and t.m <= 4 * delta and min_maximal_matching_size(t) >= 4:
        witness = CoverCertificate(4, _grow_classes(t, equalized_coloring(t).classes, 4))
        witness.validate(t)
        method = "formula-tree-m4"
    else:
        witness = _seeded_witness(t, 4, value, node_limit)
        method = "formula-tree-m4"
    return IndexResult(value, 4, lb, witness, method, {1: cert})


def _grow_classes(g: Graph, classes: list[int], m: int) -> list[int]:
    out = []
    for c in classes:
        blocked = c
        for i in iter_bits(c):
            blocked |= g.conflict[i]
        while popcount(c) < m:
            free = g.full_mask & ~blocked
            if not free:
                raise FormulaMismatch("color class cannot be grown to size m")
            e = (free & -free).bit_length() - 1
            c |= 1 << e
            blocked |= (1 << e) | g.conflict[e]
        out.append(c)
    return out


def compatible_value(g: Graph, m: int) -> int:
    return max(chromatic_index(g), density_bound(g, m))


def is_compatible(g: Graph, m: int, node_limit: int = DEFAULT_NODE_LIMIT) -> bool:
    if not matching_index(g, m).coverable():
        raise NotCoverableError(f"graph is not [{m}]-coverable")
    return exact_excessive_index(g, m, node_limit).value == compatible_value(g, m)


def conjecture_value(g: Graph, m: int) -> tuple[int, dict]:
    """max{chi', ceil(|E|/m), s^1, ceil(s^2/2), ..., ceil(s^{m-1}/(m-1))}."""
    lb = lower_bound(g, m)
    return lb["max"], lb


def cover_from_budgeted_classes(g: Graph, classes: list[int], m: int) -> CoverCertificate:
    """Balance matchings whose sizes sum to m * len(classes) into a uniform cover."""
    cert = CoverCertificate(m, balance_matchings(g, classes, m))
    cert.validate(g)
    return cert
