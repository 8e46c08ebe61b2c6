"""Exhaustive verification of the tree formulas, conjectures and counterexamples.

Every check produces :class:`TrialReport` records, serialised one JSON
object per line.  Sweeps over instances can run in a process pool; results
are merged back in instance order, so the output does not depend on the
worker count.
"""

from __future__ import annotations

import json
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .coloring import chromatic_index, equalized_coloring, balance_matchings
from .graph import (
    CaterpillarSpec,
    Graph,
    build_caterpillar,
    canonical_tree_code,
    complete_graph,
    diameter,
    is_caterpillar,
    k6_with_pendants,
    petersen_graph,
    to_cat,
    to_graph6,
    tree_from_code,
    iter_bits,
    popcount,
)
from .matchings import is_matching, matching_index
from .excessive import (
    density_bound,
    exact_excessive_index,
    compatible_value,
    lower_bound,
)
from .splitting import is_splitting_set, is_star, splitting_number, tree_splitting_prune

REPORT_FIELDS = ("claim", "instance", "expected", "computed", "verdict", "millis")
VERDICTS = ("confirmed", "refuted", "skipped-budget")

EXCEPTIONAL_CATERPILLARS = ((0, 1, 1, 1, 0), (1, 1, 1, 1, 0), (1, 1, 1, 1, 1))


class ReconstructionError(AssertionError):
    """The rebuilt counterexample graph misses a stated parameter."""


@dataclass
class TrialReport:
    claim: str
    instance: str
    expected: object
    computed: object
    verdict: str
    millis: int = 0

    def to_json(self, timing: bool = True) -> str:
        d = asdict(self)
        if not timing:
            d["millis"] = 0
        return json.dumps(d, sort_keys=False, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "TrialReport":
        d = json.loads(line)
        if set(d) != set(REPORT_FIELDS):
            raise ValueError(f"report fields {sorted(d)} differ from {list(REPORT_FIELDS)}")
        if d["verdict"] not in VERDICTS:
            raise ValueError(f"unknown verdict {d['verdict']!r}")
        return cls(**d)


def write_reports(reports: Iterable[TrialReport], path: str, timing: bool = True) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for r in reports:
            fh.write(r.to_json(timing) + "\n")


def read_reports(path: str) -> list[TrialReport]:
    with open(path, encoding="utf-8") as fh:
        return [TrialReport.from_json(line) for line in fh if line.strip()]


# ---------------------------------------------------------------------------
# instance families


@lru_cache(maxsize=None)
def _tree_codes(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("()",)
    seen = set()
    for code in _tree_codes(n - 1):
        t = tree_from_code(code)
        for x in range(t.n):
            seen.add(canonical_tree_code(t.add_leaf(x)))
    return tuple(sorted(seen))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Every free tree on n vertices once, ordered by canonical code.

    Built by attaching a leaf to every vertex of every tree on n - 1
    vertices and deduplicating by canonical code.
    """
    if not 1 <= n <= 16:
        raise ValueError("tree enumeration supports 1 <= n <= 16")
    for code in _tree_codes(n):
        yield tree_from_code(code)


def tree_universe(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_trees(n)


def connected_graphs_atlas(n_max: int = 7) -> Iterator[Graph]:
    """All connected graphs on 1..n_max vertices (n_max <= 7) from the networkx atlas."""
    import networkx as nx

    if n_max > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 1 <= n <= n_max and nx.is_connected(h):
            yield Graph.from_edges(n, list(h.edges()))


def describe(g: Graph) -> str:
    if g.is_tree():
        if is_caterpillar(g) and g.m >= 2:
            return f"{to_cat(g)} tree:{canonical_tree_code(g)}"
        return f"tree:{canonical_tree_code(g)}"
    return f"graph6:{to_graph6(g)}"


def build_counterexample_graph() -> Graph:
    """Pendant-K6, checked against every parameter stated for it."""
    g = k6_with_pendants()
    clique = 0
    for i, (u, v) in enumerate(g.edges):
        if u < 6 and v < 6:
            clique |= 1 << i
    checks = {
        "max_degree": (g.max_degree, 6),
        "chromatic_index": (chromatic_index(g), 6),
        "edge_count": (g.m, 21),
        "density_bound": (density_bound(g, 4), 6),
        "splitting_number": (splitting_number(g, 4, 1)[0], 3),
        "max_clique_edges_per_4_matching": (
            max(popcount(mm & clique) for mm in matching_index(g, 4).all),
            2,
        ),
        "coverable": (matching_index(g, 4).coverable(), True),
    }
    s, cert = splitting_number(g, 4, 1)
    if cert is None or not _is_triangle(g, cert.edge_set):
        checks["splitting_witness_is_triangle"] = (False, True)
    bad = {k: v for k, v in checks.items() if v[0] != v[1]}
    if bad:
        raise ReconstructionError(f"pendant-K6 fails stated parameters: {bad}")
    return g


def _is_triangle(g: Graph, mask: int) -> bool:
    if popcount(mask) != 3:
        return False
    verts = set()
    for i in iter_bits(mask):
        verts.update(g.edges[i])
    return len(verts) == 3


# ---------------------------------------------------------------------------
# per-instance computations (top level so they pickle for worker pools)


def _timed(fn: Callable, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, int(round((time.perf_counter() - t0) * 1000))


def tree_facts(g: Graph, m: int, all_t: bool = True) -> dict:
    """Exact index, compatible value and splitting terms for one instance."""
    idx = matching_index(g, m)
    facts = {"coverable": idx.coverable(), "edges": g.m, "max_degree": g.max_degree}
    if not facts["coverable"]:
        return facts
    res = exact_excessive_index(g, m)
    chi = res.lower_bounds["chromatic"]
    dens = res.lower_bounds["density"]
    ts = range(1, m) if all_t else (1,)
    split = {}
    witness = {}
    for t in ts:
        s, cert = splitting_number(g, m, t)
        split[t] = s
        witness[t] = sorted(iter_bits(cert.edge_set)) if cert else []
    conj = max([chi, dens] + [-(-s // t) for t, s in split.items()])
    facts.update(
        exact=int(res.value),
        chromatic=chi,
        density=dens,
        compatible_value=max(chi, dens),
        splitting=split,
        conjecture=conj,
        s_witness=witness,
        cover=[sorted(iter_bits(mm)) for mm in res.witness.matchings],
    )
    return facts


def _tree_facts_job(args):
    code, m, all_t = args
    g = tree_from_code(code)
    facts, ms = _timed(tree_facts, g, m, all_t)
    return code, facts, ms


def sweep_trees(n_max: int, m: int, all_t: bool = True, workers: int | None = None, n_min: int = 1):
    """(tree, facts, millis) for every tree on n_min..n_max vertices, canonical order."""
    jobs = [(code, m, all_t) for n in range(n_min, n_max + 1) for code in _tree_codes(n)]
    for code, facts, ms in _map(_tree_facts_job, jobs, workers):
        yield tree_from_code(code), facts, ms


def _map(fn, jobs, workers):
    workers = workers or os.cpu_count() or 1
    if workers <= 1 or len(jobs) < 2:
        yield from map(fn, jobs)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, jobs, chunksize=max(1, len(jobs) // (8 * workers)))


# ---------------------------------------------------------------------------
# conjecture sweeps


def check_tree_conjecture(n_max: int, m: int, workers: int | None = None) -> Iterator[TrialReport]:
    """Conjectured tree formula against the exact index, one report per coverable tree."""
    if m < 2:
        raise ValueError("m must be at least 2")
    for g, f, ms in sweep_trees(n_max, m, True, workers):
        if not f["coverable"]:
            continue
        ok = f["conjecture"] == f["exact"]
        yield TrialReport(
            f"tree-formula.m{m}",
            describe(g),
            {"formula": f["conjecture"]},
            _computed(f),
            "confirmed" if ok else "refuted",
            ms,
        )


def _computed(f: dict) -> dict:
    return {
        "exact": f["exact"],
        "chromatic": f["chromatic"],
        "density": f["density"],
        "splitting": {str(t): s for t, s in f["splitting"].items()},
        "splitting_witness": {str(t): w for t, w in f["s_witness"].items()},
        "cover": f["cover"],
    }


def _graph_job(args):
    g, m = args
    t0 = time.perf_counter()
    if not matching_index(g, m).coverable():
        return None
    lb = lower_bound(g, m)
    witnesses = lb.pop("witnesses")
    res = exact_excessive_index(g, m)
    ms = int(round((time.perf_counter() - t0) * 1000))
    return lb, witnesses, res, ms


def check_graph_conjecture(instances: Iterable[Graph], m: int = 4, workers: int | None = None) -> Iterator[TrialReport]:
    """General-graph formula (with all t-splitting terms) against the exact index."""
    graphs = list(instances)
    for g, out in zip(graphs, _map(_graph_job, [(g, m) for g in graphs], workers)):
        if out is None:
            continue
        lb, witnesses, res, ms = out
        ok = lb["max"] == res.value
        yield TrialReport(
            f"graph-formula.m{m}",
            describe(g),
            {"formula": lb["max"]},
            {
                "exact": int(res.value),
                "chromatic": lb["chromatic"],
                "density": lb["density"],
                "splitting": {str(t): v for t, v in lb["splitting"].items()},
                "splitting_witness": {
                    str(t): sorted(iter_bits(c.edge_set)) if c else [] for t, c in witnesses.items()
                },
                "cover": [sorted(iter_bits(mm)) for mm in res.witness.matchings],
            },
            "confirmed" if ok else "refuted",
            ms,
        )


# ---------------------------------------------------------------------------
# the claim suite

# refuted "proved" claims fail the verify exit code; the rest only report
CLAIM_KIND = {
    "caterpillars-m4.index": "proved",
    "caterpillars-m4.spine-splitting-set": "proved",
    "trees-m4.noncompatible-census": "proved",
    "trees-m4.formula": "proved",
    "graphs-m3.formula": "proved",
    "trees-m3.compatible": "proved",
    "pruner.sound": "proved",
    "coloring.equalized": "proved",
    "balancing.uniform-sizes": "proved",
    "leaf-extension.step": "proved",
    "trees-m4.supertree": "proved",
    "trees-m4.diameter-7": "proved",
    "trees.diameter-2m": "proved",
    "pendant-k6.tree-formula-fails": "proved",
    "pendant-k6.second-order-bound": "conjecture",
    "petersen.m5": "remark",
    "petersen-minus-edge.m5": "remark",
    "petersen.m5-formula-analogue-fails": "remark",
    "cat-m5.bound-at-least-4": "adjudication",
    "cat-m5.lower-terms": "adjudication",
    "tree-formula.m3": "conjecture",
    "tree-formula.m4": "conjecture",
    "tree-formula.m5": "conjecture",
    "graph-formula.m4": "conjecture",
}


def claim_kind(claim: str) -> str:
    return CLAIM_KIND.get(claim, "conjecture")


def _report(claim, instance, expected, computed, ms=0) -> TrialReport:
    return TrialReport(claim, instance, expected, computed, "confirmed" if expected == computed else "refuted", ms)


class _SweepCache:
    """Tree sweeps shared between claims of one suite run."""

    def __init__(self, workers):
        self.workers = workers
        self.data: dict[tuple[int, int], list] = {}

    def get(self, n_max: int, m: int) -> list:
        key = (n_max, m)
        if key not in self.data:
            # reuse a larger sweep when one exists
            for (n2, m2), rows in self.data.items():
                if m2 == m and n2 >= n_max:
                    self.data[key] = [r for r in rows if r[0].n <= n_max]
                    break
            else:
                self.data[key] = list(sweep_trees(n_max, m, True, self.workers))
        return self.data[key]


def claim_exceptional_caterpillars() -> list[TrialReport]:
    out = []
    for d in EXCEPTIONAL_CATERPILLARS:
        g = build_caterpillar(d)
        res, ms = _timed(exact_excessive_index, g, 4)
        s = splitting_number(g, 4, 1)[0]
        out.append(_report("caterpillars-m4.index", str(CaterpillarSpec(d)),
                           {"index": 4, "splitting": 4}, {"index": int(res.value), "splitting": s}, ms))
    g = build_caterpillar(EXCEPTIONAL_CATERPILLARS[0])
    spine = g.mask_of([(i, i + 1) for i in range(4)])
    out.append(_report("caterpillars-m4.spine-splitting-set", "CAT(0,1,1,1,0) spine edges",
                       {"is_splitting_set": True, "size": 4},
                       {"is_splitting_set": is_splitting_set(g, spine, 4, 1), "size": popcount(spine)}))
    return out


def claim_trees_m4(cache: _SweepCache, n_max: int) -> list[TrialReport]:
    rows = [r for r in cache.get(n_max, 4) if r[1]["coverable"]]
    out = []
    noncompat = []
    mismatches = []
    total_ms = 0
    for g, f, ms in rows:
        total_ms += ms
        formula = max(f["max_degree"], f["density"], f["splitting"][1])
        if formula != f["exact"]:
            mismatches.append({"instance": describe(g), "formula": formula, "exact": f["exact"]})
        if f["exact"] != f["compatible_value"]:
            noncompat.append(canonical_tree_code(g))
    expected_codes = sorted(canonical_tree_code(build_caterpillar(d)) for d in EXCEPTIONAL_CATERPILLARS
                            if build_caterpillar(d).n <= n_max)
    out.append(_report(
        "trees-m4.noncompatible-census", f"all [4]-coverable trees on <= {n_max} vertices ({len(rows)})",
        {"non_compatible": [to_cat(tree_from_code(c)) for c in expected_codes]},
        {"non_compatible": [to_cat(tree_from_code(c)) if is_caterpillar(tree_from_code(c)) else c
                            for c in sorted(noncompat)]},
        total_ms,
    ))
    out.append(_report(
        "trees-m4.formula", f"all [4]-coverable trees on <= {n_max} vertices ({len(rows)})",
        {"mismatches": []}, {"mismatches": mismatches}, total_ms,
    ))
    return out


def claim_graphs_m3(n_max: int = 7, workers=None) -> list[TrialReport]:
    graphs = list(connected_graphs_atlas(n_max))
    mismatches = []
    count = 0
    t0 = time.perf_counter()
    for g, out in zip(graphs, _map(_graphs_m3_job, graphs, workers)):
        if out is None:
            continue
        count += 1
        formula, exact = out
        if formula != exact:
            mismatches.append({"instance": describe(g), "formula": formula, "exact": exact})
    ms = int(round((time.perf_counter() - t0) * 1000))
    return [_report("graphs-m3.formula", f"all [3]-coverable connected graphs on <= {n_max} vertices ({count})",
                    {"mismatches": []}, {"mismatches": mismatches}, ms)]


def _graphs_m3_job(g: Graph):
    if not matching_index(g, 3).coverable():
        return None
    formula = max(chromatic_index(g), density_bound(g, 3), splitting_number(g, 3, 1)[0])
    exact = int(exact_excessive_index(g, 3).value)
    return formula, exact


def claim_trees_m3(cache: _SweepCache, n_max: int) -> list[TrialReport]:
    rows = [r for r in cache.get(n_max, 3) if r[1]["coverable"]]
    bad = [describe(g) for g, f, _ in rows if f["exact"] != f["compatible_value"]]
    s_unique_max = [describe(g) for g, f, _ in rows
                    if max(-(-s // t) for t, s in f["splitting"].items()) > f["compatible_value"]]
    return [_report("trees-m3.compatible", f"all [3]-coverable trees on <= {n_max} vertices ({len(rows)})",
                    {"non_compatible": [], "splitting_term_dominates": []},
                    {"non_compatible": bad, "splitting_term_dominates": s_unique_max},
                    sum(r[2] for r in rows))]


def claim_pruner(n_max: int = 11) -> list[TrialReport]:
    """Every t = 1 splitting set found without pruning passes the tree pruner."""
    rejected = []
    checked = 0
    t0 = time.perf_counter()
    for m in (3, 4, 5):
        for g in tree_universe(n_max):
            if g.m < 2 or not matching_index(g, m).coverable():
                continue
            for mask in _all_splitting_sets(g, m):
                checked += 1
                if not tree_splitting_prune(g, mask, m):
                    rejected.append({"m": m, "instance": describe(g), "set": sorted(iter_bits(mask))})
    ms = int(round((time.perf_counter() - t0) * 1000))
    return [_report("pruner.sound", f"trees <= {n_max} vertices, m in 3..5 ({checked} splitting sets)",
                    {"rejected": []}, {"rejected": rejected}, ms)]


def _all_splitting_sets(g: Graph, m: int) -> Iterator[int]:
    """All t = 1 splitting sets: sets independent in the extendable-pair graph, not stars."""
    compat = [0] * g.m
    for mm in matching_index(g, m).all:
        for i in iter_bits(mm):
            compat[i] |= mm & ~(1 << i)

    def rec(i: int, chosen: int, banned: int):
        if i == g.m:
            if chosen and not is_star(g, chosen):
                yield chosen
            return
        yield from rec(i + 1, chosen, banned)
        if not banned >> i & 1:
            yield from rec(i + 1, chosen | (1 << i), banned | compat[i])

    yield from rec(0, 0, 0)


def claim_equalized(n_max: int = 12) -> list[TrialReport]:
    bad = []
    count = 0
    t0 = time.perf_counter()
    for g in tree_universe(n_max, 2):
        count += 1
        cc = equalized_coloring(g)
        sizes = cc.sizes()
        union = 0
        overlap = False
        for c in cc.classes:
            overlap |= bool(union & c)
            union |= c
        proper = all(is_matching(g, c) for c in cc.classes) and not overlap and union == g.full_mask
        if not proper or len(sizes) != chromatic_index(g) or max(sizes) - min(sizes) > 1:
            bad.append(describe(g))
    ms = int(round((time.perf_counter() - t0) * 1000))
    return [_report("coloring.equalized", f"all trees on 2..{n_max} vertices ({count})", {"failures": []},
                    {"failures": bad}, ms)]


def random_budgeted_classes(g: Graph, m: int, s: int, rng: random.Random) -> list[int] | None:
    """Random matchings covering E(G) whose sizes sum to m * s, or None if the draw fails."""
    if s * m < g.m:
        return None
    order = list(range(g.m))
    rng.shuffle(order)
    classes = [0] * s
    blocked = [0] * s
    for e in order:
        opts = [i for i in range(s) if not blocked[i] >> e & 1]
        if not opts:
            return None
        i = rng.choice(opts)
        classes[i] |= 1 << e
        blocked[i] |= (1 << e) | g.conflict[e]
    # pad to the budget by adding edges (possibly already covered) to classes
    need = m * s - sum(popcount(c) for c in classes)
    tries = 0
    while need > 0 and tries < 10 * g.m * s:
        tries += 1
        i = rng.randrange(s)
        free = g.full_mask & ~blocked[i]
        if not free:
            continue
        e = rng.choice(list(iter_bits(free)))
        classes[i] |= 1 << e
        blocked[i] |= (1 << e) | g.conflict[e]
        need -= 1
    return classes if need == 0 else None


def claim_balancing(trials: int = 1000, seed: int = 0) -> list[TrialReport]:
    rng = random.Random(seed)
    pool = [g for g in tree_universe(10, 5)] + [petersen_graph(), k6_with_pendants(), complete_graph(6)]
    done = 0
    bad = []
    t0 = time.perf_counter()
    while done < trials:
        g = rng.choice(pool)
        m = rng.randint(2, 5)
        s = rng.randint(max(1, -(-g.m // m)), max(1, -(-g.m // m)) + 3)
        classes = random_budgeted_classes(g, m, s, rng)
        if classes is None:
            continue
        done += 1
        out = balance_matchings(g, classes, m)
        union = 0
        for c in out:
            union |= c
        if len(out) != s or union != g.full_mask or any(popcount(c) != m or not is_matching(g, c) for c in out):
            bad.append({"instance": describe(g), "m": m, "classes": [sorted(iter_bits(c)) for c in classes]})
    ms = int(round((time.perf_counter() - t0) * 1000))
    return [_report("balancing.uniform-sizes", f"{trials} random budget-feasible inputs (seed {seed})",
                    {"failures": []}, {"failures": bad}, ms)]


def claim_leaf_extension(pairs: int = 500, seed: int = 0, n_range=(6, 12)) -> list[TrialReport]:
    rng = random.Random(seed)
    out = []
    for m in (3, 4, 5):
        lo = max(n_range[0], 2 * m)
        pool = [g for g in tree_universe(n_range[1], lo) if matching_index(g, m).coverable()]
        if not pool:
            raise ValueError(f"no [{m}]-coverable trees on {lo}..{n_range[1]} vertices")
        bad = []
        t0 = time.perf_counter()
        for _ in range(pairs):
            g = rng.choice(pool)
            x = rng.randrange(g.n)
            h = g.add_leaf(x)
            a = exact_excessive_index(g, m).value
            b = exact_excessive_index(h, m).value
            if b == math.inf or b > a + 1:
                bad.append({"instance": describe(g), "vertex": x, "before": a, "after": b})
        ms = int(round((time.perf_counter() - t0) * 1000))
        out.append(_report("leaf-extension.step", f"m={m}, {pairs} random pairs (seed {seed})",
                           {"failures": []}, {"failures": bad}, ms))
    return out


def claim_supertree(cache: _SweepCache, n_max: int) -> list[TrialReport]:
    """No [4]-compatible tree gains a non-compatible one-leaf supertree."""
    rows = cache.get(n_max, 4)
    status = {canonical_tree_code(g): (f["coverable"] and f["exact"] == f["compatible_value"]) for g, f, _ in rows}
    bad = []
    for g, f, _ in rows:
        if g.n >= n_max or not status[canonical_tree_code(g)]:
            continue
        for x in range(g.n):
            code = canonical_tree_code(g.add_leaf(x))
            if not status[code]:
                bad.append({"tree": describe(g), "supertree": code})
    return [_report("trees-m4.supertree", f"one-leaf extensions within trees <= {n_max} vertices",
                    {"violations": []}, {"violations": bad})]


def claim_diameter(cache: _SweepCache, n_max_m4: int, n_max: int) -> list[TrialReport]:
    out = []
    rows = [r for r in cache.get(n_max_m4, 4) if r[1]["coverable"] and diameter(r[0]) >= 7]
    bad = [describe(g) for g, f, _ in rows if f["exact"] != f["compatible_value"]]
    out.append(_report("trees-m4.diameter-7", f"[4]-coverable trees <= {n_max_m4} vertices with diameter >= 7 ({len(rows)})",
                       {"non_compatible": []}, {"non_compatible": bad}))
    for m in (3, 4, 5):
        lim = n_max_m4 if m == 4 else n_max
        rows = [r for r in cache.get(lim, m) if r[1]["coverable"] and diameter(r[0]) >= 2 * m]
        bad = [describe(g) for g, f, _ in rows if f["exact"] != f["compatible_value"]]
        out.append(_report("trees.diameter-2m", f"m={m}: [m]-coverable trees <= {lim} vertices with diameter >= {2 * m} ({len(rows)})",
                           {"non_compatible": []}, {"non_compatible": bad}))
    return out


def claim_counterexample() -> list[TrialReport]:
    t0 = time.perf_counter()
    try:
        g = build_counterexample_graph()
    except ReconstructionError as exc:
        return [TrialReport("pendant-k6.tree-formula-fails", "pendant-K6", {"reconstruction": "valid"},
                            {"reconstruction": str(exc)}, "refuted", 0)]
    res = exact_excessive_index(g, 4)
    tree_formula = max(g.max_degree, density_bound(g, 4), splitting_number(g, 4, 1)[0])
    ms = int(round((time.perf_counter() - t0) * 1000))
    out = [_report("pendant-k6.tree-formula-fails", "pendant-K6",
                   {"index": 8, "tree_formula": 6},
                   {"index": int(res.value), "tree_formula": tree_formula}, ms)]
    lb, ms2 = _timed(lower_bound, g, 4)
    cert = lb["witnesses"][2]
    out.append(_report("pendant-k6.second-order-bound", "pendant-K6",
                       {"s2": 15, "splitting_bound_t2": 8, "formula": 8, "index": 8},
                       {"s2": cert.size if cert else 0, "splitting_bound_t2": lb["splitting"][2],
                        "formula": lb["max"], "index": int(res.value)}, ms2))
    return out


def claim_petersen() -> list[TrialReport]:
    p = petersen_graph()
    res, ms = _timed(exact_excessive_index, p, 5)
    out = [_report("petersen.m5", "Petersen",
                   {"index": 5, "compatible_value": 4, "compatible": False},
                   {"index": int(res.value), "compatible_value": compatible_value(p, 5),
                    "compatible": res.value == compatible_value(p, 5)}, ms)]
    pe = p.remove_edge(0)
    res2, ms2 = _timed(exact_excessive_index, pe, 5)
    out.append(_report("petersen-minus-edge.m5", "Petersen minus edge (0,1)",
                       {"index": 4, "compatible": True},
                       {"index": int(res2.value), "compatible": res2.value == compatible_value(pe, 5)}, ms2))
    lb, ms3 = _timed(lower_bound, p, 5)
    differs = lb["max"] != res.value
    out.append(TrialReport(
        "petersen.m5-formula-analogue-fails", "Petersen",
        {"analogue_formula_differs": True},
        {"analogue_formula_differs": differs, "formula": lb["max"], "index": int(res.value),
         "splitting": {str(t): v for t, v in lb["splitting"].items()}},
        "confirmed" if differs else "refuted", ms3,
    ))
    return out


def claim_cat_m5() -> list[TrialReport]:
    out = []
    for d in ((0, 1, 1, 1, 1, 1, 0), (0, 1, 1, 1, 1, 1, 1, 0)):
        g = build_caterpillar(d)
        t0 = time.perf_counter()
        res = exact_excessive_index(g, 5)
        lb = lower_bound(g, 5)
        ms = int(round((time.perf_counter() - t0) * 1000))
        name = "CAT(" + ",".join(map(str, d)) + ")"
        spine_edges = len(d) - 1
        computed = {
            "index": int(res.value),
            "at_least_4": res.value >= 4,
            "spine_edges": spine_edges,
            "cover": [sorted(iter_bits(mm)) for mm in res.witness.matchings],
            "chromatic": lb["chromatic"],
            "density": lb["density"],
            "splitting": {str(t): v for t, v in lb["splitting"].items()},
        }
        out.append(TrialReport("cat-m5.bound-at-least-4", name, {"at_least_4": True}, computed,
                               "confirmed" if res.value >= 4 else "refuted", ms))
        s1 = splitting_number(g, 5, 1)[0]
        out.append(_report("cat-m5.lower-terms", name,
                           {"chromatic": 3, "density": 3, "s1": 1},
                           {"chromatic": lb["chromatic"], "density": lb["density"], "s1": s1}))
    return out


def verify_paper_claims(tree_n_max: int = 13, graph_n_max: int = 7, sweep_n_max: int = 12,
                        seed: int = 0, workers: int | None = None, quick: bool = False) -> list[TrialReport]:
    """The fixed claim suite, in a deterministic order.

    ``quick`` shrinks the exhaustive universes for smoke runs.
    """
    if quick:
        tree_n_max, graph_n_max, sweep_n_max = 11, 6, 10
    cache = _SweepCache(workers)
    reports: list[TrialReport] = []
    reports += claim_exceptional_caterpillars()
    reports += claim_trees_m4(cache, tree_n_max)
    reports += claim_graphs_m3(graph_n_max, workers)
    reports += claim_trees_m3(cache, sweep_n_max)
    reports += claim_pruner(min(11, sweep_n_max))
    reports += claim_equalized(sweep_n_max)
    reports += claim_balancing(200 if quick else 1000, seed)
    reports += claim_leaf_extension(100 if quick else 500, seed, (6, max(11, sweep_n_max)))
    reports += claim_supertree(cache, tree_n_max)
    reports += claim_diameter(cache, tree_n_max, sweep_n_max + 1)
    reports += claim_counterexample()
    reports += claim_petersen()
    reports += claim_cat_m5()
    for m in (3, 4, 5):
        rows = [r for r in cache.get(sweep_n_max + (1 if m == 5 else 0), m) if r[1]["coverable"]]
        bad = [{"instance": describe(g), "formula": f["conjecture"], "exact": f["exact"]}
               for g, f, _ in rows if f["conjecture"] != f["exact"]]
        lim = sweep_n_max + (1 if m == 5 else 0)
        reports.append(_report(f"tree-formula.m{m}", f"all [{m}]-coverable trees on <= {lim} vertices ({len(rows)})",
                               {"mismatches": []}, {"mismatches": bad}, sum(r[2] for r in rows)))
    return reports


def proved_failures(reports: Iterable[TrialReport]) -> list[TrialReport]:
    return [r for r in reports if r.verdict == "refuted" and claim_kind(r.claim) == "proved"]
