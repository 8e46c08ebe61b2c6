from __future__ import annotations

import itertools

import networkx as nx
import pytest

from mcover.graph import Graph, iter_bits


def naive_matchings(g, m):
    """Size-m edge subsets with no shared vertex, by plain subset filtering."""
    out = []
    for combo in itertools.combinations(range(g.m), m):
        verts = [v for i in combo for v in g.edges[i]]
        if len(set(verts)) == 2 * m:
            out.append(sum(1 << i for i in combo))
    return out


def brute_force_index(g, m, k_max=12):
    """Smallest number of distinct m-matchings whose union is E(G); None if uncoverable."""
    mats = naive_matchings(g, m)
    full = (1 << g.m) - 1
    union = 0
    for x in mats:
        union |= x
    if union != full or not mats:
        return None
    for k in range(1, k_max + 1):
        for combo in itertools.combinations(mats, k):
            u = 0
            for x in combo:
                u |= x
            if u == full:
                return k
    raise AssertionError("k_max too small")


def small_graphs(max_edges=12):
    """Connected graphs from the atlas (<= 7 vertices) with at most max_edges edges."""
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() >= 2 and nx.is_connected(h) and h.number_of_edges() <= max_edges:
            yield Graph.from_edges(h.number_of_nodes(), list(h.edges()))


@pytest.fixture(scope="session")
def atlas_small():
    return list(small_graphs(12))


def bits(mask):
    return sorted(iter_bits(mask))


_CRITERIA: dict[int, tuple[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and rep.passed):
        return
    number, title = mark.args
    _, outcomes = _CRITERIA.setdefault(number, (title, []))
    outcomes.append(rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, outcomes = _CRITERIA[number]
        verdict = "PASS" if outcomes and all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {title}")
