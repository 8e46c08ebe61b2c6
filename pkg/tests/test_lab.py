import json

import networkx as nx
import pytest

from mcover import lab
from mcover.graph import Graph, canonical_tree_code, k6_with_pendants, path_graph, petersen_graph
from mcover.lab import (
    REPORT_FIELDS,
    TrialReport,
    build_counterexample_graph,
    check_graph_conjecture,
    check_tree_conjecture,
    enumerate_trees,
)

from test_graph import prufer_trees

# unlabeled tree counts for n = 1..16 (OEIS A000055)
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320]


def test_tree_counts_small():
    assert len(list(enumerate_trees(1))) == 1
    assert len(list(enumerate_trees(7))) == 11
    assert len(list(enumerate_trees(10))) == 106


@pytest.mark.parametrize("n", range(2, 8))
def test_trees_match_prufer_oracle(n):
    oracle = {canonical_tree_code(t) for t in prufer_trees(n)}
    ours = [canonical_tree_code(t) for t in enumerate_trees(n)]
    assert len(ours) == len(set(ours))
    assert set(ours) == oracle


@pytest.mark.parametrize("n", range(8, 13))
def test_trees_match_networkx_oracle(n):
    oracle = set()
    for h in nx.nonisomorphic_trees(n):
        oracle.add(canonical_tree_code(Graph.from_edges(n, list(h.edges()))))
    ours = [canonical_tree_code(t) for t in enumerate_trees(n)]
    assert len(ours) == len(set(ours)) == TREE_COUNTS[n - 1]
    assert set(ours) == oracle


def test_tree_stream_is_sorted_and_repeatable():
    codes = [canonical_tree_code(t) for t in enumerate_trees(9)]
    assert codes == sorted(codes)
    assert codes == [canonical_tree_code(t) for t in enumerate_trees(9)]


def test_enumerate_trees_range():
    with pytest.raises(ValueError):
        list(enumerate_trees(17))


def test_counterexample_graph():
    g = build_counterexample_graph()
    assert (g.n, g.m, g.max_degree) == (12, 21, 6)
    assert g == k6_with_pendants()


def test_counterexample_rejects_wrong_graph(monkeypatch):
    monkeypatch.setattr(lab, "k6_with_pendants", petersen_graph)
    with pytest.raises(lab.ReconstructionError):
        build_counterexample_graph()


def test_tree_conjecture_m3():
    reports = list(check_tree_conjecture(10, 3, workers=1))
    assert reports and all(r.verdict == "confirmed" for r in reports)
    for r in reports:
        c = r.computed
        compat = max(c["chromatic"], c["density"])
        # trees are [3]-compatible: the splitting terms never exceed the classic ones
        assert max(-(-s // int(t)) for t, s in c["splitting"].items()) <= compat
        assert c["exact"] == compat


def test_tree_conjecture_m4_exceptions():
    reports = list(check_tree_conjecture(12, 4, workers=1))
    assert all(r.verdict == "confirmed" for r in reports)
    needs_s1 = [r.instance.split()[0] for r in reports
                if r.computed["exact"] > max(r.computed["chromatic"], r.computed["density"])]
    assert sorted(needs_s1) == ["CAT(0,1,1,1,0)", "CAT(0,1,1,1,1)", "CAT(1,1,1,1,1)"]


def test_tree_conjecture_m5_includes_cat():
    reports = list(check_tree_conjecture(13, 5, workers=1))
    names = [r.instance.split()[0] for r in reports]
    assert "CAT(0,1,1,1,1,1,0)" not in names  # 14 vertices, beyond the universe
    assert all(r.verdict == "confirmed" for r in reports)


def test_graph_conjecture_examples():
    reports = list(check_graph_conjecture([k6_with_pendants(), path_graph(8)], 4, workers=1))
    assert [r.verdict for r in reports] == ["confirmed", "confirmed"]
    assert reports[0].computed["exact"] == 8
    assert reports[0].computed["splitting"]["2"] == 8


def test_petersen_analogue_refuted():
    (r,) = check_graph_conjecture([petersen_graph()], 5, workers=1)
    assert r.verdict == "refuted"
    assert r.computed["exact"] == 5 and r.expected["formula"] == 4


def test_report_schema_roundtrip(tmp_path):
    r = TrialReport("caterpillars-m4.index", "CAT(0,1,1,1,0)", {"index": 4}, {"index": 4}, "confirmed", 3)
    line = r.to_json()
    assert list(json.loads(line)) == list(REPORT_FIELDS)
    assert TrialReport.from_json(line) == r
    path = tmp_path / "r.jsonl"
    lab.write_reports([r, r], str(path))
    assert lab.read_reports(str(path)) == [r, r]
    with pytest.raises(ValueError):
        TrialReport.from_json('{"claim": "x"}')


def test_parallel_and_serial_sweeps_agree():
    serial = [r.to_json(timing=False) for r in check_tree_conjecture(11, 4, workers=1)]
    parallel = [r.to_json(timing=False) for r in check_tree_conjecture(11, 4, workers=2)]
    assert serial == parallel


def test_quick_suite_deterministic():
    a = [r.to_json(timing=False) for r in lab.verify_paper_claims(quick=True, workers=1)]
    b = [r.to_json(timing=False) for r in lab.verify_paper_claims(quick=True, workers=1)]
    assert a == b
    reports = [TrialReport.from_json(x) for x in a]
    assert lab.proved_failures(reports) == []
    verdicts = {(r.claim, r.instance): r.verdict for r in reports}
    assert verdicts[("cat-m5.bound-at-least-4", "CAT(0,1,1,1,1,1,0)")] == "refuted"
