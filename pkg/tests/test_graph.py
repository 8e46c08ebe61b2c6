import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from mcover.graph import (
    CaterpillarSpec,
    Graph,
    GraphError,
    ParseError,
    build_caterpillar,
    canonical_tree_code,
    complete_graph,
    cycle_graph,
    diameter,
    from_graph6,
    graph_stats,
    k6_with_pendants,
    load_graph,
    path_graph,
    serialize,
    star_graph,
    to_graph6,
)


def test_edge_list_path():
    g = load_graph("0 1\n1 2", "edge-list")
    assert (g.n, g.m) == (3, 2)
    assert g.edges == ((0, 1), (1, 2))


def test_edge_list_comments_and_blank_lines():
    g = load_graph("# a triangle\n0 1\n\n1 2  # tail\n2 0\n", "edge-list")
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_cat_notation_examples():
    g = load_graph("CAT(0,1,1,1,0)", "cat-notation")
    assert (g.n, g.m, g.max_degree) == (10, 9, 3)
    # degrees 3,4,3,2,5,2: 5 spine edges and 9 pendant edges
    g = load_graph("CAT(1,2,1,0,3,0)", "cat-notation")
    assert (g.max_degree, g.m) == (5, 14)


@pytest.mark.parametrize(
    "text,fmt,needle",
    [
        ("0 1\n1", "edge-list", "line 2"),
        ("0 x", "edge-list", "non-integer"),
        ("", "edge-list", "empty"),
        ("CAT(0,1", "cat-notation", "CAT"),
        ("CAT()", "cat-notation", "CAT"),
        ("C~~", "graph6", "body"),
        ("A" + chr(20), "graph6", "characters"),
    ],
)
def test_parse_errors_name_the_problem(text, fmt, needle):
    with pytest.raises(ParseError, match=needle):
        load_graph(text, fmt)


@pytest.mark.parametrize(
    "text,needle",
    [
        ("0 0", "loop at vertex 0"),
        ("0 1\n1 0", r"duplicate edge \(0, 1\)"),
        ("0 1\n2 3", "disconnected"),
    ],
)
def test_validation_errors(text, needle):
    with pytest.raises(GraphError, match=needle):
        load_graph(text, "edge-list")


def test_unknown_format():
    with pytest.raises(ParseError):
        load_graph("0 1", "dot")


def test_build_caterpillar_structure():
    g = build_caterpillar(CaterpillarSpec((0, 1, 1, 1, 0)))
    spine = [(i, i + 1) for i in range(4)]
    assert sum(e in g.edges for e in spine) == 4
    assert g.m - 4 == 5
    # every spine vertex carries exactly one pendant edge
    for x in range(5):
        assert sum(g.degree(y) == 1 for y in g.neighbors(x)) == 1

    g = build_caterpillar((1, 1, 1, 1, 1))
    assert (g.n, g.m) == (12, 11)
    assert canonical_tree_code(build_caterpillar((0, 0))) == canonical_tree_code(path_graph(3))


def test_caterpillar_rejects_bad_spec():
    with pytest.raises(GraphError):
        CaterpillarSpec(())
    with pytest.raises(GraphError):
        CaterpillarSpec((1, -1))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=7))
def test_caterpillar_invariants(d):
    g = build_caterpillar(d)
    assert graph_stats(g)["is_caterpillar"]
    for i, di in enumerate(d):
        assert g.degree(i) == di + 2
    # the vertices of degree >= 2 are exactly the spine
    assert [x for x in range(g.n) if g.degree(x) >= 2] == list(range(len(d)))


def test_graph_stats_examples():
    assert graph_stats(path_graph(8)) == {
        "max_degree": 2, "edge_count": 8, "diameter": 8, "is_tree": True, "is_caterpillar": True,
    }
    s = graph_stats(build_caterpillar((0, 1, 1, 1, 0)))
    assert (s["max_degree"], s["edge_count"], s["diameter"]) == (3, 9, 6)
    s = graph_stats(k6_with_pendants())
    assert (s["max_degree"], s["edge_count"], s["is_tree"]) == (6, 21, False)


def bfs_diameter(g):
    h = nx.Graph(list(g.edges))
    return nx.diameter(h)


def test_diameter_against_networkx():
    for g in [build_caterpillar((0, 1, 1, 1, 0)), k6_with_pendants(), cycle_graph(7), build_caterpillar((2, 0, 3))]:
        assert diameter(g) == bfs_diameter(g)


@pytest.mark.parametrize("k", range(1, 21))
def test_path_diameter(k):
    assert diameter(path_graph(k)) == k


def test_not_caterpillar():
    # spider with three legs of length 2
    g = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert not graph_stats(g)["is_caterpillar"]
    assert not graph_stats(cycle_graph(5))["is_caterpillar"]


def test_canonical_code_examples():
    p4 = path_graph(3)
    assert canonical_tree_code(p4) == canonical_tree_code(p4.relabel([2, 0, 3, 1]))
    assert canonical_tree_code(p4) != canonical_tree_code(star_graph(3))
    with pytest.raises(GraphError):
        canonical_tree_code(cycle_graph(4))


def prufer_trees(n):
    """All labeled trees on n >= 2 vertices via Prufer sequences."""
    for seq in itertools.product(range(n), repeat=n - 2):
        h = nx.from_prufer_sequence(list(seq)) if n > 2 else nx.Graph([(0, 1)])
        yield Graph.from_edges(n, list(h.edges()))


def test_two_trees_on_four_vertices():
    codes = {canonical_tree_code(t) for t in prufer_trees(4)}
    assert len(codes) == 2


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 14), st.randoms(use_true_random=False))
def test_canonical_code_invariant_under_relabeling(n, rnd):
    h = nx.random_labeled_tree(n, seed=rnd.randrange(10**6))
    t = Graph.from_edges(n, list(h.edges()))
    code = canonical_tree_code(t)
    for _ in range(100):
        perm = list(range(n))
        rnd.shuffle(perm)
        assert canonical_tree_code(t.relabel(perm)) == code


def test_graph6_against_networkx():
    rng = random.Random(3)
    graphs = [k6_with_pendants(), complete_graph(7), path_graph(1), cycle_graph(12)]
    for _ in range(30):
        n = rng.randint(2, 62)
        h = nx.random_labeled_tree(n, seed=rng.randrange(10**6))
        graphs.append(Graph.from_edges(n, list(h.edges())))
    for g in graphs:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        ref = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert to_graph6(g) == ref
        assert from_graph6(ref) == g


def test_graph6_triangle_and_header():
    tri = from_graph6("Bw")
    assert tri.edges == ((0, 1), (0, 2), (1, 2))
    assert from_graph6(">>graph6<<Bw") == tri


@pytest.mark.parametrize("fmt", ["graph6", "edge-list"])
def test_roundtrip(fmt):
    for g in [k6_with_pendants(), build_caterpillar((1, 2, 1, 0, 3, 0)), cycle_graph(5), path_graph(1)]:
        assert load_graph(serialize(g, fmt), fmt) == g


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=2, max_size=6))
def test_cat_roundtrip(d):
    d = min(tuple(d), tuple(reversed(d)))
    g = build_caterpillar(d)
    text = serialize(g, "cat-notation")
    assert text == "CAT(" + ",".join(map(str, d)) + ")"
    assert load_graph(text, "cat-notation") == g
