import random

import networkx as nx
import pytest

from mcover.coloring import (
    ColorClasses,
    PreconditionError,
    balance_matchings,
    chromatic_index,
    edge_coloring,
    equalized_coloring,
    is_bipartite,
)
from mcover.graph import (
    Graph,
    build_caterpillar,
    complete_graph,
    cycle_graph,
    k6_with_pendants,
    path_graph,
    petersen_graph,
    star_graph,
)
from mcover.lab import random_budgeted_classes, tree_universe
from mcover.matchings import is_matching


def popc(x):
    return bin(x).count("1")


def check_proper(g, classes):
    seen = 0
    for c in classes:
        assert is_matching(g, c)
        assert not seen & c
        seen |= c
    assert seen == g.full_mask


def test_chromatic_index_examples():
    assert chromatic_index(build_caterpillar((1, 2, 1, 0, 3, 0))) == 5
    assert chromatic_index(cycle_graph(5)) == 3
    assert chromatic_index(k6_with_pendants()) == 6
    assert chromatic_index(petersen_graph()) == 4
    assert chromatic_index(complete_graph(7)) == 7
    assert chromatic_index(complete_graph(6)) == 5


def test_chromatic_index_trees_and_vizing(atlas_small):
    for g in tree_universe(12, 2):
        assert chromatic_index(g) == g.max_degree
    for g in atlas_small:
        chi = chromatic_index(g)
        assert chi in (g.max_degree, g.max_degree + 1)
        if is_bipartite(g):
            assert chi == g.max_degree
        classes = edge_coloring(g, chi)
        check_proper(g, [c for c in classes])
        assert edge_coloring(g, chi - 1) is None


def test_equalized_examples():
    assert sorted(equalized_coloring(star_graph(3)).sizes()) == [1, 1, 1]
    assert sorted(equalized_coloring(path_graph(4)).sizes()) == [2, 2]
    cc = equalized_coloring(build_caterpillar((1, 2, 1, 0, 3, 0)))
    check_proper(build_caterpillar((1, 2, 1, 0, 3, 0)), cc.classes)
    # 14 edges in 5 classes
    assert sorted(cc.sizes()) == [2, 3, 3, 3, 3]


def _equalized_ok(g):
    cc = equalized_coloring(g)
    check_proper(g, cc.classes)
    sizes = cc.sizes()
    assert len(sizes) == chromatic_index(g)
    assert max(sizes) - min(sizes) <= 1


def test_equalized_all_small_trees():
    for g in tree_universe(12, 2):
        _equalized_ok(g)


def test_equalized_random_graphs():
    rng = random.Random(11)
    done = 0
    while done < 60:
        n = rng.randint(3, 10)
        h = nx.gnp_random_graph(n, rng.uniform(0.3, 0.8), seed=rng.randrange(10**6))
        if not nx.is_connected(h):
            continue
        _equalized_ok(Graph.from_edges(n, list(h.edges())))
        done += 1


def test_balance_uniform_input_unchanged():
    g = path_graph(8)
    classes = [0b01010101, 0b10101010]
    assert balance_matchings(g, classes, 4) == classes


def test_balance_path_nine_edges():
    g = path_graph(9)
    e = lambda *idx: sum(1 << (i - 1) for i in idx)  # noqa: E731  e1..e9 -> bits 0..8
    classes = [e(1, 3, 5, 7, 9), e(2, 4, 6, 8), e(1, 5, 9)]
    out = balance_matchings(g, classes, 4)
    assert [popc(c) for c in out] == [4, 4, 4]
    assert out[0] | out[1] | out[2] == g.full_mask
    assert all(is_matching(g, c) for c in out)
    # the single exchange moves e3 from the first to the third class
    assert out == [e(1, 5, 7, 9), e(2, 4, 6, 8), e(1, 3, 5, 9)]


def test_balance_rejects_bad_budget():
    g = path_graph(9)
    with pytest.raises(PreconditionError, match="sum"):
        balance_matchings(g, [0b101010101, 0b010101010], 4)
    with pytest.raises(PreconditionError, match="cover"):
        balance_matchings(g, [0b1, 0b100], 1)
    with pytest.raises(PreconditionError, match="not a matching"):
        balance_matchings(g, [0b11, 0b111111100], 5)


def test_balance_random_inputs():
    rng = random.Random(5)
    pool = list(tree_universe(9, 5)) + [petersen_graph(), k6_with_pendants(), complete_graph(5)]
    done = 0
    while done < 300:
        g = rng.choice(pool)
        m = rng.randint(2, 5)
        s = -(-g.m // m) + rng.randint(0, 2)
        classes = random_budgeted_classes(g, m, s, rng)
        if classes is None:
            continue
        done += 1
        out = balance_matchings(g, ColorClasses(classes), m)
        assert len(out) == s
        assert all(popc(c) == m and is_matching(g, c) for c in out)
        union = 0
        for c in out:
            union |= c
        assert union == g.full_mask
