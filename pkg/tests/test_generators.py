import networkx as nx
import pytest

from coarse_ep import generators as gg
from coarse_ep.errors import InvalidInput
from coarse_ep.graph import girth_cycle
from coarse_ep.oracle import is_k1t_free

from conftest import to_nx


def test_structural_examples():
    L = gg.line_graph(gg.complete_bipartite(3, 3))
    assert L.n == 9 and {L.degree(v) for v in range(9)} == {4} and is_k1t_free(L, 3)
    S = gg.subdivide(gg.complete(4), 2)
    assert S.n == 16 and len(girth_cycle(S)) == 9
    G = gg.grid(3, 3)
    assert G.n == 9 and G.m == 12


def test_named_graphs_match_networkx():
    assert nx.is_isomorphic(to_nx(gg.petersen()), nx.petersen_graph())
    assert nx.is_isomorphic(to_nx(gg.heawood()), nx.heawood_graph())
    assert nx.is_isomorphic(to_nx(gg.line_graph(gg.complete(4))), nx.line_graph(nx.complete_graph(4)))


def test_random_cubic():
    for n in (4, 10, 40):
        G = gg.random_cubic(n, seed=n)
        assert all(G.degree(v) == 3 for v in range(n))
    assert gg.random_cubic(20, seed=5) == gg.random_cubic(20, seed=5)
    with pytest.raises(InvalidInput):
        gg.random_cubic(7)
    G = gg.high_girth_cubic(30, 5, seed=1)
    assert len(girth_cycle(G)) >= 5


def test_random_girth_graph():
    G = gg.random_girth_graph(60, 80, 9, seed=2)
    assert len(girth_cycle(G)) >= 9


def test_planar_families():
    for seed in range(5):
        for G in (gg.stacked_triangulation(30, seed), gg.outerplanar(20, 8, seed), gg.grid_subgraph(5, 6, 0.7, seed)):
            assert nx.check_planarity(to_nx(G))[0]
    T = gg.stacked_triangulation(12, 0)
    assert T.m == 3 * 12 - 6


def test_cycle_with_handles():
    G = gg.cycle_with_handles(13, [(0, 0), (4, 5)], 3)
    assert G.n == 19 and G.m == 13 + 2 * 4
    with pytest.raises(InvalidInput):
        gg.cycle_with_handles(13, [(0, 13)], 3)


def test_gen_dispatch():
    assert gg.gen("grid", {"a": 2, "b": 3}) == gg.grid(2, 3)
    assert gg.gen("gnp", {"n": 12, "p": 0.3}, 7) == gg.gen("gnp", {"n": 12, "p": 0.3}, 7)
    with pytest.raises(InvalidInput):
        gg.gen("nope", {})
    with pytest.raises(InvalidInput):
        gg.gen("grid", {"a": 2})
    with pytest.raises(InvalidInput):
        gg.gnp(5, 1.5)
