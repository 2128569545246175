import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coarse_ep import generators as gg
from coarse_ep.certificates import DistHitting, TwoCycles
from coarse_ep.distpack import (
    cover_cycle_four,
    cycle_ball,
    dist_pack_two,
    root_forest,
    select_subtrees,
    support_map,
    two_cycles_from_selection,
)
from coarse_ep.errors import InvalidInput
from coarse_ep.graph import build_graph, girth_cycle, set_distance
from coarse_ep.oracle import distance_packing_exists_bruteforce, verify_certificate


def _handles(d, attachments, L=None):
    L = L or 8 * d + 5
    return gg.cycle_with_handles(L, attachments, L), L


def test_cover_cycle_four_examples():
    assert len(cover_cycle_four((0, 1, 2), 1)) == 1
    X = cover_cycle_four(tuple(range(12)), 1)
    assert len(X) == 4 and cycle_ball(tuple(range(12)), X, 1) == frozenset(range(12))
    for d in (1, 2, 3):
        C = tuple(range(8 * d + 4))
        X = cover_cycle_four(C, d)
        assert len(X) == 4 and cycle_ball(C, X, d) == frozenset(C)
    with pytest.raises(InvalidInput):
        cover_cycle_four(tuple(range(13)), 1)


@given(st.integers(1, 4), st.data())
def test_cover_cycle_four_covers(d, data):
    L = data.draw(st.integers(3, 8 * d + 4))
    C = tuple(range(L))
    X = cover_cycle_four(C, d)
    assert len(X) <= 4 and cycle_ball(C, X, d) == frozenset(C)


def test_support_map_examples():
    C = tuple(range(13))
    sm = support_map(gg.cycle(13), C, 1)
    assert all(sm.anchor[v] == v for v in C) and sm.boundary == {}
    for d in (1, 2):
        L = 8 * d + 5
        # a pendant path of length d + 1 at vertex 3
        chain = [3] + list(range(L, L + d + 1))
        G = build_graph(L + d + 1, [(i, (i + 1) % L) for i in range(L)] + list(zip(chain, chain[1:])))
        sm = support_map(G, tuple(range(L)), d)
        far = chain[-1]
        assert set(sm.boundary) == {far}
        anchor, R = sm.boundary[far]
        assert anchor == 3 and R[0] == far and R[-1] == 3 and len(R) == d + 2


def test_select_subtrees_examples():
    G = gg.cycle(13)
    sel = select_subtrees(G, tuple(range(13)), 1, support_map(G, tuple(range(13)), 1))
    assert sel.t == 0 and sel.L == frozenset() and sel.W == frozenset()
    # one pendant path: one boundary vertex, no pair
    chain = [0, 13, 14, 15]
    G = build_graph(16, [(i, (i + 1) % 13) for i in range(13)] + list(zip(chain, chain[1:])))
    C = tuple(range(13))
    assert select_subtrees(G, C, 1, support_map(G, C, 1)).t == 0
    # one handle: one component of F with two boundary vertices
    G, L = _handles(1, [(0, 1)])
    C = tuple(range(L))
    sm = support_map(G, C, 1)
    sel = select_subtrees(G, C, 1, sm)
    assert sel.t == 1
    r = sel.rounds[0]
    F = [v for v in range(G.n) if v not in sm.anchor]
    rf = root_forest(G, F)
    # the handle interior is a path rooted at its smallest vertex; w is the LCA of its two ends
    assert {r.a, r.b} == set(sm.boundary)
    assert r.subtree == {v for v in F if _is_descendant(rf, v, r.w)}
    assert sel.supports(sm) == {0, 1}


def _is_descendant(rf, v, w):
    while v >= 0:
        if v == w:
            return True
        v = rf.parent[v]
    return False


def test_two_cycles_all_appendage_free():
    d = 1
    G, L = _handles(d, [(i * 5, i * 5 + 1) for i in range(4)], 20)
    C = tuple(range(L))
    sm = support_map(G, C, d)
    sel = select_subtrees(G, C, d, sm)
    assert sel.t == 4
    assert not any(set(sm.boundary[r.a][1]) & set(sm.boundary[r.b][1]) for r in sel.rounds)
    C1, C2 = two_cycles_from_selection(G, C, d, sm, sel)
    assert set_distance(G, C1, C2) > d


def test_two_cycles_with_two_appendages():
    d = 2
    G, L = _handles(d, [(0, 0), (7, 7), (14, 15), (21, 22)], 28)
    C = tuple(range(L))
    sm = support_map(G, C, d)
    sel = select_subtrees(G, C, d, sm)
    assert sel.t == 4
    C1, C2 = two_cycles_from_selection(G, C, d, sm, sel)
    handles = [set(range(L + i * L, L + (i + 1) * L)) for i in range(2)]
    # each returned cycle is a hanging loop, i.e. inside one of the two appendages
    assert {frozenset(set(c) - set(C)) for c in (C1, C2)} == {frozenset(h) for h in handles}
    assert set_distance(G, C1, C2) > d


def test_two_cycles_needs_four_rounds():
    G, L = _handles(1, [(0, 1)])
    C = tuple(range(L))
    sm = support_map(G, C, 1)
    with pytest.raises(InvalidInput):
        two_cycles_from_selection(G, C, 1, sm, select_subtrees(G, C, 1, sm))


def test_dist_pack_examples():
    for d in (1, 2, 3):
        edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
        chain = [2] + list(range(6, 6 + 2 * d - 1)) + [3]
        G = build_graph(6 + 2 * d - 1, edges + list(zip(chain, chain[1:])))
        res = dist_pack_two(G, d)
        assert isinstance(res, TwoCycles) and set_distance(G, res.C1, res.C2) > d
        C = gg.cycle(8 * d + 5)
        res = dist_pack_two(C, d)
        assert res == DistHitting(frozenset({0}), frozenset({0}), d)
    res = dist_pack_two(gg.complete(5), 1)
    assert isinstance(res, DistHitting) and len(res.X1) == 3 and len(res.X2) <= 4
    assert dist_pack_two(gg.path(4), 2) == DistHitting(frozenset(), frozenset(), 2)
    with pytest.raises(InvalidInput):
        dist_pack_two(gg.cycle(5), 0)


@pytest.mark.parametrize("n", range(2, 7))
def test_line_graphs_of_complete_bipartite(n):
    G = gg.line_graph(gg.complete_bipartite(n, n))
    assert isinstance(dist_pack_two(G, 2), DistHitting)


@given(st.integers(1, 3), st.integers(0, 7), st.integers(0, 10**6))
def test_handle_instances(d, h, seed):
    rng = random.Random(seed)
    spacing = 2 * d + 2 + rng.randint(0, 3)
    att = [((i * spacing, i * spacing) if rng.random() < 0.4 else (i * spacing, i * spacing + 1)) for i in range(h)]
    L = max(8 * d + 5, h * spacing + rng.randint(0, 5))
    G = gg.cycle_with_handles(L, att, L + rng.randint(0, 4))
    res = dist_pack_two(G, d)
    assert verify_certificate(G, res, d=d)
    assert isinstance(res, TwoCycles) == (h >= 4)


@given(st.integers(5, 60), st.floats(0.02, 0.12), st.integers(1, 3), st.integers(0, 10**6))
def test_random_graphs(n, p, d, seed):
    G = gg.gnp(n, p, seed)
    res = dist_pack_two(G, d)
    assert verify_certificate(G, res, d=d)


def test_high_girth_graphs_reach_selection():
    rng = random.Random(21)
    seen = set()
    for _ in range(40):
        n = rng.randint(40, 120)
        G = gg.random_girth_graph(n, n + rng.randint(-5, 3), 13, rng)
        res = dist_pack_two(G, 1)
        assert verify_certificate(G, res, d=1)
        C = girth_cycle(G)
        if isinstance(res, DistHitting) and C is not None and len(C) >= 13:
            seen.add(select_subtrees(G, C, 1, support_map(G, C, 1)).t)
    assert seen - {0}


def test_agrees_with_bruteforce_on_small_graphs():
    rng = random.Random(5)
    for _ in range(120):
        G = gg.gnp(rng.randint(4, 12), rng.uniform(0.1, 0.35), rng)
        d = rng.choice([1, 2])
        res = dist_pack_two(G, d)
        if not distance_packing_exists_bruteforce(G, d):
            assert isinstance(res, DistHitting)
        if isinstance(res, TwoCycles):
            assert distance_packing_exists_bruteforce(G, d)
