import random

from hypothesis import given
from hypothesis import strategies as st

from coarse_ep import generators as gg
from coarse_ep.eardecomp import (
    HPATH,
    TYPE1,
    TYPE2,
    Ear,
    EarDecomp,
    build_maximal,
    compute_yz,
    find_shortest_H_path,
    find_type1_ear,
    find_type2_ear,
    validate,
)
from coarse_ep.graph import ball, build_graph, is_cycle


def _one_ear(G, cyc):
    return EarDecomp(G, (Ear(TYPE2, tuple(cyc), 1, 1),))


def test_build_maximal_small_cases():
    assert build_maximal(gg.path(10)).ears == ()
    assert validate(gg.path(10), build_maximal(gg.path(10))).ok
    D = build_maximal(gg.cycle(7))
    assert D.t == 1 and len(D.ears) == 1 and D.ears[0].kind == TYPE2
    assert sorted(D.ears[0].vertices) == list(range(7))
    P = gg.petersen()
    D = build_maximal(P)
    assert D.t >= 1 and len(D.ears[0].vertices) == 5 and is_cycle(P, D.ears[0].vertices)
    assert validate(P, D).ok


def test_yz_examples():
    C = gg.cycle(6)
    yz = compute_yz(C, _one_ear(C, range(6)))
    assert yz.Y == frozenset() and yz.Z == frozenset()
    empty = EarDecomp(C, ())
    assert compute_yz(C, empty).Y == frozenset() == compute_yz(C, empty).Z


def test_yz_cycle_plus_hpath_matches_bfs():
    # a 10-cycle with an H-path of length 5 between opposite vertices 0 and 5
    G = build_graph(14, [(i, (i + 1) % 10) for i in range(10)] + [(0, 10), (10, 11), (11, 12), (12, 13), (13, 5)])
    D = EarDecomp(G, (Ear(TYPE2, tuple(range(10)), 1, 1), Ear(HPATH, (0, 10, 11, 12, 13, 5), 1, 2)))
    yz = compute_yz(G, D)
    assert D.branch_vertices == {0, 5}
    expect = ball(D.graph, [0, 5], 2) & D.vertex_set
    assert yz.Y == expect
    # each branch vertex reaches 2 steps along its three arcs: 2 * (1 + 3 * 2) = 14 > 10
    assert len(yz.Y) == 14
    assert validate(G, D).ok


def test_find_shortest_h_path_examples():
    G = build_graph(9, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6), (6, 7), (7, 8), (8, 3)])
    D = _one_ear(G, range(6))
    assert find_shortest_H_path(G, D) == (0, 6, 7, 8, 3)
    C6 = gg.cycle(6)
    assert find_shortest_H_path(C6, _one_ear(C6, range(6))) is None
    chord = build_graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    assert find_shortest_H_path(chord, _one_ear(chord, range(6))) == (0, 3)


def test_find_type1_examples():
    G = build_graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7), (7, 8), (8, 0)])
    cyc, c = find_type1_ear(G, _one_ear(G, range(5)))
    assert c == 0 and sorted(cyc) == [0, 5, 6, 7, 8]
    C5 = gg.cycle(5)
    assert find_type1_ear(C5, _one_ear(C5, range(5))) is None
    # two cycles through 0 besides the decomposition: lengths 5 and 7
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(0, 5), (5, 6), (6, 7), (7, 8), (8, 0)]
    edges += [(0, 9), (9, 10), (10, 11), (11, 12), (12, 13), (13, 14), (14, 0)]
    G = build_graph(15, edges)
    cyc, c = find_type1_ear(G, _one_ear(G, range(5)))
    assert c == 0 and len(cyc) == 5


def test_find_type2_examples():
    P = gg.petersen()
    c = find_type2_ear(P, EarDecomp(P, ()))
    assert len(c) == 5 and is_cycle(P, c)
    T = gg.path(6)
    assert find_type2_ear(T, EarDecomp(T, ())) is None
    two = gg.disjoint_union(gg.cycle(5), gg.cycle(5))
    assert sorted(find_type2_ear(two, _one_ear(two, range(5)))) == list(range(5, 10))


def test_validate_flags_non_minimal_hpath():
    # the long H-path 0..4 is used although 0-11-4 is shorter
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(0, 8), (8, 9), (9, 10), (10, 4), (0, 11), (11, 4)]
    G = build_graph(12, edges)
    D = EarDecomp(G, (Ear(TYPE2, tuple(range(8)), 1, 1), Ear(HPATH, (0, 8, 9, 10, 4), 1, 2)))
    rep = validate(G, D)
    assert not rep.ok
    bad = {c.name: c for c in rep.failures()}
    assert "C_minimal" in bad
    assert bad["C_minimal"].witness is not None


def test_validate_flags_wrong_first_ear():
    P = gg.petersen()
    D = build_maximal(P)
    # replace the first ear by a longer cycle: minimality of type-2 ears breaks
    long_cycle = (0, 1, 2, 3, 8, 5)
    assert is_cycle(P, long_cycle)
    bad = EarDecomp(P, (Ear(TYPE2, long_cycle, 1, 1),) + D.ears[1:])
    assert not validate(P, bad).ok


def test_ear_kinds_and_phases():
    rng = random.Random(7)
    seen = set()
    for _ in range(60):
        G = gg.random_girth_graph(rng.randint(10, 40), rng.randint(10, 60), 5, rng)
        D = build_maximal(G)
        for e in D.ears:
            seen.add(e.kind)
            assert (e.index == 1) == (e.kind in (TYPE1, TYPE2))
        assert [p[0].index for p in D.phases()] == [1] * D.t
    assert seen == {TYPE1, TYPE2, HPATH}


@given(st.integers(8, 40), st.integers(0, 10**6))
def test_build_maximal_validates_on_girth5(n, seed):
    rng = random.Random(seed)
    G = gg.random_girth_graph(n, rng.randint(n, 2 * n), 5, rng)
    D = build_maximal(G)
    rep = validate(G, D)
    assert rep.ok, rep.failures()
    yz = D.yz
    assert yz.Y == ball(D.graph, D.branch_vertices, 2) & D.vertex_set
    outside = {w for y in yz.Y for w in G.adj[y] if w not in D.vertex_set}
    assert yz.Z == yz.Y | outside


@given(st.integers(4, 25), st.floats(0.05, 0.4), st.integers(0, 10**6))
def test_build_maximal_validates_on_any_graph(n, p, seed):
    G = gg.gnp(n, p, seed)
    D = build_maximal(G)
    assert validate(G, D).ok
