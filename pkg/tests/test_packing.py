import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coarse_ep import generators as gg
from coarse_ep.certificates import HittingSet, InducedPacking
from coarse_ep.eardecomp import HPATH, TYPE1, TYPE2, Ear, EarDecomp, build_maximal
from coarse_ep.errors import InternalTheoremViolation, InvalidInput
from coarse_ep.graph import build_graph, suppress_degree_two
from coarse_ep.oracle import find_disjoint_cycles, min_fvs_bruteforce, verify_certificate
from coarse_ep.packing import (
    build_chord_forest,
    build_overlay_forest,
    derive_h_prime,
    disjoint_cycles_min_degree3,
    f_bound,
    induced_pack_or_hit,
    induced_pack_or_hit_with_oracle,
    oracle_bound,
    s_k,
    two_disjoint_cycles_subcubic,
)


def test_s_k_values():
    assert s_k(1) == 2
    assert s_k(2) == 40
    assert s_k(4) == 112
    with pytest.raises(InvalidInput):
        s_k(0)


def test_f_bound_values():
    assert f_bound(1) == 18
    assert f_bound(2) == 524
    assert f_bound(2) - f_bound(1) == 506
    assert all(f_bound(k + 1) - f_bound(k) >= 4 for k in range(1, 30))
    assert oracle_bound(3, 2) == 63 * 3 + 164 * 2 - 173


def test_overlay_forest_examples():
    C7 = gg.cycle(7)
    ov = build_overlay_forest(build_maximal(C7))
    assert ov.forest.n == 1
    two = gg.disjoint_union(gg.cycle(5), gg.cycle(5))
    ov = build_overlay_forest(build_maximal(two))
    assert ov.forest.n == 2 and ov.forest.m == 0
    # a type-1 ear hanging off the first cycle at vertex 0
    G = build_graph(9, [(i, (i + 1) % 5) for i in range(5)] + [(0, 5), (5, 6), (6, 7), (7, 8), (8, 0)])
    D = EarDecomp(G, (Ear(TYPE2, (0, 1, 2, 3, 4), 1, 1), Ear(TYPE1, (0, 5, 6, 7, 8), 2, 1, 0)))
    ov = build_overlay_forest(D)
    assert ov.forest.edges() == [(0, 1)]


def test_chord_forest_examples():
    assert build_chord_forest(build_maximal(gg.cycle(9))).forest.n == 0
    # H-path 0-10-11-1 whose ends are joined by the older cycle edge 0-1
    G = build_graph(12, [(i, (i + 1) % 10) for i in range(10)] + [(0, 10), (10, 11), (11, 1)])
    D = EarDecomp(G, (Ear(TYPE2, tuple(range(10)), 1, 1), Ear(HPATH, (0, 10, 11, 1), 1, 2)))
    ch = build_chord_forest(D)
    assert ch.forest.n == 1 and ch.keys == ((1, 2),)
    assert sorted(ch.cycles[0]) == [0, 1, 10, 11]


def test_h_prime_examples():
    C = gg.cycle(8)
    Hp = derive_h_prime(build_maximal(C))
    assert sorted(Hp.vertices) == list(range(8)) and Hp.branch_count() == 0
    # cycle plus a length-1 H-path: its a-end is removed and the chord vanishes
    G = build_graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(0, 4)])
    D = EarDecomp(G, (Ear(TYPE2, tuple(range(8)), 1, 1), Ear(HPATH, (0, 4), 1, 2)))
    Hp = derive_h_prime(D)
    assert 0 not in Hp.vertices
    assert Hp.graph.n == 0 or all(Hp.graph.degree(v) >= 2 for v in range(Hp.graph.n))


@given(st.integers(10, 60), st.integers(0, 10**6))
def test_h_prime_keeps_branch_vertices(n, seed):
    rng = random.Random(seed)
    G = gg.random_girth_graph(n, rng.randint(n, 2 * n), 5, rng)
    D = build_maximal(G)
    Hp = derive_h_prime(D)
    assert all(Hp.graph.degree(v) in (2, 3) for v in range(Hp.graph.n))
    ov = build_overlay_forest(D)
    ch = build_chord_forest(D)
    assert ov.forest.n == D.t
    for k in range(1, 5):
        if D.t <= 2 * k - 2 and ch.forest.n <= 2 * k - 2:
            assert Hp.branch_count() >= len(D.branch_vertices) - 18 * (k - 1)


def test_disjoint_cycles_min_degree3_examples():
    M, emap = suppress_degree_two(gg.complete(4))
    cycles = disjoint_cycles_min_degree3(M, emap, 1)
    assert len(cycles) == 1 and len(cycles[0]) == 3
    M, emap = suppress_degree_two(gg.complete_bipartite(3, 3))
    with pytest.raises(InternalTheoremViolation):
        disjoint_cycles_min_degree3(M, emap, 2)
    G = gg.random_cubic(40, seed=1)
    M, emap = suppress_degree_two(G)
    c1, c2 = disjoint_cycles_min_degree3(M, emap, 2)
    assert not set(c1) & set(c2)
    assert all(G.has_edge(c[i], c[i - 1]) for c in (c1, c2) for i in range(len(c)))


def test_two_disjoint_cycles_subcubic_examples():
    assert two_disjoint_cycles_subcubic(gg.complete_bipartite(3, 3)) is None
    wagner = build_graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])
    c1, c2 = two_disjoint_cycles_subcubic(wagner)
    assert not set(c1) & set(c2)
    prism = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    c1, c2 = two_disjoint_cycles_subcubic(prism)
    assert sorted(map(sorted, (c1, c2))) == [[0, 1, 2], [3, 4, 5]]
    with pytest.raises(InvalidInput):
        two_disjoint_cycles_subcubic(gg.complete(5))


def test_induced_pack_or_hit_examples():
    K5 = gg.complete(5)
    res = induced_pack_or_hit(K5, 2)
    assert isinstance(res, HittingSet) and len(res.X) <= f_bound(2)
    two = gg.disjoint_union(gg.cycle(3), gg.cycle(3))
    res = induced_pack_or_hit(two, 2)
    assert isinstance(res, InducedPacking)
    assert sorted(map(sorted, res.cycles)) == [[0, 1, 2], [3, 4, 5]]
    res = induced_pack_or_hit(gg.path(7), 3)
    assert isinstance(res, HittingSet) and res.X == frozenset()
    with pytest.raises(InvalidInput):
        induced_pack_or_hit(K5, 0)


@given(st.integers(1, 40), st.sampled_from([0.05, 0.1, 0.2]), st.integers(1, 4), st.integers(0, 10**6))
def test_certificates_always_verify(n, p, k, seed):
    G = gg.gnp(n, p, seed)
    res = induced_pack_or_hit(G, k)
    assert verify_certificate(G, res, k=k)
    if isinstance(res, HittingSet):
        assert len(res.X) <= f_bound(k)


@given(st.integers(10, 50), st.integers(1, 3), st.integers(0, 10**6))
def test_paranoid_mode_on_girth5(n, k, seed):
    rng = random.Random(seed)
    G = gg.random_girth_graph(n, rng.randint(n, 2 * n), 5, rng)
    res = induced_pack_or_hit(G, k, paranoid=True)
    assert verify_certificate(G, res, k=k)


_H = {1: 0, 2: 3, 3: 6}


def brute_oracle(H, k):
    found = find_disjoint_cycles(H, k)
    if found is not None:
        return found
    return min_fvs_bruteforce(H)


def test_oracle_variant_on_tiny_graphs():
    rng = random.Random(4)
    for _ in range(150):
        n = rng.randint(3, 12)
        G = gg.gnp(n, rng.choice([0.2, 0.3, 0.5]), rng)
        k = rng.choice([1, 2, 3])
        res = induced_pack_or_hit_with_oracle(G, k, brute_oracle, _H[k])
        assert verify_certificate(G, res, k=k)
        if isinstance(res, HittingSet):
            assert res.theorem == "oracle" and len(res.X) <= oracle_bound(_H[k], k)


def test_oracle_variant_forest():
    res = induced_pack_or_hit_with_oracle(gg.path(9), 2, brute_oracle, 3)
    assert isinstance(res, HittingSet) and res.X == frozenset()


def greedy_oracle(H, k):
    M, emap = suppress_degree_two(H)
    try:
        return disjoint_cycles_min_degree3(M, emap, k)
    except InternalTheoremViolation:
        return frozenset(emap.vertex_ids)


def test_greedy_oracle_matches_builtin():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(10, 60)
        G = gg.random_girth_graph(n, rng.randint(n, 2 * n), 5, rng)
        k = rng.choice([1, 2, 3])
        a = induced_pack_or_hit(G, k)
        b = induced_pack_or_hit_with_oracle(G, k, greedy_oracle, lambda j: math.ceil(s_k(j)))
        assert type(a) is type(b)
        assert verify_certificate(G, b, k=k)


def test_oracle_contract_enforced():
    # one cycle: the overlay forest has a single node, so k=2 reaches the oracle
    C7 = gg.cycle(7)
    with pytest.raises(InvalidInput):
        induced_pack_or_hit_with_oracle(C7, 2, lambda H, k: frozenset(), 3)
    with pytest.raises(InvalidInput):
        induced_pack_or_hit_with_oracle(C7, 2, lambda H, k: [(0, 1, 2)], 3)
    with pytest.raises(InvalidInput):
        induced_pack_or_hit_with_oracle(C7, 2, lambda H, k: frozenset(range(H.n)), 3)
