"""Induced cycle packings versus radius-1 hitting sets.

The recursion peels off short cycles (length at most 4) together with their
closed neighbourhood. On girth at least 5 it builds a maximal coarse
ear-decomposition and reads a packing off one of three sources (phase-opening
cycles, chorded ears, or many disjoint cycles in a trimmed subcubic core).
If none yields ``k`` cycles, the non-admissible vertices plus one vertex per
phase-opening cycle form the hitting set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import eardecomp
from .certificates import HittingSet, InducedPacking
from .eardecomp import HPATH, EarDecomp
from .errors import InternalTheoremViolation, InvalidInput
from .graph import (
    ExpansionMap,
    Graph,
    Multigraph,
    ball,
    build_graph,
    girth_cycle,
    is_cycle,
    is_forest,
    forest_max_independent_set,
    lift_cycle,
    mask,
    edge_lengths,
    multigraph_shortest_cycle,
    shortest_cycle_through,
    suppress_degree_two,
    two_core,
)


def s_k(k: int) -> float:
    if k <= 0:
        raise InvalidInput(f"k must be positive, got {k}")
    if k == 1:
        return 2.0
    return 4 * k * (math.log2(k) + math.log2(math.log2(k)) + 4)


def f_bound(k: int) -> float:
    return 9 * s_k(k) + 164 * (k - 1)


def oracle_bound(h: int, k: int) -> float:
    # clamped: the formula is negative for h = 0, k = 1, where X is always empty
    return max(0, 63 * h + 164 * k - 173)


# -- auxiliary forests -----------------------------------------------------------


@dataclass(frozen=True)
class OverlayForest:
    """Node ``i - 1`` stands for the cycle opening phase ``i``."""

    forest: Graph
    cycles: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ChordForest:
    """One node per ear whose ends were already joined by an earlier edge."""

    forest: Graph
    keys: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]


def _assert_forest(F: Graph, what: str) -> None:
    if not is_forest(F):
        raise InternalTheoremViolation(f"{what} contains a cycle")


def build_overlay_forest(D: EarDecomp) -> OverlayForest:
    firsts = [p[0] for p in D.phases()]
    owners: dict[int, set[int]] = {}
    for i, ear in enumerate(firsts):
        for v in ear.vertices:
            owners.setdefault(v, set()).add(i)
    H = D.graph
    edges = set()
    for i, ear in enumerate(firsts):
        for v in ear.vertices:
            for w in (v,) + H.adj[v]:
                for j in owners.get(w, ()):
                    if j != i:
                        edges.add((min(i, j), max(i, j)))
    F = build_graph(len(firsts), edges)
    _assert_forest(F, "overlay forest")
    return OverlayForest(F, tuple(e.vertices for e in firsts))


def _edge_owner(D: EarDecomp) -> dict[tuple[int, int], int]:
    owner = {}
    for pos, ear in enumerate(D.ears):
        for e in ear.edges():
            owner[e] = pos
    return owner


def chord_keys(D: EarDecomp) -> list[int]:
    """Positions of ears ``P_{i,j}`` (``j >= 2``) whose ends span an older ℋ-edge."""
    owner = _edge_owner(D)
    out = []
    for pos, ear in enumerate(D.ears):
        if ear.kind != HPATH:
            continue
        a, b = ear.ends
        o = owner.get((min(a, b), max(a, b)))
        if o is not None and o < pos:
            out.append(pos)
    return out


def build_chord_forest(D: EarDecomp) -> ChordForest:
    owner = _edge_owner(D)
    members = chord_keys(D)
    index = {pos: i for i, pos in enumerate(members)}
    edges = []
    for pos in members:
        a, b = D.ears[pos].ends
        parent = owner[(min(a, b), max(a, b))]
        if parent in index:
            edges.append((index[parent], index[pos]))
    F = build_graph(len(members), edges)
    _assert_forest(F, "chord forest")
    cycles = []
    for pos in members:
        cyc = D.ears[pos].vertices
        if not is_cycle(D.host, cyc):
            raise InternalTheoremViolation(f"ear {cyc} plus its end chord is not a cycle")
        cycles.append(cyc)
    keys = tuple((D.ears[p].phase, D.ears[p].index) for p in members)
    return ChordForest(F, keys, tuple(cycles))


# -- the trimmed core ----------------------------------------------------------------


@dataclass(frozen=True)
class HPrime:
    """The trimmed subgraph of ℋ; ``graph`` is relabelled, ``old_ids`` maps back."""

    graph: Graph
    old_ids: tuple[int, ...]

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.old_ids)

    def branch_count(self) -> int:
        return sum(1 for v in range(self.graph.n) if self.graph.degree(v) >= 3)

    def lift(self, cycle) -> tuple[int, ...]:
        return tuple(self.old_ids[v] for v in cycle)


def derive_h_prime(D: EarDecomp) -> HPrime:
    H = D.graph
    removed = {v for v in D.vertex_set if H.degree(v) == 4}
    for ear in D.ears:
        if ear.kind == HPATH and ear.index == 2 and ear.length == 1:
            removed.add(ear.ends[0])
    for pos in chord_keys(D):
        removed.add(D.ears[pos].ends[0])
    keep = D.vertex_set - removed
    alive = bytearray(H.n)
    for v in keep:
        alive[v] = 1
    # vertices of degree 0 go too: they cannot lie on a cycle
    core = two_core(H, alive)
    sub, old = H.induced_subgraph(core)
    for v in range(sub.n):
        if sub.degree(v) not in (2, 3):
            raise InternalTheoremViolation(f"vertex {old[v]} keeps degree {sub.degree(v)} in the trimmed core")
    return HPrime(sub, old)


# -- disjoint cycles in subcubic graphs ---------------------------------------------


def _min_degree(M: Multigraph) -> int:
    deg = [0] * M.n
    for u, v, _ in M.edges:
        deg[u] += 1
        deg[v] += 1
    return min(deg, default=0)


def disjoint_cycles_min_degree3(M: Multigraph, emap: ExpansionMap, k: int) -> list[tuple[int, ...]]:
    """Greedy: take a shortest cycle, delete it, re-trim, repeat ``k`` times."""
    host = emap.host
    support = set(emap.support)
    cycles: list[tuple[int, ...]] = []
    while len(cycles) < k:
        if M.n == 0:
            raise InternalTheoremViolation(
                f"greedy extraction ran out of graph after {len(cycles)} of {k} cycles"
            )
        mc = multigraph_shortest_cycle(M, edge_lengths(emap))
        if mc is None:
            raise InternalTheoremViolation("suppressed graph without a cycle")
        if M.is_simple() and _min_degree(M) >= 3 and len(mc) >= 2 * math.log2(M.n):
            raise InternalTheoremViolation(
                f"girth {len(mc)} is not below 2 log2 of {M.n} vertices"
            )
        c = lift_cycle(emap, mc)
        cycles.append(c)
        support -= set(c)
        alive = bytearray(host.n)
        for v in support:
            alive[v] = 1
        support = set(two_core(host, alive))
        if len(cycles) < k:
            M, emap = suppress_degree_two(host, support)
    return cycles


def two_disjoint_cycles_subcubic(G: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    if G.max_degree() > 3 or any(G.degree(v) < 2 for v in range(G.n)):
        raise InvalidInput("needs minimum degree at least 2 and maximum degree at most 3")
    if G.n == 0:
        return None
    M, emap = suppress_degree_two(G)

    def second_cycle(c1):
        alive = bytearray(b"\x01") * G.n
        for v in c1:
            alive[v] = 0
        c2 = girth_cycle(G, alive)
        return (c1, c2) if c2 is not None else None

    mc = multigraph_shortest_cycle(M, edge_lengths(emap))
    if mc is not None:
        found = second_cycle(lift_cycle(emap, mc))
        if found:
            return found
    for v in range(G.n):
        c1 = shortest_cycle_through(G, v)
        if c1 is not None:
            found = second_cycle(c1)
            if found:
                return found
    if M.n >= 7:
        raise InternalTheoremViolation(f"no two disjoint cycles in a cubic graph on {M.n} vertices")
    return None


# -- the pipeline ---------------------------------------------------------------------


FvsOracle = Callable[[Graph, int], object]


class _Context:
    def __init__(self, paranoid: bool, oracle: FvsOracle | None, h):
        self.paranoid = paranoid
        self.oracle = oracle
        self.h = h

    def h_of(self, k: int) -> int:
        return self.h(k) if callable(self.h) else self.h

    def bound(self, k: int) -> float:
        if self.oracle is None:
            return f_bound(k)
        return oracle_bound(self.h_of(k), k)


def _check_induced(G: Graph, cycles) -> None:
    from .oracle import verify_certificate

    verdict = verify_certificate(G, InducedPacking(tuple(cycles)))
    if not verdict:
        raise InternalTheoremViolation(f"cycles from the decomposition are not an induced packing: {verdict.reason}")


def _oracle_cycles(Hp: HPrime, k: int, ctx: _Context):
    """Ask the FVS oracle about the trimmed core; returns cycles or ``None``."""
    G = Hp.graph
    h = ctx.h_of(k)
    answer = ctx.oracle(G, k)
    if isinstance(answer, (set, frozenset)):
        X = frozenset(answer)
        if any(not 0 <= v < G.n for v in X):
            raise InvalidInput("oracle returned vertices outside its input")
        if len(X) > h:
            raise InvalidInput(f"oracle returned a feedback set of size {len(X)} > h = {h}")
        alive = bytearray(b"\x01") * G.n
        for v in X:
            alive[v] = 0
        if girth_cycle(G, alive) is not None:
            raise InvalidInput("oracle's feedback set leaves a cycle")
        if Hp.branch_count() >= 7 * h - 1 and Hp.branch_count() > 0:
            raise InternalTheoremViolation(
                f"{Hp.branch_count()} branch vertices but a feedback set of size {len(X)} (cubic bound)"
            )
        return None
    cycles = [tuple(c) for c in answer]
    if len(cycles) != k:
        raise InvalidInput(f"oracle returned {len(cycles)} cycles, expected {k}")
    seen = set()
    for c in cycles:
        if not is_cycle(G, c) or seen & set(c):
            raise InvalidInput(f"oracle cycle {c} is invalid or not disjoint")
        seen |= set(c)
    return [Hp.lift(c) for c in cycles]


def _multistart_packing(G: Graph, k: int):
    """Greedy disjoint cycles restarted from every vertex; kept only if induced.

    Not needed for the size guarantee. It catches packings the decomposition
    misses, e.g. on double subdivisions where disjoint cycles are never adjacent.
    """
    from .oracle import verify_certificate

    core = two_core(G)
    for v in sorted(core):
        alive = mask(G.n, core)
        cycles = []
        c = shortest_cycle_through(G, v, alive)
        while c is not None:
            cycles.append(c)
            if len(cycles) == k:
                if verify_certificate(G, InducedPacking(tuple(cycles))):
                    return cycles
                break
            for x in c:
                alive[x] = 0
            alive = mask(G.n, two_core(G, alive))
            c = girth_cycle(G, alive)
    return None


def _girth5(G: Graph, k: int, ctx: _Context):
    D = eardecomp.build_maximal(G)
    if ctx.paranoid:
        report = eardecomp.validate(G, D)
        if not report.ok:
            raise InternalTheoremViolation(f"ear decomposition failed validation: {report.failures()[:3]}")

    overlay = build_overlay_forest(D)
    I = sorted(forest_max_independent_set(overlay.forest))
    if len(I) >= k:
        cycles = [overlay.cycles[i] for i in I[:k]]
        _check_induced(G, cycles)
        return InducedPacking(tuple(cycles))
    chords = build_chord_forest(D)
    J = sorted(forest_max_independent_set(chords.forest))
    if len(J) >= k:
        cycles = [chords.cycles[i] for i in J[:k]]
        _check_induced(G, cycles)
        return InducedPacking(tuple(cycles))

    Hp = derive_h_prime(D)
    branch = Hp.branch_count()
    ell = len(D.branch_vertices)
    if branch < ell - 18 * (k - 1):
        raise InternalTheoremViolation(f"trimmed core keeps {branch} of {ell} branch vertices")

    if ctx.oracle is not None:
        lifted = _oracle_cycles(Hp, k, ctx)
        if lifted is not None:
            _check_induced(G, lifted)
            return InducedPacking(tuple(lifted))
    elif Hp.graph.n:
        M, emap = suppress_degree_two(Hp.graph)
        try:
            cycles = disjoint_cycles_min_degree3(M, emap, k)
        except InternalTheoremViolation:
            if branch >= math.ceil(s_k(k)):
                raise
            cycles = None
        if cycles is not None:
            lifted = [Hp.lift(c) for c in cycles]
            _check_induced(G, lifted)
            return InducedPacking(tuple(lifted))

    found = _multistart_packing(G, k)
    if found is not None:
        return InducedPacking(tuple(found))

    X = set(D.yz.Y)
    for ear in D.ears:
        if ear.index == 1:
            X.add(min(ear.vertices))
    X = frozenset(X)
    if len(X) > ctx.bound(k):
        raise InternalTheoremViolation(f"|X| = {len(X)} exceeds the bound {ctx.bound(k):.2f}")
    return X


def _solve(G: Graph, k: int, ctx: _Context):
    """An ``InducedPacking`` of ``k`` cycles of ``G`` or a frozenset ``X``."""
    c = girth_cycle(G)
    if c is None:
        return frozenset()
    if k == 1:
        return InducedPacking((c,))
    if len(c) <= 4:
        near = ball(G, c, 1)
        sub, old = G.induced_subgraph(v for v in range(G.n) if v not in near)
        inner = _solve(sub, k - 1, ctx)
        if isinstance(inner, InducedPacking):
            return InducedPacking((c,) + tuple(tuple(old[v] for v in cyc) for cyc in inner.cycles))
        return frozenset(c) | frozenset(old[v] for v in inner)
    return _girth5(G, k, ctx)


def _finish(G: Graph, k: int, result, ctx: _Context, theorem: str):
    from .oracle import verify_certificate

    if isinstance(result, InducedPacking):
        cert = result
    else:
        h = ctx.h_of(k) if ctx.oracle is not None else None
        cert = HittingSet(result, 1, k, ctx.bound(k), theorem, h)
    verdict = verify_certificate(G, cert, k=k)
    if not verdict:
        raise InternalTheoremViolation(f"self-verification failed: {verdict.reason}")
    return cert


def induced_pack_or_hit(G: Graph, k: int, paranoid: bool = False):
    if k < 1:
        raise InvalidInput(f"k must be positive, got {k}")
    ctx = _Context(paranoid, None, None)
    return _finish(G, k, _solve(G, k, ctx), ctx, "main")


def induced_pack_or_hit_with_oracle(
    G: Graph, k: int, fvs_oracle: FvsOracle, h_k, paranoid: bool = False
):
    """Same dichotomy, with the Simonovits step replaced by ``fvs_oracle``.

    ``fvs_oracle(H, k)`` must return ``k`` vertex-disjoint cycles of ``H`` or a
    feedback vertex set of size at most ``h_k`` (an int, or a callable of k).
    """
    if k < 1:
        raise InvalidInput(f"k must be positive, got {k}")
    ctx = _Context(paranoid, fvs_oracle, h_k)
    return _finish(G, k, _solve(G, k, ctx), ctx, "oracle")
