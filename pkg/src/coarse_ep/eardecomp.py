"""Maximal coarse ear-decompositions: construction, Y/Z bookkeeping, validation.

An ear is a cycle opening a phase (attached at one admissible vertex, or
disjoint from everything built so far) or a shortest H-path appended inside
the current phase. ``Y`` is the radius-2 ball, inside the decomposition, of
its branch vertices; ``Z`` adds the outside neighbours of ``Y``. New ears
must avoid ``Z``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from . import kernels
from .graph import Graph, build_graph, girth_cycle, is_cycle, is_path

TYPE1 = "type1"
TYPE2 = "type2"
HPATH = "hpath"


@dataclass(frozen=True)
class Ear:
    kind: str
    vertices: tuple[int, ...]
    phase: int
    index: int
    attachment: int | None = None

    @property
    def is_cycle(self) -> bool:
        return self.kind != HPATH

    @property
    def ends(self) -> tuple[int, int] | None:
        if self.kind == HPATH:
            return self.vertices[0], self.vertices[-1]
        return None

    @property
    def gamma(self) -> frozenset:
        if self.kind == TYPE1:
            return frozenset([self.attachment])
        if self.kind == HPATH:
            return frozenset(self.ends)
        return frozenset()

    @property
    def length(self) -> int:
        k = len(self.vertices)
        return k if self.is_cycle else k - 1

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        pairs = list(zip(vs, vs[1:]))
        if self.is_cycle:
            pairs.append((vs[-1], vs[0]))
        return [(min(u, v), max(u, v)) for u, v in pairs]


@dataclass(frozen=True)
class YZState:
    Y: frozenset
    Z: frozenset


@dataclass(frozen=True)
class EarDecomp:
    host: Graph = field(compare=False, repr=False)
    ears: tuple[Ear, ...]

    @property
    def t(self) -> int:
        return self.ears[-1].phase if self.ears else 0

    def phases(self) -> list[list[Ear]]:
        out: list[list[Ear]] = []
        for e in self.ears:
            if e.index == 1:
                out.append([])
            out[-1].append(e)
        return out

    def ear(self, i: int, j: int) -> Ear:
        return self.phases()[i - 1][j - 1]

    def prefix(self, count: int) -> "EarDecomp":
        return EarDecomp(self.host, self.ears[:count])

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(v for e in self.ears for v in e.vertices)

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(p for e in self.ears for p in e.edges())

    @cached_property
    def graph(self) -> Graph:
        """The decomposition as a subgraph on the host's vertex ids."""
        return build_graph(self.host.n, self.edge_set)

    def degree(self, v: int) -> int:
        return self.graph.degree(v)

    @cached_property
    def branch_vertices(self) -> frozenset:
        return frozenset(v for v in self.vertex_set if self.graph.degree(v) >= 3)

    @cached_property
    def yz(self) -> YZState:
        return compute_yz(self.host, self)

    @property
    def admissible(self) -> frozenset:
        return self.vertex_set - self.yz.Y


# -- incremental state ---------------------------------------------------------


class _Builder:
    """Masks describing the decomposition built so far."""

    def __init__(self, G: Graph):
        self.G = G
        self.in_h = bytearray(G.n)
        self.hdeg = [0] * G.n
        self.hadj: list[list[int]] = [[] for _ in range(G.n)]
        self.hedge = bytearray(2 * G.m)
        self.ears: list[Ear] = []

    def add(self, ear: Ear) -> None:
        for v in ear.vertices:
            self.in_h[v] = 1
        for u, v in ear.edges():
            self.hdeg[u] += 1
            self.hdeg[v] += 1
            self.hadj[u].append(v)
            self.hadj[v].append(u)
            self.hedge[self.G.edge_position(u, v)] = 1
            self.hedge[self.G.edge_position(v, u)] = 1
        self.ears.append(ear)

    def yz(self) -> YZState:
        G = self.G
        Y = set(v for v in range(G.n) if self.hdeg[v] >= 3)
        frontier = list(Y)
        for _ in range(2):
            nxt = []
            for x in frontier:
                for y in self.hadj[x]:
                    if y not in Y:
                        Y.add(y)
                        nxt.append(y)
            frontier = nxt
        Z = set(Y)
        for y in Y:
            for w in G.adj[y]:
                if not self.in_h[w]:
                    Z.add(w)
        return YZState(frozenset(Y), frozenset(Z))

    def masks(self, yz: YZState):
        """``(admissible, outside)``: admissible ends, and vertices off ℋ and off Z."""
        n = self.G.n
        admissible = bytearray(self.in_h)
        for v in yz.Y:
            admissible[v] = 0
        outside = bytearray(b"\x01") * n
        for v in range(n):
            if self.in_h[v]:
                outside[v] = 0
        for v in yz.Z:
            outside[v] = 0
        return admissible, outside

    def shortest_hpath(self, yz: YZState) -> tuple[int, ...] | None:
        if not self.ears:
            return None
        admissible, outside = self.masks(yz)
        p = kernels.shortest_hpath(self.G, outside, admissible, self.hedge)
        return tuple(p) if p else None

    def type1(self, yz: YZState) -> tuple[tuple[int, ...], int] | None:
        admissible, outside = self.masks(yz)
        best = None
        limit = kernels.INF
        for c in range(self.G.n):
            if not admissible[c]:
                continue
            cyc = kernels.cycle_through(self.G, c, outside, limit)
            if cyc:
                best = (tuple(cyc), c)
                limit = len(cyc)
        return best

    def type2(self, yz: YZState) -> tuple[int, ...] | None:
        _, outside = self.masks(yz)
        return girth_cycle(self.G, outside)

    def snapshot(self) -> EarDecomp:
        return EarDecomp(self.G, tuple(self.ears))


def _replay(G: Graph, D: EarDecomp) -> _Builder:
    b = _Builder(G)
    for e in D.ears:
        b.add(e)
    return b


# -- public operations ---------------------------------------------------------


def compute_yz(G: Graph, D: EarDecomp) -> YZState:
    return _replay(G, D).yz()


def find_shortest_H_path(G: Graph, D: EarDecomp, Z: frozenset | None = None) -> tuple[int, ...] | None:
    """Shortest path between admissible vertices avoiding ℋ-edges, ℋ-interior and Z."""
    b = _replay(G, D)
    yz = b.yz()
    if Z is not None and Z != yz.Z:
        yz = YZState(frozenset(Z) & D.vertex_set, frozenset(Z))
    return b.shortest_hpath(yz)


def find_type1_ear(G: Graph, D: EarDecomp, Z: frozenset | None = None):
    """``(cycle, c)``: shortest cycle off Z meeting ℋ exactly at admissible ``c``."""
    b = _replay(G, D)
    yz = b.yz()
    if Z is not None and Z != yz.Z:
        yz = YZState(frozenset(Z) & D.vertex_set, frozenset(Z))
    return b.type1(yz)


def find_type2_ear(G: Graph, D: EarDecomp, Z: frozenset | None = None) -> tuple[int, ...] | None:
    """Shortest cycle of ``G - Z - V(ℋ)``."""
    b = _replay(G, D)
    yz = b.yz()
    if Z is not None and Z != yz.Z:
        yz = YZState(frozenset(Z) & D.vertex_set, frozenset(Z))
    return b.type2(yz)


def build_maximal(G: Graph) -> EarDecomp:
    b = _Builder(G)
    phase = 0
    index = 0
    while True:
        yz = b.yz()
        path = b.shortest_hpath(yz)
        if path is not None:
            index += 1
            b.add(Ear(HPATH, path, phase, index))
            continue
        found = b.type1(yz) if b.ears else None
        if found is not None:
            cyc, c = found
            phase += 1
            index = 1
            b.add(Ear(TYPE1, cyc, phase, index, c))
            continue
        cyc = b.type2(yz)
        if cyc is None:
            return b.snapshot()
        phase += 1
        index = 1
        b.add(Ear(TYPE2, cyc, phase, index))


# -- validation ----------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: object = None


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __bool__(self):
        return self.ok


def validate(G: Graph, D: EarDecomp) -> ValidationReport:
    checks: list[Check] = []

    def fail(name, witness):
        checks.append(Check(name, False, witness))

    b = _Builder(G)
    prev_yz = YZState(frozenset(), frozenset())
    expect_phase, expect_index = 0, 0
    for pos, ear in enumerate(D.ears):
        yz = b.yz()
        if not (prev_yz.Y <= yz.Y and prev_yz.Z <= yz.Z):
            fail("yz_monotone", pos)
        prev_yz = yz
        admissible, outside = b.masks(yz)
        vs = ear.vertices
        in_h = [v for v in vs if b.in_h[v]]

        if ear.index == 1:
            expect_phase, expect_index = expect_phase + 1, 1
        else:
            expect_index += 1
        if (ear.phase, ear.index) != (expect_phase, expect_index):
            fail("phase_structure", (pos, ear.phase, ear.index))
        if (ear.index == 1) != ear.is_cycle:
            fail("phase_structure", (pos, ear.kind))

        if ear.is_cycle:
            if not is_cycle(G, vs):
                fail("ear_shape", vs)
            if ear.index == 1 and pos > 0:
                # (A): the previous phase ended because no H-path remained
                p = b.shortest_hpath(yz)
                if p is not None:
                    fail("A_no_hpath", p)
            t1 = b.type1(yz) if b.ears else None
            if ear.kind == TYPE1:
                if in_h != [ear.attachment] or not admissible[ear.attachment]:
                    fail("B1_attachment", (vs, ear.attachment))
                if any(v in yz.Z for v in vs if v != ear.attachment):
                    fail("avoids_Z", vs)
                if t1 is None or len(t1[0]) != len(vs):
                    fail("B1_minimal", t1)
            else:
                if in_h:
                    fail("B2_disjoint", in_h)
                if any(v in yz.Z for v in vs):
                    fail("avoids_Z", vs)
                if t1 is not None:
                    fail("B1_preferred", t1)
                t2 = b.type2(yz)
                if t2 is None or len(t2) != len(vs):
                    fail("B2_minimal", t2)
        else:
            a, c = vs[0], vs[-1]
            if not is_path(G, vs) or len(vs) < 2:
                fail("ear_shape", vs)
            if not (admissible[a] and admissible[c]) or in_h != [a, c] and in_h != [c, a] or a == c:
                fail("C_ends", vs)
            if any(not outside[v] for v in vs[1:-1]):
                fail("avoids_Z", vs)
            if any(b.hedge[G.edge_position(u, v)] for u, v in zip(vs, vs[1:]) if G.has_edge(u, v)):
                fail("C_uses_h_edge", vs)
            p = b.shortest_hpath(yz)
            if p is None or len(p) != len(vs):
                fail("C_minimal", p)

        # (b): each ear is induced, except the end pair of an H-path may be an ℋ-edge
        vset = set(vs)
        own = set(ear.edges())
        for u in vs:
            for w in G.adj[u]:
                if w > u and w in vset and (u, w) not in own:
                    if ear.kind == HPATH and {u, w} == {vs[0], vs[-1]} and b.hedge[G.edge_position(u, w)]:
                        continue
                    fail("ear_induced", (u, w))
        # (c): edge-disjoint from everything before
        for u, w in own:
            if G.has_edge(u, w) and b.hedge[G.edge_position(u, w)]:
                fail("edge_disjoint", (u, w))
        b.add(ear)

    yz = b.yz()
    if not (prev_yz.Y <= yz.Y and prev_yz.Z <= yz.Z):
        fail("yz_monotone", len(D.ears))

    hverts = [v for v in range(G.n) if b.in_h[v]]
    for v in hverts:
        if not 2 <= b.hdeg[v] <= 4:
            fail("degree_range", (v, b.hdeg[v]))
    # degree 3 / degree 4 characterisation
    end_count = [0] * G.n
    att_count = [0] * G.n
    for e in D.ears:
        if e.kind == HPATH:
            for v in e.ends:
                end_count[v] += 1
        elif e.kind == TYPE1:
            att_count[e.attachment] += 1
    for v in hverts:
        if (b.hdeg[v] == 3) != (end_count[v] == 1 and att_count[v] == 0):
            fail("degree3_unique_end", v)
        if (b.hdeg[v] == 4) != (att_count[v] == 1 and end_count[v] == 0):
            fail("degree4_unique_attachment", v)

    # maximality
    if b.ears:
        p = b.shortest_hpath(yz)
        if p is not None:
            fail("maximal_no_hpath", p)
        t1 = b.type1(yz)
        if t1 is not None:
            fail("maximal_no_type1", t1)
    t2 = b.type2(yz)
    if t2 is not None:
        fail("maximal_no_type2", t2)

    g = girth_cycle(G)
    if g is None or len(g) >= 5:
        for u in hverts:
            for w in G.adj[u]:
                if w > u and b.in_h[w] and not b.hedge[G.edge_position(u, w)]:
                    fail("h_induced", (u, w))
        ends_of = {}
        for e in D.ears:
            if e.kind == HPATH:
                key = (min(e.ends), max(e.ends))
                ends_of[key] = ends_of.get(key, 0) + 1
        for u in hverts:
            for w in b.hadj[u]:
                if w > u and b.hdeg[u] >= 3 and b.hdeg[w] >= 3 and ends_of.get((u, w), 0) != 1:
                    fail("adjacent_branch_ends", (u, w))
        for e in D.ears:
            if e.index >= 3 and e.length < 3:
                fail("short_ear_index", (e.phase, e.index, e.length))

    if not any(not c.passed for c in checks):
        checks.append(Check("all", True))
    return ValidationReport(tuple(checks))
