"""Two cycles more than ``d`` apart, or small sets whose 2d- and 3d-balls hit every cycle.

Short girth is easy: a shortest cycle ``C`` and four spread-out vertices on it
do the job. For girth at least ``8d + 5`` the radius-d neighbourhood of ``C``
splits into disjoint trees hanging off single cycle vertices, the rest of the
graph is a forest, and subtrees of that forest joining two "boundary" vertices
are selected greedily. Four or more selections yield two far-apart cycles;
fewer give the hitting sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import kernels
from .certificates import DistHitting, TwoCycles
from .errors import InternalTheoremViolation, InvalidInput
from .graph import (
    Graph,
    ball,
    build_graph,
    girth_cycle,
    mask,
    two_core,
)
from .packing import two_disjoint_cycles_subcubic


def cover_cycle_four(C, d: int) -> frozenset:
    """At most four evenly spaced cycle vertices whose d-balls along ``C`` cover it."""
    L = len(C)
    if L > 8 * d + 4:
        raise InvalidInput(f"cycle of length {L} cannot be covered by four radius-{d} arcs")
    m = min(4, -(-L // (2 * d + 1)))
    return frozenset(C[(i * L) // m] for i in range(m))


def cycle_ball(C, S, d: int) -> frozenset:
    """``B_C(S, d)`` measured along the cycle."""
    L = len(C)
    pos = {v: i for i, v in enumerate(C)}
    out = set()
    for s in S:
        i = pos[s]
        for delta in range(-d, d + 1):
            out.add(C[(i + delta) % L])
    return frozenset(out)


@dataclass(frozen=True)
class SupportMap:
    """Radius-d trees hanging off the cycle, and the vertices one step beyond."""

    cycle: tuple[int, ...]
    d: int
    anchor: dict  # vertex of ball(C, d) -> its cycle vertex
    parent: dict  # tree parent towards the anchor (cycle vertices map to -1)
    boundary: dict  # vertex at distance d + 1 -> (anchor, R_v)

    def members(self, c: int) -> list[int]:
        return sorted(v for v, a in self.anchor.items() if a == c)


def _alive_without_cycle(G: Graph, C, keep: int) -> bytearray:
    alive = bytearray(b"\x01") * G.n
    for v in C:
        if v != keep:
            alive[v] = 0
    return alive


def support_map(G: Graph, C, d: int) -> SupportMap:
    anchor: dict[int, int] = {}
    parent: dict[int, int] = {}
    for c in C:
        dist, par = kernels.bfs(G, [c], _alive_without_cycle(G, C, c), d)
        for v, dv in enumerate(dist):
            if dv < 0:
                continue
            if v in anchor:
                raise InternalTheoremViolation(f"vertex {v} is within {d} of both {anchor[v]} and {c}")
            anchor[v] = c
            parent[v] = par[v]
    cycle_edges = {(min(C[i], C[i - 1]), max(C[i], C[i - 1])) for i in range(len(C))}
    for v, c in anchor.items():
        for w in G.adj[v]:
            if w in anchor and anchor[w] != c and (min(v, w), max(v, w)) not in cycle_edges:
                raise InternalTheoremViolation(f"edge ({v}, {w}) joins the trees of {c} and {anchor[w]}")
    sizes: dict[int, int] = {}
    edges_in: dict[int, int] = {}
    for v, c in anchor.items():
        sizes[c] = sizes.get(c, 0) + 1
        for w in G.adj[v]:
            if w > v and anchor.get(w) == c:
                edges_in[c] = edges_in.get(c, 0) + 1
    for c in C:
        if edges_in.get(c, 0) != sizes[c] - 1:
            raise InternalTheoremViolation(f"the radius-{d} piece at {c} is not a tree")
    boundary: dict[int, tuple[int, tuple[int, ...]]] = {}
    for v in range(G.n):
        if v in anchor:
            continue
        inside = [w for w in G.adj[v] if w in anchor]
        if not inside:
            continue
        if len(inside) > 1:
            raise InternalTheoremViolation(f"vertex {v} has {len(inside)} neighbours near the cycle")
        x = inside[0]
        R = [v, x]
        while parent[R[-1]] >= 0:
            R.append(parent[R[-1]])
        if len(R) != d + 2:
            # x sits at depth < d, so v is within distance d of the cycle after all
            continue
        boundary[v] = (anchor[x], tuple(R))
    return SupportMap(tuple(C), d, anchor, parent, boundary)


@dataclass(frozen=True)
class RootedForest:
    parent: dict
    root: dict
    level: dict


def root_forest(G: Graph, vertices) -> RootedForest:
    """Root each component of ``G[vertices]`` at its smallest vertex."""
    vs = set(vertices)
    parent, root, level = {}, {}, {}
    for s in sorted(vs):
        if s in parent:
            continue
        parent[s], root[s], level[s] = -1, s, 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.adj[x]:
                if y in vs and y not in parent:
                    parent[y], root[y], level[y] = x, s, level[x] + 1
                    queue.append(y)
    return RootedForest(parent, root, level)


@dataclass(frozen=True)
class Round:
    subtree: frozenset
    a: int
    b: int
    w: int
    z: int
    path: tuple[int, ...]


@dataclass(frozen=True)
class Selection:
    rounds: tuple[Round, ...]
    L: frozenset
    W: frozenset

    @property
    def t(self) -> int:
        return len(self.rounds)

    def supports(self, sm: SupportMap) -> frozenset:
        return frozenset(sm.boundary[v][0] for r in self.rounds for v in (r.a, r.b))


def _tree_path(rf: RootedForest, a: int, b: int) -> tuple[int, ...]:
    up_a, up_b = [a], [b]
    while rf.level[up_a[-1]] > rf.level[up_b[-1]]:
        up_a.append(rf.parent[up_a[-1]])
    while rf.level[up_b[-1]] > rf.level[up_a[-1]]:
        up_b.append(rf.parent[up_b[-1]])
    while up_a[-1] != up_b[-1]:
        up_a.append(rf.parent[up_a[-1]])
        up_b.append(rf.parent[up_b[-1]])
    return tuple(up_a + up_b[-2::-1])


def _best_pair(comp: list[int], rf: RootedForest, cands: set[int]):
    """``(level, a, b, w)`` of the deepest LCA of two candidates in ``comp``."""
    inside = set(comp)
    children: dict[int, list[int]] = {v: [] for v in comp}
    top = None
    for v in comp:
        p = rf.parent[v]
        if p in inside:
            children[p].append(v)
        else:
            top = v
    order = []
    stack = [top]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(children[v])
    low: dict[int, float] = {}
    best = None
    for v in reversed(order):
        mins = sorted(low[c] for c in children[v] if low[c] != float("inf"))
        if v in cands:
            mins = sorted(mins + [v])
        low[v] = mins[0] if mins else float("inf")
        if len(mins) >= 2:
            key = (-rf.level[v], mins[0], mins[1], v)
            if best is None or key < best:
                best = key
    if best is None:
        return None
    return -best[0], best[1], best[2], best[3]


def select_subtrees(G: Graph, C, d: int, sm: SupportMap) -> Selection:
    F_vertices = [v for v in range(G.n) if v not in sm.anchor]
    rf = root_forest(G, F_vertices)
    in_F = mask(G.n, F_vertices)
    L: set[int] = set()
    W: set[int] = set()
    S_L: set[int] = set()
    B_W: set[int] = set()
    rounds: list[Round] = []
    while True:
        alive = bytearray(in_F)
        for v in S_L | B_W:
            alive[v] = 0
        best = None
        seen = set()
        for s in F_vertices:
            if not alive[s] or s in seen:
                continue
            comp = []
            queue = deque([s])
            seen.add(s)
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in G.adj[x]:
                    if alive[y] and y not in seen:
                        seen.add(y)
                        queue.append(y)
            cands = {v for v in comp if v in sm.boundary and sm.boundary[v][0] not in L}
            if len(cands) < 2:
                continue
            found = _best_pair(comp, rf, cands)
            if found is None:
                continue
            level, a, b, w = found
            key = (-level, a, b)
            if best is None or key < best[0]:
                best = (key, comp, a, b, w)
        if best is None:
            break
        _, comp, a, b, w = best
        # descendants of w inside the component
        inside = set(comp)
        sub = {w}
        queue = deque([w])
        while queue:
            x = queue.popleft()
            for y in G.adj[x]:
                if y in inside and y not in sub and rf.parent.get(y) == x:
                    sub.add(y)
                    queue.append(y)
        near_w = ball(G, [w], d)
        hits = sorted(v for v in near_w if in_F[v] and v in sm.boundary)
        if len(hits) > 1:
            raise InternalTheoremViolation(f"ball of radius {d} at {w} meets boundary vertices {hits}")
        z = hits[0] if hits else w
        path = _tree_path(rf, a, b)
        rounds.append(Round(frozenset(sub), a, b, w, z, path))
        L |= cycle_ball(C, [sm.boundary[a][0], sm.boundary[b][0]], d)
        W |= {w, z}
        S_L = set()
        for c in L:
            dist, _ = kernels.bfs(G, [c], _alive_without_cycle(G, C, c), 2 * d)
            S_L.update(v for v, dv in enumerate(dist) if dv >= 0)
        B_W = set(ball(G, W, d))
    _check_far_apart(G, rounds, in_F, d)
    return Selection(tuple(rounds), frozenset(L), frozenset(W))


def _check_far_apart(G: Graph, rounds, in_F, d: int) -> None:
    for i, r in enumerate(rounds):
        dist, _ = kernels.bfs(G, list(r.subtree), in_F, d)
        for j, other in enumerate(rounds):
            if j != i and any(dist[v] >= 0 for v in other.subtree):
                raise InternalTheoremViolation(f"selected subtrees {i} and {j} are within {d} in the forest")


def _graph_of(n: int, edges) -> Graph:
    return build_graph(n, edges)


def _walk_edges(walk) -> list[tuple[int, int]]:
    return [(min(u, v), max(u, v)) for u, v in zip(walk, walk[1:])]


def _cycle_in(G: Graph, vertices) -> tuple[int, ...] | None:
    return girth_cycle(G, mask(G.n, vertices))


def two_cycles_from_selection(G: Graph, C, d: int, sm: SupportMap, sel: Selection):
    if sel.t < 4:
        raise InvalidInput("need at least four selected subtrees")
    edges = set(_walk_edges(tuple(C) + (C[0],)))
    pieces = []
    appendages = []
    for r in sel.rounds:
        Ra = sm.boundary[r.a][1]
        Rb = sm.boundary[r.b][1]
        piece = set(_walk_edges(r.path)) | set(_walk_edges(Ra)) | set(_walk_edges(Rb))
        edges |= piece
        verts = set(r.path) | set(Ra) | set(Rb)
        pieces.append(verts)
        if set(Ra) & set(Rb):
            appendages.append((piece, verts))
    H = _graph_of(G.n, edges)

    def appendage_cycle(piece):
        M = _graph_of(G.n, piece)
        c = girth_cycle(M)
        if c is None:
            raise InternalTheoremViolation("an appendage without a cycle")
        return c

    if len(appendages) >= 2:
        C1 = appendage_cycle(appendages[0][0])
        C2 = appendage_cycle(appendages[1][0])
    elif len(appendages) == 1:
        C1 = appendage_cycle(appendages[0][0])
        alive = mask(G.n, (v for v in range(G.n) if H.degree(v) > 0 and v not in appendages[0][1]))
        rest = two_core(H, alive)
        C2 = _cycle_in(H, rest)
        if C2 is None:
            raise InternalTheoremViolation("nothing cyclic left outside the only appendage")
    else:
        used = [v for v in range(G.n) if H.degree(v) > 0]
        sub, old = H.induced_subgraph(used)
        pair = two_disjoint_cycles_subcubic(sub)
        if pair is None:
            raise InternalTheoremViolation("no two disjoint cycles in the selected subgraph")
        C1, C2 = (tuple(old[v] for v in c) for c in pair)
    dist, _ = kernels.bfs(G, list(C1), None, d)
    if any(dist[v] >= 0 for v in C2):
        raise InternalTheoremViolation(f"the two cycles are within distance {d}")
    return C1, C2


def dist_pack_two(G: Graph, d: int):
    from .oracle import verify_certificate

    if d < 1:
        raise InvalidInput(f"d must be positive, got {d}")
    result = _dist_pack_two(G, d)
    verdict = verify_certificate(G, result, d=d)
    if not verdict:
        raise InternalTheoremViolation(f"self-verification failed: {verdict.reason}")
    return result


def _dist_pack_two(G: Graph, d: int):
    C = girth_cycle(G)
    if C is None:
        return DistHitting(frozenset(), frozenset(), d)
    near = ball(G, C, d)
    D = girth_cycle(G, mask(G.n, (v for v in range(G.n) if v not in near)))
    if D is not None:
        return TwoCycles(C, D, d)
    if len(C) < 8 * d + 5:
        return DistHitting(frozenset(C), cover_cycle_four(C, d), d)
    sm = support_map(G, C, d)
    sel = select_subtrees(G, C, d, sm)
    if sel.t >= 4:
        C1, C2 = two_cycles_from_selection(G, C, d, sm, sel)
        return TwoCycles(C1, C2, d)
    if sel.t == 0:
        v0 = min(C)
        return DistHitting(frozenset([v0]), frozenset([v0]), d)
    X1 = sel.L | sel.W
    X2 = sel.W | sel.supports(sm)
    return DistHitting(X1, X2, d)
