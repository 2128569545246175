"""Immutable simple graphs, multigraph quotients, and the traversal primitives.

Vertices are ``0..n-1``. Vertex sets are ``frozenset``s, paths and cycles are
tuples of vertex ids (a cycle lists each vertex once; the closing edge is
implicit). Deletions are expressed with ``bytearray`` masks so traversals
never copy the graph.
"""

from __future__ import annotations

import bisect
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import InternalError, InvalidInput

VertexSet = frozenset
Path = tuple
Cycle = tuple


class Graph:
    """Simple undirected graph with sorted adjacency tuples."""

    __slots__ = ("n", "adj", "offsets", "_csr", "_m")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj = tuple(tuple(a) for a in adj)
        offsets = [0]
        for a in self.adj:
            offsets.append(offsets[-1] + len(a))
        self.offsets = tuple(offsets)
        self._m = offsets[-1] // 2
        self._csr = None

    @property
    def m(self) -> int:
        return self._m

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        i = bisect.bisect_left(a, v)
        return i < len(a) and a[i] == v

    def edge_position(self, u: int, v: int) -> int:
        """Index of the directed edge ``u -> v`` in the CSR arrays."""
        a = self.adj[u]
        i = bisect.bisect_left(a, v)
        if i == len(a) or a[i] != v:
            raise KeyError((u, v))
        return self.offsets[u] + i

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def csr(self):
        if self._csr is None:
            indptr = np.asarray(self.offsets, dtype=np.intc)
            indices = np.fromiter(
                (v for a in self.adj for v in a), dtype=np.intc, count=2 * self._m
            )
            self._csr = (indptr, indices)
        return self._csr

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Relabelled ``G[vertices]`` and the map new id -> old id."""
        old = tuple(sorted(set(vertices)))
        new = {v: i for i, v in enumerate(old)}
        adj = [[new[w] for w in self.adj[v] if w in new] for v in old]
        return Graph(len(old), adj), old

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise InvalidInput(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInput(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidInput(f"loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, [sorted(s) for s in nbrs])


def mask(n: int, members: Iterable[int] = (), *, fill: bool = False) -> bytearray:
    """Byte mask over ``range(n)``; ``members`` are set to the opposite of ``fill``."""
    out = bytearray(b"\x01" if fill else b"\x00") * n
    flag = 0 if fill else 1
    for v in members:
        out[v] = flag
    return out


def complement_mask(n: int, removed: Iterable[int]) -> bytearray:
    return mask(n, removed, fill=True)


# -- balls, distances, cycles ------------------------------------------------


def ball(G: Graph, S: Iterable[int], r: int, alive: bytearray | None = None) -> frozenset:
    """All vertices within distance ``r`` of ``S`` (inside ``alive`` if given)."""
    if r < 0:
        raise InvalidInput("radius must be non-negative")
    S = list(S)
    if not S:
        return frozenset()
    dist, _ = kernels.bfs(G, S, alive, r)
    return frozenset(v for v, d in enumerate(dist) if d >= 0)


def set_distance(G: Graph, A: Iterable[int], B: Iterable[int]) -> float:
    """``min dist(a, b)`` over ``a in A, b in B``; ``inf`` if disconnected."""
    dist, _ = kernels.bfs(G, list(A))
    found = [dist[b] for b in B if dist[b] >= 0]
    return min(found) if found else float("inf")


def girth_cycle(G: Graph, alive: bytearray | None = None) -> Cycle | None:
    """A shortest cycle of ``G`` (restricted to ``alive``), or ``None`` for forests."""
    c = kernels.girth_cycle(G, alive)
    return tuple(c) if c else None


def shortest_cycle_through(
    G: Graph, v: int, alive: bytearray | None = None, limit: int = kernels.INF
) -> Cycle | None:
    """Shortest cycle containing ``v``; the returned tuple starts at ``v``."""
    if not 0 <= v < G.n:
        raise InvalidInput(f"vertex {v} out of range")
    c = kernels.cycle_through(G, v, alive, limit)
    return tuple(c) if c else None


def is_cycle(G: Graph, c: Sequence[int]) -> bool:
    k = len(c)
    if k < 3 or len(set(c)) != k:
        return False
    return all(G.has_edge(c[i], c[(i + 1) % k]) for i in range(k))


def is_path(G: Graph, p: Sequence[int]) -> bool:
    if not p or len(set(p)) != len(p):
        return False
    return all(G.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1))


def is_forest_after_removal(G: Graph, S: Iterable[int]) -> bool:
    removed = set(S)
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in G.edges():
        if u in removed or v in removed:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_forest(G: Graph) -> bool:
    return is_forest_after_removal(G, ())


def components(G: Graph, alive: bytearray | None = None) -> list[list[int]]:
    """Connected components (sorted vertex lists) in order of smallest vertex."""
    if alive is None:
        alive = kernels._all_alive(G)
    seen = bytearray(G.n)
    out = []
    for s in range(G.n):
        if seen[s] or not alive[s]:
            continue
        comp = [s]
        seen[s] = 1
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.adj[x]:
                if alive[y] and not seen[y]:
                    seen[y] = 1
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def two_core(G: Graph, alive: bytearray | None = None) -> frozenset:
    """Maximal vertex set inducing minimum degree >= 2."""
    if alive is None:
        alive = kernels._all_alive(G)
    keep = bytearray(alive)
    deg = [sum(1 for w in G.adj[v] if keep[w]) if keep[v] else 0 for v in range(G.n)]
    stack = [v for v in range(G.n) if keep[v] and deg[v] < 2]
    while stack:
        v = stack.pop()
        if not keep[v]:
            continue
        keep[v] = 0
        for w in G.adj[v]:
            if keep[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    return frozenset(v for v in range(G.n) if keep[v])


# -- bridges ---------------------------------------------------------------


@dataclass(frozen=True)
class BridgeForest:
    """Classes of ``G`` minus its bridges, joined by the bridges themselves."""

    classes: tuple[frozenset, ...]
    class_of: tuple[int, ...]
    bridges: tuple[tuple[int, int], ...]
    forest_edges: tuple[tuple[int, int], ...]

    def class_degree(self, c: int) -> int:
        return sum(1 for a, b in self.forest_edges if c in (a, b))


def find_bridges(G: Graph) -> list[tuple[int, int]]:
    """Bridges as sorted pairs, via iterative low-link DFS."""
    disc = [-1] * G.n
    low = [0] * G.n
    timer = 0
    bridges = []
    for root in range(G.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, parent, next neighbour index)
        stack = [(root, -1, 0)]
        while stack:
            v, p, i = stack[-1]
            nb = G.adj[v]
            if i < len(nb):
                stack[-1] = (v, p, i + 1)
                w = nb[i]
                if w == p:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if p >= 0:
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        bridges.append((min(p, v), max(p, v)))
    return sorted(bridges)


def bridge_components(G: Graph) -> BridgeForest:
    bridges = find_bridges(G)
    bset = set(bridges)
    class_of = [-1] * G.n
    classes = []
    for s in range(G.n):
        if class_of[s] >= 0:
            continue
        cid = len(classes)
        class_of[s] = cid
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.adj[x]:
                if class_of[y] < 0 and (min(x, y), max(x, y)) not in bset:
                    class_of[y] = cid
                    comp.append(y)
                    queue.append(y)
        classes.append(frozenset(comp))
    forest_edges = tuple(
        (min(class_of[u], class_of[v]), max(class_of[u], class_of[v])) for u, v in bridges
    )
    return BridgeForest(tuple(classes), tuple(class_of), tuple(bridges), forest_edges)


# -- suppression -----------------------------------------------------------


@dataclass(frozen=True)
class Multigraph:
    """Multigraph with loops and parallel edges; ``edges[i] = (u, v, i)``."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def incidence(self) -> list[list[tuple[int, int]]]:
        """Per vertex: ``(edge id, other end)``; a loop appears twice."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, e in self.edges:
            inc[u].append((e, v))
            inc[v].append((e, u))
        return inc

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w, _ in self.edges)

    def is_simple(self) -> bool:
        seen = set()
        for u, v, _ in self.edges:
            if u == v or (min(u, v), max(u, v)) in seen:
                return False
            seen.add((min(u, v), max(u, v)))
        return True


@dataclass(frozen=True)
class ExpansionMap:
    """Lifts multigraph objects back to the host graph.

    ``vertex_ids[i]`` is the host vertex of multigraph vertex ``i``;
    ``edge_paths[e]`` is the host walk from ``vertex_ids[u]`` to
    ``vertex_ids[v]`` for edge ``(u, v, e)`` (closed for a loop).
    """

    host: Graph
    support: frozenset
    vertex_ids: tuple[int, ...]
    edge_paths: tuple[tuple[int, ...], ...]


MultiCycle = tuple  # ((vertex, edge id leaving it), ...)


def suppress_degree_two(G: Graph, S: Iterable[int] | None = None) -> tuple[Multigraph, ExpansionMap]:
    """Contract every maximal degree-2 path of ``G[S]`` into one edge."""
    S = frozenset(range(G.n)) if S is None else frozenset(S)
    inside = mask(G.n, S)
    nbrs = {v: [w for w in G.adj[v] if inside[w]] for v in S}
    for v in sorted(S):
        if len(nbrs[v]) < 2:
            raise InvalidInput(f"vertex {v} has degree {len(nbrs[v])} < 2 in the suppressed subgraph")
    branch = sorted(v for v in S if len(nbrs[v]) >= 3)
    visited = set(branch)
    raw_edges: list[tuple[int, int, tuple[int, ...]]] = []
    used_dir: set[tuple[int, int]] = set()
    for u in branch:
        for x in nbrs[u]:
            if (u, x) in used_dir:
                continue
            walk = [u, x]
            prev, cur = u, x
            while len(nbrs[cur]) == 2:
                visited.add(cur)
                a, b = nbrs[cur]
                nxt = a if b == prev else b
                prev, cur = cur, nxt
                walk.append(cur)
            used_dir.add((u, x))
            used_dir.add((cur, prev))
            raw_edges.append((u, cur, tuple(walk)))
    reps = []
    for v in sorted(S):
        if v in visited:
            continue
        # bare cycle component: every vertex has degree 2
        walk = [v]
        visited.add(v)
        prev, cur = v, nbrs[v][0]
        while cur != v:
            visited.add(cur)
            walk.append(cur)
            a, b = nbrs[cur]
            prev, cur = cur, (a if b == prev else b)
        walk.append(v)
        reps.append(v)
        raw_edges.append((v, v, tuple(walk)))
    vertex_ids = tuple(sorted(branch + reps))
    index = {v: i for i, v in enumerate(vertex_ids)}
    edges = tuple((index[u], index[v], e) for e, (u, v, _) in enumerate(raw_edges))
    paths = tuple(w for _, _, w in raw_edges)
    return Multigraph(len(vertex_ids), edges), ExpansionMap(G, S, vertex_ids, paths)


def lift_cycle(emap: ExpansionMap, mcycle: MultiCycle) -> Cycle:
    """Host cycle of a multigraph cycle given as ``((vertex, edge id), ...)``."""
    out: list[int] = []
    for vertex, e in mcycle:
        start = emap.vertex_ids[vertex]
        walk = emap.edge_paths[e]
        if walk[0] == start:
            seg = walk
        elif walk[-1] == start:
            seg = walk[::-1]
        else:
            raise InternalError(f"edge {e} is not incident with multigraph vertex {vertex}")
        out.extend(seg[:-1])
    cycle = tuple(out)
    if not is_cycle(emap.host, cycle):
        raise InternalError(f"lifted walk {cycle} is not a cycle of the host graph")
    return cycle


def multigraph_shortest_cycle(M: Multigraph, lengths: Sequence[int] | None = None) -> MultiCycle | None:
    """Loop first, then a parallel pair, then a BFS shortest cycle.

    ``lengths`` (host length per edge id) breaks ties among loops and among
    parallel pairs in favour of the shortest lifted cycle.
    """
    w = lengths if lengths is not None else [1] * len(M.edges)
    loops = [(w[e], u, e) for u, v, e in M.edges if u == v]
    if loops:
        _, u, e = min(loops)
        return ((u, e),)
    by_pair: dict[tuple[int, int], list[int]] = {}
    for u, v, e in M.edges:
        by_pair.setdefault((min(u, v), max(u, v)), []).append(e)
    best = None
    for (u, v), es in sorted(by_pair.items()):
        if len(es) >= 2:
            e1, e2 = sorted(es, key=lambda e: (w[e], e))[:2]
            cand = (w[e1] + w[e2], u, v, e1, e2)
            if best is None or cand < best:
                best = cand
    if best is not None:
        _, u, v, e1, e2 = best
        return ((u, e1), (v, e2))
    simple = build_graph(M.n, by_pair.keys())
    c = girth_cycle(simple)
    if c is None:
        return None
    k = len(c)
    return tuple((c[i], by_pair[(min(c[i], c[(i + 1) % k]), max(c[i], c[(i + 1) % k]))][0]) for i in range(k))


def edge_lengths(emap: ExpansionMap) -> list[int]:
    return [len(p) - 1 for p in emap.edge_paths]


# -- forests ---------------------------------------------------------------


def forest_max_independent_set(F: Graph) -> frozenset:
    """Exact maximum independent set of a forest by leaf-to-root DP."""
    if not is_forest(F):
        raise InvalidInput("forest_max_independent_set needs an acyclic graph")
    parent = [-1] * F.n
    order = []
    seen = bytearray(F.n)
    for root in range(F.n):
        if seen[root]:
            continue
        seen[root] = 1
        stack = [root]
        while stack:
            v = stack.pop()
            order.append(v)
            for w in F.adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    parent[w] = v
                    stack.append(w)
    take = [1] * F.n
    skip = [0] * F.n
    for v in reversed(order):
        p = parent[v]
        if p >= 0:
            take[p] += skip[v]
            skip[p] += max(take[v], skip[v])
    chosen = set()
    for v in order:
        p = parent[v]
        if p >= 0 and p in chosen:
            continue
        if take[v] >= skip[v]:
            chosen.add(v)
    return frozenset(chosen)
