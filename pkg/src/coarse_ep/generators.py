"""Deterministic instance generators, seeded through ``random.Random``."""

from __future__ import annotations

import random
from itertools import combinations

from .errors import InvalidInput
from .graph import Graph, build_graph, girth_cycle


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def empty(n: int) -> Graph:
    return build_graph(n, [])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInput("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(t: int) -> Graph:
    """``K_{1,t}`` with centre 0."""
    return complete_bipartite(1, t)


def grid(a: int, b: int) -> Graph:
    edges = []
    for r in range(a):
        for c in range(b):
            v = r * b + c
            if c + 1 < b:
                edges.append((v, v + 1))
            if r + 1 < a:
                edges.append((v, v + b))
    return build_graph(a * b, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def heawood() -> Graph:
    ring = [(i, (i + 1) % 14) for i in range(14)]
    chords = [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return build_graph(14, ring + chords)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    base = 0
    for g in graphs:
        edges.extend((u + base, v + base) for u, v in g.edges())
        base += g.n
    return build_graph(base, edges)


def gnp(n: int, p: float, seed=None) -> Graph:
    if not 0 <= p <= 1:
        raise InvalidInput(f"edge probability {p} outside [0, 1]")
    rng = _rng(seed)
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_cubic(n: int, seed=None, max_tries: int = 10_000) -> Graph:
    """Uniform simple cubic graph via the pairing model with rejection."""
    if n < 4 or n % 2:
        raise InvalidInput(f"no cubic graph on {n} vertices")
    rng = _rng(seed)
    points = [v for v in range(n) for _ in range(3)]
    for _ in range(max_tries):
        rng.shuffle(points)
        pairs = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            e = (min(u, v), max(u, v))
            if u == v or e in pairs:
                ok = False
                break
            pairs.add(e)
        if ok:
            return build_graph(n, pairs)
    raise InvalidInput(f"pairing model failed {max_tries} times for n={n}")


def high_girth_cubic(n: int, girth: int = 5, seed=None, max_tries: int = 100_000) -> Graph:
    """Random cubic graph, resampled until its girth is at least ``girth``."""
    rng = _rng(seed)
    for _ in range(max_tries):
        G = random_cubic(n, rng)
        c = girth_cycle(G)
        if c is None or len(c) >= girth:
            return G
    raise InvalidInput(f"no cubic graph of girth >= {girth} on {n} vertices found")


def random_girth_graph(n: int, m: int, girth: int, seed=None) -> Graph:
    """Insert random edges while every cycle stays at least ``girth`` long."""
    rng = _rng(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges = []
    candidates = list(combinations(range(n), 2))
    rng.shuffle(candidates)
    for u, v in candidates:
        if len(edges) >= m:
            break
        # the new edge closes a cycle of length dist(u, v) + 1
        if _within(adj, u, v, girth - 2):
            continue
        adj[u].add(v)
        adj[v].add(u)
        edges.append((u, v))
    return build_graph(n, edges)


def _within(adj, u: int, v: int, r: int) -> bool:
    seen = {u}
    frontier = [u]
    for _ in range(r):
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y == v:
                    return True
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return False


def cycle_with_handles(length: int, attachments, handle_length: int) -> Graph:
    """A cycle ``0..length-1`` plus one path of ``handle_length`` new vertices per attachment pair.

    An attachment ``(i, i)`` hangs a cycle of length ``handle_length + 1`` off vertex ``i``.
    """
    if handle_length < 2:
        raise InvalidInput("handles need at least two interior vertices")
    edges = [(i, (i + 1) % length) for i in range(length)]
    nxt = length
    for a, b in attachments:
        if not (0 <= a < length and 0 <= b < length):
            raise InvalidInput(f"attachment ({a}, {b}) is not on the cycle")
        chain = [a] + list(range(nxt, nxt + handle_length)) + [b]
        nxt += handle_length
        edges.extend(zip(chain, chain[1:]))
    return build_graph(nxt, edges)


def grid_subgraph(a: int, b: int, keep: float = 0.8, seed=None) -> Graph:
    rng = _rng(seed)
    G = grid(a, b)
    return build_graph(G.n, [e for e in G.edges() if rng.random() < keep])


def stacked_triangulation(n: int, seed=None) -> Graph:
    """Planar: start from a triangle, add each vertex inside a random face."""
    if n < 3:
        raise InvalidInput("a stacked triangulation needs at least 3 vertices")
    rng = _rng(seed)
    edges = [(0, 1), (1, 2), (0, 2)]
    faces = [(0, 1, 2)]
    for v in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        edges += [(a, v), (b, v), (c, v)]
        faces[i] = (a, b, v)
        faces += [(b, c, v), (a, c, v)]
    return build_graph(n, edges)


def outerplanar(n: int, chords: int, seed=None) -> Graph:
    """A Hamiltonian cycle plus non-crossing chords."""
    rng = _rng(seed)
    G = cycle(n)
    edges = set(G.edges())
    chosen: list[tuple[int, int]] = []

    def crosses(a, b, c, d):
        return a < c < b < d or c < a < d < b

    for _ in range(chords * 20):
        if len(chosen) >= chords:
            break
        a, b = sorted(rng.sample(range(n), 2))
        if (a, b) in edges or any(crosses(a, b, c, d) for c, d in chosen):
            continue
        chosen.append((a, b))
        edges.add((a, b))
    return build_graph(n, edges)


def line_graph(G: Graph) -> Graph:
    """Vertices are the edges of ``G`` in ``G.edges()`` order."""
    E = G.edges()
    at: list[list[int]] = [[] for _ in range(G.n)]
    for i, (u, v) in enumerate(E):
        at[u].append(i)
        at[v].append(i)
    return build_graph(len(E), [p for ids in at for p in combinations(ids, 2)])


def subdivide(G: Graph, s: int) -> Graph:
    """Replace every edge by a path with ``s`` new interior vertices."""
    if s < 0:
        raise InvalidInput("subdivision count must be non-negative")
    edges = []
    nxt = G.n
    for u, v in G.edges():
        chain = [u] + list(range(nxt, nxt + s)) + [v]
        nxt += s
        edges.extend(zip(chain, chain[1:]))
    return build_graph(nxt, edges)


MODELS = {
    "gnp": (gnp, ("n", "p")),
    "random_cubic": (random_cubic, ("n",)),
    "high_girth_cubic": (high_girth_cubic, ("n", "girth")),
    "random_girth": (random_girth_graph, ("n", "m", "girth")),
    "grid": (grid, ("a", "b")),
    "grid_subgraph": (grid_subgraph, ("a", "b", "keep")),
    "stacked_triangulation": (stacked_triangulation, ("n",)),
    "outerplanar": (outerplanar, ("n", "chords")),
    "complete": (complete, ("n",)),
    "complete_bipartite": (complete_bipartite, ("m", "n")),
    "line_complete_bipartite": (lambda m, n: line_graph(complete_bipartite(m, n)), ("m", "n")),
    "star": (star, ("t",)),
    "cycle": (cycle, ("n",)),
    "path": (path, ("n",)),
    "petersen": (petersen, ()),
    "heawood": (heawood, ()),
    "cycle_with_handles": (cycle_with_handles, ("length", "attachments", "handle_length")),
}

SEEDED = {"gnp", "random_cubic", "high_girth_cubic", "random_girth", "grid_subgraph",
          "stacked_triangulation", "outerplanar"}


def gen(model: str, params: dict, seed=None) -> Graph:
    if model not in MODELS:
        raise InvalidInput(f"unknown model {model!r}; choose from {', '.join(sorted(MODELS))}")
    fn, names = MODELS[model]
    missing = [p for p in names if p not in params and not (model == "high_girth_cubic" and p == "girth")]
    if missing:
        raise InvalidInput(f"model {model} needs parameters {', '.join(missing)}")
    kwargs = {p: params[p] for p in names if p in params}
    if model in SEEDED:
        kwargs["seed"] = seed
    return fn(**kwargs)
