"""Brute-force ground truth and the certificate verifier.

Nothing here calls the traversal kernels or ``graph``'s algorithms: BFS,
union-find and cycle enumeration are written out again so that a bug in a
producer cannot hide behind the same bug in its checker. Only the read-only
adjacency tuples of ``Graph`` are shared.

Packing-style searches enumerate chordless cycles only. That loses nothing:
every cycle contains a chordless cycle on a subset of its vertices, and
shrinking a cycle never creates an overlap, an edge between cycles, or a
shorter distance.
"""

from __future__ import annotations

import itertools
import math
import time
from collections import deque
from dataclasses import dataclass

from .certificates import (
    DistHitting,
    HittingSet,
    InducedPacking,
    TreeDecomposition,
    TwoCycles,
    Verdict,
)
from .errors import CapExceeded, InvalidInput


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 16
    max_cycles: int = 500_000
    time_cap: float = 60.0

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_cycles <= 0 or self.time_cap <= 0:
            raise InvalidInput("oracle budget fields must be positive")


DEFAULT_BUDGET = OracleBudget()


class _Clock:
    def __init__(self, budget: OracleBudget):
        self.budget = budget
        self.deadline = time.monotonic() + budget.time_cap
        self.count = 0

    def tick(self, what: str = "step"):
        self.count += 1
        if self.count & 1023 == 0 and time.monotonic() > self.deadline:
            raise CapExceeded(f"oracle time cap of {self.budget.time_cap}s exceeded during {what}")


def _check_size(G, budget: OracleBudget):
    if G.n > budget.max_vertices:
        raise CapExceeded(f"{G.n} vertices exceed the oracle budget of {budget.max_vertices}")


def _nbr_masks(G) -> list[int]:
    return [sum(1 << w for w in G.adj[v]) for v in range(G.n)]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- primitive re-implementations -----------------------------------------------


def _bfs_dist(G, sources, removed=frozenset()) -> dict[int, int]:
    dist = {s: 0 for s in sources if s not in removed}
    queue = deque(dist)
    while queue:
        x = queue.popleft()
        for y in G.adj[x]:
            if y not in dist and y not in removed:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def _ball(G, X, r) -> set[int]:
    return {v for v, d in _bfs_dist(G, X).items() if d <= r}


def _acyclic_without(G, removed) -> bool:
    parent = list(range(G.n))

    def root(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(G.n):
        if u in removed:
            continue
        for v in G.adj[u]:
            if v <= u or v in removed:
                continue
            a, b = root(u), root(v)
            if a == b:
                return False
            parent[a] = b
    return True


def _acyclic_mask(G, removed_mask: int) -> bool:
    return _acyclic_without(G, set(_bits(removed_mask)))


def _valid_cycle(G, c) -> str:
    if len(c) < 3:
        return f"cycle {list(c)} has fewer than 3 vertices"
    if len(set(c)) != len(c):
        return f"cycle {list(c)} repeats a vertex"
    for v in c:
        if not 0 <= v < G.n:
            return f"cycle {list(c)} uses vertex {v} outside the graph"
    for i in range(len(c)):
        u, v = c[i], c[(i + 1) % len(c)]
        if v not in G.adj[u]:
            return f"cycle {list(c)} uses non-edge ({u}, {v})"
    return ""


def _s(k: int) -> float:
    if k == 1:
        return 2.0
    return 4 * k * (math.log2(k) + math.log2(math.log2(k)) + 4)


def hitting_bound(theorem: str, k: int, h: int | None = None) -> float:
    """Size cap a hitting set of the given theorem must respect."""
    if theorem == "main":
        return 9 * _s(k) + 164 * (k - 1)
    if theorem == "planar":
        return 6 * k
    if theorem == "oracle":
        if h is None:
            raise InvalidInput("the oracle bound needs h")
        # negative for h = 0, k = 1, where only the empty set can occur
        return max(0, 63 * h + 164 * k - 173)
    raise InvalidInput(f"unknown theorem tag {theorem!r}")


# -- enumeration ----------------------------------------------------------------


def enumerate_cycles(G, budget: OracleBudget = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All cycles, each starting at its minimum vertex with the smaller neighbour second."""
    _check_size(G, budget)
    clock = _Clock(budget)
    out = []
    for s in range(G.n):
        path = [s]
        on_path = {s}
        stack = [iter(G.adj[s])]
        while stack:
            clock.tick("cycle enumeration")
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if w == s:
                if len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                    if len(out) > budget.max_cycles:
                        raise CapExceeded(f"more than {budget.max_cycles} cycles")
                continue
            if w < s or w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            stack.append(iter(G.adj[w]))
    return sorted(out)


def chordless_cycles(G, budget: OracleBudget = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All induced cycles, canonical as in ``enumerate_cycles``."""
    _check_size(G, budget)
    clock = _Clock(budget)
    nm = _nbr_masks(G)
    out = []
    for s in range(G.n):
        # state: path, mask of vertices adjacent to an inner path vertex
        stack = [([s, w], 0) for w in G.adj[s] if w > s]
        while stack:
            clock.tick("chordless enumeration")
            path, blocked = stack.pop()
            last = path[-1]
            for w in G.adj[last]:
                if w <= s or w in path:
                    continue
                if blocked >> w & 1:
                    continue
                if s in G.adj[w]:
                    if path[1] < w:
                        out.append(tuple(path) + (w,))
                        if len(out) > budget.max_cycles:
                            raise CapExceeded(f"more than {budget.max_cycles} chordless cycles")
                    continue
                # w may not touch s or any inner vertex other than ``last``
                stack.append((path + [w], blocked | (nm[last] & ~(1 << w))))
    return sorted(out)


def _cycle_masks(cycles) -> list[int]:
    return [sum(1 << v for v in c) for c in cycles]


def _closed(nm, mask) -> int:
    out = mask
    for v in _bits(mask):
        out |= nm[v]
    return out


def _pick(masks, blockers, k, clock) -> list[int] | None:
    """Indices of ``k`` items with ``masks[i] & blockers[j] == 0`` pairwise."""
    chosen: list[int] = []

    def rec(start, forbidden):
        if len(chosen) == k:
            return True
        for i in range(start, len(masks)):
            clock.tick("packing search")
            if masks[i] & forbidden:
                continue
            if len(masks) - i < k - len(chosen):
                return False
            chosen.append(i)
            if rec(i + 1, forbidden | blockers[i]):
                return True
            chosen.pop()
        return False

    return list(chosen) if rec(0, 0) else None


def find_induced_packing(G, k: int, budget: OracleBudget = DEFAULT_BUDGET):
    """``k`` chordless cycles forming an induced packing, or ``None``."""
    if k <= 0:
        return []
    cycles = chordless_cycles(G, budget)
    masks = _cycle_masks(cycles)
    nm = _nbr_masks(G)
    blockers = [_closed(nm, m) for m in masks]
    idx = _pick(masks, blockers, k, _Clock(budget))
    return None if idx is None else [cycles[i] for i in idx]


def max_induced_packing_bruteforce(G, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    return find_induced_packing(G, k, budget) is not None


def find_disjoint_cycles(G, k: int, budget: OracleBudget = DEFAULT_BUDGET):
    """``k`` vertex-disjoint chordless cycles, or ``None``."""
    if k <= 0:
        return []
    cycles = chordless_cycles(G, budget)
    masks = _cycle_masks(cycles)
    idx = _pick(masks, masks, k, _Clock(budget))
    return None if idx is None else [cycles[i] for i in idx]


def disjoint_cycles_bruteforce(G, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    return find_disjoint_cycles(G, k, budget) is not None


def distance_packing_exists_bruteforce(G, d: int, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """True iff two cycles are more than ``d`` apart."""
    cycles = chordless_cycles(G, budget)
    masks = _cycle_masks(cycles)
    clock = _Clock(budget)
    for c, m in zip(cycles, masks):
        near = sum(1 << v for v in _ball(G, c, d))
        for m2 in masks:
            clock.tick("distance search")
            if not m2 & near:
                return True
    return False


def min_fvs_bruteforce(G, budget: OracleBudget = DEFAULT_BUDGET) -> frozenset:
    _check_size(G, budget)
    clock = _Clock(budget)
    for size in range(G.n + 1):
        for S in itertools.combinations(range(G.n), size):
            clock.tick("feedback vertex set search")
            if _acyclic_without(G, set(S)):
                return frozenset(S)
    return frozenset(range(G.n))


def min_ball_fvs_bruteforce(G, r: int, budget: OracleBudget = DEFAULT_BUDGET) -> frozenset:
    """Smallest ``X`` with ``G - ball(X, r)`` acyclic."""
    _check_size(G, budget)
    clock = _Clock(budget)
    balls = [sum(1 << u for u in _ball(G, [v], r)) for v in range(G.n)]
    for size in range(G.n + 1):
        for S in itertools.combinations(range(G.n), size):
            clock.tick("ball cover search")
            m = 0
            for v in S:
                m |= balls[v]
            if _acyclic_mask(G, m):
                return frozenset(S)
    return frozenset(range(G.n))


def _independent_at_least(G, vertices: list[int], t: int, clock) -> bool:
    nm = _nbr_masks(G)

    def rec(cands: list[int], need: int) -> bool:
        if need == 0:
            return True
        if len(cands) < need:
            return False
        for i, v in enumerate(cands):
            clock.tick("claw search")
            rest = [w for w in cands[i + 1:] if not nm[v] >> w & 1]
            if rec(rest, need - 1):
                return True
        return False

    return rec(sorted(vertices), t)


def is_k1t_free(G, t: int, budget: OracleBudget | None = None) -> bool:
    """No vertex sees an independent set of size ``t``."""
    budget = budget or OracleBudget(max_vertices=200)
    _check_size(G, budget)
    clock = _Clock(budget)
    return not any(_independent_at_least(G, list(G.adj[v]), t, clock) for v in range(G.n))


def independence_number(G, vertices, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Exact ``alpha(G[vertices])`` by plain recursion on bitmasks."""
    vs = sorted(vertices)
    if len(vs) > budget.max_vertices * 4:
        raise CapExceeded(f"bag of {len(vs)} vertices exceeds the oracle budget")
    pos = {v: i for i, v in enumerate(vs)}
    nm = [sum(1 << pos[w] for w in G.adj[v] if w in pos) for v in vs]
    clock = _Clock(budget)
    memo: dict[int, int] = {}

    def alpha(mask: int) -> int:
        if mask == 0:
            return 0
        if mask in memo:
            return memo[mask]
        clock.tick("independence number")
        v = (mask & -mask).bit_length() - 1
        if bin(nm[v] & mask).count("1") <= 1:
            # an isolated or pendant vertex is always in some maximum set
            r = 1 + alpha(mask & ~(1 << v) & ~nm[v])
        else:
            r = max(alpha(mask & ~(1 << v)), 1 + alpha(mask & ~(1 << v) & ~nm[v]))
        memo[mask] = r
        return r

    return alpha((1 << len(vs)) - 1)


# -- certificate checking -------------------------------------------------------


def _verify_packing(G, cert: InducedPacking, k) -> Verdict:
    if k is not None and len(cert.cycles) != k:
        return Verdict(False, f"expected {k} cycles, got {len(cert.cycles)}")
    owner = {}
    for i, c in enumerate(cert.cycles):
        why = _valid_cycle(G, c)
        if why:
            return Verdict(False, why)
        for v in c:
            if v in owner:
                return Verdict(False, f"vertex {v} lies on cycles {owner[v]} and {i}")
            owner[v] = i
    for v, i in owner.items():
        for w in G.adj[v]:
            if w in owner and owner[w] != i:
                return Verdict(False, f"edge ({v}, {w}) joins cycles {i} and {owner[w]}")
    return Verdict(True, "induced packing")


def _verify_hitting(G, cert: HittingSet, k, theorem, h) -> Verdict:
    k = cert.k if k is None else k
    theorem = cert.theorem if theorem is None else theorem
    h = cert.h if h is None else h
    for v in cert.X:
        if not 0 <= v < G.n:
            return Verdict(False, f"vertex {v} outside the graph")
    if cert.radius != 1:
        return Verdict(False, f"hitting sets are stated for radius 1, got {cert.radius}")
    bound = hitting_bound(theorem, k, h)
    if not math.isinf(cert.bound) and not math.isclose(cert.bound, bound):
        return Verdict(False, f"stated bound {cert.bound} differs from the theorem's {bound:.3f}")
    if len(cert.X) > bound:
        return Verdict(False, f"|X| = {len(cert.X)} exceeds the bound {bound:.3f}")
    if not _acyclic_without(G, _ball(G, cert.X, cert.radius)):
        return Verdict(False, f"G minus the radius-{cert.radius} ball of X still has a cycle")
    return Verdict(True, "hitting set", {"size": len(cert.X), "bound": bound})


def _verify_two_cycles(G, cert: TwoCycles, d) -> Verdict:
    d = cert.d if d is None else d
    for c in (cert.C1, cert.C2):
        why = _valid_cycle(G, c)
        if why:
            return Verdict(False, why)
    dist = _bfs_dist(G, cert.C1)
    gap = min((dist[v] for v in cert.C2 if v in dist), default=math.inf)
    if gap <= d:
        return Verdict(False, f"cycles are at distance {gap} <= {d}")
    return Verdict(True, "distance packing", {"distance": gap})


def _verify_dist_hitting(G, cert: DistHitting, d) -> Verdict:
    d = cert.d if d is None else d
    if len(cert.X1) > 12 * (d + 1):
        return Verdict(False, f"|X1| = {len(cert.X1)} exceeds {12 * (d + 1)}")
    if len(cert.X2) > 12:
        return Verdict(False, f"|X2| = {len(cert.X2)} exceeds 12")
    for X, r, name in ((cert.X1, 2 * d, "X1"), (cert.X2, 3 * d, "X2")):
        if any(not 0 <= v < G.n for v in X):
            return Verdict(False, f"{name} has a vertex outside the graph")
        if not _acyclic_without(G, _ball(G, X, r)):
            return Verdict(False, f"G minus the radius-{r} ball of {name} still has a cycle")
    return Verdict(True, "distance hitting sets")


def _verify_td(G, td: TreeDecomposition, alpha_bound, budget) -> Verdict:
    nodes = len(td.bags)
    if len(td.tree) != nodes:
        return Verdict(False, "tree and bag counts differ")
    if nodes == 0:
        return Verdict(G.n == 0, "empty decomposition" if G.n == 0 else "no bags for a nonempty graph")
    edges = [(a, b) for a in range(nodes) for b in td.tree[a] if a < b]
    for a in range(nodes):
        for b in td.tree[a]:
            if not 0 <= b < nodes or a not in td.tree[b]:
                return Verdict(False, f"tree adjacency not symmetric at ({a}, {b})")
    if len(edges) != nodes - 1 or len(_bfs_tree_nodes(td.tree, 0)) != nodes:
        return Verdict(False, "decomposition graph is not a tree")
    where: dict[int, list[int]] = {}
    for i, bag in enumerate(td.bags):
        for v in bag:
            if not 0 <= v < G.n:
                return Verdict(False, f"bag {i} holds vertex {v} outside the graph")
            where.setdefault(v, []).append(i)
    for v in range(G.n):
        if v not in where:
            return Verdict(False, f"vertex {v} is in no bag")
    for u in range(G.n):
        for v in G.adj[u]:
            if u < v and not any(v in td.bags[i] for i in where[u]):
                return Verdict(False, f"edge ({u}, {v}) is in no bag")
    for v, nodes_v in where.items():
        allowed = set(nodes_v)
        if len(_bfs_tree_nodes(td.tree, nodes_v[0], allowed)) != len(allowed):
            return Verdict(False, f"bags holding vertex {v} are not connected")
    details = {}
    if alpha_bound is not None:
        alpha = max(independence_number(G, bag, budget) for bag in td.bags)
        details["alpha"] = alpha
        if alpha > alpha_bound:
            return Verdict(False, f"bag independence {alpha} exceeds {alpha_bound}", details)
    return Verdict(True, "tree decomposition", details)


def _bfs_tree_nodes(tree, start, allowed=None) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in tree[x]:
            if y not in seen and (allowed is None or y in allowed):
                seen.add(y)
                queue.append(y)
    return seen


def verify_certificate(
    G,
    result,
    *,
    k: int | None = None,
    theorem: str | None = None,
    h: int | None = None,
    d: int | None = None,
    alpha_bound: float | None = None,
    budget: OracleBudget = OracleBudget(max_vertices=64),
) -> Verdict:
    """Re-check every postcondition of ``result`` from scratch."""
    if isinstance(result, InducedPacking):
        return _verify_packing(G, result, k)
    if isinstance(result, HittingSet):
        return _verify_hitting(G, result, k, theorem, h)
    if isinstance(result, TwoCycles):
        return _verify_two_cycles(G, result, d)
    if isinstance(result, DistHitting):
        return _verify_dist_hitting(G, result, d)
    if isinstance(result, TreeDecomposition):
        return _verify_td(G, result, alpha_bound, budget)
    return Verdict(False, f"unknown result type {type(result).__name__}")
