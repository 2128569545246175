"""Tree-decompositions of small independence number for graphs without a large induced star."""

from __future__ import annotations

from dataclasses import dataclass, field

from .certificates import HittingSet, InducedPacking, TreeDecomposition
from .errors import CapExceeded, InternalTheoremViolation, InvalidInput
from .graph import Graph, ball, is_forest, is_forest_after_removal
from .packing import induced_pack_or_hit


def forest_td(F: Graph) -> TreeDecomposition:
    """One node per vertex and per edge; component roots are chained together."""
    if not is_forest(F):
        raise InvalidInput("forest_td needs a forest")
    tree: list[list[int]] = []
    bags: list[frozenset] = []

    def node(bag) -> int:
        tree.append([])
        bags.append(frozenset(bag))
        return len(bags) - 1

    def link(a: int, b: int) -> None:
        tree[a].append(b)
        tree[b].append(a)

    vnode: dict[int, int] = {}
    prev_root = None
    for r in range(F.n):
        if r in vnode:
            continue
        vnode[r] = node([r])
        if prev_root is not None:
            link(prev_root, vnode[r])
        prev_root = vnode[r]
        stack = [r]
        while stack:
            x = stack.pop()
            for y in F.adj[x]:
                if y in vnode:
                    continue
                vnode[y] = node([y])
                e = node([x, y])
                link(vnode[x], e)
                link(e, vnode[y])
                stack.append(y)
    return TreeDecomposition(tuple(tuple(sorted(nb)) for nb in tree), tuple(bags))


def k1t_td(G: Graph, k: int, t: int, paranoid: bool = False):
    """An induced packing of ``k`` cycles, or a decomposition whose bags have independence
    at most ``f_bound(k) * (t - 1) + 2`` when ``G`` has no induced ``K_{1,t}``."""
    if t < 1:
        raise InvalidInput(f"star size must be positive, got {t}")
    res = induced_pack_or_hit(G, k, paranoid=paranoid)
    if isinstance(res, InducedPacking):
        return res
    return td_from_hitting_set(G, res)


def td_from_hitting_set(G: Graph, hs: HittingSet) -> TreeDecomposition:
    near = ball(G, hs.X, hs.radius)
    rest = [v for v in range(G.n) if v not in near]
    sub, old = G.induced_subgraph(rest)
    base = forest_td(sub)
    if base.size == 0:
        if G.n == 0:
            return base
        return TreeDecomposition(((),), (frozenset(near),))
    bags = tuple(frozenset(old[v] for v in bag) | near for bag in base.bags)
    td = TreeDecomposition(base.tree, bags)
    report = validate_td(G, td, independence_cap=None)
    if not report.ok:
        raise InternalTheoremViolation(f"invalid decomposition: {report.failures[0]}")
    return td


@dataclass
class TDReport:
    failures: list = field(default_factory=list)
    max_independence: int | None = None
    witness_bag: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok


def validate_td(G: Graph, td: TreeDecomposition, independence_cap: int | None = 64) -> TDReport:
    """Check the decomposition axioms; with a cap, also compute the exact bag independence.

    Bags larger than ``independence_cap`` raise ``CapExceeded``.
    """
    rep = TDReport()
    nodes = td.size
    if len(td.tree) != nodes:
        rep.failures.append(("shape", "tree and bag lists differ in length"))
        return rep
    for a in range(nodes):
        for b in td.tree[a]:
            if not 0 <= b < nodes or a not in td.tree[b] or a == b:
                rep.failures.append(("tree", (a, b)))
                return rep
    n_edges = sum(len(nb) for nb in td.tree) // 2
    if nodes and (n_edges != nodes - 1 or len(_reach(td.tree, 0, None)) != nodes):
        rep.failures.append(("tree", "decomposition graph is not a tree"))
        return rep
    where: dict[int, list[int]] = {}
    for i, bag in enumerate(td.bags):
        for v in bag:
            if not 0 <= v < G.n:
                rep.failures.append(("vertex_range", v))
            where.setdefault(v, []).append(i)
    missing = [v for v in range(G.n) if v not in where]
    if missing:
        rep.failures.append(("vertex_cover", missing[0]))
    for u, v in G.edges():
        if u in where and not any(v in td.bags[i] for i in where[u]):
            rep.failures.append(("edge_cover", (u, v)))
            break
    for v, at in sorted(where.items()):
        if len(_reach(td.tree, at[0], set(at))) != len(at):
            rep.failures.append(("connected", v))
            break
    if independence_cap is not None and not rep.failures:
        best, arg = 0, None
        for i, bag in enumerate(td.bags):
            if len(bag) > independence_cap:
                raise CapExceeded(f"bag {i} has {len(bag)} vertices, above the cap {independence_cap}")
            a = max_independent_set_size(G, bag)
            if arg is None or a > best:
                best, arg = a, i
        rep.max_independence = best
        rep.witness_bag = arg
    return rep


def _reach(tree, start: int, allowed) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in tree[x]:
            if y not in seen and (allowed is None or y in allowed):
                seen.add(y)
                stack.append(y)
    return seen


def max_independent_set_size(G: Graph, vertices) -> int:
    """Exact independence number of ``G[vertices]`` by branch-and-bound.

    The bound is a greedy clique cover: each clique contributes at most one vertex.
    """
    vs = sorted(vertices)
    pos = {v: i for i, v in enumerate(vs)}
    nbr = [0] * len(vs)
    for v in vs:
        for w in G.adj[v]:
            if w in pos:
                nbr[pos[v]] |= 1 << pos[w]
    best = 0

    def cover_bound(cand: int) -> int:
        count = 0
        while cand:
            count += 1
            low = cand & -cand
            clique = low
            rest = cand & nbr[low.bit_length() - 1]
            while rest:
                b = rest & -rest
                clique |= b
                rest &= nbr[b.bit_length() - 1]
            cand &= ~clique
        return count

    def go(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + cover_bound(cand) <= best:
            return
        v = max(_bits(cand), key=lambda i: (nbr[i] & cand).bit_count())
        if (nbr[v] & cand).bit_count() <= 1:
            # a matching plus isolated vertices: one vertex per edge and every isolated one
            edges = sum((nbr[i] & cand).bit_count() for i in _bits(cand)) // 2
            best = max(best, size + cand.bit_count() - edges)
            return
        go(size + 1, cand & ~(1 << v) & ~nbr[v])
        go(size, cand & ~(1 << v))

    go(0, (1 << len(vs)) - 1)
    return best


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def ball_size_bound(size: int, delta: int, r: int) -> int:
    if delta <= 2:
        return size * (1 + delta * r)
    return size * (1 + delta * ((delta - 1) ** r - 1) // (delta - 2))


def hitting_to_fvs(G: Graph, X, r: int) -> frozenset:
    """``ball(X, r)`` as an explicit feedback vertex set, with its degree-based size bound checked."""
    if r < 0:
        raise InvalidInput(f"radius must be non-negative, got {r}")
    near = ball(G, X, r)
    if not is_forest_after_removal(G, near):
        raise InvalidInput(f"removing the radius-{r} ball of X leaves a cycle")
    cap = ball_size_bound(len(set(X)), G.max_degree(), r)
    if len(near) > cap:
        raise InternalTheoremViolation(f"ball of {len(near)} vertices exceeds the degree bound {cap}")
    return near
