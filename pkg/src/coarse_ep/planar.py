"""Planar graphs: induced packing of k cycles or a hitting set of at most 6k vertices.

Each round works inside the 2-core, takes a leaf of the bridge forest (a
2-edge-connected piece with at most one bridge leaving it), and finds a cycle
there whose suppressed length is at most 5. Removing the closed neighbourhood
of that cycle's branch vertices and the bridge end isolates the cycle from
everything that remains.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificates import HittingSet, InducedPacking
from .errors import InternalTheoremViolation, InvalidInput, NotPlanarEvidence
from .graph import (
    Graph,
    ball,
    bridge_components,
    edge_lengths,
    lift_cycle,
    multigraph_shortest_cycle,
    suppress_degree_two,
    two_core,
)


@dataclass(frozen=True)
class PlanarStep:
    component: frozenset
    L: frozenset
    C: tuple[int, ...]
    A: frozenset


def short_cycle_in_2ecc(G: Graph, component) -> tuple[tuple[int, ...], frozenset]:
    """A cycle of ``G[component]`` of suppressed length at most 5, and its branch vertices."""
    component = frozenset(component)
    M, emap = suppress_degree_two(G, component)
    mc = multigraph_shortest_cycle(M, edge_lengths(emap))
    if mc is None:
        raise InvalidInput("component has no cycle")
    if len(mc) > 5:
        raise NotPlanarEvidence(
            f"shortest cycle after suppression has length {len(mc)} > 5; the input is not planar"
        )
    C = lift_cycle(emap, mc)
    A = frozenset(v for v in C if sum(1 for w in G.adj[v] if w in component) >= 3)
    if len(A) > 5:
        raise InternalTheoremViolation(f"cycle carries {len(A)} branch vertices")
    return C, A


def leaf_step(G: Graph) -> PlanarStep | None:
    """One round on ``G``; ``None`` if ``G`` is a forest. Vertex ids are ``G``'s."""
    core = two_core(G)
    if not core:
        return None
    sub, old = G.induced_subgraph(core)
    bf = bridge_components(sub)
    leaf = min(c for c in range(len(bf.classes)) if bf.class_degree(c) <= 1)
    comp = bf.classes[leaf]
    if len(comp) < 3:
        raise InternalTheoremViolation(f"leaf class {sorted(old[v] for v in comp)} has no cycle")
    L = frozenset(v for b in bf.bridges for v in b if v in comp)
    C, A = short_cycle_in_2ecc(sub, comp)
    return PlanarStep(
        frozenset(old[v] for v in comp),
        frozenset(old[v] for v in L),
        tuple(old[v] for v in C),
        frozenset(old[v] for v in A),
    )


def _planar(G: Graph, k: int):
    step = leaf_step(G)
    if step is None:
        return frozenset()
    if k == 1:
        return InducedPacking((step.C,))
    S = step.A | step.L
    if not S:
        # a bare cycle with nothing attached: cut it at one vertex
        S = frozenset([min(step.C)])
    near = ball(G, S, 1)
    sub, old = G.induced_subgraph(v for v in range(G.n) if v not in near)
    inner = _planar(sub, k - 1)
    if isinstance(inner, InducedPacking):
        return InducedPacking((step.C,) + tuple(tuple(old[v] for v in c) for c in inner.cycles))
    return S | frozenset(old[v] for v in inner)


def planar_pack(G: Graph, k: int):
    from .oracle import verify_certificate

    if k < 1:
        raise InvalidInput(f"k must be positive, got {k}")
    result = _planar(G, k)
    if not isinstance(result, InducedPacking):
        result = HittingSet(result, 1, k, 6 * k, "planar")
    verdict = verify_certificate(G, result, k=k)
    if not verdict:
        raise InternalTheoremViolation(f"self-verification failed: {verdict.reason}")
    return result
