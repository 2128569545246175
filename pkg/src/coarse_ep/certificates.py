"""Result objects shared by the producers and the verifier."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class InducedPacking:
    """Pairwise vertex-disjoint cycles with no host edge between two of them."""

    cycles: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.cycles)


@dataclass(frozen=True)
class HittingSet:
    """``G - ball(X, radius)`` is a forest; ``bound`` is the guaranteed size cap."""

    X: frozenset
    radius: int = 1
    k: int = 1
    bound: float = float("inf")
    theorem: str = "main"
    h: int | None = None


Certificate = InducedPacking | HittingSet


@dataclass(frozen=True)
class TwoCycles:
    """Two cycles at distance more than ``d``."""

    C1: tuple[int, ...]
    C2: tuple[int, ...]
    d: int


@dataclass(frozen=True)
class DistHitting:
    """``G - ball(X1, 2d)`` and ``G - ball(X2, 3d)`` are forests."""

    X1: frozenset
    X2: frozenset
    d: int


DistResult = TwoCycles | DistHitting


@dataclass(frozen=True)
class TreeDecomposition:
    """Decomposition tree given as an adjacency list plus one bag per node."""

    tree: tuple[tuple[int, ...], ...]
    bags: tuple[frozenset, ...]

    @property
    def size(self) -> int:
        return len(self.bags)

    def tree_edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, nb in enumerate(self.tree) for b in nb if a < b]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    details: dict = field(default_factory=dict, compare=False)

    def __bool__(self):
        return self.ok
