"""Backend selection for the traversal kernels.

The compiled extension is used when it imports; otherwise (or when the
environment variable ``COARSE_EP_PURE_PYTHON`` is set) the pure-Python twin
is used. Both return plain lists so callers never see the difference.
"""

from __future__ import annotations

import contextlib
import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

INF = _pykernels.INF

_backend = "python"
if _ckernels is not None and not os.environ.get("COARSE_EP_PURE_PYTHON"):
    _backend = "cython"


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in available_backends():
        raise ValueError(f"backend {name!r} not available")
    _backend = name


@contextlib.contextmanager
def use_backend(name: str):
    previous = _backend
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def _all_alive(g) -> bytearray:
    return bytearray(b"\x01") * g.n


def bfs(g, sources, alive=None, maxdepth: int = -1):
    """Multi-source BFS; returns ``(dist, parent)`` lists, ``-1`` when unreached."""
    if alive is None:
        alive = _all_alive(g)
    sources = sorted(sources)
    if _backend == "cython":
        indptr, indices = g.csr()
        return _ckernels.bfs(indptr, indices, sources, alive, maxdepth)
    return _pykernels.bfs(g.adj, sources, alive, maxdepth)


def girth_cycle(g, alive=None) -> list[int]:
    if g.n == 0:
        return []
    if alive is None:
        alive = _all_alive(g)
    if _backend == "cython":
        indptr, indices = g.csr()
        return _ckernels.girth_cycle(indptr, indices, alive)
    return _pykernels.girth_cycle(g.adj, alive)


def cycle_through(g, v: int, alive=None, limit: int = INF) -> list[int]:
    """Shortest cycle through ``v`` strictly shorter than ``limit``, starting at ``v``."""
    if alive is None:
        alive = _all_alive(g)
    if _backend == "cython":
        indptr, indices = g.csr()
        return _ckernels.cycle_through(indptr, indices, alive, v, limit)
    return _pykernels.cycle_through(g.adj, alive, v, limit)


def shortest_hpath(g, interior, ends, hedge) -> list[int]:
    if g.n == 0:
        return []
    if _backend == "cython":
        indptr, indices = g.csr()
        return _ckernels.shortest_hpath(indptr, indices, interior, ends, hedge)
    return _pykernels.shortest_hpath(g.adj, g.offsets, interior, ends, hedge)
