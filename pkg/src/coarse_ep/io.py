"""Graph files (edge list, DIMACS) and JSON certificate files."""

from __future__ import annotations

import json
import math

from .certificates import DistHitting, HittingSet, InducedPacking, TreeDecomposition, TwoCycles
from .errors import InvalidInput
from .graph import Graph, build_graph

FORMATS = ("edgelist", "dimacs")


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise InvalidInput(f"line {lineno}: expected {count} integers, got {line.strip()!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InvalidInput(f"line {lineno}: not an integer in {line.strip()!r}") from None


def _content_lines(text: str, comment: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s and not s.startswith(comment):
            yield lineno, s


def _finish(n: int, m: int, rows, lineno_end: int) -> Graph:
    seen = set()
    for lineno, u, v in rows:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInput(f"line {lineno}: vertex out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise InvalidInput(f"line {lineno}: self-loop at {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise InvalidInput(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add(e)
    if len(seen) != m:
        raise InvalidInput(f"line {lineno_end}: header promises {m} edges, found {len(seen)}")
    return build_graph(n, seen)


def parse_graph(data: bytes | str, fmt: str = "edgelist") -> Graph:
    text = data.decode() if isinstance(data, bytes) else data
    if fmt == "edgelist":
        lines = list(_content_lines(text, "#"))
        if not lines:
            raise InvalidInput("line 1: missing 'n m' header")
        n, m = _ints(lines[0][1], lines[0][0], 2)
        rows = [(ln, *_ints(s, ln, 2)) for ln, s in lines[1:]]
    elif fmt == "dimacs":
        lines = list(_content_lines(text, "c"))
        if not lines or not lines[0][1].startswith("p "):
            raise InvalidInput(f"line {lines[0][0] if lines else 1}: missing 'p edge n m' line")
        head = lines[0][1].split()
        if len(head) != 4 or head[1] not in ("edge", "col"):
            raise InvalidInput(f"line {lines[0][0]}: malformed problem line {lines[0][1]!r}")
        n, m = _ints(" ".join(head[2:]), lines[0][0], 2)
        rows = []
        for ln, s in lines[1:]:
            if not s.startswith("e "):
                raise InvalidInput(f"line {ln}: expected an 'e u v' line, got {s!r}")
            u, v = _ints(s[2:], ln, 2)
            rows.append((ln, u - 1, v - 1))
    else:
        raise InvalidInput(f"unknown graph format {fmt!r}; choose from {', '.join(FORMATS)}")
    if n < 0 or m < 0:
        raise InvalidInput(f"line {lines[0][0]}: negative size in header")
    end = lines[-1][0] + 1
    return _finish(n, m, rows, end)


def serialize_graph(G: Graph, fmt: str = "edgelist") -> bytes:
    E = G.edges()
    if fmt == "edgelist":
        out = [f"{G.n} {len(E)}"] + [f"{u} {v}" for u, v in E]
    elif fmt == "dimacs":
        out = [f"p edge {G.n} {len(E)}"] + [f"e {u + 1} {v + 1}" for u, v in E]
    else:
        raise InvalidInput(f"unknown graph format {fmt!r}; choose from {', '.join(FORMATS)}")
    return ("\n".join(out) + "\n").encode()


def certificate_to_dict(cert) -> dict:
    if isinstance(cert, InducedPacking):
        return {"type": "packing", "k": cert.k, "cycles": [list(c) for c in cert.cycles]}
    if isinstance(cert, HittingSet):
        return {
            "type": "hitting",
            "radius": cert.radius,
            "X": sorted(cert.X),
            "bound": None if math.isinf(cert.bound) else cert.bound,
            "k": cert.k,
            "theorem": cert.theorem,
            "h": cert.h,
        }
    if isinstance(cert, TwoCycles):
        return {"type": "two_cycles", "d": cert.d, "C1": list(cert.C1), "C2": list(cert.C2)}
    if isinstance(cert, DistHitting):
        return {"type": "dist_hitting", "d": cert.d, "X1": sorted(cert.X1), "X2": sorted(cert.X2)}
    if isinstance(cert, TreeDecomposition):
        return {
            "type": "tree_decomposition",
            "tree": [list(nb) for nb in cert.tree],
            "bags": [sorted(b) for b in cert.bags],
        }
    raise InvalidInput(f"cannot serialize {type(cert).__name__}")


def _field(doc: dict, key: str):
    if key not in doc:
        raise InvalidInput(f"certificate is missing field {key!r}")
    return doc[key]


def _int_list(value, key: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise InvalidInput(f"certificate field {key!r} must be a list of integers")
    return value


def certificate_from_dict(doc: dict):
    if not isinstance(doc, dict):
        raise InvalidInput("certificate must be a JSON object")
    kind = _field(doc, "type")
    if kind == "packing":
        cycles = _field(doc, "cycles")
        if not isinstance(cycles, list):
            raise InvalidInput("certificate field 'cycles' must be a list")
        return InducedPacking(tuple(tuple(_int_list(c, "cycles")) for c in cycles))
    if kind == "hitting":
        bound = doc.get("bound")
        return HittingSet(
            frozenset(_int_list(_field(doc, "X"), "X")),
            radius=int(doc.get("radius", 1)),
            k=int(doc.get("k", 1)),
            bound=math.inf if bound is None else bound,
            theorem=doc.get("theorem", "main"),
            h=doc.get("h"),
        )
    if kind == "two_cycles":
        return TwoCycles(tuple(_int_list(_field(doc, "C1"), "C1")),
                         tuple(_int_list(_field(doc, "C2"), "C2")), int(_field(doc, "d")))
    if kind == "dist_hitting":
        return DistHitting(frozenset(_int_list(_field(doc, "X1"), "X1")),
                           frozenset(_int_list(_field(doc, "X2"), "X2")), int(_field(doc, "d")))
    if kind == "tree_decomposition":
        tree = _field(doc, "tree")
        bags = _field(doc, "bags")
        if not isinstance(tree, list) or not isinstance(bags, list):
            raise InvalidInput("certificate fields 'tree' and 'bags' must be lists")
        return TreeDecomposition(tuple(tuple(_int_list(nb, "tree")) for nb in tree),
                                 tuple(frozenset(_int_list(b, "bags")) for b in bags))
    raise InvalidInput(f"unknown certificate type {kind!r}")


def dumps(doc: dict) -> bytes:
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()


def serialize_certificate(cert, **extra) -> bytes:
    doc = certificate_to_dict(cert)
    doc.update(extra)
    return dumps(doc)


def parse_certificate(data: bytes | str):
    """Returns ``(certificate, document)`` so callers can read extra fields."""
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"line {exc.lineno}: malformed certificate JSON: {exc.msg}") from None
    return certificate_from_dict(doc), doc
