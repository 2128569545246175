"""Command-line front end. Every certificate is re-verified before it is written."""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .certificates import TreeDecomposition
from .distpack import dist_pack_two
from .errors import CapExceeded, InternalTheoremViolation, InvalidInput
from .generators import MODELS, gen
from .graph import girth_cycle
from .io import FORMATS, dumps, parse_certificate, parse_graph, serialize_certificate, serialize_graph
from .oracle import OracleBudget, is_k1t_free, verify_certificate
from .packing import f_bound, induced_pack_or_hit
from .planar import planar_pack
from .treedecomp import k1t_td, validate_td

EXIT_OK, EXIT_INVALID, EXIT_INTERNAL, EXIT_CAP = 0, 1, 2, 3


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, data: bytes) -> None:
    if path in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    with open(path, "wb") as fh:
        fh.write(data)


def _load_graph(args):
    return parse_graph(_read(args.input), args.format)


def _emit(args, G, cert, check: dict, extra: dict | None = None) -> int:
    verdict = verify_certificate(G, cert, **check)
    if not verdict:
        raise InternalTheoremViolation(f"refusing to write an unverified certificate: {verdict.reason}")
    _write(args.output, serialize_certificate(cert, **(extra or {})))
    return EXIT_OK


def cmd_pack(args) -> int:
    G = _load_graph(args)
    cert = induced_pack_or_hit(G, args.k, paranoid=args.paranoid)
    return _emit(args, G, cert, {"k": args.k, "theorem": "main"})


def cmd_planar_pack(args) -> int:
    G = _load_graph(args)
    cert = planar_pack(G, args.k)
    return _emit(args, G, cert, {"k": args.k, "theorem": "planar"})


def cmd_dist_pack(args) -> int:
    G = _load_graph(args)
    cert = dist_pack_two(G, args.d)
    return _emit(args, G, cert, {"d": args.d})


def cmd_tree_decomp(args) -> int:
    G = _load_graph(args)
    if args.check_star_free and not is_k1t_free(G, args.t, OracleBudget(max_vertices=max(G.n, 1))):
        raise InvalidInput(f"the input has an induced K_1,{args.t}")
    cert = k1t_td(G, args.k, args.t, paranoid=args.paranoid)
    if not isinstance(cert, TreeDecomposition):
        return _emit(args, G, cert, {"k": args.k, "theorem": "main"})
    bound = int(f_bound(args.k)) * (args.t - 1) + 2
    extra = {"alpha_bound": bound}
    if args.check_independence:
        report = validate_td(G, cert, independence_cap=args.independence_cap)
        if report.max_independence > bound:
            raise InternalTheoremViolation(
                f"bag independence {report.max_independence} exceeds {bound}; is the input K_1,{args.t}-free?")
        extra["alpha"] = report.max_independence
    return _emit(args, G, cert, {}, extra)


def cmd_girth(args) -> int:
    G = _load_graph(args)
    c = girth_cycle(G)
    doc = {"type": "girth", "girth": None if c is None else len(c), "cycle": [] if c is None else list(c)}
    _write(args.output, dumps(doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    G = _load_graph(args)
    cert, doc = parse_certificate(_read(args.cert))
    kwargs = {}
    kind = doc["type"]
    if kind == "packing" and "k" in doc:
        kwargs["k"] = doc["k"]
    elif kind == "hitting":
        kwargs.update(k=doc.get("k", 1), theorem=doc.get("theorem", "main"), h=doc.get("h"))
    elif kind in ("two_cycles", "dist_hitting"):
        kwargs["d"] = doc["d"]
    elif kind == "tree_decomposition" and args.check_independence and "alpha_bound" in doc:
        kwargs["alpha_bound"] = doc["alpha_bound"]
    verdict = verify_certificate(G, cert, **kwargs)
    print(("ok: " if verdict else "rejected: ") + verdict.reason)
    return EXIT_OK if verdict else EXIT_INVALID


def _param(text: str):
    key, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        return key, json.loads(value)
    except json.JSONDecodeError:
        raise argparse.ArgumentTypeError(f"value of {key} is not a number: {value!r}") from None


def cmd_gen(args) -> int:
    G = gen(args.model, dict(args.param), args.seed)
    _write(args.output, serialize_graph(G, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", default="-", help="graph file (default: stdin)")
    common.add_argument("--output", "-o", default=None, help="output file (default: stdout)")
    common.add_argument("--format", "-f", choices=FORMATS, default="edgelist")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--paranoid", action="store_true", help="run every internal structural check")

    p = argparse.ArgumentParser(prog="coarse-ep", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pack", parents=[common], help="k induced cycles or a radius-1 hitting set")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_pack)

    s = sub.add_parser("planar-pack", parents=[common], help="planar variant with the 6k bound")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_planar_pack)

    s = sub.add_parser("dist-pack", parents=[common], help="two cycles more than d apart, or hitting sets")
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_dist_pack)

    s = sub.add_parser("tree-decomp", parents=[common], help="decomposition for K_1,t-free graphs")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--check-star-free", action="store_true", help="brute-force the K_1,t-free promise first")
    s.add_argument("--check-independence", action="store_true", help="compute exact bag independence")
    s.add_argument("--independence-cap", type=int, default=64)
    s.set_defaults(func=cmd_tree_decomp)

    s = sub.add_parser("girth", parents=[common], help="a shortest cycle")
    s.set_defaults(func=cmd_girth)

    s = sub.add_parser("verify", parents=[common], help="check a certificate file against a graph")
    s.add_argument("--cert", required=True)
    s.add_argument("--check-independence", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", parents=[common], help="write a generated graph")
    s.add_argument("--model", "-m", required=True, choices=sorted(MODELS))
    s.add_argument("--param", "-p", type=_param, action="append", default=[], metavar="KEY=VALUE")
    s.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvalidInput as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalTheoremViolation as exc:
        print(f"internal violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
