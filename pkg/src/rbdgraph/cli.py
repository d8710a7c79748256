"""Command line interface.

Exit status is 0 on success, 1 for invalid input (or failed acceptance
criteria under ``verify-paper``) and 2 when an internal invariant breaks.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from typing import Sequence

from . import acceptance
from .contfrac import hj_expand, riemenschneider_dual, wahl_params
from .errors import InvalidInput, InvariantViolation, RbdError
from .flipgraph import GradedGraph, build_gk, build_gpq, depth_recipe, edge_weights
from .lattice import adjunction_c1, chain_embeddings, load_fixture, plumbing_form, vectors_of_square
from .monodromy import word_for, word_stats
from .polygon import phi_inverse
from .tuples import depth, height


def fmt(t: Sequence[int]) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def parse_tuple(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(x) for x in text.strip("()[] ").split(","))
    except ValueError:
        raise InvalidInput(f"expected comma-separated integers, got {text!r}") from None
    return out


@dataclass
class ExportVertex:
    id: int
    tuple: list[int]
    height: int
    betti: int | None
    diagonals: list[list[int]]


@dataclass
class ExportEdge:
    src: int
    dst: int
    flips: list[int]
    weights: list[int] | None


@dataclass
class GraphExport:
    p: int | None
    q: int | None
    k: int
    hj: list[int] | None
    vertices: list[ExportVertex]
    edges: list[ExportEdge]

    @classmethod
    def from_graph(cls, g: GradedGraph) -> "GraphExport":
        hj = list(hj_expand(g.p, g.p - g.q)) if g.p is not None else None
        vertices = []
        for v in g.vertices:
            diags = [list(d) for d in phi_inverse(v.tuple).diagonals] if g.k >= 2 else []
            vertices.append(ExportVertex(v.id, list(v.tuple), v.height, v.betti, diags))
        edges = [ExportEdge(e.src, e.dst, list(e.flips), list(e.weights) if e.weights else None)
                 for e in g.edges]
        return cls(g.p, g.q, g.k, hj, vertices, edges)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "GraphExport":
        try:
            vertices = [ExportVertex(**v) for v in data["vertices"]]
            edges = [ExportEdge(**e) for e in data["edges"]]
            out = cls(data["p"], data["q"], data["k"], data["hj"], vertices, edges)
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed graph export: {exc}") from None
        if [v.id for v in vertices] != list(range(len(vertices))):
            raise InvalidInput("vertex ids must be dense and ordered")
        return out


def to_json(g: GradedGraph) -> str:
    return json.dumps(GraphExport.from_graph(g).to_dict())


def from_json(text: str) -> GraphExport:
    return GraphExport.from_dict(json.loads(text))


def to_dot(g: GradedGraph, name: str = "G") -> str:
    lines = [f'digraph "{name}" {{', "  rankdir=TB;", "  node [shape=box];"]
    levels: dict[int, list] = {}
    for v in g.vertices:
        levels.setdefault(v.height, []).append(v)
    for h in sorted(levels):
        lines.append("  { rank=same;")
        for v in levels[h]:
            label = fmt(v.tuple) + (f"\\nb2={v.betti}" if v.betti is not None else "")
            lines.append(f'    "{v.id}" [label="{label}"];')
        lines.append("  }")
    for e in g.edges:
        label = fmt(e.weights) if e.weights else "d" + ",".join(map(str, e.flips))
        lines.append(f'  "{e.src}" -> "{e.dst}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_text(g: GradedGraph) -> str:
    lines = [f"{len(g.vertices)} vertices, {len(g.edges)} edges"]
    for v in g.vertices:
        extra = f" betti={v.betti}" if v.betti is not None else ""
        lines.append(f"  [{v.id}] {fmt(v.tuple)} height={v.height}{extra}")
    for e in g.edges:
        w = f" weights={fmt(e.weights)}" if e.weights else ""
        lines.append(f"  {fmt(g.vertices[e.src].tuple)} -> {fmt(g.vertices[e.dst].tuple)}"
                     f" flips={','.join(map(str, e.flips))}{w}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(g: GradedGraph, args, name: str) -> str:
    if args.json:
        return to_json(g) + "\n"
    if args.dot:
        return to_dot(g, name)
    return to_text(g)


def cmd_hj(args) -> int:
    p, q = args.p, args.q
    b = hj_expand(p, p - q)
    a = hj_expand(p, q)
    print(f"{p}/{p - q} = [{','.join(map(str, b))}]")
    print(f"{p}/{q} = [{','.join(map(str, a))}]")
    print(f"dual of [{','.join(map(str, b))}] = [{','.join(map(str, riemenschneider_dual(b)))}]")
    return 0


def cmd_fillings(args) -> int:
    p, q = args.p, args.q
    g = build_gpq(p, q)
    print(f"{'tuple':<24} height depth betti")
    for v in g.vertices:
        print(f"{fmt(v.tuple):<24} {v.height:>6} {depth(v.tuple):>5} {v.betti:>5}")
    return 0


def cmd_graph(args) -> int:
    g = build_gpq(args.p, args.q)
    _emit(_render(g, args, f"G{args.p}_{args.q}"), args.out)
    return 0


def cmd_flipgraph(args) -> int:
    g = build_gk(args.k)
    _emit(_render(g, args, f"G{args.k}"), args.out)
    return 0


def cmd_weights(args) -> int:
    w = edge_weights(parse_tuple(args.flips))
    wp = wahl_params(w)
    tail = f"wahl s={wp.s},h={wp.h}" if wp else "not in the Wahl family"
    print(f"{fmt(w)}  {tail}")
    return 0


def cmd_monodromy(args) -> int:
    n = parse_tuple(args.n)
    path = list(parse_tuple(args.path)) if args.path else None
    w = word_for(args.p, args.q, n, path)
    stats = word_stats(w, args.p, args.q, n)
    print(w)
    print(" ".join(f"{k}={str(v).lower()}" for k, v in stats.items()))
    return 0


def cmd_recipe(args) -> int:
    n = parse_tuple(args.n)
    strategy = args.strategy.split(",") if args.strategy else None
    r = depth_recipe(args.p, args.q, n, strategy)
    print(f"depth {depth(n)}, height {height(n)}, {len(r.steps)} blowdowns")
    print("stops: " + " -> ".join(fmt(s) for s in r.stops))
    for s in r.steps:
        print(f"  {fmt(s.src)} -> {fmt(s.dst)} flips={','.join(map(str, s.flips))} weights={fmt(s.weights)}")
    return 0


def cmd_lattice(args) -> int:
    src = args.form
    if src.startswith("@"):
        form = load_fixture(src[1:])
        c1 = tuple(2 + form.m[i][i] for i in range(form.dim))
    else:
        w = parse_tuple(src)
        form = plumbing_form(w)
        c1 = adjunction_c1(w)
    if args.square is not None:
        vs = vectors_of_square(form, args.square)
        print(f"{len(vs)} classes of square {args.square} (up to sign)")
        for v in vs:
            print(f"  {fmt(v)}")
    else:
        squares = parse_tuple(args.chain)
        chains = chain_embeddings(form, squares, c1 if args.adjunction else None)
        print(f"{len(chains)} chains of squares {fmt(squares)}")
        for ch in chains:
            print("  " + "  ".join(fmt(v) for v in ch) + f"  gram={form.gram(ch)}")
    return 0


def cmd_verify(args) -> int:
    all_ok = True
    for number in acceptance.CRITERIA:
        ok, checks = acceptance.run_criterion(number)
        all_ok &= ok
        print(acceptance.report_line(number, ok, checks), flush=True)
    return 0 if all_ok else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="rbdgraph", description="Rational blowdown graphs of lens space fillings.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def pq(sp):
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)

    def fmt_opts(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--dot", action="store_true", help="graphviz DOT output")
        g.add_argument("--json", action="store_true", help="JSON export")
        sp.add_argument("--out", help="write to FILE instead of stdout")

    sp = sub.add_parser("hj", help="continued fraction expansions")
    pq(sp)
    sp.set_defaults(fn=cmd_hj)
    sp = sub.add_parser("fillings", help="list the fillings with their grading")
    pq(sp)
    sp.set_defaults(fn=cmd_fillings)
    sp = sub.add_parser("graph", help="rational blowdown graph")
    pq(sp)
    fmt_opts(sp)
    sp.set_defaults(fn=cmd_graph)
    sp = sub.add_parser("flipgraph", help="flip graph of all triangulations")
    sp.add_argument("k", type=int)
    fmt_opts(sp)
    sp.set_defaults(fn=cmd_flipgraph)
    sp = sub.add_parser("weights", help="plumbing weights of a flip run")
    sp.add_argument("flips")
    sp.set_defaults(fn=cmd_weights)
    sp = sub.add_parser("monodromy", help="twist word of a tuple")
    pq(sp)
    sp.add_argument("n")
    sp.add_argument("--path")
    sp.set_defaults(fn=cmd_monodromy)
    sp = sub.add_parser("recipe", help="blowdown recipe of length at most the depth")
    pq(sp)
    sp.add_argument("n")
    sp.add_argument("--strategy", help="selectors: leftmost, rightmost, middle, only or an index")
    sp.set_defaults(fn=cmd_recipe)
    sp = sub.add_parser("lattice", help="lattice searches")
    sp.add_argument("form", help="plumbing weights a,b,... or @fixture")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--square", type=int)
    g.add_argument("--chain")
    sp.add_argument("--adjunction", action="store_true")
    sp.set_defaults(fn=cmd_lattice)
    sp = sub.add_parser("verify-paper", help="run the acceptance criteria")
    sp.set_defaults(fn=cmd_verify)
    return ap


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-2,-5" as an option; attach such values to their flag
    out = []
    for tok in argv:
        if out and out[-1] in ("--square", "--chain") and tok.startswith("-") and tok[1:2].isdigit():
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        return args.fn(args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except (RbdError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
