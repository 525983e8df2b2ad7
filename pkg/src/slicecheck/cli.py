"""Command-line front end.

Negative numbers may be given after a ``--`` separator, e.g.::

    slicecheck obstruct -- 1 2 2 1 -3
    slicecheck cf eval -- -1 -1 -2 -3 -2
    slicecheck scan --m1 1..3 --n1 1..4 --m2 1..3 --n2 1..4 --q=-5..-1
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import arith, contfrac, goeritz, lattice, montesinos, pipeline, plumbing
from .errors import SliceCheckError


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """Parse ``"a..b"``, ``"a:b"`` (inclusive), a single integer, or a comma list of these."""
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        for sep in ("..", ":"):
            head, found, tail = part[1:].partition(sep)
            if found:
                lo, hi = int(part[0] + head), int(tail)
                if lo > hi:
                    raise UsageError(f"empty range {part!r}")
                values.extend(range(lo, hi + 1))
                break
        else:
            values.append(int(part))
    if not values:
        raise UsageError(f"empty range {text!r}")
    return values


def read_matrix(stream: TextIO) -> list[list[int]]:
    """Matrix file: first line ``n``, then ``n`` lines of ``n`` integers."""
    lines = [ln.split() for ln in stream.read().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 1:
        raise UsageError("matrix file must start with its order on a line of its own")
    n = int(lines[0][0])
    rows = [[int(x) for x in ln] for ln in lines[1:]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise UsageError(f"expected {n} rows of {n} integers")
    return rows


def load_matrix(path: str) -> list[list[int]]:
    if path == "-":
        return read_matrix(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return read_matrix(fh)


def format_matrix(rows: Sequence[Sequence[int]]) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in rows)


def format_rational(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}"


def format_graph(g: plumbing.PlumbingGraph) -> str:
    adj = g.adjacency()
    pos = {v: i for i, v in enumerate(g.ids, start=1)}
    lines = []
    for v, w in g.vertices:
        nbrs = " ".join(f"f{pos[u]}" for u in adj[v])
        lines.append(f"f{pos[v]} {w} : {nbrs}".rstrip())
    return "\n".join(lines)


def _params(values: Sequence[int]) -> montesinos.FamilyParams:
    if len(values) != 5:
        raise UsageError("expected five parameters: m1 n1 m2 n2 q")
    return montesinos.FamilyParams(*values)


def _graph(args: argparse.Namespace) -> plumbing.PlumbingGraph:
    p = _params(args.params)
    return plumbing.build_family_raw(p) if args.raw else plumbing.build_family_reduced(p)


def cmd_obstruct(args: argparse.Namespace) -> None:
    verdict = pipeline.obstruct(_params(args.params), max_nodes=args.max_nodes, workers=args.workers)
    print(verdict.to_json())


def cmd_scan(args: argparse.Namespace) -> None:
    params = pipeline.grid(*(parse_range(r) for r in (args.m1, args.n1, args.m2, args.n2, args.q)))
    for verdict in pipeline.scan(params, jobs=args.jobs, max_nodes=args.max_nodes, timing=args.timing):
        print(verdict.to_json(), flush=True)


def cmd_cf_eval(args: argparse.Namespace) -> None:
    print(format_rational(contfrac.evaluate(args.terms)))


def cmd_cf_expand(args: argparse.Namespace) -> None:
    print(" ".join(str(a) for a in contfrac.family_expansion(args.m, args.n)))


def cmd_cf_negcf(args: argparse.Namespace) -> None:
    print(" ".join(str(a) for a in contfrac.rational_to_negcf(Fraction(args.rational))))


def cmd_plumb_build(args: argparse.Namespace) -> None:
    print(format_graph(_graph(args)))


def cmd_plumb_reduce(args: argparse.Namespace) -> None:
    p = _params(args.params)
    steps = plumbing.reduce_steps(plumbing.build_family_raw(p))
    if args.steps:
        for k, g in enumerate(steps):
            det = arith.det_exact(plumbing.intersection_form(g))
            print(f"# step {k}: {len(g)} vertices, det {det}")
            print(format_graph(g))
    else:
        print(format_graph(steps[-1]))
    same = plumbing.isomorphic(steps[-1], plumbing.build_family_reduced(p))
    print(f"# isomorphic to reduced basis graph: {'yes' if same else 'no'}")


def cmd_plumb_dot(args: argparse.Namespace) -> None:
    sys.stdout.write(plumbing.to_dot(_graph(args)))


def _form(args: argparse.Namespace) -> list[list[int]]:
    if args.file:
        if args.params:
            raise UsageError("give either --file or parameters, not both")
        return load_matrix(args.file)
    return plumbing.intersection_form(_graph(args)).tolist()


def cmd_form_print(args: argparse.Namespace) -> None:
    q = _form(args)
    print(len(q))
    print(format_matrix(q))


def cmd_form_det(args: argparse.Namespace) -> None:
    print(arith.det_exact(_form(args)))


def cmd_form_sig(args: argparse.Namespace) -> None:
    inertia = arith.signature_exact(_form(args))
    print(f"{inertia.n_plus} {inertia.n_minus} {inertia.n_zero} signature {inertia.signature}")


def cmd_embed(args: argparse.Namespace) -> None:
    q = load_matrix(args.file)
    result = lattice.find_embedding(q, max_nodes=args.max_nodes, workers=args.workers)
    if isinstance(result, lattice.Witness):
        if not lattice.verify_witness(result.witness, q):
            raise AssertionError("search produced an invalid witness")
        print(f"embedding found ({result.nodes_explored} nodes); columns are images of f1..f{len(q)}")
        print(format_matrix(result.witness.matrix()))
    elif isinstance(result, lattice.Exhausted):
        print(f"no embedding: search exhausted after {result.nodes_explored} nodes")
    else:
        print(f"search aborted after {result.nodes_explored} nodes; no conclusion")


def cmd_goeritz(args: argparse.Namespace) -> None:
    inst = goeritz.goeritz_matrix(args.n1)
    if args.matrix:
        print(format_matrix(inst.G.rows))
    inertia = arith.signature_exact(inst.G)
    print(f"determinant {arith.det_exact(inst.G)}")
    print(f"inertia {inertia.n_plus} {inertia.n_minus} {inertia.n_zero}")
    print(f"signature {goeritz.family_signature(args.n1)}")


def cmd_sequence(args: argparse.Namespace) -> None:
    for term in goeritz.square_det_sequence(args.count):
        print(f"{term.a} {term.n1}")


def cmd_parity(args: argparse.Namespace) -> None:
    print("\n".join(montesinos.parity_report(args.samples).lines()))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slicecheck",
        description="Donaldson lattice-embedding obstructions for M(0;[m1+1,n1+2],[m2+1,n2+2],q).")
    sub = parser.add_subparsers(dest="command", required=True)

    def params_arg(p, nargs=5):
        p.add_argument("params", metavar="PARAM", type=int, nargs=nargs, help="m1 n1 m2 n2 q")

    def search_args(p):
        p.add_argument("--max-nodes", type=int, default=lattice.DEFAULT_MAX_NODES)
        p.add_argument("--workers", type=int, default=1, help="processes for first-level branches")

    p = sub.add_parser("obstruct", help="run the full pipeline for one parameter tuple")
    params_arg(p)
    search_args(p)
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("scan", help="JSON-lines verdicts over a parameter grid")
    for name in ("m1", "n1", "m2", "n2", "q"):
        p.add_argument(f"--{name}", required=True, help="range a..b, a:b, or comma list")
    p.add_argument("-j", "--jobs", type=int, default=1)
    p.add_argument("--max-nodes", type=int, default=lattice.DEFAULT_MAX_NODES)
    p.add_argument("--timing", action="store_true",
                   help="report wall-clock elapsed_ms (otherwise 0, keeping output reproducible)")
    p.set_defaults(func=cmd_scan)

    cf = sub.add_parser("cf", help="continued fractions").add_subparsers(dest="cf_command", required=True)
    p = cf.add_parser("eval")
    p.add_argument("terms", type=int, nargs="+")
    p.set_defaults(func=cmd_cf_eval)
    p = cf.add_parser("expand", help="expansion of [m+1, n+2] into -1, -1, -2.., -3, -2..")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_cf_expand)
    p = cf.add_parser("negcf", help="expand a rational p/q")
    p.add_argument("rational")
    p.set_defaults(func=cmd_cf_negcf)

    pl = sub.add_parser("plumb", help="plumbing graphs").add_subparsers(dest="plumb_command", required=True)
    for name, func, helptext in (("build", cmd_plumb_build, "print a family plumbing graph"),
                                 ("dot", cmd_plumb_dot, "DOT export of a family plumbing graph")):
        p = pl.add_parser(name, help=helptext)
        params_arg(p)
        p.add_argument("--raw", action="store_true", help="graph before blow-downs")
        p.set_defaults(func=func)
    p = pl.add_parser("reduce", help="blow down the raw graph")
    params_arg(p)
    p.add_argument("--steps", action="store_true", help="print every intermediate graph")
    p.set_defaults(func=cmd_plumb_reduce)

    fm = sub.add_parser("form", help="intersection forms").add_subparsers(dest="form_command", required=True)
    for name, func in (("print", cmd_form_print), ("det", cmd_form_det), ("sig", cmd_form_sig)):
        p = fm.add_parser(name)
        params_arg(p, nargs="*")
        p.add_argument("--raw", action="store_true")
        p.add_argument("--file", help="matrix file ('-' for stdin)")
        p.set_defaults(func=func)

    p = sub.add_parser("embed", help="search for an embedding of a form read from a matrix file")
    p.add_argument("file")
    search_args(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("goeritz", help="Goeritz determinant and signature for M(0;[2,n1+2],[3,3],-3)")
    p.add_argument("n1", type=int)
    p.add_argument("--matrix", action="store_true")
    p.set_defaults(func=cmd_goeritz)

    p = sub.add_parser("sequence", help="square-determinant subfamily: prints 'a n1' per line")
    p.add_argument("--count", type=int, default=5)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("parity", help="determinant parity over the 32 parity classes")
    p.add_argument("--samples", type=int, default=4)
    p.set_defaults(func=cmd_parity)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except BrokenPipeError:
        sys.stderr.close()
        return 0
    except (UsageError, SliceCheckError, ValueError, OSError) as exc:
        print(f"slicecheck: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
