"""Command-line interface.

Every command prints a short human-readable report, or a single JSON object
with ``--json``.  Exit status is 0 on success, 1 for a negative answer when
``--strict`` is given, and 2 on errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families, fileformat
from .convexity import convex_hull
from .decision import complete_chi_s, decide_chi_s_two, is_clique, is_simple_clique
from .experiment import run_experiment, to_csv
from .graph import GraphError, is_complete, underlying
from .search import (
    DEFAULT_BUDGET,
    Partition,
    brute_chi,
    brute_chi_s,
    find_homomorphism,
    find_simple_homomorphism,
)
from .twotree import colour_2ec_2tree, colour_oriented_2tree

GENERATORS = {
    "cayley-oriented": (families.cayley_oriented_clique, [int]),
    "cayley-2ec": (families.cayley_2ec_clique, [int]),
    "h": (families.h_n, [int]),
    "g": (families.g_n, [int]),
    "tournament": (families.transitive_tournament, [int]),
    "cycle": (families.directed_cycle, [int]),
    "random": (families.random_mixed, [int, int, int, float, int]),
    "2tree": (None, [int, str, int]),
}


def _load(path: str):
    if path == "-":
        return fileformat.parse(sys.stdin.read())
    return fileformat.read(path)


def _blocks(p: Partition) -> list[list[int]]:
    return [list(b) for b in p.blocks]


class Answer:
    """A command result: JSON payload, human lines and the decision (if any)."""

    def __init__(self, payload: dict, lines: list[str], decision: bool | None = None):
        self.payload = payload
        self.lines = lines
        self.decision = decision


def cmd_validate(a):
    g = _load(a.graph)
    payload = {"valid": True, "m": g.m, "n": g.n, "vertices": g.order, "adjacencies": g.size(), "complete": is_complete(g)}
    return Answer(payload, [f"valid ({g.m},{g.n})-mixed graph: {g.order} vertices, {g.size()} adjacencies"])


def cmd_underlying(a):
    text = fileformat.serialize(underlying(_load(a.graph)))
    return Answer({"graph": text}, [text.rstrip("\n")])


def cmd_hull(a):
    g = _load(a.graph)
    x = [int(t) for t in a.set.split(",") if t.strip()]
    trace = convex_hull(g, x)
    witnesses = [
        {"stage": i, "vertex": v, "between": list(pair)}
        for i, added in enumerate(trace.additions)
        for v, pair in sorted(added.items())
    ]
    payload = {
        "set": sorted(set(x)),
        "hull": sorted(trace.final),
        "stages": [sorted(s) for s in trace.stages],
        "witnesses": witnesses,
        "spanning": len(trace.final) == g.order,
    }
    lines = [f"hull of {sorted(set(x))}: {sorted(trace.final)}"]
    lines += [f"  stage {w['stage'] + 1}: {w['vertex']} between {w['between'][0]} and {w['between'][1]}" for w in witnesses]
    return Answer(payload, lines)


def cmd_chi_s_2(a):
    g = _load(a.graph)
    cert = decide_chi_s_two(g)
    payload = {
        "answer": cert.answer,
        "partition": _blocks(cert.partition) if cert.partition else None,
        "reason": cert.reason,
        "edge_colour_connected": {str(k): v for k, v in cert.edge_colour_connected.items()},
        "arc_colour_strongly_connected": {str(k): v for k, v in cert.arc_colour_strong.items()},
    }
    lines = [f"chi_s = 2: {'yes' if cert.answer else 'no'} ({cert.reason})"]
    if cert.partition:
        lines.append(f"  partition: {_blocks(cert.partition)}")
    return Answer(payload, lines, cert.answer)


def cmd_clique(a):
    ans = is_clique(_load(a.graph))
    return Answer({"answer": ans}, [f"mixed clique: {'yes' if ans else 'no'}"], ans)


def cmd_simple_clique(a):
    ans = is_simple_clique(_load(a.graph))
    return Answer({"answer": ans}, [f"simple clique: {'yes' if ans else 'no'}"], ans)


def cmd_chi_s(a):
    g = _load(a.graph)
    method = "complete" if a.complete or (not a.brute and is_complete(g)) else "brute"
    if method == "complete":
        k, phi = complete_chi_s(g)
        p = Partition.from_map(phi)
    else:
        k, p = brute_chi_s(g, a.budget)
    payload = {"value": k, "partition": _blocks(p), "method": method}
    return Answer(payload, [f"chi_s = {k} ({method})", f"  partition: {_blocks(p)}"])


def cmd_chi(a):
    k, p = brute_chi(_load(a.graph), a.budget)
    return Answer({"value": k, "partition": _blocks(p), "method": "brute"}, [f"chi = {k} (brute)", f"  partition: {_blocks(p)}"])


def cmd_hom(a):
    g, h = _load(a.source), _load(a.target)
    find = find_simple_homomorphism if a.simple else find_homomorphism
    phi = find(g, h, surjective=a.surjective)
    kind = "simple homomorphism" if a.simple else "homomorphism"
    payload = {"answer": phi is not None, "map": list(phi.image) if phi else None, "simple": a.simple}
    lines = [f"{kind}: {'found' if phi else 'none'}"]
    if phi:
        lines.append("  " + ", ".join(f"{v}->{t}" for v, t in enumerate(phi.image)))
    return Answer(payload, lines, phi is not None)


def cmd_gen(a):
    if a.family not in GENERATORS:
        raise GraphError(f"unknown family {a.family!r}; choose from {', '.join(GENERATORS)}")
    fn, types = GENERATORS[a.family]
    if len(a.params) != len(types):
        raise GraphError(f"family {a.family} takes {len(types)} parameters, got {len(a.params)}")
    try:
        args = [t(x) for t, x in zip(types, a.params)]
    except ValueError as exc:
        raise GraphError(f"bad parameter: {exc}") from None
    if a.family == "2tree":
        from .twotree import random_2tree

        g = random_2tree(*args)
    else:
        g = fn(*args)
    text = fileformat.serialize(g)
    if a.output:
        fileformat.write(g, a.output)
        return Answer({"graph": text, "path": a.output}, [f"wrote {a.output}"])
    return Answer({"graph": text}, [text.rstrip("\n")])


def cmd_colour_2tree(a):
    g = _load(a.graph)
    if g.n == 0 and g.m >= 1:
        phi, target = colour_oriented_2tree(g), "directed 3-cycle"
    else:
        phi, target = colour_2ec_2tree(g), "red C5 in K5"
    used = sorted(set(phi.image))
    payload = {"map": list(phi.image), "target": target, "colours": len(used), "partition": _blocks(Partition.from_map(phi))}
    return Answer(payload, [f"simple {len(used)}-colouring into {target}", "  " + " ".join(f"x{t + 1}" for t in phi.image)])


def cmd_experiment(a):
    rows = run_experiment(a.m, a.n, a.v, a.p, a.samples, a.seed, a.workers)
    text = to_csv(rows)
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
    if a.plot:
        from .report import plot_experiment

        plot_experiment(rows, a.plot)
    payload = {"rows": [dict(zip(text.splitlines()[0].split(","), line.split(","))) for line in text.splitlines()[1:]]}
    if a.plot:
        payload["figure"] = a.plot
    return Answer(payload, [text.rstrip("\n")])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixedhom", description="Simple colourings of (m,n)-mixed graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON object instead of text")
    common.add_argument("--strict", action="store_true", help="exit 1 on a negative answer")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help, graph=True):
        p = sub.add_parser(name, parents=[common], help=help)
        if graph:
            p.add_argument("graph", help="graph file, or - for stdin")
        p.set_defaults(func=fn)
        return p

    add("validate", cmd_validate, "check a graph file")
    add("underlying", cmd_underlying, "print the underlying (0,1)-graph")
    add("hull", cmd_hull, "convex hull of a vertex set").add_argument("--set", required=True, help="comma-separated vertices")
    add("chi-s-2", cmd_chi_s_2, "decide whether chi_s = 2")
    add("clique", cmd_clique, "is the graph a mixed clique")
    add("simple-clique", cmd_simple_clique, "is the graph a simple clique")
    p = add("chi-s", cmd_chi_s, "simple chromatic number")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--brute", action="store_true", help="partition enumeration")
    mode.add_argument("--complete", action="store_true", help="polynomial method for complete graphs")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p = add("chi", cmd_chi, "chromatic number by enumeration")
    p.add_argument("--brute", action="store_true", default=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p = add("hom", cmd_hom, "search for a homomorphism G -> H", graph=False)
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--simple", action="store_true")
    p.add_argument("--surjective", action="store_true")
    p = add("gen", cmd_gen, "generate a family member", graph=False)
    p.add_argument("family", help=", ".join(GENERATORS))
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    add("colour-2tree", cmd_colour_2tree, "simple colouring of an oriented or 2-edge-coloured 2-tree")
    p = add("experiment", cmd_experiment, "sample random graphs", graph=False)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--v", type=int, nargs="+", required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="also write the CSV here")
    p.add_argument("--plot", help="write a figure of the fractions (png, pdf, svg)")
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        result = args.func(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps({"command": args.command, **result.payload}, sort_keys=True), file=stdout)
    else:
        print("\n".join(result.lines), file=stdout)
    if args.strict and result.decision is False:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
