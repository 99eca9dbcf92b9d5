"""Plain-text graph files.

::

    # a directed 3-cycle
    mng 1
    m 1
    n 0
    vertices 3
    v 0 a
    a 1 0 1
    a 1 1 2
    a 1 2 0

Header lines come first (``mng`` version, ``m``, ``n``, ``vertices``), then
optional ``v <id> <label>`` lines and adjacency lines ``a <colour> <tail>
<head>`` / ``e <colour> <u> <v>``.  ``#`` starts a comment.  Canonical output
drops comments and sorts adjacency lines by (kind, colour, min endpoint, max
endpoint).
"""

from __future__ import annotations

import os
from pathlib import Path

from .graph import ARC, EDGE, GraphError, MixedGraph

VERSION = 1
_HEADER = ("mng", "m", "n", "vertices")


class ParseError(GraphError):
    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"{what} must be an integer, got {tok!r}") from None


def parse(text: str) -> MixedGraph:
    header: dict[str, int] = {}
    labels: dict[int, str] = {}
    entries: list[tuple[int, tuple]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        key = tok[0]
        if len(header) < len(_HEADER):
            want = _HEADER[len(header)]
            if key != want or len(tok) != 2:
                raise ParseError(lineno, f"expected header line '{want} <int>'")
            header[key] = _int(tok[1], lineno, want)
            if key == "mng" and header[key] != VERSION:
                raise ParseError(lineno, f"unsupported format version {header[key]}")
            continue
        order = header["vertices"]
        if key == "v":
            if len(tok) < 3:
                raise ParseError(lineno, "expected 'v <id> <label>'")
            vid = _int(tok[1], lineno, "vertex id")
            if not 0 <= vid < order:
                raise ParseError(lineno, f"vertex id {vid} out of range")
            if vid in labels:
                raise ParseError(lineno, f"vertex {vid} labelled twice")
            labels[vid] = line.split(None, 2)[2]
        elif key in (ARC, EDGE):
            if len(tok) != 4:
                raise ParseError(lineno, f"expected '{key} <colour> <u> <v>'")
            colour, u, v = (_int(t, lineno, w) for t, w in zip(tok[1:], ("colour", "vertex", "vertex")))
            entry = (key, colour, u, v)
            try:
                _check_entry(header["m"], header["n"], order, entry)
            except GraphError as exc:
                raise ParseError(lineno, str(exc)) from None
            entries.append((lineno, entry))
        else:
            raise ParseError(lineno, f"unknown line type {key!r}")
    if len(header) < len(_HEADER):
        raise ParseError(0, f"missing header line '{_HEADER[len(header)]}'")
    order = header["vertices"]
    if labels and len(labels) != order:
        missing = min(set(range(order)) - labels.keys())
        raise ParseError(0, f"vertex {missing} has no label (label all vertices or none)")
    seen: dict[frozenset, int] = {}
    for lineno, (k, c, u, v) in entries:
        pair = frozenset((u, v))
        if pair in seen:
            raise ParseError(lineno, f"duplicate adjacency on pair {{{u}, {v}}} (first at line {seen[pair]})")
        seen[pair] = lineno
    try:
        return MixedGraph(
            header["m"],
            header["n"],
            order,
            [e for _, e in entries],
            [labels[i] for i in range(order)] if labels else None,
        )
    except GraphError as exc:
        raise ParseError(0, str(exc)) from None


def _check_entry(m: int, n: int, order: int, entry: tuple) -> None:
    kind, colour, u, v = entry
    for x in (u, v):
        if not 0 <= x < order:
            raise GraphError(f"vertex {x} out of range 0..{order - 1}")
    if u == v:
        raise GraphError(f"self-adjacency at vertex {u}")
    if colour < 1:
        raise GraphError(f"colour {colour} must be >= 1")
    if kind == ARC and colour > m:
        raise GraphError(f"arc colour {colour} exceeds m={m}")
    if kind == EDGE and colour > n:
        raise GraphError(f"edge colour {colour} exceeds n={n}")


def serialize(g: MixedGraph) -> str:
    lines = [f"mng {VERSION}", f"m {g.m}", f"n {g.n}", f"vertices {g.order}"]
    if g.labels is not None:
        lines += [f"v {i} {lab}" for i, lab in enumerate(g.labels)]
    body = sorted(g.adjacencies(), key=lambda e: (e[0], e[1], min(e[2], e[3]), max(e[2], e[3])))
    lines += [f"{k} {c} {u} {v}" for k, c, u, v in body]
    return "\n".join(lines) + "\n"


def canonical(text: str) -> str:
    return serialize(parse(text))


def read(path: str | os.PathLike) -> MixedGraph:
    return parse(Path(path).read_text())


def write(g: MixedGraph, path: str | os.PathLike) -> None:
    Path(path).write_text(serialize(g))


def to_dot(g: MixedGraph) -> str:
    """Graphviz rendering for debugging; not a supported interchange format."""
    out = ["digraph G {"]
    for v in g.vertices:
        out.append(f'  {v} [label="{g.label(v)}"];')
    for k, c, u, v in sorted(g.adjacencies()):
        arrow = "" if k == ARC else ', dir="none"'
        out.append(f'  {u} -> {v} [kind="{k}", colour={c}{arrow}];')
    out.append("}")
    return "\n".join(out) + "\n"
