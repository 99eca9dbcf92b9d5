"""Agreement, betweenness and convex hulls.

Two neighbours ``u`` and ``w`` of ``v`` agree on ``v`` when their adjacencies
to ``v`` have the same type and orientation relative to ``v``; otherwise ``v``
is between them.  A set is convex when no outside vertex is between two of its
members.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import GraphError, MixedGraph


def agree(g: MixedGraph, u: int, w: int, v: int) -> bool:
    a, b = g.rel(u, v), g.rel(w, v)
    if a is None or b is None:
        missing = u if a is None else w
        raise GraphError(f"vertex {missing} is not adjacent to {v}")
    return a == b


def between(g: MixedGraph, u: int, w: int, v: int) -> bool:
    a, b = g.rel(u, v), g.rel(w, v)
    return a is not None and b is not None and a != b


def _between_witness(g: MixedGraph, members, v: int):
    """Lexicographically least pair of ``members`` that ``v`` is between."""
    nbrs = sorted(x for x in g.neighbours(v) if x in members)
    if len(nbrs) < 2:
        return None
    first = nbrs[0]
    a = g.rel(first, v)
    for x in nbrs[1:]:
        if g.rel(x, v) != a:
            return (first, x)
    return None


@dataclass(frozen=True)
class HullTrace:
    """Stages ``N_0 = X, N_1, ...`` of the iterative hull computation.

    ``additions[i]`` maps each vertex added when passing from stage ``i`` to
    stage ``i + 1`` onto the least pair of stage-``i`` vertices it lies between.
    """

    stages: tuple[frozenset, ...]
    additions: tuple[dict, ...] = field(default=())

    @property
    def final(self) -> frozenset:
        return self.stages[-1]


def convex_hull(g: MixedGraph, x: Iterable[int]) -> HullTrace:
    current = frozenset(x)
    if not current:
        raise GraphError("convex hull of an empty set is undefined")
    for v in current:
        if not 0 <= v < g.order:
            raise GraphError(f"vertex {v} out of range")
    stages = [current]
    additions = []
    while True:
        added = {}
        for v in g.vertices:
            if v in current:
                continue
            pair = _between_witness(g, current, v)
            if pair is not None:
                added[v] = pair
        if not added:
            break
        current = current | added.keys()
        stages.append(current)
        additions.append(added)
    return HullTrace(tuple(stages), tuple(additions))


def hull(g: MixedGraph, x: Iterable[int]) -> frozenset:
    """Shorthand for ``convex_hull(g, x).final``."""
    return convex_hull(g, x).final


def is_convex(g: MixedGraph, c: Iterable[int]) -> bool:
    c = set(c)
    return all(v in c or _between_witness(g, c, v) is None for v in g.vertices)
