"""Polynomial decision procedures.

* ``decide_chi_s_two``: does a graph have a simple 2-colouring?  A 2-colouring
  exists exactly when some cut of U(G) is crossed only by edges of one colour,
  or only by arcs of one colour all pointing the same way.  The first case is
  a connectivity test per edge colour; the second a strong-connectivity test
  on the condensation digraph per arc colour.
* ``is_clique`` / ``is_simple_clique``: betweenness and hull characterisations.
* ``complete_chi_s``: the simple chromatic number of a complete graph, by
  repeatedly collapsing a pair's hull until a simple clique remains.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from .convexity import hull
from .graph import ARC, EDGE, GraphError, MixedGraph, VertexMap, identify, is_complete
from .search import Partition, compose


def _components(g: MixedGraph, keep) -> list[list[int]]:
    """Connected components of U(G) restricted to adjacencies ``keep`` accepts,
    ordered by least vertex."""
    seen = [False] * g.order
    comps = []
    for s in g.vertices:
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for v, a in g.neighbours(u).items():
                if not seen[v] and keep(a):
                    seen[v] = True
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class CondensationDigraph:
    """Components of U(G) after deleting all arcs of one colour, joined by
    those arcs.  ``arcs`` holds ordered component index pairs."""

    colour: int
    components: tuple[tuple[int, ...], ...]
    arcs: frozenset

    def digraph(self) -> nx.DiGraph:
        d = nx.DiGraph()
        d.add_nodes_from(range(len(self.components)))
        d.add_edges_from(self.arcs)
        return d

    def is_strongly_connected(self) -> bool:
        return nx.is_strongly_connected(self.digraph())


def condensation(g: MixedGraph, j: int) -> CondensationDigraph:
    if not 1 <= j <= g.m:
        raise GraphError(f"arc colour {j} outside 1..{g.m}")
    removed = lambda a: a.kind == ARC and a.colour == j
    comps = _components(g, lambda a: not removed(a))
    where = {v: i for i, comp in enumerate(comps) for v in comp}
    arcs = set()
    for kind, colour, u, v in g.adjacencies():
        if where[u] != where[v]:
            # only colour-j arcs can join different components
            arcs.add((where[u], where[v]))
    return CondensationDigraph(j, tuple(map(tuple, comps)), frozenset(arcs))


@dataclass(frozen=True)
class TwoColourCertificate:
    answer: bool
    partition: Partition | None = None
    reason: str = ""
    edge_colour_connected: dict = field(default_factory=dict)
    arc_colour_strong: dict = field(default_factory=dict)


def _split(g: MixedGraph, side: set[int]) -> Partition:
    return Partition((tuple(sorted(side)), tuple(v for v in g.vertices if v not in side)))


def decide_chi_s_two(g: MixedGraph) -> TwoColourCertificate:
    if g.order == 1:
        return TwoColourCertificate(False, reason="single vertex: simple chromatic number is 1")
    if g.order == 2:
        return TwoColourCertificate(True, Partition(((0,), (1,))), reason="two vertices")
    comps = _components(g, lambda a: True)
    if len(comps) > 1:
        return TwoColourCertificate(True, _split(g, set(comps[0])), reason="U(G) is disconnected")

    edge_facts = {}
    for i in range(1, g.n + 1):
        comps = _components(g, lambda a, i=i: not (a.kind == EDGE and a.colour == i))
        edge_facts[i] = len(comps) == 1
        if len(comps) > 1:
            return TwoColourCertificate(
                True,
                _split(g, set(comps[0])),
                reason=f"edges of colour {i} form a cut",
                edge_colour_connected=edge_facts,
            )

    arc_facts = {}
    for j in range(1, g.m + 1):
        cond = condensation(g, j)
        d = cond.digraph()
        strong = nx.is_strongly_connected(d)
        arc_facts[j] = strong
        if strong:
            continue
        sccs = [frozenset(c) for c in nx.strongly_connected_components(d)]
        dag = nx.condensation(d, sccs)
        # a sink strongly connected component: every cut arc points into it
        sinks = [sccs[x] for x in dag.nodes if dag.out_degree(x) == 0]
        sink = min(sinks, key=lambda c: min(min(cond.components[i]) for i in c))
        head = {v for i in sink for v in cond.components[i]}
        tail = set(g.vertices) - head
        return TwoColourCertificate(
            True,
            _split(g, tail),
            reason=f"arcs of colour {j} form a one-way cut",
            edge_colour_connected=edge_facts,
            arc_colour_strong=arc_facts,
        )
    return TwoColourCertificate(
        False,
        reason="no monochromatic edge cut and every condensation is strongly connected",
        edge_colour_connected=edge_facts,
        arc_colour_strong=arc_facts,
    )


def is_clique(g: MixedGraph) -> bool:
    for u, v in combinations(g.vertices, 2):
        if g.adjacent(u, v):
            continue
        common = g.neighbours(u).keys() & g.neighbours(v).keys()
        if not any(g.rel(u, z) != g.rel(v, z) for z in common):
            return False
    return True


def is_simple_clique(g: MixedGraph) -> bool:
    return _non_spanning_pair(g) is None


def _non_spanning_pair(g: MixedGraph):
    everything = frozenset(g.vertices)
    for u, v in combinations(g.vertices, 2):
        h = hull(g, (u, v))
        if h != everything:
            return (u, v), h
    return None


def _canonical(phi: VertexMap) -> VertexMap:
    relabel: dict[int, int] = {}
    image = tuple(relabel.setdefault(t, len(relabel)) for t in phi.image)
    return VertexMap(phi.source_size, len(relabel), image)


def complete_chi_s(g: MixedGraph) -> tuple[int, VertexMap]:
    """Simple chromatic number of a complete graph with a minimum colouring.

    Colours are numbered by first appearance.
    """
    if not is_complete(g):
        raise GraphError("complete_chi_s requires a complete graph")
    if g.order == 1:
        return 1, VertexMap(1, 1, (0,))
    cert = decide_chi_s_two(g)
    if cert.answer:
        return 2, VertexMap(g.order, 2, cert.partition.labels())
    current, phi = g, VertexMap.identity(g.order)
    while True:
        found = _non_spanning_pair(current)
        if found is None:
            return current.order, _canonical(phi)
        _, h = found
        current, step = identify(current, h)
        phi = compose(phi, step)
