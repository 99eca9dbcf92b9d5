"""Simple colourings of 2-trees.

Oriented 2-trees map into the directed 3-cycle and 2-edge-coloured 2-trees
into the complete 2-edge-coloured K5 whose colour-1 (red) edges form a 5-cycle.
Both work the same way: peel degree-2 vertices down to a single edge, colour
the base triangle, then re-attach vertices in reverse order.  Each re-attached
vertex looks at the images of its two anchors, moves them into a normal form
with a symmetry of the target, reads the image off an extension table and
maps it back.

Extension tables are derived by search, not transcribed.  A row key is
``(adjacency from first anchor to z, adjacency from second anchor to z,
image of second anchor)`` with the first anchor's image fixed at target
vertex 0 and the second anchor's image in {0, 1}.  Search prefers images
distinct from both anchors and falls back to the least valid image.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .graph import ARC, EDGE, Adjacency, GraphError, MixedGraph, VertexMap
from .search import is_simple_homomorphism


class NotATwoTree(GraphError):
    pass


@dataclass(frozen=True)
class PeelOrder:
    """``steps[i] = (z, (z1, z2))`` removes degree-2 vertex ``z`` whose
    neighbours ``z1, z2`` are adjacent.  After all steps only ``base`` is left."""

    steps: tuple[tuple[int, tuple[int, int]], ...]
    base: tuple[int, ...]


def recognize_2tree(g: MixedGraph) -> PeelOrder:
    """Peel order for U(G), or :class:`NotATwoTree`.

    A single edge is accepted as the trivial base case.
    """
    n = g.order
    if n < 2:
        raise NotATwoTree(f"a 2-tree needs at least 2 vertices, got {n}")
    if g.size() != 2 * n - 3:
        raise NotATwoTree(f"a 2-tree on {n} vertices has {2 * n - 3} adjacencies, found {g.size()}")
    nbrs = [set(g.neighbours(v)) for v in g.vertices]
    alive = n
    heap = [v for v in g.vertices if len(nbrs[v]) == 2]
    heapq.heapify(heap)
    steps = []
    removed = [False] * n
    while alive > 2:
        z = None
        while heap:
            c = heapq.heappop(heap)
            if not removed[c] and len(nbrs[c]) == 2:
                z = c
                break
        if z is None:
            left = sorted(v for v in g.vertices if not removed[v])
            raise NotATwoTree(f"no vertex of degree 2 among remaining vertices {left}")
        a, b = sorted(nbrs[z])
        if b not in nbrs[a]:
            raise NotATwoTree(f"vertex {z} has non-adjacent neighbours {a} and {b}")
        steps.append((z, (a, b)))
        removed[z] = True
        alive -= 1
        for w in (a, b):
            nbrs[w].discard(z)
            if len(nbrs[w]) == 2:
                heapq.heappush(heap, w)
        nbrs[z] = set()
    base = tuple(v for v in g.vertices if not removed[v])
    if not g.adjacent(*base):
        raise NotATwoTree(f"remaining vertices {base} are not adjacent")
    return PeelOrder(tuple(steps), base)


# -- targets ----------------------------------------------------------------


def oriented_target() -> MixedGraph:
    """Directed 3-cycle x1 -> x2 -> x3 -> x1 (vertices 0, 1, 2)."""
    return MixedGraph(1, 0, 3, [(ARC, 1, 0, 1), (ARC, 1, 1, 2), (ARC, 1, 2, 0)], ["x1", "x2", "x3"])


def two_edge_target() -> MixedGraph:
    """K5 with red (colour 1) cycle x1 x2 x3 x4 x5 and blue (colour 2) chords."""
    edges = []
    for u in range(5):
        for v in range(u + 1, 5):
            edges.append((EDGE, 1 if (v - u) in (1, 4) else 2, u, v))
    return MixedGraph(0, 2, 5, edges, [f"x{i}" for i in range(1, 6)])


def _tokens(h: MixedGraph) -> list[Adjacency]:
    out = []
    for j in range(1, h.m + 1):
        out += [Adjacency(ARC, j, 1), Adjacency(ARC, j, -1)]
    out += [Adjacency(EDGE, i, 0) for i in range(1, h.n + 1)]
    return out


def _type_maps(h: MixedGraph) -> list[dict]:
    """Identity, arc reversal and swapping the two edge colours, as maps on
    adjacencies (reversal only for arcs, swapping only when n == 2)."""
    toks = _tokens(h)
    ident = {t: t for t in toks}
    maps = [ident]
    if h.m:
        maps.append({t: t.reversed() if t.kind == ARC else t for t in toks})
    if h.n == 2:
        maps.append({t: Adjacency(EDGE, 3 - t.colour, 0) if t.kind == EDGE else t for t in toks})
    return maps


@lru_cache(maxsize=None)
def _symmetries(h: MixedGraph) -> tuple:
    """Pairs ``(perm, type_map)`` with ``rel(perm[x], perm[y]) == type_map[rel(x, y)]``."""
    out = []
    for tmap in _type_maps(h):
        for perm in permutations(h.vertices):
            if all(
                h.rel(perm[x], perm[y]) == tmap[a]
                for x in h.vertices
                for y, a in h.neighbours(x).items()
            ) and all(h.adjacent(perm[x], perm[y]) == h.adjacent(x, y) for x in h.vertices for y in h.vertices):
                out.append((perm, tmap))
    return tuple(out)


@dataclass(frozen=True)
class ExtensionTable:
    """``rows[(a1, a2, q)] = t``: a new vertex joined to anchors imaged at 0 and
    ``q`` by adjacencies ``a1``, ``a2`` (seen from the anchor) goes to ``t``."""

    target: MixedGraph
    rows: dict

    def valid(self, key, t: int) -> bool:
        return _row_ok(self.target, key, t)


def _row_ok(h: MixedGraph, key, t: int) -> bool:
    a1, a2, q = key
    return all(s == t or h.rel(s, t) == a for s, a in ((0, a1), (q, a2)))


def _derive(h: MixedGraph) -> ExtensionTable:
    toks = _tokens(h)
    rows = {}
    for a1, a2, q in product(toks, toks, (0, 1)):
        key = (a1, a2, q)
        anchors = {0, q}
        ordered = [t for t in h.vertices if t not in anchors] + sorted(anchors)
        for t in ordered:
            if _row_ok(h, key, t):
                rows[key] = t
                break
        else:
            raise AssertionError(f"no extension for row {key}")
    return ExtensionTable(h, rows)


@lru_cache(maxsize=None)
def derive_oriented_table() -> ExtensionTable:
    return _derive(oriented_target())


@lru_cache(maxsize=None)
def derive_2ec_table() -> ExtensionTable:
    return _derive(two_edge_target())


def verify_table(table: ExtensionTable) -> list:
    """Rows whose image breaks an adjacency between differently-imaged vertices."""
    return [key for key, t in table.rows.items() if not table.valid(key, t)]


# -- colouring ------------------------------------------------------------


def _base_map(g: MixedGraph, h: MixedGraph, base: list[int]) -> dict[int, int]:
    for images in product(h.vertices, repeat=len(base)):
        if len(base) > 1 and len(set(images)) < 2:
            continue
        phi = dict(zip(base, images))
        if all(
            phi[u] == phi[v] or h.rel(phi[u], phi[v]) == g.rel(u, v)
            for u in base
            for v in base
            if u != v and g.adjacent(u, v)
        ):
            return phi
    raise AssertionError(f"no base colouring for vertices {base}")


def _extend(g: MixedGraph, table: ExtensionTable, phi: dict, z: int, anchors: tuple[int, int]) -> int:
    h = table.target
    for z1, z2 in (anchors, anchors[::-1]):
        p, q = phi[z1], phi[z2]
        for perm, tmap in _symmetries(h):
            if perm[p] != 0 or perm[q] not in (0, 1):
                continue
            key = (tmap[g.rel(z1, z)], tmap[g.rel(z2, z)], perm[q])
            t = table.rows.get(key)
            if t is not None:
                return perm.index(t)
    raise AssertionError(f"anchor images {phi[anchors[0]]}, {phi[anchors[1]]} have no normal form")


def _colour(g: MixedGraph, table: ExtensionTable) -> VertexMap:
    order = recognize_2tree(g)
    h = table.target
    steps = list(order.steps)
    base = list(order.base)
    if steps:
        z, anchors = steps.pop()
        base = sorted(base + [z])
    phi = _base_map(g, h, base)
    for z, anchors in reversed(steps):
        phi[z] = _extend(g, table, phi, z, anchors)
    result = VertexMap(g.order, h.order, tuple(phi[v] for v in g.vertices))
    if not is_simple_homomorphism(g, h, result):
        raise AssertionError("extension produced an invalid colouring")
    return result


def colour_oriented_2tree(g: MixedGraph) -> VertexMap:
    """Simple homomorphism of an oriented 2-tree into the directed 3-cycle."""
    if any(k != ARC or c != 1 for k, c, _, _ in g.adjacencies()):
        raise GraphError("expected an oriented graph: colour-1 arcs only")
    return _colour(g, derive_oriented_table())


def colour_2ec_2tree(g: MixedGraph) -> VertexMap:
    """Simple homomorphism of a 2-edge-coloured 2-tree into the red-C5 K5."""
    if g.m or any(k != EDGE or c > 2 for k, c, _, _ in g.adjacencies()):
        raise GraphError("expected a (0,2)-graph: edges of colours 1 and 2 only")
    return _colour(g, derive_2ec_table())


def random_2tree(v: int, kind: str = "oriented", seed=None) -> MixedGraph:
    """Random 2-tree: start from a triangle and attach each new vertex to a
    uniformly chosen existing edge.  ``kind`` is ``"oriented"`` or ``"2ec"``."""
    if v < 3:
        raise GraphError(f"random 2-tree needs v >= 3, got {v}")
    if kind not in ("oriented", "2ec"):
        raise GraphError(f"unknown 2-tree kind {kind!r}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    pairs = [(0, 1), (0, 2), (1, 2)]
    for z in range(3, v):
        a, b = pairs[rng.randrange(len(pairs))]
        pairs += [(a, z), (b, z)]
    adj = []
    for a, b in pairs:
        if kind == "oriented":
            adj.append((ARC, 1, a, b) if rng.random() < 0.5 else (ARC, 1, b, a))
        else:
            adj.append((EDGE, rng.randrange(2) + 1, a, b))
    if kind == "oriented":
        return MixedGraph(1, 0, v, adj)
    return MixedGraph(0, 2, v, adj)
