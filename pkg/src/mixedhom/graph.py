"""Core (m,n)-mixed graph types.

A mixed graph has ``m`` arc colours and ``n`` edge colours.  Every pair of
vertices carries at most one adjacency: an arc (with a tail) or an edge, each
with a 1-based colour.  Vertices are the dense integers ``0..order-1``;
labels are presentation only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

ARC = "a"
EDGE = "e"


class GraphError(ValueError):
    """Raised when a graph (or an operation on one) violates an invariant."""


class IdentificationError(GraphError):
    """A vertex set cannot be collapsed; ``witness`` is ``(s1, s2, w)``."""

    def __init__(self, message: str, witness: tuple[int, int, int]):
        super().__init__(message)
        self.witness = witness


class AdjacencyType(NamedTuple):
    kind: str
    colour: int


class Adjacency(NamedTuple):
    """An adjacency seen from an ordered vertex pair ``(u, v)``.

    ``direction`` is ``1`` for an arc ``u -> v``, ``-1`` for an arc ``v -> u``
    and ``0`` for an edge.  Two ordered pairs have the same adjacency type
    exactly when their ``Adjacency`` values are equal.
    """

    kind: str
    colour: int
    direction: int

    @property
    def type(self) -> AdjacencyType:
        return AdjacencyType(self.kind, self.colour)

    def reversed(self) -> "Adjacency":
        return Adjacency(self.kind, self.colour, -self.direction)


class MixedGraph:
    """Immutable (m,n)-mixed graph.

    Use :func:`build` (or the constructor directly) with a sequence of
    ``(kind, colour, u, v)`` entries; arcs run from ``u`` to ``v``.
    """

    __slots__ = ("m", "n", "order", "labels", "_nbrs")

    def __init__(
        self,
        m: int,
        n: int,
        order: int,
        adjacencies: Iterable[Sequence] = (),
        labels: Sequence[str] | None = None,
    ):
        if m < 0 or n < 0:
            raise GraphError(f"colour counts must be non-negative, got m={m}, n={n}")
        if order < 1:
            raise GraphError(f"vertex count must be positive, got {order}")
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != order:
                raise GraphError(f"expected {order} labels, got {len(labels)}")
        nbrs: list[dict[int, Adjacency]] = [{} for _ in range(order)]
        for entry in adjacencies:
            kind, colour, u, v = entry
            if kind not in (ARC, EDGE):
                raise GraphError(f"unknown adjacency kind {kind!r} in {tuple(entry)}")
            for x in (u, v):
                if not (isinstance(x, int) and 0 <= x < order):
                    raise GraphError(f"vertex {x!r} out of range in {tuple(entry)}")
            if u == v:
                raise GraphError(f"self-adjacency at vertex {u} in {tuple(entry)}")
            bound = m if kind == ARC else n
            what = "arc" if kind == ARC else "edge"
            if not isinstance(colour, int) or colour < 1:
                raise GraphError(f"{what} colour {colour!r} must be >= 1 in {tuple(entry)}")
            if colour > bound:
                raise GraphError(
                    f"{what} colour {colour} exceeds {'m' if kind == ARC else 'n'}={bound}"
                    f" in {tuple(entry)}"
                )
            if v in nbrs[u]:
                raise GraphError(f"duplicate adjacency on pair {{{u}, {v}}} in {tuple(entry)}")
            d = 1 if kind == ARC else 0
            nbrs[u][v] = Adjacency(kind, colour, d)
            nbrs[v][u] = Adjacency(kind, colour, -d)
        self.m = m
        self.n = n
        self.order = order
        self.labels = labels
        self._nbrs = tuple(nbrs)

    # -- queries -----------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.order)

    def rel(self, u: int, v: int) -> Adjacency | None:
        """Adjacency between ``u`` and ``v`` as seen from ``u``, or ``None``."""
        return self._nbrs[u].get(v)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def neighbours(self, v: int) -> Mapping[int, Adjacency]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def adjacencies(self) -> Iterator[tuple[str, int, int, int]]:
        """Yield ``(kind, colour, u, v)``; arcs tail first, edges with ``u < v``."""
        for u, row in enumerate(self._nbrs):
            for v, a in row.items():
                if a.direction == 1 or (a.direction == 0 and u < v):
                    yield (a.kind, a.colour, u, v)

    def size(self) -> int:
        return sum(len(row) for row in self._nbrs) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def widen(self, m: int, n: int) -> "MixedGraph":
        """The same graph declared with larger colour bounds."""
        if m < self.m or n < self.n:
            raise GraphError(f"cannot narrow ({self.m},{self.n}) to ({m},{n})")
        return MixedGraph(m, n, self.order, self.adjacencies(), self.labels)

    def relabel(self, perm: Sequence[int]) -> "MixedGraph":
        """Rename vertex ``v`` to ``perm[v]``; ``perm`` must be a permutation."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("relabel requires a permutation of the vertices")
        adj = [(k, c, perm[u], perm[v]) for k, c, u, v in self.adjacencies()]
        return MixedGraph(self.m, self.n, self.order, adj)

    def _key(self):
        return (self.m, self.n, self.order, self.labels, frozenset(self.adjacencies()))

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"MixedGraph(m={self.m}, n={self.n}, order={self.order}, size={self.size()})"


def build(m: int, n: int, order: int, adjacencies: Iterable[Sequence] = (), labels=None) -> MixedGraph:
    return MixedGraph(m, n, order, adjacencies, labels)


@dataclass(frozen=True)
class VertexMap:
    """A total map from ``range(source_size)`` into ``range(target_size)``."""

    source_size: int
    target_size: int
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if len(self.image) != self.source_size:
            raise GraphError(f"map has {len(self.image)} images for {self.source_size} vertices")
        for v, t in enumerate(self.image):
            if not 0 <= t < self.target_size:
                raise GraphError(f"image {t} of vertex {v} is not a target vertex")

    def __call__(self, v: int) -> int:
        return self.image[v]

    @classmethod
    def identity(cls, size: int) -> "VertexMap":
        return cls(size, size, tuple(range(size)))

    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.target_size

    def is_constant(self) -> bool:
        return len(set(self.image)) <= 1


def underlying(g: MixedGraph) -> MixedGraph:
    """U(G) as a (0,1)-graph: an edge of colour 1 wherever G has any adjacency."""
    edges = [(EDGE, 1, u, v) for u in g.vertices for v in g.neighbours(u) if u < v]
    return MixedGraph(0, 1, g.order, edges, g.labels)


def same_type(g: MixedGraph, first: tuple[int, int], second: tuple[int, int]) -> bool:
    a, b = g.rel(*first), g.rel(*second)
    for pair, adj in ((first, a), (second, b)):
        if adj is None:
            raise GraphError(f"pair {pair} is not adjacent")
    return a == b


def is_complete(g: MixedGraph) -> bool:
    return all(g.degree(v) == g.order - 1 for v in g.vertices)


def identify(g: MixedGraph, s: Iterable[int]) -> tuple[MixedGraph, VertexMap]:
    """Collapse the vertex set ``s`` into one vertex.

    Adjacencies inside ``s`` are dropped.  Every outside vertex must see one
    adjacency type from all members of ``s`` adjacent to it; members that are
    not adjacent to it are ignored.  Quotient vertices are numbered in order of
    their least original vertex.
    """
    s = sorted(set(s))
    if not s:
        raise GraphError("cannot identify an empty vertex set")
    for v in s:
        if not 0 <= v < g.order:
            raise GraphError(f"vertex {v} out of range")
    members = set(s)
    rep = s[0]
    image = []
    index: dict[int, int] = {}
    for v in g.vertices:
        r = rep if v in members else v
        if r not in index:
            index[r] = len(index)
        image.append(index[r])

    seen: dict[int, tuple[int, Adjacency]] = {}
    for x in s:
        for w, a in g.neighbours(x).items():
            if w in members:
                continue
            if w in seen:
                first, b = seen[w]
                if a != b:
                    raise IdentificationError(
                        f"vertices {first} and {x} present different adjacency types to {w}",
                        (first, x, w),
                    )
            else:
                seen[w] = (x, a)

    adj = []
    for k, c, u, v in g.adjacencies():
        iu, iv = image[u], image[v]
        if iu == iv:
            continue
        if (u in members and v not in members and seen[v][0] != u) or (
            v in members and u not in members and seen[u][0] != v
        ):
            continue
        adj.append((k, c, iu, iv))
    labels = None
    if g.labels is not None:
        labels = ["" for _ in index]
        for v in g.vertices:
            labels[image[v]] = labels[image[v]] + ("+" if labels[image[v]] else "") + g.labels[v]
    q = MixedGraph(g.m, g.n, len(index), adj, labels)
    return q, VertexMap(g.order, q.order, tuple(image))
