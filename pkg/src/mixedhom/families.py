"""Generators for the concrete graph families, exhaustive enumerators and a
random sampler."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import ARC, EDGE, GraphError, MixedGraph

ENUMERATION_LIMIT = 6


@dataclass(frozen=True)
class CayleySpec:
    """A circulant on Z_n: ``u`` and ``v`` are joined when ``(u - v) mod n`` lies
    in ``connection``."""

    modulus: int
    connection: frozenset
    kind: str  # "oriented" or "2ec"

    def __post_init__(self):
        s = {x % self.modulus for x in self.connection}
        if 0 in s:
            raise GraphError("connection set must not contain 0")
        neg = {(-x) % self.modulus for x in s}
        if self.kind == "oriented":
            if s & neg:
                raise GraphError(f"connection set {sorted(s)} contains a pair x, -x")
        elif self.kind == "2ec":
            s |= neg
        else:
            raise GraphError(f"unknown Cayley kind {self.kind!r}")
        object.__setattr__(self, "connection", frozenset(s))

    def joined(self, u: int, v: int) -> bool:
        return (u - v) % self.modulus in self.connection


def cayley_oriented_clique(n: int) -> MixedGraph:
    """Arc ``u -> v`` when ``(u - v) mod n`` is in {2, n-1} or a positive multiple of 4."""
    if n < 5 or n % 2 == 0:
        raise GraphError(f"oriented Cayley clique needs odd n >= 5, got {n}")
    spec = CayleySpec(n, frozenset({2, n - 1} | set(range(4, n, 4))), "oriented")
    arcs = [(ARC, 1, u, v) for u in range(n) for v in range(n) if u != v and spec.joined(u, v)]
    return MixedGraph(1, 0, n, arcs)


def cayley_2ec_clique(n: int) -> MixedGraph:
    """Edges where ``(u - v) mod n`` is +-1 (colour 1) or +-x with x = 1, 2 mod 4 (colour 2)."""
    if n < 5:
        raise GraphError(f"2-edge-coloured Cayley clique needs n >= 5, got {n}")
    base = {1} | {x for x in range(1, n) if x % 4 in (1, 2)}
    spec = CayleySpec(n, frozenset(base), "2ec")
    edges = []
    for u, v in combinations(range(n), 2):
        if spec.joined(u, v):
            colour = 1 if (u - v) % n in (1, n - 1) else 2
            edges.append((EDGE, colour, u, v))
    return MixedGraph(0, 2, n, edges)


def _xy_labels(n: int) -> list[str]:
    return [f"x{i}" for i in range(n)] + [f"y{i}" for i in range(n)]


def h_n(n: int) -> MixedGraph:
    """Two n-cycles x and y joined by K_{n,n}; colour 1 on both cycles and on
    the matching x_j y_j, colour 2 elsewhere.  ``x_i`` is vertex ``i``, ``y_i``
    is ``n + i``."""
    if n < 3:
        raise GraphError(f"H_n needs n >= 3, got {n}")
    edges = []
    for i in range(n):
        edges.append((EDGE, 1, i, (i + 1) % n))
        edges.append((EDGE, 1, n + i, n + (i + 1) % n))
        for j in range(n):
            edges.append((EDGE, 1 if i == j else 2, i, n + j))
    return MixedGraph(0, 2, 2 * n, edges, _xy_labels(n))


def g_n(n: int) -> MixedGraph:
    """Directed n-cycles on x and y running in opposite senses
    (``x_i -> x_{i+1}``, ``y_{i+1} -> y_i``); ``x_i -> y_j`` when i <= j,
    else ``y_j -> x_i``.

    With both cycles in the same sense the pair ``x_1, y_1`` has a two-vertex
    hull and the graph is not a simple clique.
    """
    if n < 3:
        raise GraphError(f"G_n needs n >= 3, got {n}")
    arcs = []
    for i in range(n):
        arcs.append((ARC, 1, i, (i + 1) % n))
        arcs.append((ARC, 1, n + (i + 1) % n, n + i))
        for j in range(n):
            if i <= j:
                arcs.append((ARC, 1, i, n + j))
            else:
                arcs.append((ARC, 1, n + j, i))
    return MixedGraph(1, 0, 2 * n, arcs, _xy_labels(n))


def transitive_tournament(k: int) -> MixedGraph:
    if k < 1:
        raise GraphError(f"tournament needs k >= 1, got {k}")
    return MixedGraph(1, 0, k, [(ARC, 1, i, j) for i, j in combinations(range(k), 2)])


def directed_cycle(k: int) -> MixedGraph:
    if k < 3:
        raise GraphError(f"directed cycle needs k >= 3, got {k}")
    return MixedGraph(1, 0, k, [(ARC, 1, i, (i + 1) % k) for i in range(k)])


def _check_enum(k: int) -> None:
    if not 1 <= k <= ENUMERATION_LIMIT:
        raise GraphError(f"enumeration supports 1 <= k <= {ENUMERATION_LIMIT}, got {k}")


def enumerate_tournaments(k: int) -> Iterator[MixedGraph]:
    """All 2^C(k,2) labelled tournaments; bit p of the word reverses pair p."""
    _check_enum(k)
    pairs = list(combinations(range(k), 2))
    for word in range(1 << len(pairs)):
        arcs = []
        for p, (i, j) in enumerate(pairs):
            arcs.append((ARC, 1, j, i) if word >> p & 1 else (ARC, 1, i, j))
        yield MixedGraph(1, 0, k, arcs)


def enumerate_2ec_complete(k: int) -> Iterator[MixedGraph]:
    _check_enum(k)
    pairs = list(combinations(range(k), 2))
    for word in range(1 << len(pairs)):
        yield MixedGraph(0, 2, k, [(EDGE, 1 + (word >> p & 1), i, j) for p, (i, j) in enumerate(pairs)])


def random_mixed(m: int, n: int, v: int, p: float, seed=None) -> MixedGraph:
    """Each pair adjacent with probability ``p``; the adjacency type is uniform
    over the 2m oriented arc types and the n edge types."""
    if m < 0 or n < 0 or m + n < 1:
        raise GraphError(f"need m + n >= 1 with m, n >= 0, got ({m},{n})")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"adjacency probability must lie in [0, 1], got {p}")
    if v < 1:
        raise GraphError(f"vertex count must be positive, got {v}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    types = 2 * m + n
    adj = []
    for a, b in combinations(range(v), 2):
        if rng.random() >= p:
            continue
        t = rng.randrange(types)
        if t < 2 * m:
            colour = t // 2 + 1
            adj.append((ARC, colour, a, b) if t % 2 == 0 else (ARC, colour, b, a))
        else:
            adj.append((EDGE, t - 2 * m + 1, a, b))
    return MixedGraph(m, n, v, adj)
