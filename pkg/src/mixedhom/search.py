"""Brute-force oracles: colouring validation, homomorphism search, exact
chromatic numbers by set-partition enumeration.

Set partitions are enumerated as restricted-growth strings in lexicographic
order, so the first witness found at a given block count is canonical.
Assignments are pruned as soon as two differently-coloured adjacencies would
be forced onto the same ordered pair of blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import GraphError, MixedGraph, VertexMap

DEFAULT_BUDGET = 12


class BudgetExceeded(GraphError):
    pass


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering the vertices, sorted by least element."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else -1))
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(labels):
            groups.setdefault(c, []).append(v)
        return cls(tuple(groups.values()))

    @classmethod
    def from_map(cls, phi: VertexMap) -> "Partition":
        return cls.from_labels(phi.image)

    def __len__(self):
        return len(self.blocks)

    def labels(self) -> tuple[int, ...]:
        """Block index of each vertex (a restricted-growth string)."""
        out = [0] * sum(len(b) for b in self.blocks)
        for i, b in enumerate(self.blocks):
            for v in b:
                out[v] = i
        return tuple(out)

    def check(self, order: int) -> None:
        seen = [b for block in self.blocks for b in block]
        if any(len(b) == 0 for b in self.blocks):
            raise GraphError("partition has an empty block")
        if sorted(seen) != list(range(order)):
            raise GraphError(f"blocks do not partition the {order} vertices")


def _cross_uniform(g: MixedGraph, labels: Sequence[int]) -> bool:
    seen = {}
    for u in g.vertices:
        bu = labels[u]
        for v, a in g.neighbours(u).items():
            bv = labels[v]
            if bu == bv:
                continue
            prev = seen.setdefault((bu, bv), a)
            if prev != a:
                return False
    return True


def is_simple_colouring(g: MixedGraph, p: Partition) -> bool:
    p.check(g.order)
    if g.order == 1:
        return True
    if len(p) < 2:
        return False
    return _cross_uniform(g, p.labels())


def is_colouring(g: MixedGraph, p: Partition) -> bool:
    p.check(g.order)
    labels = p.labels()
    for u in g.vertices:
        if any(labels[v] == labels[u] for v in g.neighbours(u)):
            return False
    return _cross_uniform(g, labels)


def is_homomorphism(g: MixedGraph, h: MixedGraph, phi: VertexMap) -> bool:
    if phi.source_size != g.order or phi.target_size != h.order:
        return False
    for u in g.vertices:
        for v, a in g.neighbours(u).items():
            if phi(u) == phi(v) or h.rel(phi(u), phi(v)) != a:
                return False
    return True


def is_simple_homomorphism(g: MixedGraph, h: MixedGraph, phi: VertexMap) -> bool:
    if phi.source_size != g.order or phi.target_size != h.order:
        return False
    if g.order == 1:
        return True
    if phi.is_constant():
        return False
    for u in g.vertices:
        for v, a in g.neighbours(u).items():
            if phi(u) != phi(v) and h.rel(phi(u), phi(v)) != a:
                return False
    return True


def compose(phi: VertexMap, beta: VertexMap) -> VertexMap:
    """``beta`` after ``phi``."""
    if phi.target_size != beta.source_size:
        raise GraphError(
            f"cannot compose: first map targets {phi.target_size} vertices,"
            f" second map expects {beta.source_size}"
        )
    return VertexMap(phi.source_size, beta.target_size, tuple(beta(t) for t in phi.image))


# -- partition enumeration --------------------------------------------------


def _colourings(g: MixedGraph, max_blocks: int, proper: bool) -> Iterator[tuple[int, ...]]:
    """Yield restricted-growth strings with at most ``max_blocks`` blocks whose
    cross-block adjacencies are uniform per ordered block pair (and whose
    blocks are independent when ``proper``).  Lexicographic order."""
    order = g.order
    labels = [-1] * order
    # (bu, bv) -> [adjacency, count]
    forced: dict[tuple[int, int], list] = {}
    back = [[(w, a) for w, a in g.neighbours(v).items() if w < v] for v in range(order)]

    def place(v: int, b: int) -> list | None:
        done = []
        for w, a in back[v]:
            c = labels[w]
            if c == b:
                if proper:
                    break
                continue
            key = (b, c)
            slot = forced.get(key)
            if slot is None:
                forced[key] = [a, 1]
                forced[(c, b)] = [a.reversed(), 1]
            elif slot[0] == a:
                slot[1] += 1
                forced[(c, b)][1] += 1
            else:
                break
            done.append(key)
        else:
            return done
        unplace(done)
        return None

    def unplace(done):
        for b, c in done:
            slot = forced[(b, c)]
            slot[1] -= 1
            forced[(c, b)][1] -= 1
            if slot[1] == 0:
                del forced[(b, c)]
                del forced[(c, b)]

    def rec(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if v == order:
            yield tuple(labels)
            return
        for b in range(min(used + 1, max_blocks)):
            done = place(v, b)
            if done is None:
                continue
            labels[v] = b
            yield from rec(v + 1, max(used, b + 1))
            labels[v] = -1
            unplace(done)

    yield from rec(0, 0)


def _check_budget(g: MixedGraph, budget: int) -> None:
    if g.order > budget:
        raise BudgetExceeded(f"graph has {g.order} vertices, enumeration budget is {budget}")


def iter_simple_colourings(g: MixedGraph, max_blocks: int | None = None) -> Iterator[Partition]:
    """All simple colourings with at most ``max_blocks`` blocks, canonical order."""
    limit = g.order if max_blocks is None else max_blocks
    for labels in _colourings(g, limit, proper=False):
        if g.order == 1 or max(labels) >= 1:
            yield Partition.from_labels(labels)


def _minimum(g: MixedGraph, proper: bool, budget: int) -> tuple[int, Partition]:
    _check_budget(g, budget)
    if g.order == 1:
        return 1, Partition(((0,),))
    start = 1 if proper else 2
    for k in range(start, g.order + 1):
        for labels in _colourings(g, k, proper):
            if max(labels) + 1 >= start:
                return k, Partition.from_labels(labels)
    raise AssertionError("the all-singletons partition is always valid")


def brute_chi_s(g: MixedGraph, budget: int = DEFAULT_BUDGET) -> tuple[int, Partition]:
    """Simple chromatic number and the lexicographically least witness."""
    return _minimum(g, proper=False, budget=budget)


def brute_chi(g: MixedGraph, budget: int = DEFAULT_BUDGET) -> tuple[int, Partition]:
    return _minimum(g, proper=True, budget=budget)


def has_simple_two_colouring(g: MixedGraph, budget: int = DEFAULT_BUDGET) -> bool:
    """Brute-force test for a simple colouring with exactly two colours."""
    _check_budget(g, budget)
    if g.order < 2:
        return False
    return any(max(labels) == 1 for labels in _colourings(g, 2, proper=False))


def enumerate_min_simple_colourings(g: MixedGraph, budget: int = DEFAULT_BUDGET) -> list[Partition]:
    k, _ = brute_chi_s(g, budget)
    if g.order == 1:
        return [Partition(((0,),))]
    return [Partition.from_labels(lab) for lab in _colourings(g, k, proper=False) if max(lab) + 1 == k]


def quotient(g: MixedGraph, p: Partition) -> tuple[MixedGraph, VertexMap]:
    """Collapse each block of a simple colouring into a single vertex."""
    if not is_simple_colouring(g, p):
        raise GraphError("partition is not a simple colouring")
    labels = p.labels()
    adj = {}
    for k, c, u, v in g.adjacencies():
        bu, bv = labels[u], labels[v]
        if bu != bv:
            adj[frozenset((bu, bv))] = (k, c, bu, bv)
    h = MixedGraph(g.m, g.n, len(p), adj.values())
    return h, VertexMap(g.order, h.order, labels)


# -- homomorphism search ------------------------------------------------------


def _common_bounds(g: MixedGraph, h: MixedGraph) -> tuple[MixedGraph, MixedGraph]:
    m, n = max(g.m, h.m), max(g.n, h.n)
    return g.widen(m, n), h.widen(m, n)


def _search(g: MixedGraph, h: MixedGraph, simple: bool, surjective: bool) -> VertexMap | None:
    g, h = _common_bounds(g, h)
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    image = [-1] * g.order
    used = [0] * h.order
    distinct = [0]
    need_split = simple and g.order > 1

    def ok(v: int, t: int) -> bool:
        for w, a in g.neighbours(v).items():
            s = image[w]
            if s < 0:
                continue
            if s == t:
                if simple:
                    continue
                return False
            if h.rel(t, s) != a:
                return False
        return True

    def rec(i: int) -> bool:
        if i == len(order):
            if need_split and distinct[0] < 2:
                return False
            return not surjective or distinct[0] == h.order
        remaining = len(order) - i
        if surjective and h.order - distinct[0] > remaining:
            return False
        if need_split and distinct[0] == 0 and remaining < 2:
            return False
        v = order[i]
        for t in range(h.order):
            if not ok(v, t):
                continue
            image[v] = t
            used[t] += 1
            if used[t] == 1:
                distinct[0] += 1
            if rec(i + 1):
                return True
            used[t] -= 1
            if used[t] == 0:
                distinct[0] -= 1
            image[v] = -1
        return False

    if rec(0):
        return VertexMap(g.order, h.order, tuple(image))
    return None


def find_homomorphism(g: MixedGraph, h: MixedGraph, surjective: bool = False) -> VertexMap | None:
    return _search(g, h, simple=False, surjective=surjective)


def find_simple_homomorphism(g: MixedGraph, h: MixedGraph, surjective: bool = False) -> VertexMap | None:
    """A non-constant map preserving every adjacency whose endpoints get
    different images, or ``None``."""
    return _search(g, h, simple=True, surjective=surjective)
