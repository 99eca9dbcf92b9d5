import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from mixedhom.families import directed_cycle, random_mixed, transitive_tournament
from mixedhom.graph import ARC, EDGE, MixedGraph


@pytest.fixture
def t3():
    # a=0, b=1, c=2 with a->b, a->c, b->c
    return transitive_tournament(3)


@pytest.fixture
def c3():
    # a=0 -> b=1 -> c=2 -> a
    return directed_cycle(3)


@st.composite
def mixed_graphs(draw, max_vertices=7, m=None, n=None, min_vertices=1):
    """Arbitrary (m,n)-mixed graphs; every pair gets no adjacency or one type."""
    m = draw(st.integers(0, 2)) if m is None else m
    n = draw(st.integers(0 if m else 1, 2)) if n is None else n
    order = draw(st.integers(min_vertices, max_vertices))
    types = [None] + [(ARC, c, d) for c in range(1, m + 1) for d in (1, -1)] + [(EDGE, c, 0) for c in range(1, n + 1)]
    adj = []
    for u, v in combinations(range(order), 2):
        t = draw(st.sampled_from(types))
        if t is None:
            continue
        kind, colour, d = t
        adj.append((kind, colour, u, v) if d >= 0 else (kind, colour, v, u))
    return MixedGraph(m, n, order, adj)


def random_corpus(count, seed, max_vertices=8, kinds=((1, 0), (0, 2), (1, 1), (2, 0), (0, 3))):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m, n = rng.choice(kinds)
        v = rng.randint(1, max_vertices)
        p = rng.choice((0.3, 0.5, 0.7, 0.9, 1.0))
        out.append(random_mixed(m, n, v, p, rng))
    return out


# -- acceptance summary --------------------------------------------------------

_criteria: dict[int, list[bool]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark and (report.when == "call" or report.failed):
        _criteria.setdefault(mark.args[0], []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        results = _criteria[k]
        verdict = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {k:2d}: {verdict} ({sum(results)}/{len(results)} checks)")
