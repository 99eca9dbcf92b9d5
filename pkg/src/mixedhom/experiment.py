"""Sampling how often random mixed graphs are simple cliques.

Each sample draws from its own RNG seeded by ``(seed, m, n, v, p, index)``, so
results do not depend on how samples are spread over worker processes.
"""

from __future__ import annotations

import csv
import io
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields

from .decision import decide_chi_s_two, is_clique, is_simple_clique
from .families import random_mixed


@dataclass(frozen=True)
class ExperimentRow:
    m: int
    n: int
    v: int
    p: float
    samples: int
    seed: int
    simple_cliques: int
    cliques: int
    chi_s_two: int

    def fraction(self, count: int) -> float:
        return count / self.samples if self.samples else 0.0


COLUMNS = [f.name for f in fields(ExperimentRow)] + [
    "simple_clique_fraction",
    "clique_fraction",
    "chi_s_two_fraction",
]


def _sample(args) -> tuple[bool, bool, bool]:
    m, n, v, p, seed, i = args
    g = random_mixed(m, n, v, p, random.Random(f"{seed}/{m}/{n}/{v}/{p!r}/{i}"))
    return is_simple_clique(g), is_clique(g), decide_chi_s_two(g).answer


def run_point(m: int, n: int, v: int, p: float, samples: int, seed: int, workers: int = 1) -> ExperimentRow:
    jobs = [(m, n, v, p, seed, i) for i in range(samples)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_sample, jobs, chunksize=max(1, samples // (4 * workers))))
    else:
        results = [_sample(j) for j in jobs]
    counts = [sum(r[k] for r in results) for k in range(3)]
    return ExperimentRow(m, n, v, p, samples, seed, *counts)


def run_experiment(m, n, vs, p, samples, seed, workers=1) -> list[ExperimentRow]:
    return [run_point(m, n, v, p, samples, seed, workers) for v in vs]


def to_csv(rows: list[ExperimentRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow(
            list(astuple(r))
            + [f"{r.fraction(c):.6f}" for c in (r.simple_cliques, r.cliques, r.chi_s_two)]
        )
    return buf.getvalue()
