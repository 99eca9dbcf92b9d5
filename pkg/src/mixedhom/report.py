"""Figures for experiment reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

SERIES = [
    ("simple_cliques", "simple clique", "o-"),
    ("cliques", "clique", "s--"),
    ("chi_s_two", r"$\chi_s = 2$", "^:"),
]


def plot_experiment(rows, path) -> None:
    """Fraction of sampled graphs with each property against vertex count.

    One line per property; rows with other (m, n, p) settings are drawn as
    separate groups in the legend.
    """
    groups: dict[tuple, list] = {}
    for r in rows:
        groups.setdefault((r.m, r.n, r.p), []).append(r)
    fig, ax = plt.subplots(figsize=(6, 4))
    for (m, n, p), group in sorted(groups.items()):
        group = sorted(group, key=lambda r: r.v)
        xs = [r.v for r in group]
        for attr, name, style in SERIES:
            ys = [r.fraction(getattr(r, attr)) for r in group]
            ax.plot(xs, ys, style, label=f"{name} ({m},{n}), p={p:g}")
    ax.set_xlabel("vertices")
    ax.set_ylabel("fraction of samples")
    ax.set_ylim(-0.02, 1.02)
    ax.legend(fontsize=7)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
