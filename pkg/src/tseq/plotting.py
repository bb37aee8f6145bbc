"""Figure rendering for the growth and benchmark reports.

Figures are written straight to files (Agg backend, no display) so the
CLI can drop a PNG next to the delimited output it prints.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .analysis import GrowthPoint  # noqa: E402


def growth_figure(points: list[GrowthPoint], path: str) -> None:
    """Growth constant c(n) against n, with the peak highlighted."""
    ns = [p.n for p in points]
    cs = [float(p.c_value) for p in points]
    best = max(points, key=lambda p: p.c_value)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, cs, ".-", color="tab:blue", lw=1, ms=4)
    ax.plot([best.n], [float(best.c_value)], "o", color="tab:red",
            label=f"peak c({best.n}) = {float(best.c_value):.8f}")
    ax.set_xlabel("n")
    ax.set_ylabel("growth constant c(n)")
    ax.legend(frameon=False, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def bench_figure(rows: list[tuple[int, float]], path: str) -> None:
    """Per-row table extension time on log-log axes."""
    positive = [(n, t) for n, t in rows if t > 0]  # log axes cannot show 0
    ns = [n for n, _ in positive]
    ts = [t for _, t in positive]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.loglog(ns, ts, ".-", color="tab:blue", lw=1, ms=4)
    ax.set_xlabel("row n")
    ax.set_ylabel("seconds to extend")
    ax.grid(True, which="both", lw=0.3, alpha=0.5)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
