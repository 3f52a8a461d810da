"""Figure rendering for bound tables."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bounds import BoundsRow

__all__ = ["render_bounds_figure"]


def render_bounds_figure(rows: Sequence[BoundsRow], path: str) -> None:
    """Plot the three bound families against n on a log scale and mark the
    values realised by witnesses, then write the figure to path."""
    if not rows:
        raise ValueError("nothing to plot")
    ns = [row.n for row in rows]
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.plot(ns, [row.r_bound for row in rows], "o-", label="n! (R-trivial)")
    ax.plot(ns, [row.j_bound for row in rows], "s-", label="floor(e(n-1)!) (J-trivial)")
    ax.plot(
        ns,
        [row.reversal_bound for row in rows],
        "^-",
        label="2^(n-1) (reversal)",
    )
    witnessed_n = [row.n for row in rows if row.r_witness is not None]
    witnessed_v = [row.r_witness for row in rows if row.r_witness is not None]
    if witnessed_n:
        ax.plot(
            witnessed_n,
            witnessed_v,
            "kx",
            markersize=9,
            label="witnessed",
            zorder=5,
        )
    for row in rows:
        if row.j_witness is not None:
            ax.plot([row.n], [row.j_witness], "kx", markersize=9, zorder=5)
        if row.reversal_witness is not None:
            ax.plot([row.n], [row.reversal_witness], "kx", markersize=9, zorder=5)
    ax.set_yscale("log")
    ax.set_xlabel("n (states)")
    ax.set_ylabel("syntactic monoid size / quotient complexity")
    ax.set_title("Tight bounds and computed witnesses")
    ax.set_xticks(ns)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
