"""Figure rendering for sparsification traces (headless, file output only)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .dh import SparsifyReport


def plot_trace(report: SparsifyReport, path, title: str = "sparsification trace") -> None:
    """Render per-iteration size, accuracy, and lambda to an image file."""
    its = report.iterations
    rounds = list(range(len(its)))
    sizes = [r.m_before for r in its] + ([its[-1].m_after] if its else [])
    fig, (ax_m, ax_p) = plt.subplots(2, 1, figsize=(7, 6), sharex=True)

    ax_m.plot(range(len(sizes)), sizes, marker="o", label="m_i")
    if report.m_star > 0:
        ax_m.axhline(report.m_star, linestyle="--", color="gray", label="m*")
    ax_m.set_ylabel("arc count")
    ax_m.set_yscale("log")
    ax_m.legend()
    ax_m.set_title(title)

    if its:
        ax_p.plot(rounds, [r.eps_i for r in its], marker="s", label="eps_i")
        ax_e = ax_p.twinx()
        ax_e.plot(rounds, [r.lambda_i for r in its], marker="^", color="tab:orange",
                  label="lambda_i")
        ax_e.set_ylabel("lambda_i")
        lines = ax_p.get_lines() + ax_e.get_lines()
        ax_p.legend(lines, [ln.get_label() for ln in lines])
    ax_p.set_ylabel("eps_i")
    ax_p.set_xlabel("iteration")

    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
