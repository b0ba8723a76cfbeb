"""Optional matplotlib renderings of counts and comparison reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .cost import TranspileReport
from .simulator import Counts


def render_counts_figure(
    counts: Counts, path: str, decoded: Counts | None = None
) -> None:
    """Histogram of an outcome table; with a decoded table, both side by side."""
    tables = [("register outcomes", counts)]
    if decoded is not None:
        tables.append(("decoded bit strings", decoded))
    fig, axes = plt.subplots(
        1, len(tables), figsize=(max(6, 1.2 * len(counts.counts)), 4), squeeze=False
    )
    for ax, (title, table) in zip(axes[0], tables):
        keys = sorted(table.counts)
        ax.bar(range(len(keys)), [table.counts[k] for k in keys], color="#4878a8")
        ax.set_xticks(range(len(keys)))
        ax.set_xticklabels(keys, rotation=90, fontsize=8)
        ax.set_ylabel("shots")
        ax.set_title(f"{title} (N={table.shots}, seed={table.seed})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_report_figure(report: TranspileReport, path: str) -> None:
    """Gate-count and fidelity bars for a transpilation report."""
    fig, (ax_counts, ax_fid) = plt.subplots(1, 2, figsize=(8, 4))

    labels = ["two-qudit", "single-qudit"]
    values = [report.two_qudit_gates, report.single_qudit_gates]
    colors = ["#a84848", "#4878a8"]
    if report.baseline_two_qubit_gates is not None:
        labels.append("baseline two-qubit")
        values.append(report.baseline_two_qubit_gates)
        colors.append("#888888")
    ax_counts.bar(labels, values, color=colors)
    ax_counts.set_ylabel("gates")
    ax_counts.set_title("gate counts")
    ax_counts.tick_params(axis="x", rotation=20)

    fid_labels = ["chosen mapping"]
    fid_values = [report.fidelity_opt]
    if report.fidelity_trivial is not None:
        fid_labels.append("one qubit per qudit")
        fid_values.append(report.fidelity_trivial)
    ax_fid.bar(fid_labels, fid_values, color="#48a878")
    ax_fid.set_ylim(0.0, 1.05)
    ax_fid.set_ylabel("estimated fidelity")
    ax_fid.set_title("fidelity estimate")
    ax_fid.tick_params(axis="x", rotation=20)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
