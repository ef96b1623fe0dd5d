"""Report figures rendered next to the delimited output.

Two summary views of a classified table: class counts per order, and the
per-type extension status matrix.  SVG output with the date stripped so
identical runs produce identical files.
"""

from __future__ import annotations

import os

import matplotlib
matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "cycsurf"
import matplotlib.pyplot as plt

from .extend import TYPES, bracket_text

_STATUS_COLORS = {"realized": "#2a9d8f", "ruled_out": "#e76f51", "open": "#e9c46a"}


def _save(fig, path):
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def classes_by_order_figure(classes, path):
    counts = {}
    for c in classes:
        counts[c.order] = counts.get(c.order, 0) + 1
    orders = sorted(counts)
    fig, ax = plt.subplots(figsize=(6, 3.2))
    ax.bar([str(n) for n in orders], [counts[n] for n in orders],
           color="#264653")
    ax.set_xlabel("order")
    ax.set_ylabel("conjugacy classes")
    ax.set_title("cyclic actions by order (genus %d)" % classes[0].genus)
    ax.set_yticks(range(0, max(counts.values()) + 1))
    fig.tight_layout()
    _save(fig, path)


def extendability_matrix_figure(classes, verdicts, path):
    names = [c.name or str(c.signature) for c in classes]
    fig, ax = plt.subplots(figsize=(6, 0.32 * len(classes) + 1.6))
    for row, c in enumerate(classes):
        verdict = verdicts[id(c)]
        for col, tname in enumerate(TYPES):
            status = verdict.types[tname][0]
            color = "#cccccc" if verdict.types[tname][1] == "R-char" \
                else _STATUS_COLORS[status]
            ax.add_patch(plt.Rectangle((col, row), 0.92, 0.92, color=color))
        ax.text(4.2, row + 0.45, bracket_text(verdict.summary),
                va="center", fontsize=8)
    ax.set_xlim(0, 5.2)
    ax.set_ylim(0, len(classes))
    ax.invert_yaxis()
    ax.set_xticks([i + 0.46 for i in range(4)])
    ax.set_xticklabels(TYPES)
    ax.set_yticks([i + 0.45 for i in range(len(classes))])
    ax.set_yticklabels(names, fontsize=8)
    ax.set_title("extension types: realized / ruled out / open")
    fig.tight_layout()
    _save(fig, path)


def render_report_figures(classes, verdicts, directory):
    os.makedirs(directory, exist_ok=True)
    paths = []
    p = os.path.join(directory, "classes_by_order.svg")
    classes_by_order_figure(classes, p)
    paths.append(p)
    p = os.path.join(directory, "extendability_matrix.svg")
    extendability_matrix_figure(classes, verdicts, p)
    paths.append(p)
    return paths
