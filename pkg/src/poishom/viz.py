"""Figure rendering for the report path.

Everything draws through the Agg backend and writes PNG files next to
the delimited output, so reports work headless.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def save_homology_heatmap(table, path, title=""):
    """Weight-by-degree grid of total homology dimension."""
    agg = {}
    for r in table.rows:
        key = (r.weight, r.form_degree)
        agg[key] = agg.get(key, 0) + r.homology_dim
    if not agg:
        weights, degrees = [0], [0]
    else:
        weights = sorted({w for w, _ in agg})
        degrees = sorted({k for _, k in agg})
    grid = np.zeros((len(weights), len(degrees)))
    for (w, k), v in agg.items():
        grid[weights.index(w), degrees.index(k)] = v

    fig, ax = plt.subplots(figsize=(1.2 + 0.6 * len(degrees), 1.2 + 0.4 * len(weights)))
    im = ax.imshow(grid, origin="lower", cmap="viridis", aspect="auto")
    ax.set_xticks(range(len(degrees)), [str(k) for k in degrees])
    ax.set_yticks(range(len(weights)), [str(w) for w in weights])
    ax.set_xlabel("form degree")
    ax.set_ylabel("weight")
    if title:
        ax.set_title(title)
    for i in range(len(weights)):
        for j in range(len(degrees)):
            v = int(grid[i, j])
            if v:
                ax.text(j, i, str(v), ha="center", va="center", color="white", fontsize=8)
    fig.colorbar(im, ax=ax, label="homology dim")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_check_summary(report, path):
    """Horizontal bars of passed/failed row counts per suite."""
    names = sorted(report["suites"])
    passed = [
        sum(1 for r in report["suites"][s]["rows"] if r["passed"]) for s in names
    ]
    failed = [
        sum(1 for r in report["suites"][s]["rows"] if not r["passed"]) for s in names
    ]
    fig, ax = plt.subplots(figsize=(7, 1.0 + 0.45 * max(1, len(names))))
    y = np.arange(len(names))
    ax.barh(y, passed, color="#2a7f3f", label="passed")
    ax.barh(y, failed, left=passed, color="#b03030", label="failed")
    ax.set_yticks(y, names)
    ax.set_xlabel("check rows")
    ax.set_title(
        "%s  n=%d  %s"
        % (
            report["config"]["structure"],
            report["config"]["n"],
            "all passed" if report["passed"] else "FAILURES",
        )
    )
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_convergence_plot(conv, path):
    """Increment-versus-first-page scatter for a convergence report."""
    rows = conv["rows"]
    xs = [r["first_page_dim"] for r in rows]
    ys = [r["truncation_increment"] for r in rows]
    colors = ["#2a7f3f" if r["match"] else "#b03030" for r in rows]
    top = max(xs + ys + [1])
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    ax.plot([0, top], [0, top], color="#888888", linewidth=0.8, zorder=1)
    ax.scatter(xs, ys, c=colors, zorder=2)
    ax.set_xlabel("first page dimension")
    ax.set_ylabel("truncation increment")
    ax.set_title(
        "%s n=%d cutoff %d"
        % (conv["structure"], conv["n"], conv["weight_cutoff"])
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
