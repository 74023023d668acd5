"""Figure rendering for the CLI report paths.

Every function writes one figure file and returns its path.  Values are
projected to floats only for drawing; instances without a numeric projection
(words, lexicographic vectors) are plotted by least-witness length instead,
with the axis labeled accordingly.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from ordsemi.semigroups import SemigroupInstance
from ordsemi.verify import VerificationReport

PASS_COLOR = "#2a9d4e"
FAIL_COLOR = "#c73e3e"


def save_enumeration_figure(
    instance: SemigroupInstance, pairs, path, truncated: bool = False
) -> str:
    ranks = list(range(1, len(pairs) + 1))
    floats = [instance.to_float(v) for v, _ in pairs]
    if pairs and all(f is not None for f in floats):
        ys, label = floats, "product value"
    else:
        ys, label = [len(w) for _, w in pairs], "least-witness length"

    fig, ax = plt.subplots(figsize=(7, 4))
    ax.step(ranks, ys, where="post", color="#20558a", lw=1.2)
    ax.plot(ranks, ys, ".", color="#20558a", ms=5)
    ax.set_xlabel("rank in ascending enumeration")
    ax.set_ylabel(label)
    title = f"products over {instance.name}"
    if truncated:
        title += "  (budget-truncated prefix)"
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return str(path)


def save_fiber_sizes_figure(instance: SemigroupInstance, values, sizes, path) -> str:
    ranks = list(range(1, len(values) + 1))
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(ranks, sizes, color="#20558a", width=0.8)
    ax.set_xlabel("rank in ascending enumeration")
    ax.set_ylabel("number of representatives")
    ax.set_title(f"fiber sizes over {instance.name}")
    if values and len(values) <= 20:
        ax.set_xticks(ranks)
        ax.set_xticklabels([instance.format(v) for v in values], rotation=45, ha="right")
        ax.set_xlabel("product value")
    ax.grid(True, axis="y", alpha=0.3)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return str(path)


def save_report_figure(report: VerificationReport, path) -> str:
    names = [c.name for c in report.checks]
    colors = [PASS_COLOR if c.passed else FAIL_COLOR for c in report.checks]
    fig, ax = plt.subplots(figsize=(7, 0.4 * len(names) + 1.2))
    ax.barh(range(len(names)), [1] * len(names), color=colors, height=0.6)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xticks([])
    failed = len(report.failures())
    verdict = "all passed" if failed == 0 else f"{failed} FAILED"
    ax.set_title(f"{report.instance}: {len(names)} checks, {verdict}")
    for spine in ax.spines.values():
        spine.set_visible(False)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return str(path)
