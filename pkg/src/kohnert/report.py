"""Files written by ``verify --report-dir`` and ``diagrams --plot``."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .diagrams import Diagram  # noqa: E402

# Fixed metadata keeps PNG bytes stable across runs.
_PNG_META = {"Software": None}


def write_tsv(path: Path, report) -> None:
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh, delimiter="\t", lineterminator="\n")
        out.writerow(["check", "instances", "failures", "status"])
        for c in report.checks:
            out.writerow([c.name, c.instances, len(c.failures), "pass" if not c.failures else "fail"])
        out.writerow(["total", sum(c.instances for c in report.checks), report.failed, "pass" if report.ok else "fail"])


def plot_checks(path: Path, report) -> None:
    names = [c.name for c in report.checks]
    inst = [c.instances for c in report.checks]
    fails = [len(c.failures) for c in report.checks]
    fig, ax = plt.subplots(figsize=(7, 3.5))
    x = range(len(names))
    ax.bar(x, inst, color="#6a8caf", label="instances")
    ax.bar(x, fails, color="#c0392b", label="failures")
    ax.set_xticks(list(x), names, rotation=30, ha="right")
    ax.set_yscale("log")
    ax.set_title(f"verify {report.scope}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, metadata=_PNG_META)
    plt.close(fig)


def plot_closure_sizes(path: Path, sizes: dict[str, int], scope: str) -> None:
    """Histogram of |KD(w)| over the permutations in scope."""
    fig, ax = plt.subplots(figsize=(6, 3.5))
    vals = list(sizes.values())
    bins = range(1, max(vals, default=1) + 2)
    ax.hist(vals, bins=bins, color="#6a8caf", edgecolor="white", align="left")
    ax.set_xlabel("number of Kohnert diagrams")
    ax.set_ylabel("permutations")
    ax.set_title(scope)
    fig.tight_layout()
    fig.savefig(path, metadata=_PNG_META)
    plt.close(fig)


def plot_diagrams(path: Path, diagrams: list[Diagram], title: str = "", per_row: int = 8) -> None:
    """Grid of diagrams, row 1 at the bottom of each panel."""
    n = max(len(diagrams), 1)
    width = max((d.n_cols for d in diagrams), default=1) or 1
    height = max((d.max_row for d in diagrams), default=1) or 1
    ncols = min(per_row, n)
    nrows = -(-n // ncols)
    scale = 0.3
    fig, axes = plt.subplots(
        nrows, ncols, squeeze=False,
        figsize=(ncols * (width + 1) * scale + 0.5, nrows * (height + 1) * scale + 0.6),
    )
    for ax in axes.flat:
        ax.set_axis_off()
    for ax, d in zip(axes.flat, diagrams):
        for r, c in d.cells:
            ax.add_patch(Rectangle((c - 1, r - 1), 1, 1, facecolor="#34495e", edgecolor="white"))
        ax.add_patch(Rectangle((0, 0), width, height, fill=False, edgecolor="#bbbbbb", lw=0.5))
        ax.set_xlim(-0.2, width + 0.2)
        ax.set_ylim(-0.2, height + 0.2)
        ax.set_aspect("equal")
    if title:
        fig.suptitle(title)
    fig.savefig(path, metadata=_PNG_META)
    plt.close(fig)


def write_report(directory: Path, report, sizes: dict[str, int]) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    paths = [directory / "report.tsv", directory / "checks.png", directory / "closure_sizes.png"]
    write_tsv(paths[0], report)
    plot_checks(paths[1], report)
    plot_closure_sizes(paths[2], sizes, report.scope)
    return paths
