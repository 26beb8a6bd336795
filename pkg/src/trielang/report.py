"""File output for battery runs: a CSV of per-law results and a chart."""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .axioms import AxiomResult
from .words import Alphabet

__all__ = ["write_report"]


def write_report(results: Sequence[AxiomResult], directory: str | Path,
                 alphabet: Alphabet) -> tuple[Path, Path]:
    """Write ``axioms.csv`` and ``axioms.png`` under ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    csv_path = directory / "axioms.csv"
    png_path = directory / "axioms.png"

    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["law", "relation", "attempts", "checked", "passes",
                         "failures", "first_witness"])
        for r in results:
            witness = r.failures[0].describe(alphabet) if r.failures else ""
            writer.writerow([r.name, r.relation, r.attempts, r.checked,
                             r.passes, len(r.failures), witness])

    names = [r.name for r in results]
    fractions = [r.passes / r.checked if r.checked else 0.0 for r in results]
    colors = ["tab:green" if r.ok else "tab:red" for r in results]
    height = max(2.0, 0.4 * len(results) + 1.2)
    fig, ax = plt.subplots(figsize=(9, height))
    positions = range(len(results))
    ax.barh(positions, fractions, color=colors)
    ax.set_yticks(list(positions))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlim(0, 1.05)
    ax.set_xlabel("pass fraction")
    ax.set_title("algebraic law battery")
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)

    return csv_path, png_path
