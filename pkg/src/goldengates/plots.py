"""Matplotlib renderings of cover reports and digraph spectra.

Figures are written straight to files with the Agg backend so the CLI
works headless; nothing here opens a window.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .covering import CoverReport
from .digraph import Spectrum

__all__ = ["save_cover_figure", "save_spectrum_figure"]


def save_cover_figure(report: CoverReport, path: Union[str, Path]) -> Path:
    """Quantile curve of sampled nearest-neighbor distances."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    if report.distance_quantiles:
        levels = [q for q, _ in report.distance_quantiles]
        values = [v for _, v in report.distance_quantiles]
        ax.plot(levels, values, marker="o", color="tab:blue", label="sample quantiles")
    ax.axhline(
        report.max_sampled_hole,
        color="tab:red",
        linestyle="--",
        label=f"max hole {report.max_sampled_hole:.4f}",
    )
    ax.axhline(
        report.min_pairwise_distance,
        color="tab:green",
        linestyle=":",
        label=f"min pairwise {report.min_pairwise_distance:.4f}",
    )
    ax.set_xlabel("quantile")
    ax.set_ylabel("distance to nearest word")
    ax.set_title(
        f"{report.gateset}, t <= {report.tcount}: "
        f"{report.num_points} points, {report.sample_count} samples"
    )
    ax.legend(loc="upper left", fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_spectrum_figure(
    s: Spectrum, k: int, path: Union[str, Path], title: str = ""
) -> Path:
    """Eigenvalue scatter with the sqrt(k) reference circle."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(5.0, 5.0))
    re = [v.real for v in s.eigenvalues]
    im = [v.imag for v in s.eigenvalues]
    ax.scatter(re, im, s=6, color="tab:blue", alpha=0.6, linewidths=0)
    radius = math.sqrt(k)
    angles = [2.0 * math.pi * i / 512 for i in range(513)]
    ax.plot(
        [radius * math.cos(a) for a in angles],
        [radius * math.sin(a) for a in angles],
        color="tab:red",
        linewidth=0.8,
        label=f"radius sqrt({k})",
    )
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    ax.legend(loc="upper right", fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
