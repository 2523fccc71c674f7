"""Matplotlib rendering of partially oriented graphs to image files.

Vertices sit on a circle; plain edges are drawn as grey segments, arcs as
directed arrows.  The catalog renderer writes one sheet per family with the
instances laid out on a grid, next to the JSON the run emits.
"""
from __future__ import annotations

import math
from pathlib import Path
from typing import Iterable

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .graphs import PartialGraph


def _layout(n: int) -> list:
    if n == 1:
        return [(0.0, 0.0)]
    return [
        (math.cos(2 * math.pi * i / n - math.pi / 2), math.sin(2 * math.pi * i / n - math.pi / 2))
        for i in range(n)
    ]


def draw_pog(ax, pog: PartialGraph, title: str = "") -> None:
    pos = _layout(pog.n)
    for u, v in sorted(pog.edges):
        ax.plot([pos[u][0], pos[v][0]], [pos[u][1], pos[v][1]], color="0.55", lw=1.4, zorder=1)
    for t, h in sorted(pog.arcs):
        ax.annotate(
            "",
            xy=pos[h],
            xytext=pos[t],
            arrowprops=dict(arrowstyle="-|>", color="crimson", lw=1.6, shrinkA=9, shrinkB=9),
            zorder=2,
        )
    for v, (x, y) in enumerate(pos):
        ax.scatter([x], [y], s=210, color="white", edgecolor="black", zorder=3)
        ax.text(x, y, str(v), ha="center", va="center", fontsize=8, zorder=4)
    if title:
        ax.set_title(title, fontsize=8)
    ax.set_xlim(-1.45, 1.45)
    ax.set_ylim(-1.45, 1.45)
    ax.set_aspect("equal")
    ax.axis("off")


def render_pog(pog: PartialGraph, path, title: str = "") -> None:
    fig, ax = plt.subplots(figsize=(2.6, 2.6))
    draw_pog(ax, pog, title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_family_sheets(entries, out_dir) -> list:
    """One PNG grid per family; returns the written paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    by_family: dict[str, list] = {}
    for e in entries:
        by_family.setdefault(e.family, []).append(e)
    written = []
    for family, members in sorted(by_family.items()):
        cols = min(6, max(1, len(members)))
        rows = (len(members) + cols - 1) // cols
        fig, axes = plt.subplots(rows, cols, figsize=(2.3 * cols, 2.3 * rows), squeeze=False)
        for ax in axes.flat:
            ax.axis("off")
        for ax, e in zip(axes.flat, members):
            label = f"{e.family}{tuple(e.params)}" + (" dual" if e.is_dual else "")
            draw_pog(ax, e.pog, label)
        fig.tight_layout()
        path = out_dir / f"catalog_{family}.png"
        fig.savefig(path, dpi=130)
        plt.close(fig)
        written.append(path)
    return written


def render_pog_files(pogs: Iterable[PartialGraph], out_dir, prefix: str) -> list:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for i, pog in enumerate(pogs):
        path = out_dir / f"{prefix}_{i:03d}.png"
        render_pog(pog, path, title=f"{prefix} {i}")
        written.append(path)
    return written
