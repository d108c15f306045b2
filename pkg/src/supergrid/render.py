"""ASCII, SVG and PNG drawings of a shape with an optional path or cycle."""

from __future__ import annotations

import csv
import json
from pathlib import Path as FsPath
from typing import Optional, Sequence

from .core import Coord, Shape, bounding_box

CELL = 28
RADIUS = 4


def _frame(shape: Shape) -> tuple[int, int, int, int]:
    return bounding_box(shape.boxes())


def render_ascii(shape: Shape, verts: Sequence[Coord] = (), closed: bool = False) -> str:
    """One character per lattice point: ``s``/``t`` at the ends, ``o`` on the
    path, ``.`` for unused vertices and a blank for the removed block."""
    x0, x1, y0, y1 = _frame(shape)
    on = set(verts)
    ends = {} if closed or not verts else {verts[0]: "s", verts[-1]: "t"}
    rows = []
    for y in range(y0, y1 + 1):
        row = []
        for x in range(x0, x1 + 1):
            v = (x, y)
            if v not in shape:
                row.append(" ")
            elif v in ends:
                row.append(ends[v])
            else:
                row.append("o" if v in on else ".")
        rows.append("".join(row).rstrip())
    return "\n".join(rows) + "\n"


def render_svg(shape: Shape, verts: Sequence[Coord] = (), closed: bool = False,
               title: Optional[str] = None) -> str:
    """Vertices as circles, path edges as bold segments, the removed block
    shaded."""
    x0, x1, y0, y1 = _frame(shape)
    w = (x1 - x0 + 2) * CELL
    h = (y1 - y0 + 2) * CELL

    def px(v: Coord) -> tuple[int, int]:
        return (v[0] - x0 + 1) * CELL, (v[1] - y0 + 1) * CELL

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
           f'viewBox="0 0 {w} {h}">']
    if title:
        out.append(f"<title>{title}</title>")
    out.append(f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>')
    for y in range(y0, y1 + 1):
        for x in range(x0, x1 + 1):
            if (x, y) not in shape:
                cx, cy = px((x, y))
                out.append(f'<rect x="{cx - CELL // 2}" y="{cy - CELL // 2}" width="{CELL}" '
                           f'height="{CELL}" fill="#d9d9d9"/>')
    seq = list(verts) + ([verts[0]] if closed and verts else [])
    if len(seq) > 1:
        pts = " ".join(f"{a},{b}" for a, b in map(px, seq))
        out.append(f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="3" '
                   f'stroke-linejoin="round"/>')
    ends = set() if closed or not verts else {verts[0], verts[-1]}
    for v in sorted(shape.vertices()):
        cx, cy = px(v)
        fill = "#c0392b" if v in ends else "black"
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{RADIUS}" fill="{fill}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_png(shape: Shape, verts: Sequence[Coord], path: str | FsPath, closed: bool = False,
               title: Optional[str] = None) -> FsPath:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    x0, x1, y0, y1 = _frame(shape)
    fig, ax = plt.subplots(figsize=(max(3, 0.4 * (x1 - x0 + 2)), max(3, 0.4 * (y1 - y0 + 2))))
    for y in range(y0, y1 + 1):
        for x in range(x0, x1 + 1):
            if (x, y) not in shape:
                ax.add_patch(plt.Rectangle((x - 0.5, y - 0.5), 1, 1, color="0.85", lw=0))
    seq = list(verts) + ([verts[0]] if closed and verts else [])
    if len(seq) > 1:
        ax.plot([v[0] for v in seq], [v[1] for v in seq], "k-", lw=2)
    vs = sorted(shape.vertices())
    ax.scatter([v[0] for v in vs], [v[1] for v in vs], s=12, c="k", zorder=3)
    if verts and not closed:
        ax.scatter([verts[0][0], verts[-1][0]], [verts[0][1], verts[-1][1]], s=40, c="#c0392b",
                   zorder=4)
    ax.set_xlim(x0 - 1, x1 + 1)
    ax.set_ylim(y1 + 1, y0 - 1)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=9)
    out = FsPath(path)
    fig.savefig(out, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return out


def write_timing_report(rows: list[dict], slope: float, outdir: str | FsPath) -> list[FsPath]:
    """``timing.csv``, ``timing.json`` and a log-log ``timing.png``."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    outdir = FsPath(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / "timing.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)
    json_path = outdir / "timing.json"
    json_path.write_text(json.dumps({"slope": slope, "rows": rows}, indent=2) + "\n")
    n = np.array([r["vertices"] for r in rows], dtype=float)
    sec = np.array([r["seconds"] for r in rows], dtype=float)
    fig, ax = plt.subplots(figsize=(4.5, 3.5))
    ax.loglog(n, sec, "o-", color="k")
    ax.loglog(n, sec[0] * n / n[0], "--", color="0.6", label="linear")
    ax.set_xlabel("vertices")
    ax.set_ylabel("seconds")
    ax.set_title(f"longest_c, fitted slope {slope:.2f}", fontsize=9)
    ax.legend(frameon=False)
    png_path = outdir / "timing.png"
    fig.savefig(png_path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return [csv_path, json_path, png_path]
