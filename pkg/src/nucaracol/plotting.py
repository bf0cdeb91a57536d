"""Matplotlib figures for the ``report`` command (Agg backend, files only)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402
from matplotlib.patches import Arc as ArcPatch  # noqa: E402

from .caracol import CaracolGraph  # noqa: E402
from .framing import DualGraph  # noqa: E402
from .paths import LatticePath  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}


def draw_caracol(g: CaracolGraph, ax) -> None:
    """Vertices on a line, source copies as arcs above, sink edges as arcs below."""
    last = g.n_plus_1
    ax.plot(range(1, last + 1), [0] * last, color="0.2", lw=1, zorder=1)
    ax.scatter(range(1, last + 1), [0] * last, s=24, color="k", zorder=3)
    for v in range(1, last + 1):
        ax.annotate(str(v), (v, 0), xytext=(0, -11), textcoords="offset points",
                    ha="center", fontsize=7)
    for k, e in enumerate(g.above_stack[1:], start=1):
        w = e.v - e.u
        ax.add_patch(ArcPatch(((e.u + e.v) / 2, 0), w, 0.35 * k, theta1=0, theta2=180,
                              color="tab:blue", lw=1))
    for k, e in enumerate(g.below_stack[1:], start=1):
        w = e.v - e.u
        ax.add_patch(ArcPatch(((e.u + e.v) / 2, 0), w, 0.35 * k, theta1=180, theta2=360,
                              color="tab:red", lw=1))
    top = 0.2 * max(len(g.above_stack), 2)
    bottom = 0.2 * max(len(g.below_stack), 2)
    ax.set_xlim(0.5, last + 0.5)
    ax.set_ylim(-bottom, top)
    ax.set_aspect("auto")
    ax.axis("off")
    ax.set_title(f"car({g.nu})")


def draw_dual(dual: DualGraph, label, ax, title: str) -> None:
    """Dual graph in layers; paths with equal area to their left share a row."""
    h = dual.to_networkx(label)
    layers: dict[int, list[str]] = {}
    for node in sorted(h.nodes):
        layers.setdefault(_area(node), []).append(node)
    pos = {}
    for y, nodes in layers.items():
        for x, node in enumerate(nodes):
            pos[node] = (x - (len(nodes) - 1) / 2, -y)
    nx.draw_networkx_edges(h, pos, ax=ax, edge_color="0.5", width=0.8)
    nx.draw_networkx_nodes(h, pos, ax=ax, node_size=30, node_color="tab:blue")
    nx.draw_networkx_labels(h, pos, ax=ax, font_size=6,
                            verticalalignment="bottom")
    ax.set_title(title)
    ax.axis("off")


def _area(word: str) -> int:
    """Boxes between the path and the y-axis, used as a drawing rank."""
    try:
        mu = LatticePath(word)
    except ValueError:
        return 0
    return sum(x for (x, _), ch in zip(mu.points, mu.steps) if ch == "N")


def draw_hstar(h: list[int], ax) -> None:
    ax.bar(range(len(h)), h, color="tab:green")
    ax.set_xlabel("i")
    ax.set_ylabel("h*_i")
    ax.set_xticks(range(len(h)))
    ax.set_title("h*-vector")


def save_report_figures(g: CaracolGraph, duals: dict[str, tuple[DualGraph, object]],
                        hstar: list[int], outdir: Path) -> list[Path]:
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6, 3))
        draw_caracol(g, ax)
        written.append(outdir / "caracol.png")
        fig.savefig(written[-1])
        plt.close(fig)

        for name, (dual, label) in duals.items():
            fig, ax = plt.subplots(figsize=(6, 5))
            draw_dual(dual, label, ax, f"{name}-framed dual graph")
            written.append(outdir / f"dual_{name}.png")
            fig.savefig(written[-1])
            plt.close(fig)

        fig, ax = plt.subplots(figsize=(4, 3))
        draw_hstar(hstar, ax)
        written.append(outdir / "hstar.png")
        fig.savefig(written[-1])
        plt.close(fig)
    return written
