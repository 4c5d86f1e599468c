"""Figures written by ``cp2trisect verify --figures DIR``."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from mpl_toolkits.mplot3d.art3d import Poly3DCollection  # noqa: E402

from .geometry import central_torus_lifts, hexagon_vertices  # noqa: E402

__all__ = ["plot_flat_torus", "plot_slices", "plot_image_mesh", "write_figures"]

# orthonormal basis of the plane x1 + x4 + x7 = 0
_E1 = (1 / math.sqrt(2), -1 / math.sqrt(2), 0.0)
_E2 = (1 / math.sqrt(6), 1 / math.sqrt(6), -2 / math.sqrt(6))


def _plane(p) -> tuple[float, float]:
    x = p.floats()
    return sum(a * b for a, b in zip(x, _E1)), sum(a * b for a, b in zip(x, _E2))


def plot_flat_torus(path) -> Path:
    from .catalog import build_t2_7

    lifts = central_torus_lifts(build_t2_7().facets)
    fig, ax = plt.subplots(figsize=(5.5, 5.5))
    hexagon = [_plane(v) for v in hexagon_vertices()]
    hexagon.sort(key=lambda q: math.atan2(q[1], q[0]))
    xs, ys = zip(*(hexagon + hexagon[:1]))
    ax.plot(xs, ys, color="0.6", lw=1.0, ls="--", label="hexagon H")
    for tri, pts in lifts.items():
        q = [_plane(pts[v]) for v in tri]
        cx = sum(a for a, _ in q) / 3
        cy = sum(b for _, b in q) / 3
        ax.fill(*zip(*q), alpha=0.25, ec="k", lw=0.8)
        for v, (a, b) in zip(tri, q):
            # pull labels slightly towards the triangle centre
            ax.text(a + 0.12 * (cx - a), b + 0.12 * (cy - b), str(v), fontsize=6, ha="center", va="center")
    ax.set_aspect("equal")
    ax.set_title("central torus, flat lifts of the 14 triangles")
    ax.legend(loc="upper right", fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return Path(path)


def plot_slices(path, n: int = 8) -> Path:
    from .plmap import _ordered_loop, core_w

    fig, axes = plt.subplots(2, (n + 1) // 2, figsize=(2.4 * ((n + 1) // 2), 5))
    for ax, i in zip(axes.flat, range(n)):
        theta = math.pi * i / (n - 1)
        loop = _ordered_loop(theta)
        o = core_w(theta)
        ws = [c.w for c in loop] + [loop[0].w]
        ax.plot([w.real for w in ws], [w.imag for w in ws], "-", color="C3", lw=1)
        for c in loop:
            ax.plot([o.real, c.w.real], [o.imag, c.w.imag], color="0.75", lw=0.5)
        ax.plot([o.real], [o.imag], "ko", ms=3)
        ax.set_title(f"theta = {i}/{n - 1} pi", fontsize=8)
        ax.set_aspect("equal")
        ax.tick_params(labelsize=6)
    fig.suptitle("slices of the solid torus model with core points", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return Path(path)


def plot_image_mesh(path, resolution: int = 4) -> Path:
    from .plmap import _disk_mesh, _torus_mesh

    torus = _torus_mesh(resolution)
    disks = _disk_mesh(0.0, resolution) + _disk_mesh(math.pi, resolution)
    fig = plt.figure(figsize=(6, 5))
    ax = fig.add_subplot(projection="3d")
    ax.add_collection3d(Poly3DCollection(torus, facecolor="pink", edgecolor="0.4", lw=0.1, alpha=0.35))
    ax.add_collection3d(Poly3DCollection(disks, facecolor="0.5", edgecolor="0.2", lw=0.1, alpha=0.8))
    ax.set_xlim(-3, 3)
    ax.set_ylim(-3, 3)
    ax.set_zlim(-1.5, 1.5)
    ax.set_box_aspect((2, 2, 1))
    ax.set_title("image of the central torus and the two disks")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return Path(path)


def write_figures(directory, targets=("geometry", "plmap")) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    out = []
    if "geometry" in targets:
        out.append(plot_flat_torus(d / "flat_torus.png"))
    if "plmap" in targets:
        out.append(plot_slices(d / "model_slices.png"))
        out.append(plot_image_mesh(d / "image_mesh.png"))
    return out
