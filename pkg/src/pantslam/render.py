"""SVG drawings of marked maps with highlighted loops.

Layout is barycentric: the vertices of a chosen outer face are pinned to
a regular polygon and every other vertex solves to the average of its
neighbors.  Parallel edges bow apart, self-loops become small circles,
marked faces get labels, and any supplied loops are drawn bold.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .combmap import CombinatorialMap
from .exploration import Loop, SigmaGraph

__all__ = ["layout", "render_svg"]

_PALETTE = ("#c0392b", "#2471a3", "#1e8449", "#af601a", "#7d3c98")


def layout(
    cmap: CombinatorialMap,
    outer: Optional[int] = None,
) -> tuple[dict[int, tuple[float, float]], int]:
    """Vertex coordinates in the unit disk, and the outer face used.

    The outer face defaults to one with the most sides; its vertices go
    on a circle and the rest solve the barycentric system.
    """
    if outer is None:
        outer = max(range(cmap.num_faces), key=lambda f: len(cmap.faces[f]))
    ring: list[int] = []
    for d in cmap.faces[outer]:
        v = cmap.tail(d)
        if v not in ring:
            ring.append(v)
    nv = cmap.num_vertices
    pos = {}
    for j, v in enumerate(ring):
        ang = math.pi / 2 + 2 * math.pi * j / len(ring)
        pos[v] = (math.cos(ang), math.sin(ang))
    inner = [v for v in range(nv) if v not in pos]
    if inner:
        index = {v: j for j, v in enumerate(inner)}
        a = np.zeros((len(inner), len(inner)))
        bx = np.zeros(len(inner))
        by = np.zeros(len(inner))
        for j, v in enumerate(inner):
            deg = 0
            for d in cmap.rotations[v]:
                u = cmap.head(d)
                if u == v:
                    continue
                deg += 1
                if u in index:
                    a[j, index[u]] -= 1.0
                else:
                    bx[j] += pos[u][0]
                    by[j] += pos[u][1]
            a[j, j] = float(deg) if deg else 1.0
        xs = np.linalg.solve(a, bx)
        ys = np.linalg.solve(a, by)
        for v, j in index.items():
            pos[v] = (float(xs[j]), float(ys[j]))
    return pos, outer


def _edge_groups(cmap: CombinatorialMap):
    plain: dict[tuple[int, int], list[int]] = {}
    loops: dict[int, list[int]] = {}
    for k in range(cmap.num_edges):
        u, v = cmap.tail(2 * k), cmap.head(2 * k)
        if u == v:
            loops.setdefault(u, []).append(k)
        else:
            plain.setdefault((min(u, v), max(u, v)), []).append(k)
    return plain, loops


def render_svg(
    graph: Union[SigmaGraph, CombinatorialMap],
    highlight: Iterable[Sequence[int]] = (),
    size: int = 520,
    outer: Optional[int] = None,
) -> str:
    """Render a map (marked or bare) to an SVG 1.1 document string.

    highlight takes groups of loops; every loop in group i is stroked
    bold in the i-th palette color.  Loops may be Loop objects or dart
    sequences.
    """
    if isinstance(graph, SigmaGraph):
        cmap = graph.cmap
        marked: Sequence[int] = graph.marked
    else:
        cmap = graph
        marked = ()
    pos, outer_face = layout(cmap, outer)
    cx = size / 2.0
    scale = size * 0.40

    def pix(p: tuple[float, float]) -> tuple[float, float]:
        return (cx + scale * p[0], cx - scale * p[1])

    edge_color: dict[int, str] = {}
    edge_bold: set[int] = set()
    for gi, group in enumerate(highlight):
        color = _PALETTE[gi % len(_PALETTE)]
        for loop in group:
            darts = loop.darts if isinstance(loop, Loop) else tuple(loop)
            for d in darts:
                k = cmap.edge_of(d)
                edge_color[k] = color
                edge_bold.add(k)

    def stroke(k: int) -> str:
        if k in edge_bold:
            return 'stroke="%s" stroke-width="3.2"' % edge_color[k]
        return 'stroke="#555" stroke-width="1.3"'

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="%d" height="%d" viewBox="0 0 %d %d">' % (size, size, size, size),
        '<rect width="100%" height="100%" fill="white"/>',
    ]

    plain, loops = _edge_groups(cmap)
    for (u, v), ks in sorted(plain.items()):
        x1, y1 = pix(pos[u])
        x2, y2 = pix(pos[v])
        n = len(ks)
        nx, ny = y2 - y1, x1 - x2
        norm = math.hypot(nx, ny) or 1.0
        nx, ny = nx / norm, ny / norm
        span = math.hypot(x2 - x1, y2 - y1)
        for j, k in enumerate(ks):
            off = (j - (n - 1) / 2.0) * min(0.35 * span, 26.0)
            if abs(off) < 1e-9:
                parts.append('<line x1="%.1f" y1="%.1f" x2="%.1f" y2="%.1f" %s fill="none"/>'
                             % (x1, y1, x2, y2, stroke(k)))
            else:
                mx, my = (x1 + x2) / 2 + nx * off, (y1 + y2) / 2 + ny * off
                parts.append('<path d="M %.1f %.1f Q %.1f %.1f %.1f %.1f" %s fill="none"/>'
                             % (x1, y1, mx, my, x2, y2, stroke(k)))
    for u, ks in sorted(loops.items()):
        x, y = pix(pos[u])
        dx, dy = x - cx, y - cx
        norm = math.hypot(dx, dy)
        if norm < 1e-9:
            dx, dy = 0.0, -1.0
        else:
            dx, dy = dx / norm, dy / norm
        for j, k in enumerate(ks):
            r = 10.0 + 8.0 * j
            parts.append('<circle cx="%.1f" cy="%.1f" r="%.1f" %s fill="none"/>'
                         % (x + dx * r, y + dy * r, r, stroke(k)))

    for v, p in sorted(pos.items()):
        x, y = pix(p)
        parts.append('<circle cx="%.1f" cy="%.1f" r="3.2" fill="#222"/>' % (x, y))

    for idx, f in enumerate(marked):
        if f == outer_face:
            x, y = 14.0, 20.0 + 16.0 * idx
        else:
            vs = [cmap.tail(d) for d in cmap.faces[f]]
            x = sum(pix(pos[v])[0] for v in vs) / len(vs)
            y = sum(pix(pos[v])[1] for v in vs) / len(vs)
        parts.append('<text x="%.1f" y="%.1f" font-family="sans-serif" '
                     'font-size="14" fill="#8e44ad">F%d</text>' % (x, y, idx + 1))

    parts.append("</svg>")
    return "\n".join(parts)
