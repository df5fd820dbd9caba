"""Seeded random planar maps for randomized testing.

Maps grow from a single self-loop by local surgeries on the rotation
system; every surgery preserves planarity, so each intermediate map
stays a valid sphere map.  The map is rebuilt and revalidated after
every step.
"""

from __future__ import annotations

from random import Random
from typing import Optional, Union

from .combmap import CombinatorialMap
from .errors import OutOfRange
from .exploration import SigmaGraph

__all__ = [
    "initial_map",
    "random_map",
    "random_sigma_graph",
    "delete_edge",
    "non_bridge_edges",
]


def initial_map() -> CombinatorialMap:
    """One vertex carrying one self-loop: two faces."""
    return CombinatorialMap([[0, 1]])


def _locate(rots: list[list[int]], d: int) -> tuple[int, int]:
    for v, rot in enumerate(rots):
        for p, x in enumerate(rot):
            if x == d:
                return v, p
    raise AssertionError("dart %d missing" % d)


def _subdivide(rots: list[list[int]], k: int) -> None:
    """Split edge k with a degree-2 vertex; face count unchanged."""
    m = sum(len(r) for r in rots) // 2
    v, p = _locate(rots, 2 * k + 1)
    rots[v][p] = 2 * m + 1
    rots.append([2 * k + 1, 2 * m])


def _double(rots: list[list[int]], k: int) -> None:
    """Add an edge parallel to edge k, cutting off a two-sided face."""
    m = sum(len(r) for r in rots) // 2
    u, p = _locate(rots, 2 * k)
    rots[u].insert(p + 1, 2 * m)
    v, q = _locate(rots, 2 * k + 1)
    rots[v].insert(q, 2 * m + 1)


def _loop(rots: list[list[int]], d: int) -> None:
    """Hang a little loop in the corner after dart d; adds one face."""
    m = sum(len(r) for r in rots) // 2
    u, p = _locate(rots, d)
    rots[u][p + 1:p + 1] = [2 * m, 2 * m + 1]


def _chord(rots: list[list[int]], a: int, b: int) -> None:
    """Join the corners after darts a and b of one face; adds one face."""
    m = sum(len(r) for r in rots) // 2
    u, p = _locate(rots, a ^ 1)
    rots[u].insert(p + 1, 2 * m)
    v, q = _locate(rots, b ^ 1)
    rots[v].insert(q + 1, 2 * m + 1)


def _pendant(rots: list[list[int]], a: int) -> None:
    """Grow a leaf edge out of the corner after dart a; faces unchanged."""
    m = sum(len(r) for r in rots) // 2
    u, p = _locate(rots, a ^ 1)
    rots[u].insert(p + 1, 2 * m)
    rots.append([2 * m + 1])


def random_map(
    rng: Union[Random, int],
    num_faces: int,
    neutral_prob: float = 0.3,
) -> CombinatorialMap:
    """Grow a random sphere map with exactly num_faces faces.

    Doubling, loop and chord surgeries each add one face; subdivision and
    pendant edges reshape without adding faces and are mixed in with the
    given probability.
    """
    if isinstance(rng, int):
        rng = Random(rng)
    if num_faces < 2:
        raise OutOfRange("a sphere map has at least 2 faces")
    cm = initial_map()
    steps = 0
    while cm.num_faces < num_faces:
        rots = [list(r) for r in cm.rotations]
        steps += 1
        nd = cm.num_darts
        if steps <= 500 and rng.random() < neutral_prob:
            if rng.random() < 0.5:
                _subdivide(rots, rng.randrange(cm.num_edges))
            else:
                _pendant(rots, rng.randrange(nd))
        else:
            pick = rng.random()
            if pick < 0.4:
                _double(rots, rng.randrange(cm.num_edges))
            elif pick < 0.7:
                _loop(rots, rng.randrange(nd))
            else:
                face = cm.faces[rng.randrange(cm.num_faces)]
                if len(face) < 2:
                    _loop(rots, rng.randrange(nd))
                else:
                    a, b = rng.sample(face, 2)
                    _chord(rots, a, b)
        cm = CombinatorialMap(rots)
    return cm


def random_sigma_graph(
    rng: Union[Random, int],
    max_faces: int = 12,
    min_faces: int = 3,
) -> SigmaGraph:
    """A random sphere map with three random distinct marked faces."""
    if isinstance(rng, int):
        rng = Random(rng)
    if min_faces < 3:
        raise OutOfRange("marking needs at least 3 faces")
    nf = rng.randint(min_faces, max_faces)
    cm = random_map(rng, nf)
    marked = tuple(rng.sample(range(cm.num_faces), 3))
    return SigmaGraph(cm, marked)


def non_bridge_edges(cmap: CombinatorialMap) -> list[int]:
    """Edges with distinct faces on their two sides; safe to delete."""
    return [k for k in range(cmap.num_edges)
            if cmap.face_of(2 * k) != cmap.face_of(2 * k + 1)]


def delete_edge(cmap: CombinatorialMap, k: int) -> CombinatorialMap:
    """Remove non-bridge edge k, renumbering the higher darts down by two.

    Vertices left with no darts are dropped.  Bridges are refused since
    removing one disconnects the map.
    """
    if not 0 <= k < cmap.num_edges:
        raise OutOfRange("edge %d out of range" % k)
    if cmap.face_of(2 * k) == cmap.face_of(2 * k + 1):
        raise OutOfRange("edge %d is a bridge" % k)
    gone = (2 * k, 2 * k + 1)
    rots = []
    for rot in cmap.rotations:
        new = [d - 2 if d > 2 * k + 1 else d for d in rot if d not in gone]
        if new:
            rots.append(new)
    return CombinatorialMap(rots)
