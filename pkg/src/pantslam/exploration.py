"""Marked sphere maps and the layered exploration of their face set.

A marked graph is a sphere map together with three distinct marked
faces.  Distance between faces counts vertex-sharing hops.  For a
marked face m and a level k >= 1, the region of level k is the set of
faces within distance k-1 of m; its boundary is walked with a
tightest-turn rule that always hugs the region on the left.  Each
resulting closed walk is required to be vertex-simple, and a simple
closed curve on the sphere has exactly two sides, which is what the
classification routines exploit.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .combmap import CombinatorialMap
from .errors import (
    BadFaceIndex,
    DuplicateMarkedFace,
    EmptyLayer,
    InvariantViolated,
    NotClosed,
    NotSimple,
    OutOfRange,
)


class Loop:
    """A closed walk given by its dart sequence, starting at the least dart."""

    __slots__ = ("darts",)

    def __init__(self, darts: Sequence[int]):
        darts = tuple(darts)
        if not darts:
            raise InvariantViolated("empty loop")
        i = darts.index(min(darts))
        self.darts = darts[i:] + darts[:i]

    def __len__(self) -> int:
        return len(self.darts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Loop) and self.darts == other.darts

    def __hash__(self) -> int:
        return hash(self.darts)

    def __repr__(self) -> str:
        return "Loop%r" % (self.darts,)

    def edge_set(self) -> frozenset[int]:
        return frozenset(d >> 1 for d in self.darts)

    def vertices(self, cmap: CombinatorialMap) -> tuple[int, ...]:
        return tuple(cmap.tail(d) for d in self.darts)


def loop_sides(
    cmap: CombinatorialMap, loop: Loop
) -> tuple[frozenset[int], frozenset[int]]:
    """Split all faces into the left and right side of a simple loop.

    Faces are flooded across every edge not used by the loop.  The two
    floods must exactly partition the face set.
    """
    blocked = loop.edge_set()
    by_edge = [[] for _ in range(cmap.num_faces)]
    for e in range(cmap.num_edges):
        if e in blocked:
            continue
        f0 = cmap.face_of(2 * e)
        f1 = cmap.face_of(2 * e + 1)
        by_edge[f0].append(f1)
        by_edge[f1].append(f0)

    def flood(seed: int) -> frozenset[int]:
        seen = {seed}
        queue = deque([seed])
        while queue:
            f = queue.popleft()
            for g in by_edge[f]:
                if g not in seen:
                    seen.add(g)
                    queue.append(g)
        return frozenset(seen)

    d0 = loop.darts[0]
    left = flood(cmap.left_face(d0))
    right = flood(cmap.face_of(d0))
    if left & right or len(left) + len(right) != cmap.num_faces:
        raise InvariantViolated("loop does not split the sphere in two")
    return left, right


class SigmaGraph:
    """Sphere map with an ordered triple of distinct marked faces."""

    __slots__ = ("cmap", "marked", "_adj", "_dist_cache")

    def __init__(self, cmap: CombinatorialMap, marked: Sequence[int]):
        marked = tuple(marked)
        if len(marked) != 3:
            raise DuplicateMarkedFace("need exactly three marked faces")
        for f in marked:
            if not 0 <= f < cmap.num_faces:
                raise BadFaceIndex(f)
        if len(set(marked)) != 3:
            raise DuplicateMarkedFace(marked)
        self.cmap = cmap
        self.marked = marked
        self._adj: Optional[tuple[frozenset[int], ...]] = None
        self._dist_cache: dict[int, tuple[int, ...]] = {}

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        d = self.cmap.to_dict()
        d["marked_faces"] = list(self.marked)
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "SigmaGraph":
        return cls(CombinatorialMap(data["vertices"]), data["marked_faces"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "SigmaGraph":
        return cls.from_dict(json.loads(text))

    # -- face distances ---------------------------------------------------

    def _face_adjacency(self) -> tuple[frozenset[int], ...]:
        if self._adj is None:
            sets: list[set[int]] = [set() for _ in range(self.cmap.num_faces)]
            for v in range(self.cmap.num_vertices):
                here = self.cmap.faces_at(v)
                for f in here:
                    sets[f].update(here)
            for f, s in enumerate(sets):
                s.discard(f)
            self._adj = tuple(frozenset(s) for s in sets)
        return self._adj

    def _dist_from(self, src: int) -> tuple[int, ...]:
        cached = self._dist_cache.get(src)
        if cached is not None:
            return cached
        adj = self._face_adjacency()
        dist = [-1] * self.cmap.num_faces
        dist[src] = 0
        queue = deque([src])
        while queue:
            f = queue.popleft()
            for g in adj[f]:
                if dist[g] < 0:
                    dist[g] = dist[f] + 1
                    queue.append(g)
        out = tuple(dist)
        self._dist_cache[src] = out
        return out

    def face_distance(self, f: int, g: int) -> int:
        if not 0 <= f < self.cmap.num_faces:
            raise BadFaceIndex(f)
        if not 0 <= g < self.cmap.num_faces:
            raise BadFaceIndex(g)
        return self._dist_from(f)[g]

    def distances(self) -> tuple[int, int, int]:
        """Pairwise marked-face distances, entry i facing marked face i."""
        m = self.marked
        return (
            self.face_distance(m[1], m[2]),
            self.face_distance(m[2], m[0]),
            self.face_distance(m[0], m[1]),
        )

    # -- layered regions and their boundary walks --------------------------

    def region(self, i: int, k: int) -> frozenset[int]:
        """Faces within distance k-1 of marked face i."""
        if i not in (0, 1, 2):
            raise BadFaceIndex(i)
        if k < 1:
            raise OutOfRange("level must be at least 1, got %d" % k)
        dist = self._dist_from(self.marked[i])
        return frozenset(f for f, d in enumerate(dist) if d <= k - 1)

    def boundary_darts(self, i: int, k: int) -> frozenset[int]:
        reg = self.region(i, k)
        cm = self.cmap
        out = frozenset(
            d
            for d in range(cm.num_darts)
            if cm.left_face(d) in reg and cm.face_of(d) not in reg
        )
        if not out:
            raise EmptyLayer("level %d around marked face %d" % (k, i))
        return out

    def boundary_loops(self, i: int, k: int) -> tuple[Loop, ...]:
        """Boundary walks of the level-k region, each keeping it on the left.

        The walk follows the rim of a slight thickening of the region.  At
        the head of a dart it scans counterclockwise from the reversed dart
        and exits along the first dart that again has the region on its
        left, thereby sweeping past one whole fan of outside corners.  Walks
        around distinct outside pockets stay distinct, and every walk must
        be vertex-simple.
        """
        reg = self.region(i, k)
        cm = self.cmap
        darts = self.boundary_darts(i, k)

        def successor(d: int) -> int:
            x = d ^ 1
            for _ in range(cm.degree(cm.head(d)) - 1):
                x = cm.rotation_next(x)
                if cm.left_face(x) in reg:
                    return x
            raise InvariantViolated("no exit dart at vertex %d" % cm.head(d))

        loops = []
        visited: set[int] = set()
        for start in sorted(darts):
            if start in visited:
                continue
            walk = []
            d = start
            while True:
                if d in visited:
                    raise InvariantViolated("boundary successor not injective")
                visited.add(d)
                walk.append(d)
                d = successor(d)
                if d == start:
                    break
            loop = Loop(walk)
            tails = loop.vertices(cm)
            if len(set(tails)) != len(tails):
                raise NotSimple("boundary walk revisits a vertex: %r" % (loop,))
            loops.append(loop)
        if visited != darts:
            raise InvariantViolated("boundary walks missed some darts")
        loops.sort(key=lambda lo: lo.darts[0])
        return tuple(loops)

    # -- classification -----------------------------------------------------

    def classify(self, loop: Loop) -> Optional[int]:
        """Which marked face a simple loop encloses alone, if any.

        Returns the index (0..2) of the marked face that sits on one side
        by itself, or None when one side holds no marked face at all, in
        which case the loop can be shrunk to a point without meeting any.
        """
        left, right = loop_sides(self.cmap, loop)
        on_left = [j for j, m in enumerate(self.marked) if m in left]
        if not on_left or len(on_left) == 3:
            return None
        if len(on_left) == 1:
            return on_left[0]
        return next(j for j in (0, 1, 2) if j not in on_left)

    def side_away_from(self, loop: Loop, i: int) -> frozenset[int]:
        """Faces on the side of the loop not containing marked face i."""
        left, right = loop_sides(self.cmap, loop)
        return right if self.marked[i] in left else left


# -- public interface, marked indices numbered 1..3 -------------------------


@dataclass(frozen=True)
class DistanceMatrix:
    """All pairwise face distances of a marked graph."""

    dist: tuple[tuple[int, ...], ...]

    def between(self, f: int, g: int) -> int:
        return self.dist[f][g]


@dataclass(frozen=True)
class LayerSet:
    """The faces at distance exactly k from marked face i."""

    i: int
    k: int
    faces: frozenset[int]


@dataclass(frozen=True)
class BoundaryLoopSet:
    """The boundary walks of the level-k region around marked face i."""

    i: int
    k: int
    loops: tuple[Loop, ...]


def _marked_index(i: int) -> int:
    if i not in (1, 2, 3):
        raise OutOfRange("marked index must be 1, 2 or 3, got %r" % (i,))
    return i - 1


def make_sigma_graph(cmap: CombinatorialMap, f1: int, f2: int, f3: int) -> SigmaGraph:
    """A marked graph from a sphere map and three distinct face indices."""
    return SigmaGraph(cmap, (f1, f2, f3))


def distance_matrix(sg: SigmaGraph) -> DistanceMatrix:
    nf = sg.cmap.num_faces
    return DistanceMatrix(tuple(sg._dist_from(f) for f in range(nf)))


def layer(sg: SigmaGraph, i: int, k: int) -> LayerSet:
    """Faces at distance exactly k from marked face i (k >= 0)."""
    src = sg.marked[_marked_index(i)]
    if k < 0:
        raise OutOfRange("layer radius must be nonnegative, got %d" % k)
    dist = sg._dist_from(src)
    return LayerSet(i, k, frozenset(f for f, d in enumerate(dist) if d == k))


def boundary_loops(sg: SigmaGraph, i: int, k: int) -> BoundaryLoopSet:
    """Boundary of the faces within distance k-1 of marked face i, as loops."""
    return BoundaryLoopSet(i, k, sg.boundary_loops(_marked_index(i), k))


def hemispheres(
    sg: SigmaGraph, loop: Loop
) -> tuple[frozenset[int], frozenset[int]]:
    """The two face sets separated by a vertex-simple closed walk."""
    cm = sg.cmap
    darts = loop.darts
    for t, d in enumerate(darts):
        if cm.head(d) != cm.tail(darts[(t + 1) % len(darts)]):
            raise NotClosed("dart walk does not chain up at position %d" % t)
    tails = loop.vertices(cm)
    if len(set(tails)) != len(tails):
        raise NotSimple("walk revisits a vertex: %r" % (loop,))
    return loop_sides(cm, loop)


def classify_loop(sg: SigmaGraph, loop: Loop) -> Optional[int]:
    """1-based index of the marked face the loop isolates, None if contractible."""
    j = sg.classify(loop)
    return None if j is None else j + 1
