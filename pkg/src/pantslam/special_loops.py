"""Distinguished loop families around each marked face and the signature.

For marked face i and level k there is at most one boundary loop of the
level-k region that keeps a chosen second marked face on its far side.
When the loop toward each of the two other marked faces is the same
curve, that curve separates i from both and is counted into the family
of i.  The family sizes together with the pairwise distances form the
six-entry signature of the marked graph.

Marked faces are numbered 1..3 throughout the public interface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvariantViolated, OutOfRange
from .exploration import Loop, SigmaGraph


class SigmaVector(NamedTuple):
    """Signature sextuple: three family sizes, then three distances.

    The distance entry at position i concerns the two marked faces other
    than i, so both halves permute the same way under relabeling.
    """

    m1: int
    m2: int
    m3: int
    d1: int
    d2: int
    d3: int

    @property
    def mu(self) -> tuple[int, int, int]:
        return (self.m1, self.m2, self.m3)

    @property
    def delta(self) -> tuple[int, int, int]:
        return (self.d1, self.d2, self.d3)


class NuVector(NamedTuple):
    """Slack triple: far family sizes minus the opposite distance."""

    n1: int
    n2: int
    n3: int


@dataclass(frozen=True)
class SpecialLoopFamily:
    """The nested separating loops around marked face i, innermost first."""

    i: int
    loops: tuple[Loop, ...]

    def __len__(self) -> int:
        return len(self.loops)


def loop_toward(sg: SigmaGraph, i: int, j: int, k: int) -> Loop:
    """The unique level-k loop around marked face i with face j beyond it.

    Indices i and j are 1-based and must be distinct.
    """
    if i == j or i not in (1, 2, 3) or j not in (1, 2, 3):
        raise OutOfRange("need two distinct marked indices, got %r, %r" % (i, j))
    i0, j0 = i - 1, j - 1
    dij = sg.face_distance(sg.marked[i0], sg.marked[j0])
    if not 1 <= k <= dij:
        raise OutOfRange(
            "level %d outside 1..%d for marked pair (%d, %d)" % (k, dij, i, j)
        )
    hits = []
    for loop in sg.boundary_loops(i0, k):
        if sg.marked[j0] in sg.side_away_from(loop, i0):
            hits.append(loop)
    if len(hits) != 1:
        raise InvariantViolated(
            "expected one separating loop at level %d, found %d" % (k, len(hits))
        )
    return hits[0]


def special_family(sg: SigmaGraph, i: int) -> SpecialLoopFamily:
    """Loops around marked face i separating it from both other marked faces.

    Levels are scanned upward from 1; the family ends at the first level
    where the loop toward one far face differs from the loop toward the
    other.  Divergence is permanent, so no lookahead is needed.
    """
    if i not in (1, 2, 3):
        raise OutOfRange("marked index must be 1, 2 or 3, got %r" % (i,))
    i0 = i - 1
    j1 = (i0 + 1) % 3
    j2 = (i0 + 2) % 3
    top = min(
        sg.face_distance(sg.marked[i0], sg.marked[j1]),
        sg.face_distance(sg.marked[i0], sg.marked[j2]),
    )
    out = []
    for k in range(1, top + 1):
        a = loop_toward(sg, i, j1 + 1, k)
        b = loop_toward(sg, i, j2 + 1, k)
        if a.edge_set() != b.edge_set():
            break
        out.append(a)
    return SpecialLoopFamily(i, tuple(out))


def sigma_of(sg: SigmaGraph) -> SigmaVector:
    """Six invariants of the marked graph: family sizes, then distances."""
    sizes = tuple(len(special_family(sg, i)) for i in (1, 2, 3))
    return SigmaVector(*(sizes + sg.distances()))


def depth_vector(sg: SigmaGraph) -> NuVector:
    """Interlock depth at each index, computed from the signature."""
    m1, m2, m3, d1, d2, d3 = sigma_of(sg)
    m = (m1, m2, m3)
    d = (d1, d2, d3)
    return NuVector(*(m[(i + 1) % 3] + m[(i + 2) % 3] - d[i] for i in range(3)))
