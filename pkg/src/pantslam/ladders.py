"""Marked graphs built by doubling a planar complex of square blocks.

The half complex is a triangle with three ladders of square blocks
glued to its sides, plus a triangular staircase web filling each corner
between two neighboring ladders.  Doubling it across its boundary, with
one edge per ladder left unglued and capped by a two-sided face, gives
a closed marked graph whose three marked faces are those caps.

Parameters t = (l1, l2, l3, n1, n2, n3): li is the length of ladder i,
ni the size of the web opposite ladder i, with 0 <= ni <= min of the
two neighboring lengths.
"""

from __future__ import annotations

from typing import Sequence

from .errors import NegativeParameter, OutOfRange
from .exploration import SigmaGraph
from .facecomplex import BuiltMap, FaceComplex

Params = tuple[int, int, int, int, int, int]


def validate_params(t: Sequence[int]) -> Params:
    if len(t) != 6:
        raise NegativeParameter("need six block parameters")
    l1, l2, l3, n1, n2, n3 = (int(v) for v in t)
    ls, ns = (l1, l2, l3), (n1, n2, n3)
    if any(v < 0 for v in ls) or any(v < 0 for v in ns):
        raise NegativeParameter("block parameters must be nonnegative")
    for i in range(3):
        if ns[i] > min(ls[(i + 1) % 3], ls[(i + 2) % 3]):
            raise OutOfRange(
                "web %d larger than its neighboring ladders" % (i + 1)
            )
    return (l1, l2, l3, n1, n2, n3)


def _legb(ls, j: int, m: int):
    return ("T", (j + 1) % 3) if m == ls[j] else ("b", j, m)


def _legt(ls, j: int, m: int):
    return ("T", j) if m == ls[j] else ("t", j, m)


def block_complex(t: Sequence[int]) -> tuple[FaceComplex, list]:
    """The half complex and its three to-be-spared boundary edges."""
    t = validate_params(t)
    ls, ns = t[:3], t[3:]
    fc = FaceComplex()
    fc.add_face(
        (("T", 0), ("T", 1), ("T", 2)),
        (("conn", 0), ("conn", 1), ("conn", 2)),
    )
    for j in range(3):
        for m in range(1, ls[j] + 1):
            rung = ("conn", j) if m == ls[j] else ("rung", j, m)
            fc.add_face(
                (
                    _legb(ls, j, m - 1),
                    _legb(ls, j, m),
                    _legt(ls, j, m),
                    _legt(ls, j, m - 1),
                ),
                (("bot", j, m), rung, ("top", j, m), ("rung", j, m - 1)),
            )
    for i in range(3):
        n = ns[i]
        j1, j2 = (i + 1) % 3, (i + 2) % 3

        def wv(x: int, y: int):
            if y == 0:
                return _legb(ls, j1, ls[j1] - x)
            if x == 0:
                return _legt(ls, j2, ls[j2] - y)
            return ("w", i, x, y)

        def hid(x: int, y: int):
            return ("bot", j1, ls[j1] - x + 1) if y == 0 else ("wh", i, x, y)

        def vid(x: int, y: int):
            return ("top", j2, ls[j2] - y + 1) if x == 0 else ("wv", i, x, y)

        for x in range(1, n + 1):
            for y in range(1, n + 2 - x):
                fc.add_face(
                    (wv(x - 1, y - 1), wv(x, y - 1), wv(x, y), wv(x - 1, y)),
                    (hid(x, y - 1), vid(x, y), hid(x, y), vid(x - 1, y)),
                )
    spared = [
        ("rung", j, 0) if ls[j] >= 1 else ("conn", j) for j in range(3)
    ]
    return fc, spared


def block_half_map(t: Sequence[int]) -> BuiltMap:
    """The half complex closed off with a single outer face."""
    return block_complex(t)[0].to_map()


def block_graph(t: Sequence[int]) -> SigmaGraph:
    """The doubled block complex as a marked graph."""
    fc, spared = block_complex(t)
    doubled, cap_face = fc.doubled(spared)
    built = doubled.to_map()
    if built.outer_faces:
        raise OutOfRange("doubled complex should have no boundary")
    marked = [built.face_index[cap_face[e]] for e in spared]
    return SigmaGraph(built.cmap, marked)


def block_mirror(t: Sequence[int]) -> tuple[int, ...]:
    """Dart involution of block_graph(t) exchanging the two half copies.

    Pairs the dart along each face side with the reversed dart along the
    matching side of the mirror face, and likewise across every cap.
    The result reverses orientation: it commutes with the twin map and
    conjugates the rotation system to its inverse, fixing each cap face
    setwise.
    """
    fc, spared = block_complex(t)
    doubled, cap_face = fc.doubled(spared)
    built = doubled.to_map()
    nf = fc.num_faces
    phi = [-1] * built.cmap.num_darts
    def pair(a: int, b: int) -> None:
        # darts on the mirror plane pair with themselves here
        phi[a] = b ^ 1
        phi[b ^ 1] = a
        phi[a ^ 1] = b
        phi[b] = a ^ 1

    for f in range(nf):
        n = len(fc.face(f)[0])
        for j in range(n):
            pair(built.dart_of_side[(f, j)],
                 built.dart_of_side[(nf + f, n - 1 - j)])
    for e in spared:
        g = cap_face[e]
        pair(built.dart_of_side[(g, 0)], built.dart_of_side[(g, 1)])
    return tuple(phi)


def block_signature(t: Sequence[int]) -> tuple[int, int, int, int, int, int]:
    """Loop-family sizes and face distances of block_graph(t), closed form."""
    t = validate_params(t)
    ls, ns = t[:3], t[3:]
    ms = []
    ds = []
    for i in range(3):
        n1, n2 = ns[(i + 1) % 3], ns[(i + 2) % 3]
        ms.append(1 + ls[i] + max(0, (ns[i] - max(n1, n2)) // 2))
        ds.append(1 + ls[(i + 1) % 3] + ls[(i + 2) % 3] - ns[i])
    return (ms[0], ms[1], ms[2], ds[0], ds[1], ds[2])
