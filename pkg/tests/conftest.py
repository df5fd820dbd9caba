"""Shared graph builders and the fixed test corpus.

The corpus is the union of the theta graph, two hand-picked ring
arrangements, every doubled-ladder tuple with small leg lengths, and
every valid ring-family spec with counts up to three.
"""

from itertools import product

import pytest

from pantslam.chords import family_graph
from pantslam.combmap import CombinatorialMap
from pantslam.exploration import SigmaGraph
from pantslam.ladders import block_graph

THETA_ROTATIONS = ((0, 2, 4), (5, 3, 1))

# three concentric families of sizes 4, 1, 1 with two crossing pairs;
# its signature is (4, 1, 1, 1, 4, 5)
CROSSED_RINGS_SPEC = ((4, 1, 1), (1, 1, 0), ())

# one ring around each marked face, no crossings; signature (1, 1, 1, 2, 2, 2)
TRIPLE_RING_SPEC = ((1, 1, 1), (0, 0, 0), ())


def theta_graph() -> SigmaGraph:
    cmap = CombinatorialMap([list(r) for r in THETA_ROTATIONS])
    return SigmaGraph(cmap, (0, 1, 2))


def block_corpus(limit: int = 2) -> list[tuple[int, ...]]:
    """All ladder tuples with leg lengths <= limit and admissible rungs."""
    out = []
    for ls in product(range(limit + 1), repeat=3):
        for ns in product(range(limit + 1), repeat=3):
            if all(ns[i] <= min(ls[(i + 1) % 3], ls[(i + 2) % 3]) for i in range(3)):
                out.append(ls + ns)
    return out


def family_corpus(limit: int = 3) -> list[tuple]:
    """All valid ring-family specs with counts <= limit.

    Tangent caps are enumerated only on crossing-free specs, one entry
    per nonempty cap subset whose capped families are nonempty.
    """
    out = []
    for counts in product(range(limit + 1), repeat=3):
        if sum(1 for c in counts if c == 0) > 1:
            continue
        maxq = [min(counts[i], counts[(i + 1) % 3]) for i in range(3)]
        for depths in product(range(limit + 1), repeat=3):
            if not all(depths[(i + 2) % 3] <= maxq[i] for i in range(3)):
                continue
            out.append((counts, depths, ()))
            if all(d == 0 for d in depths):
                for caps in product((0, 1), repeat=3):
                    idx = tuple(i for i, b in enumerate(caps) if b)
                    if idx and all(counts[i] >= 1 for i in idx):
                        out.append((counts, depths, idx))
    return out


def corpus_jobs(block_limit: int = 2, family_limit: int = 3) -> list[tuple]:
    """The full corpus as (kind, params) pairs, deduplicated."""
    jobs = [("theta", None)]
    seen = set()
    for spec in (CROSSED_RINGS_SPEC, TRIPLE_RING_SPEC):
        jobs.append(("family", spec))
        seen.add(spec)
    for t in block_corpus(block_limit):
        jobs.append(("block", t))
    for spec in family_corpus(family_limit):
        if spec not in seen:
            seen.add(spec)
            jobs.append(("family", spec))
    return jobs


def build_corpus_graph(kind: str, params) -> SigmaGraph:
    if kind == "theta":
        return theta_graph()
    if kind == "family":
        return family_graph(*params)
    if kind == "block":
        return block_graph(params)
    raise ValueError("unknown corpus kind %r" % kind)


@pytest.fixture
def theta() -> SigmaGraph:
    return theta_graph()


@pytest.fixture
def crossed_rings() -> SigmaGraph:
    return family_graph(*CROSSED_RINGS_SPEC)


@pytest.fixture
def triple_ring() -> SigmaGraph:
    return family_graph(*TRIPLE_RING_SPEC)
