"""Nested separating loop families and the six-number signature."""

import pytest

from pantslam.errors import OutOfRange
from pantslam.special_loops import (
    NuVector,
    SigmaVector,
    depth_vector,
    loop_toward,
    sigma_of,
    special_family,
)

from conftest import theta_graph


def test_sigma_vector_views():
    v = SigmaVector(4, 1, 1, 1, 4, 5)
    assert v.mu == (4, 1, 1)
    assert v.delta == (1, 4, 5)
    assert tuple(v) == (4, 1, 1, 1, 4, 5)


def test_theta_signature():
    assert tuple(sigma_of(theta_graph())) == (1, 1, 1, 1, 1, 1)


def test_crossed_rings_signature(crossed_rings):
    assert tuple(sigma_of(crossed_rings)) == (4, 1, 1, 1, 4, 5)


def test_triple_ring_signature(triple_ring):
    assert tuple(sigma_of(triple_ring)) == (1, 1, 1, 2, 2, 2)


def test_theta_loop_toward_is_shared():
    sg = theta_graph()
    a = loop_toward(sg, 1, 2, 1)
    b = loop_toward(sg, 1, 3, 1)
    assert a.darts == (1, 4)
    assert a.edge_set() == b.edge_set()


def test_loop_toward_needs_distinct_indices():
    with pytest.raises(OutOfRange):
        loop_toward(theta_graph(), 1, 1, 1)


def test_loop_toward_level_bounds():
    sg = theta_graph()
    with pytest.raises(OutOfRange):
        loop_toward(sg, 1, 2, 0)
    with pytest.raises(OutOfRange):
        loop_toward(sg, 1, 2, 2)


def test_crossed_rings_shared_prefix(crossed_rings):
    # the four nested loops around the first marked face agree whichever
    # far face is used as the target
    for k in range(1, 5):
        a = loop_toward(crossed_rings, 1, 2, k)
        b = loop_toward(crossed_rings, 1, 3, k)
        assert a.edge_set() == b.edge_set()


def test_theta_families():
    sg = theta_graph()
    for i in (1, 2, 3):
        fam = special_family(sg, i)
        assert fam.i == i
        assert len(fam.loops) == 1
    assert special_family(sg, 2).loops[0].darts == (0, 3)


def test_crossed_rings_family_sizes(crossed_rings):
    sizes = tuple(len(special_family(crossed_rings, i).loops) for i in (1, 2, 3))
    assert sizes == (4, 1, 1)


def test_family_loops_are_nested_and_disjoint(crossed_rings):
    fam = special_family(crossed_rings, 1)
    edge_sets = [lp.edge_set() for lp in fam.loops]
    vert_sets = [set(lp.vertices(crossed_rings.cmap)) for lp in fam.loops]
    for a in range(len(fam.loops)):
        for b in range(a + 1, len(fam.loops)):
            assert edge_sets[a].isdisjoint(edge_sets[b])
            assert not (vert_sets[a] & vert_sets[b])


def test_depth_vectors():
    assert tuple(depth_vector(theta_graph())) == (1, 1, 1)


def test_depth_vector_crossed(crossed_rings):
    assert tuple(depth_vector(crossed_rings)) == (1, 1, 0)


def test_depth_vector_triple(triple_ring):
    assert tuple(depth_vector(triple_ring)) == (0, 0, 0)


def test_depth_matches_signature_arithmetic(triple_ring):
    m1, m2, m3, d1, d2, d3 = sigma_of(triple_ring)
    n = NuVector(m2 + m3 - d1, m3 + m1 - d2, m1 + m2 - d3)
    assert depth_vector(triple_ring) == n
