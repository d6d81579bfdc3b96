import random

import networkx as nx
import pytest

from chordplanar import graphs
from chordplanar.oracle import (OracleError, SmallGraph, census, is_biconnected, is_chordal,
                                is_chordal_mcs, is_connected, is_planar, vertex_pairs)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list)
    return h


def test_chordality_examples():
    assert is_chordal(SmallGraph.complete(4))
    assert not is_chordal(SmallGraph.cycle(4))
    assert not is_chordal(SmallGraph.cycle(5))
    assert is_chordal(SmallGraph.cycle(3))


def test_planarity_examples():
    k5 = SmallGraph.complete(5)
    assert not is_planar(k5)
    assert is_planar(SmallGraph.complete(4))
    assert is_planar(SmallGraph(5, k5.edges & ~1))
    k33 = SmallGraph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert not is_planar(k33)


def test_subdivided_kuratowski_graphs():
    # K_{3,3} with one edge subdivided, and K_5 with one edge subdivided
    edges = [(a, b) for a in range(3) for b in range(3, 6) if (a, b) != (0, 3)]
    assert not is_planar(SmallGraph.from_edges(7, edges + [(0, 6), (6, 3)]))
    edges = [(a, b) for a in range(5) for b in range(a + 1, 5) if (a, b) != (0, 1)]
    assert not is_planar(SmallGraph.from_edges(6, edges + [(0, 5), (5, 1)]))


def test_against_networkx_random():
    rng = random.Random(20240)
    for _ in range(1500):
        n = rng.randint(1, 8)
        p = rng.uniform(0.2, 0.7)
        mask = sum(1 << k for k in range(len(vertex_pairs(n))) if rng.random() < p)
        g = SmallGraph(n, mask)
        h = to_nx(g)
        assert is_planar(g) == nx.check_planarity(h)[0]
        assert is_chordal(g) == nx.is_chordal(h)


def test_mcs_agrees_with_elimination():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(1, 8)
        g = SmallGraph(n, rng.getrandbits(len(vertex_pairs(n))) if n > 1 else 0)
        assert is_chordal(g) == is_chordal_mcs(g)


def test_connectivity_conventions():
    assert is_biconnected(SmallGraph.from_edges(2, [(0, 1)]))
    assert not is_biconnected(SmallGraph.from_edges(3, [(0, 1), (1, 2)]))
    assert is_biconnected(SmallGraph.cycle(3))
    assert not is_connected(SmallGraph(2, 0))


@pytest.mark.parametrize("n, expected", [
    (4, (61, 35, 7)),
    (5, (821, 540, 110)),
])
def test_census_small(n, expected):
    c = census(n)
    assert (c.all, c.connected, c.two_connected) == expected


def test_census_triangulations():
    assert census(5).triangulations == 10
    assert census(5).three_connected == 10


def test_census_refuses_large():
    with pytest.raises(OracleError):
        census(7)


def test_small_graph_validation():
    with pytest.raises(OracleError):
        SmallGraph(9, 0)
    with pytest.raises(OracleError):
        SmallGraph(3, 1 << 3)
    with pytest.raises(OracleError):
        SmallGraph.from_edges(3, [(1, 1)])


def test_census_matches_series():
    n = 6
    g = graphs.egf_sequence("all", n)
    c = graphs.egf_sequence("connected", n)
    b = graphs.egf_sequence("2conn", n)
    u = graphs.egf_sequence("triangulations", n)
    for k in range(1, n + 1):
        cen = census(k)
        assert (cen.all, cen.connected, cen.two_connected) == (g[k], c[k], b[k])
        if k >= 4:
            assert cen.three_connected == graphs.count_3connected(k)
            assert cen.triangulations == u[k]
