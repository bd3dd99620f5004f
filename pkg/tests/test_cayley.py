"""Cayley graph construction, BFS statistics, srg detection, serialization."""

import math

import pytest

from cayleyx import (
    AbelianGroup,
    CayleyGraph,
    ConnectionSet,
    DisconnectedGraphError,
    InvariantError,
    cyclic,
    theorem33_set,
    polar_trace_set,
)

# 16-vertex product-set fixture: vertex labels 1..16 mapped onto Z_4 x Z_4
# coordinates, with the adjacency lists recorded independently by hand.
LABEL_TO_COORD = {
    1: (0, 1), 2: (0, 2), 3: (0, 3), 4: (1, 0), 5: (1, 1), 6: (1, 2),
    7: (1, 3), 8: (2, 0), 9: (2, 1), 10: (2, 2), 11: (2, 3), 12: (3, 0),
    13: (3, 1), 14: (3, 2), 15: (3, 3), 16: (0, 0),
}
NEIGHBOR_TABLE = {
    1: {3, 7, 8, 9, 10, 15}, 2: {4, 9, 10, 11, 12, 16}, 3: {1, 5, 8, 10, 11, 13},
    4: {2, 6, 10, 12, 13, 15}, 5: {3, 7, 11, 12, 13, 14}, 6: {4, 8, 13, 14, 15, 16},
    7: {1, 5, 9, 12, 14, 15}, 8: {1, 3, 6, 10, 14, 16}, 9: {1, 2, 7, 11, 15, 16},
    10: {1, 2, 3, 4, 8, 12}, 11: {2, 3, 5, 9, 13, 16}, 12: {2, 4, 5, 7, 10, 14},
    13: {3, 4, 5, 6, 11, 15}, 14: {5, 6, 7, 8, 12, 16}, 15: {1, 4, 6, 7, 9, 13},
    16: {2, 6, 8, 9, 11, 14},
}


def _circulant(n, C):
    return CayleyGraph.build(cyclic(n), [(c,) for c in C])


def test_connection_set_invariants():
    g = cyclic(10)
    with pytest.raises(InvariantError):
        ConnectionSet(g, frozenset())
    with pytest.raises(InvariantError):
        ConnectionSet(g, frozenset({(0,), (1,), (9,)}))
    with pytest.raises(InvariantError):
        ConnectionSet(g, frozenset({(1,), (2,)}))  # not symmetric
    cs = ConnectionSet(g, frozenset({(1,), (9,), (5,)}))
    assert len(cs) == 3


def test_regularity_and_neighbors():
    graph = _circulant(8, [1, 7, 4])
    assert graph.n == 8 and graph.k == 3
    assert set(graph.neighbors((0,))) == {(1,), (7,), (4,)}
    A = graph.adjacency_matrix()
    assert (A == A.T).all()
    assert A.sum() == graph.n * graph.k
    assert A.trace() == 0


def test_components_and_diameter():
    graph = _circulant(20, [4, 8, 12, 16])
    st = graph.stats()
    assert st.component_count == 4
    assert st.diameter == math.inf
    assert not graph.is_connected()
    cycle = _circulant(10, [1, 9])
    assert cycle.stats() == type(cycle.stats())(1, True, 5)


def test_bipartite_detection():
    assert _circulant(20, [2, 6, 14, 18]).is_bipartite()
    # odd cycle is not bipartite, even cycle is
    assert not _circulant(5, [1, 4]).is_bipartite()
    assert _circulant(6, [1, 5]).is_bipartite()


def test_common_neighbors_and_srg():
    graph = theorem33_set(4, 4).graph
    assert graph.srg_check() == (16, 6, 2, 2)
    u, v = (0, 0), (0, 2)  # adjacent pair
    assert graph.common_neighbors(u, v) == 2


def test_srg_complete_graph():
    complete = _circulant(5, [1, 2, 3, 4])
    assert complete.srg_check() == (5, 4, 3, 0)


def test_srg_none_for_plain_cycle():
    assert _circulant(8, [1, 7]).srg_check() is None


def test_srg_requires_connected():
    with pytest.raises(DisconnectedGraphError):
        _circulant(20, [4, 8, 12, 16]).srg_check()


def test_fixture_adjacency_table():
    graph = theorem33_set(4, 4).graph
    coord_to_label = {v: k for k, v in LABEL_TO_COORD.items()}
    for label, want in NEIGHBOR_TABLE.items():
        got = {coord_to_label[w] for w in graph.neighbors(LABEL_TO_COORD[label])}
        assert got == want


def test_polar_fixture_diameter():
    rep = polar_trace_set(2)
    assert rep.stats.diameter == 4
    assert rep.stats.bipartite


def test_json_roundtrip_identical():
    g = AbelianGroup([4, 5])
    graph = CayleyGraph.build(g, [(1, 0), (3, 0), (0, 2), (0, 3)])
    back = CayleyGraph.from_json(graph.to_json())
    assert back.to_json_str() == graph.to_json_str()
    assert back.connection.elements == graph.connection.elements


def test_from_json_validates():
    with pytest.raises(InvariantError):
        CayleyGraph.from_json({"factors": [10], "connection_set": [[1], [2]]})


def test_dot_export():
    dot = _circulant(4, [1, 3]).to_dot()
    assert dot.startswith("graph cayley {")
    assert dot.count(" -- ") == 4  # 4-cycle has 4 edges
    assert 'v0 [label="(0)"]' in dot
