"""Smoke tests for the python bindings, cross-checked against networkx."""

import networkx as nx
import pytest

import lampack


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_graph_basics():
    g = lampack.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.n == 4
    assert g.edge_count() == 4
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)
    assert g.neighbors(0) == [1, 3]


def test_graph6_roundtrip_matches_networkx():
    for record in ["@", "C~", "D?{", "EhEG", "H{O__cA"]:
        g = lampack.parse_graph6(record)
        ref = nx.from_graph6_bytes(record.encode())
        assert g.n == ref.number_of_nodes()
        assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in ref.edges())
        assert lampack.emit_graph6(g) == record
    with pytest.raises(ValueError):
        lampack.parse_graph6("!!")


def test_structure_matches_networkx():
    for seed in range(5):
        g = lampack.sample_cubic(12, seed)
        ref = to_nx(g)
        assert lampack.is_connected(g) == nx.is_connected(ref)
        if lampack.is_connected(g):
            assert lampack.vertex_connectivity(g) == nx.node_connectivity(ref)
        assert lampack.is_cubic(g)
        expected = sorted(
            tuple(sorted(t)) for t in nx.enumerate_all_cliques(ref) if len(t) == 3
        )
        assert sorted(tuple(t) for t in lampack.triangles(g)) == expected


def test_packing_and_factor():
    c6 = lampack.parse_graph6("EhEG")
    packing = lampack.max_packing(c6)
    assert len(packing) == 2
    assert lampack.has_factor(c6)
    assert lampack.lambda_number(c6) == 2

    net = lampack.gen_net()
    assert not lampack.has_factor(net)
    assert lampack.lambda_number(net) == 1


def test_constraints():
    c6 = lampack.parse_graph6("EhEG")
    packing = lampack.max_packing(c6, required_edge=(2, 3))
    assert any((2, 3) in ((a, b), (b, a), (b, c), (c, b)) for a, b, c in packing)
    assert lampack.max_packing(c6, deleted_vertices=[0]) is not None
    with pytest.raises(ValueError):
        lampack.max_packing(c6, required_edge=(0, 2))  # not an edge


def test_families_and_recognizers():
    a = lampack.gen_class_A(2)
    assert a.n == 12
    assert lampack.is_class_A(a)
    assert not lampack.has_factor(a)

    h, t = lampack.gen_H()
    assert h.n == 9 and len(t) == 3

    rg, a_edge, b_edge = lampack.gen_R(4, 4)
    assert not lampack.has_factor(rg, required_edge=tuple(a_edge))

    qg, e = lampack.gen_Q(5, 5)
    assert not lampack.has_factor(qg, required_edge=tuple(e))


def test_blowup_and_checks():
    k4 = lampack.parse_graph6("C~")
    blown = lampack.triangle_blowup(k4)
    assert blown.n == 12
    base = lampack.recognize_blowup(blown)
    assert base is not None and base.n == 4
    assert lampack.recognize_blowup(k4) is None

    assert "T2_1" in lampack.all_theorem_ids()
    verdict = lampack.check_theorem("B1_1", k4)
    assert verdict["outcome"] == "HOLDS"
    assert lampack.check_theorem("T2_8", k4)["outcome"] == "NOT_APPLICABLE"


def test_blocks():
    net = lampack.gen_net()
    block_sets, cuts, eb = lampack.blocks(net)
    assert len(block_sets) == 4
    assert eb == 3
    assert cuts == [0, 1, 2]
