import pytest
from hypothesis import given, settings

from bellstir import graphs as gr
from bellstir.colour_graphs import build
from bellstir.constructions import (
    CGraphDecomposition,
    ConstructionError,
    b3_tree_cycle,
    c_graph_cycle_through_edge,
    dominating_circuit,
    line_graph_cycle,
    readings,
    s3_path_with_endpoints,
    s3_tree_ham_path,
    s4_tree_cycle,
    singleton_arc_is_contiguous,
    sk_tree_cycle,
    stirling_base_cycle,
)
from bellstir.constructions.trees import STORED_PATHS
from bellstir.oracle import check_sequence, find_hamilton_cycle
from bellstir.partitions import STIRLING, canonical, stirling_number_of

from conftest import trees

SPIDER = gr.Graph.from_edges(5, [(0, 2), (1, 2), (2, 3), (3, 4)])


def sides(t):
    a, b = gr.bipartition(t)
    return frozenset(a), frozenset(b)


def test_p4_path_is_the_highlighted_one():
    cert = s3_tree_ham_path(gr.path(4))
    assert cert.partitions() == [
        canonical([[0], [2], [1, 3]]),
        canonical([[0, 3], [1], [2]]),
        canonical([[0, 2], [1], [3]]),
    ]


def test_p3_gives_one_vertex():
    assert s3_tree_ham_path(gr.path(3)).partitions() == [((0,), (1,), (2,))]


def test_claw_plus_one_has_a_path_but_no_cycle():
    cert = s3_tree_ham_path(gr.star(4))
    assert len(cert) == 7
    assert not find_hamilton_cycle(cert.colour_graph.skeleton).found


@pytest.mark.parametrize("t", [gr.path(4), gr.path(5), SPIDER], ids=["P4", "P5", "spider"])
def test_endpoint_contract_on_base_trees(t):
    for x in range(t.n):
        a, b, cert = s3_path_with_endpoints(t, x)
        ps = cert.partitions()
        assert a != b and x not in (a, b)
        assert a in readings(ps[0], *sides(t)) and b in readings(ps[-1], *sides(t))


def test_stored_paths_are_paths():
    for edges, paths in STORED_PATHS.values():
        g = gr.Graph.from_edges(len(edges) + 1, edges)
        cg = build(g, 3, STIRLING)
        for seq in paths:
            assert check_sequence(cg.skeleton, [cg.index[p] for p in seq], closed=False) is None


@given(trees(min_n=4, max_n=10))
def test_endpoint_contract_random(t):
    for x in range(t.n):
        a, b, cert = s3_path_with_endpoints(t, x)
        ps = cert.partitions()
        assert a != b and x not in (a, b)
        assert a in readings(ps[0], *sides(t)) and b in readings(ps[-1], *sides(t))


@given(trees(min_n=4, max_n=10))
def test_b3_cycle_random(t):
    assert len(b3_tree_cycle(t)) == len(build(t, 3, "bell"))


def test_too_small():
    with pytest.raises(ValueError):
        s3_path_with_endpoints(gr.path(3), 0)
    with pytest.raises(ValueError):
        s4_tree_cycle(gr.path(4))
    with pytest.raises(ValueError):
        sk_tree_cycle(gr.path(5), 5)


def test_s4_examples():
    assert len(s4_tree_cycle(gr.path(5))) == gr.complement(gr.path(5)).m == 6
    cert = s4_tree_cycle(gr.star(5))
    assert find_hamilton_cycle(cert.colour_graph.skeleton).found


def test_sk_examples():
    for t in gr.nonisomorphic_trees(6):
        assert len(sk_tree_cycle(t, 5)) == 15 - 5
    assert len(sk_tree_cycle(gr.path(7), 5)) == stirling_number_of(gr.path(7), 5)


@settings(max_examples=25)
@given(trees(min_n=5, max_n=9))
def test_sk_decoration(t):
    for k in range(4, min(t.n - 1, 7) + 1):
        cert = sk_tree_cycle(t, k)
        rest, _ = t.induced([v for v in range(t.n) if v != cert.leaf])
        assert singleton_arc_is_contiguous(cert.singleton)
        assert sum(cert.singleton) == stirling_number_of(rest, k - 1)


def test_prescribed_leaf():
    t = gr.path(7)
    cert = sk_tree_cycle(t, 5, leaf=0)
    assert cert.leaf == 0
    with pytest.raises(ValueError):
        sk_tree_cycle(t, 5, leaf=3)


def test_base_cycles():
    assert len(stirling_base_cycle(gr.path(5))) == 6
    assert len(stirling_base_cycle(gr.star(5))) == 10
    with pytest.raises(ConstructionError):
        stirling_base_cycle(gr.complete(3))


def test_dominating_circuit_and_line_graph_cycle():
    h = gr.complement(gr.path(6))
    circ = dominating_circuit(h)
    on = set(circ)
    assert all(u in on or v in on for u, v in h.edges())
    order = line_graph_cycle(h)
    lg, index = gr.line_graph(h)
    pos = {e: i for i, e in enumerate(index)}
    assert check_sequence(lg, [pos[e] for e in order], closed=True) is None


def ring_of_triangles():
    blocks = [[0, 1, 2], [3, 4, 5], [6, 7, 8]]
    edges = [(b[i], b[j]) for b in blocks for i in range(3) for j in range(i + 1, 3)]
    edges += [(blocks[j][i], blocks[(j + 1) % 3][i]) for j in range(3) for i in range(3)]
    return gr.Graph.from_edges(9, edges), CGraphDecomposition(blocks)


def test_c_graph_cycle_through_each_internal_edge():
    host, decomp = ring_of_triangles()
    for block in decomp.blocks:
        for x, y in [(block[0], block[1]), (block[1], block[2]), (block[2], block[0])]:
            cyc = c_graph_cycle_through_edge(host, decomp, (x, y))
            assert check_sequence(host, cyc, closed=True) is None
            i = cyc.index(x)
            assert y in (cyc[i - 1], cyc[(i + 1) % 9])


def test_c_graph_rejects_thin_boundaries():
    blocks = [[0, 1, 2], [3, 4, 5], [6, 7, 8]]
    edges = [(b[i], b[j]) for b in blocks for i in range(3) for j in range(i + 1, 3)]
    edges += [(2, 3), (5, 6), (4, 7), (8, 0), (7, 1)]
    host = gr.Graph.from_edges(9, edges)
    with pytest.raises(ConstructionError):
        c_graph_cycle_through_edge(host, CGraphDecomposition(blocks), (0, 1))
