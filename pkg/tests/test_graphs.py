import math

import pytest
from hypothesis import given

from bellstir import graphs as gr
from bellstir.graphs import Graph, GraphError

from conftest import graphs, trees


def test_complement_of_p4(oracle_values):
    assert [list(e) for e in gr.complement(gr.path(4)).edges()] == oracle_values["complement_P4_edges"]


def test_complement_of_k4_is_edgeless():
    assert gr.complement(gr.complete(4)).m == 0


def test_complement_of_claw_is_triangle_plus_centre():
    c = gr.complement(gr.star(3))
    assert c.degree(0) == 0
    assert sorted(c.edges()) == [(1, 2), (1, 3), (2, 3)]


def test_joins():
    assert gr.join(gr.complete(1), gr.complete(1)) == gr.complete(2)
    assert gr.is_isomorphic(gr.join(gr.empty(2), gr.complete(1)), gr.path(3))
    assert gr.join(gr.complete(2), gr.complete(2)) == gr.complete(4)


def test_products(oracle_values):
    assert gr.is_isomorphic(gr.cartesian_product(gr.complete(2), gr.complete(2)), gr.cycle(4))
    assert gr.cartesian_product(gr.complete(1), gr.path(4)) == gr.path(4)
    prism = gr.cartesian_product(gr.complete(3), gr.complete(2))
    assert [prism.n, prism.m] == oracle_values["prism_stats"]


def test_rook_plus(oracle_values):
    g, clone, base = gr.rook_plus(2, 2)
    assert [g.n, g.m] == oracle_values["rook_plus_2_2_stats"]
    assert g.adj[clone] | {clone} == g.adj[base] | {base}
    k3, _, _ = gr.rook_plus(1, 2)
    assert k3 == gr.complete(3)
    assert gr.rook_plus(1, 1)[0] == gr.complete(2)


def test_hypercube(oracle_values):
    assert gr.hypercube(0).n == 1
    assert gr.is_isomorphic(gr.hypercube(2), gr.cycle(4))
    q3 = gr.hypercube(3)
    assert [q3.n, q3.m] == oracle_values["q3_stats"]
    assert gr.bipartition(q3) is not None


def test_line_graph(oracle_values):
    lg, index = gr.line_graph(gr.complement(gr.path(4)))
    assert oracle_values["line_complement_P4_is_path"] and gr.is_isomorphic(lg, gr.path(3))
    # ac - ad - bd
    assert index == [(0, 2), (0, 3), (1, 3)] and lg.edges() == [(0, 1), (1, 2)]
    assert gr.is_isomorphic(gr.line_graph(gr.complete(3))[0], gr.complete(3))
    assert gr.line_graph(gr.empty(4))[0].n == 0


def test_colouring_number():
    assert gr.colouring_number(gr.path(6)) == 2
    assert gr.colouring_number(gr.l_nn(3)) == 3
    assert gr.colouring_number(gr.complete(5)) == 5


def test_families():
    assert gr.is_isomorphic(gr.g_t(2), gr.cycle(4))
    assert gr.tree_from_pruefer([], 2) == gr.complete(2)
    assert not gr.g_t(3).has_edge(4, 5) and gr.g_t(3).has_edge(3, 4)


@pytest.mark.parametrize("n", range(1, 7))
def test_labelled_tree_count(n):
    assert sum(1 for _ in gr.all_trees(n)) == (1 if n == 1 else n ** (n - 2))


def test_catalogue_counts(oracle_values):
    for n, count in oracle_values["graph_counts"].items():
        assert len(gr.nonisomorphic_graphs(int(n))) == count
    for n, count in oracle_values["tree_counts"].items():
        assert len(gr.nonisomorphic_trees(int(n))) == count
        if int(n) <= 7:
            assert sum(1 for _ in gr.all_trees(int(n), up_to_iso=True)) == count


def test_tree_two_colouring_lists_vertex_zero_first():
    t = gr.Tree.of(gr.path(5))
    assert t.two_colouring == ((0, 2, 4), (1, 3))
    assert t.leaves == (0, 4)
    with pytest.raises(GraphError):
        gr.Tree.of(gr.cycle(4))


def test_bad_graphs_rejected():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


@given(graphs())
def test_complement_is_an_involution(g):
    assert gr.complement(gr.complement(g)) == g
    assert g.m + gr.complement(g).m == math.comb(g.n, 2)


@given(graphs(max_n=5), graphs(max_n=3))
def test_join_is_complement_of_union(g, h):
    assert gr.join(g, h) == gr.complement(gr.disjoint_union(gr.complement(g), gr.complement(h)))


@given(trees())
def test_pruefer_trees_are_trees(t):
    assert gr.is_tree(t)
    assert gr.colouring_number(t) == 2
    perm = list(range(t.n))[::-1]
    relabelled = Graph.from_edges(t.n, [(perm[u], perm[v]) for u, v in t.edges()])
    assert gr.tree_canonical_form(relabelled) == gr.tree_canonical_form(t)
