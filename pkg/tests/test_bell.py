import pytest
from hypothesis import given

from bellstir import graphs as gr
from bellstir.constructions import bell_n_cycle
from bellstir.partitions import canonical

from conftest import graphs


def test_p4_cycle_matches_the_worked_example():
    cert = bell_n_cycle(gr.path(4))
    expected = [
        canonical([[0, 2], [1, 3]]),
        canonical([[0], [2], [1, 3]]),
        canonical([[0], [1], [2], [3]]),
        canonical([[0, 3], [1], [2]]),
        canonical([[0, 2], [1], [3]]),
    ]
    got = cert.partitions()
    i = got.index(expected[0])
    rotated = got[i:] + got[:i]
    assert rotated in (expected, [expected[0]] + expected[:0:-1])


def test_empty_three():
    assert len(bell_n_cycle(gr.empty(3))) == 5


@pytest.mark.parametrize("g", [gr.complete(4), gr.complete_minus_edge(4), gr.complete(1)])
def test_excluded_graphs(g):
    with pytest.raises(ValueError):
        bell_n_cycle(g)


@pytest.mark.parametrize("t", range(2, 6))
def test_gt_family(t):
    assert len(bell_n_cycle(gr.g_t(t))) == 2**t


@given(graphs(min_n=2, max_n=7))
def test_random_graphs(g):
    if gr.complement(g).m <= 1:
        return
    cert = bell_n_cycle(g)
    assert len(cert) == len(cert.colour_graph)


def test_pair_fallback_is_recorded():
    g = gr.Graph.from_edges(6, [(0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (2, 5), (3, 4)])
    cert = bell_n_cycle(g)
    assert any(note["skipped_pairs"] for note in cert.diagnostics)
