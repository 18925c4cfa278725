import pytest
from hypothesis import given

from bellstir import graphs as gr
from bellstir.colour_graphs import build
from bellstir.oracle import (
    ABSENT,
    FOUND,
    INCONCLUSIVE,
    check_sequence,
    find_hamilton_cycle,
    find_hamilton_path,
    parity_gap,
)
from bellstir.partitions import BELL, STIRLING

from conftest import graphs


def test_cycles():
    assert find_hamilton_cycle(gr.cycle(4)).found
    assert find_hamilton_cycle(gr.star(3)).status == ABSENT
    assert find_hamilton_cycle(build(gr.star(4), 3, STIRLING).skeleton).status == ABSENT


def test_paths(oracle_values):
    q2 = gr.hypercube(2)
    res = find_hamilton_path(q2, 0, 1)
    assert res.found == oracle_values["q2_path_00_01"] and res.sequence == [0, 2, 3, 1]
    assert find_hamilton_path(gr.cycle(4), 0, 2).status == ABSENT
    g, clone, _ = gr.rook_plus(2, 2)
    assert find_hamilton_path(g, clone, 3).found == oracle_values["rook_plus_2_2_clone_to_antipode"]


def test_budget_is_inconclusive_not_absent():
    res = find_hamilton_cycle(gr.hypercube(4), budget=3)
    assert res.status == INCONCLUSIVE


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("BELLSTIR_BUDGET", "2")
    assert find_hamilton_cycle(gr.hypercube(4)).status == INCONCLUSIVE


def test_bipartition_examples(oracle_values):
    for n in range(3, 7):
        assert gr.is_connected(build(gr.path(n), 3, BELL).skeleton)
    parts = gr.bipartition(build(gr.star(4), 3, STIRLING).skeleton)
    assert sorted(map(len, parts)) == oracle_values["s3_k14_parts"]
    assert gr.bipartition(gr.cycle(5)) is None


def test_parity_gap(oracle_values):
    for key, value in oracle_values["parity_gap"].items():
        t, l = map(int, key.split(","))
        assert parity_gap(t, l) == value
    with pytest.raises(ValueError):
        parity_gap(2, 3)


def test_validator_witnesses():
    c4 = gr.cycle(4)
    assert check_sequence(c4, [0, 1, 2, 3], closed=True) is None
    assert check_sequence(c4, [0, 2, 1, 3], closed=False)[0] == "non-edge"
    assert check_sequence(c4, [0, 1, 1, 2], closed=False)[0] == "repeat"
    assert check_sequence(c4, [0, 1, 2], closed=False) == ("missing", 3)


@given(graphs(min_n=3, max_n=7))
def test_found_cycles_validate_and_parity_obstruction_holds(g):
    res = find_hamilton_cycle(g)
    assert res.status in (FOUND, ABSENT)
    if res.found:
        assert check_sequence(g, res.sequence, closed=True) is None
    parts = gr.bipartition(g)
    if parts and len(parts[0]) != len(parts[1]):
        assert res.status == ABSENT


@given(graphs(min_n=2, max_n=6))
def test_paths_respect_bipartite_parity(g):
    parts = gr.bipartition(g)
    res = find_hamilton_path(g, 0, g.n - 1)
    if res.found:
        assert check_sequence(g, res.sequence, closed=False) is None
        assert res.sequence[0] == 0 and res.sequence[-1] == g.n - 1
    if parts:
        a, b = map(set, parts)
        same = (0 in a) == (g.n - 1 in a)
        if (len(a) == len(b) and same) or (abs(len(a) - len(b)) == 1 and not same) or abs(len(a) - len(b)) > 1:
            assert res.status == ABSENT


def test_gap_matches_materialised_bipartition():
    for t in range(1, 5):
        for l in range(t):
            cg = build(gr.g_t(t), t + l, BELL)
            a, b = gr.bipartition(cg.skeleton)
            assert abs(len(a) - len(b)) == abs(parity_gap(t, l))
