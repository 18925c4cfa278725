import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bellstir import graphs as gr
from bellstir.partitions import (
    BELL,
    LABELED,
    STIRLING,
    EnumerationCapExceeded,
    adjacent,
    adjacent_brute,
    bell_number_of,
    canonical,
    chromatic_number,
    classical_bell,
    enumerate_family,
    is_valid_partition,
    restrict,
    set_partitions_brute,
    stirling_number_of,
)

from conftest import graphs, set_partitions

A, B, C, D = range(4)


def P(*cells):
    return canonical(cells)


def test_p4_three_colourings():
    fam = enumerate_family(gr.path(4), 3, STIRLING)
    assert set(fam) == {P([A], [C], [B, D]), P([A, D], [B], [C]), P([A, C], [B], [D])}


def test_p5_three_colourings(oracle_values):
    assert stirling_number_of(gr.path(5), 3) == oracle_values["s3_p5_stats"][0] == 7


def test_empty_graph_two_cells(oracle_values):
    assert bell_number_of(gr.empty(4), 2) == oracle_values["empty4_at_most_2"]


def test_adjacency_examples():
    assert adjacent(P([A], [C], [B, D]), P([A, D], [B], [C]))
    assert not adjacent(P([A], [C], [B, D]), P([A, C], [B], [D]))
    p = P([A], [B])
    with pytest.raises(ValueError):
        adjacent(p, p)
    with pytest.raises(ValueError):
        adjacent(P([A], [B]), P([A], [C]))


def test_restrict_examples():
    assert restrict(P([A, D], [B], [C]), D) == P([A], [B], [C])
    assert restrict(P([A, C], [B, D]), A) == ((1, 3), (2,))
    assert restrict(((0,),), 0) == ()


def test_counts(oracle_values):
    for n, count in oracle_values["star_s3_counts"].items():
        n = int(n)
        assert stirling_number_of(gr.star(n), 3) == count == 2 ** (n - 1) - 1
    for n, row in oracle_values["classical_bell_table"].items():
        n = int(n)
        for k, value in enumerate(row):
            if k >= 1:
                assert bell_number_of(gr.empty(n), k) == value == classical_bell(n, k)
    for t in range(1, 5):
        assert chromatic_number(gr.g_t(t)) == t


def test_empty_ground_set_conventions():
    assert len(enumerate_family(gr.empty(0), 3, BELL)) == 1
    assert stirling_number_of(gr.empty(0), 2) == 0


def test_chromatic_below_returns_empty_family():
    assert len(enumerate_family(gr.complete(4), 3, STIRLING)) == 0


def test_cap():
    with pytest.raises(EnumerationCapExceeded):
        enumerate_family(gr.empty(6), 6, BELL, cap=100)


def test_labeled_mode(oracle_values):
    assert len(enumerate_family(gr.path(3), 3, LABELED)) == oracle_values["labeled_p3_k3"]


def test_brute_partitions_are_the_bell_numbers():
    assert [len(set_partitions_brute(range(n))) for n in range(1, 6)] == [1, 2, 5, 15, 52]


@given(set_partitions(), st.randoms(use_true_random=False))
def test_canonical_is_order_independent(cells, rnd):
    shuffled = [rnd.sample(c, len(c)) for c in cells]
    rnd.shuffle(shuffled)
    p = canonical(cells)
    assert canonical(shuffled) == p
    assert canonical(p) == p


@given(set_partitions(max_n=6), set_partitions(max_n=6))
def test_fast_adjacency_matches_restriction(c1, c2):
    p, q = canonical(c1), canonical(c2)
    if p == q or {v for c in p for v in c} != {v for c in q for v in c}:
        return
    assert adjacent(p, q) == adjacent_brute(p, q) == adjacent(q, p)


def test_fast_adjacency_exhaustive_on_five_points():
    parts = set_partitions_brute(range(5))
    for p, q in itertools.combinations(parts, 2):
        assert adjacent(p, q) == adjacent_brute(p, q)


@given(graphs(max_n=6))
def test_bell_is_sum_of_stirling(g):
    for k in range(1, g.n + 2):
        assert bell_number_of(g, k) == sum(stirling_number_of(g, j) for j in range(1, k + 1))
    assert enumerate_family(g, g.n + 2, BELL).members == enumerate_family(g, g.n, BELL).members


@given(graphs(max_n=5), st.integers(1, 4))
def test_labeled_count_identity(g, k):
    labeled = len(enumerate_family(g, k, LABELED))
    expected = sum(stirling_number_of(g, j) * math.perm(k, j) for j in range(1, k + 1))
    assert labeled == expected


@given(graphs(max_n=6), st.integers(1, 6))
def test_members_are_valid_and_sorted(g, k):
    fam = enumerate_family(g, k, STIRLING)
    assert list(fam.members) == sorted(set(fam.members))
    assert all(is_valid_partition(g, p) and len(p) == k for p in fam)
