import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bellstir import graphs as gr
from bellstir.constructions import (
    CYCLE,
    gray_cycle,
    hypercube_path,
    rook_path,
    rook_plus_path,
    star_b3_cycle,
    star_s3_cycle,
)
from bellstir.constructions.cube import weight
from bellstir.oracle import check_sequence, find_hamilton_path


def test_gray_cycle_small():
    assert gray_cycle(2) == [(0, 0), (0, 1), (1, 1), (1, 0)]
    three = ["".join(map(str, b)) for b in gray_cycle(3)]
    assert three == ["000", "001", "011", "010", "110", "111", "101", "100"]
    assert {three[1], three[-1]} == {"001", "100"}
    with pytest.raises(ValueError):
        gray_cycle(1)


@pytest.mark.parametrize("m", range(2, 8))
def test_gray_cycle_is_a_hamilton_cycle(m):
    ids = [gr.value_of(b) for b in gray_cycle(m)]
    assert check_sequence(gr.hypercube(m), ids, closed=True) is None


def test_hypercube_path_examples():
    assert hypercube_path((0,), (1,)) == [(0,), (1,)]
    path = hypercube_path((0, 0, 0), (1, 1, 1))
    assert len(path) == 8 and check_sequence(gr.hypercube(3), [gr.value_of(b) for b in path], closed=False) is None
    with pytest.raises(ValueError):
        hypercube_path((0, 0), (1, 1))


@pytest.mark.parametrize("m", range(1, 6))
def test_hypercube_paths_for_every_opposite_pair(m):
    q = gr.hypercube(m)
    for x, y in itertools.combinations(itertools.product((0, 1), repeat=m), 2):
        if weight(x) % 2 == weight(y) % 2:
            continue
        path = [gr.value_of(b) for b in hypercube_path(x, y)]
        assert check_sequence(q, path, closed=False) is None
        assert path[0] == gr.value_of(x) and path[-1] == gr.value_of(y)


@given(st.integers(2, 6).flatmap(lambda m: st.tuples(*[st.integers(0, 1)] * (2 * m))))
def test_hypercube_path_parity_rule(bits):
    m = len(bits) // 2
    x, y = tuple(bits[:m]), tuple(bits[m:])
    if weight(x) % 2 == weight(y) % 2:
        with pytest.raises(ValueError):
            hypercube_path(x, y)
    else:
        assert len(hypercube_path(x, y)) == 2**m


@pytest.mark.parametrize("r, s", list(itertools.product(range(1, 6), repeat=2)))
def test_rook_plus_paths(r, s):
    g, clone, _ = gr.rook_plus(r, s)
    for target in range(r * s):
        path = rook_plus_path(r, s, target)
        assert check_sequence(g, path, closed=False) is None
        assert path[0] == clone and path[-1] == target


def test_rook_plus_examples():
    assert len(rook_plus_path(1, 2, 1)) == 3
    assert rook_plus_path(2, 2, 3)[-1] == 3
    g, clone, _ = gr.rook_plus(3, 2)
    for target in range(6):
        assert find_hamilton_path(g, clone, target).found


@pytest.mark.parametrize("r, s", [(2, 3), (3, 3), (3, 4), (4, 4)])
def test_rook_paths_between_any_pair(r, s):
    g = gr.cartesian_product(gr.complete(r), gr.complete(s))
    cells = list(itertools.product(range(r), range(s)))
    for u, t in itertools.permutations(cells, 2):
        path = [a * s + b for a, b in rook_path(r, s, u, t)]
        assert check_sequence(g, path, closed=False) is None


def test_star_s3_cycle(oracle_values):
    assert len(star_s3_cycle(3)) == 3
    for n in (5, 7, 9):
        cert = star_s3_cycle(n)
        assert cert.kind == CYCLE and len(cert) == oracle_values["star_s3_counts"].get(str(n), 2 ** (n - 1) - 1)
    with pytest.raises(ValueError):
        star_s3_cycle(4)


def test_star_b3_cycle_anchors():
    cert = star_b3_cycle(3, forbidden=0)
    assert {cert.anchors["a"], cert.anchors["b"]} <= {1, 2, 3}
    cert = star_b3_cycle(3, forbidden=1)
    assert {cert.anchors["a"], cert.anchors["b"]} == {2, 3}
    assert len(star_b3_cycle(4)) == 8
    for n in range(3, 8):
        for f in range(n + 1):
            cert = star_b3_cycle(n, f)
            assert f not in (cert.anchors["a"], cert.anchors["b"])
