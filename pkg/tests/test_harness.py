import pytest

from bellstir.harness import FAIL, PASS, SUITES, Limits, VerificationReport, aggregate, edges_connected, instances, run_suite
from bellstir import graphs as gr


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("no-such-suite")


@pytest.mark.parametrize("name", ["bell-n-exhaustive", "star-parity", "lemma41-iso", "kn-exclusion", "gt-parity",
                                  "figures", "bijections", "connectivity", "rook-hypercube"])
def test_small_suites_pass(name):
    lim = Limits(max_n=5) if name in ("bell-n-exhaustive", "lemma41-iso", "connectivity") else None
    reports = run_suite(name, lim)
    assert reports and aggregate(reports) == PASS


def test_tree_suites_small():
    assert aggregate(run_suite("lemma45-sweep", Limits(max_n=7))) == PASS
    assert aggregate(run_suite("sk-tree-sweep", Limits(max_n=7))) == PASS


def test_pool_keeps_instance_order():
    serial = run_suite("lemma45-sweep", Limits(max_n=6))
    pooled = run_suite("lemma45-sweep", Limits(max_n=6, workers=2))
    assert [r.instance for r in serial] == [r.instance for r in pooled]
    assert [r.status for r in serial] == [r.status for r in pooled]


def test_instances_are_deterministic():
    for name in SUITES:
        if name in ("lemma45-sweep", "sk-tree-sweep"):
            continue
        assert instances(name) == instances(name)


def test_aggregate_precedence():
    mk = lambda s: VerificationReport("x", {}, s)
    assert aggregate([mk("pass"), mk("inconclusive")]) == "inconclusive"
    assert aggregate([mk("inconclusive"), mk(FAIL)]) == FAIL


def test_edges_connected():
    assert edges_connected(gr.Graph.from_edges(3, [(1, 2)]))
    assert not edges_connected(gr.Graph.from_edges(4, [(0, 1), (2, 3)]))
