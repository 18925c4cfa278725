"""Tally which fallback branches the constructions needed on small inputs.

Reports, for the Bell construction on every graph up to ``--bell-n`` vertices,
how often a non-least vertex pair or the reversed recursive cycle was used; for
the tree constructions, how often the gluing step fell back to the generic scan
and how often the B_3 lift retried a non-standard leaf pair.
"""

from __future__ import annotations

import argparse
from collections import Counter

from bellstir import graphs as gr
from bellstir.constructions import bell_n_cycle, sk_tree_cycle


def bell_report(max_n: int):
    tally = Counter()
    for n in range(2, max_n + 1):
        for g in gr.nonisomorphic_graphs(n):
            if g.m >= n * (n - 1) // 2 - 1:
                continue
            cert = bell_n_cycle(g)
            tally[n, "graphs"] += 1
            if cert.diagnostics:
                tally[n, "with fallback"] += 1
                for note in cert.diagnostics:
                    tally[n, f"direction {note['direction']}"] += 1
                    if note["skipped_pairs"]:
                        tally[n, "skipped pairs"] += 1
    for n in range(2, max_n + 1):
        row = {key: v for (m, key), v in tally.items() if m == n}
        print(f"bell n={n}: {row}")


def tree_report(max_n: int):
    tally = Counter()
    for n in range(5, max_n + 1):
        for t in gr.nonisomorphic_trees(n):
            for k in range(4, min(n - 1, 8) + 1):
                cert = sk_tree_cycle(t, k)
                tally["instances"] += 1
                for note in cert.diagnostics:
                    tally[f"fallback case={note['case']}"] += 1
    print(f"trees n<={max_n}: {dict(tally)}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bell-n", type=int, default=7)
    ap.add_argument("--tree-n", type=int, default=9)
    args = ap.parse_args()
    bell_report(args.bell_n)
    tree_report(args.tree_n)


if __name__ == "__main__":
    main()
