"""Recompute the frozen reference values in tests/data/oracle_values.json.

Uses only itertools, math and networkx, never the bellstir package, so the
values act as an independent oracle for the test suite.

    python3 scripts/derive_oracle_values.py > tests/data/oracle_values.json
"""

from __future__ import annotations

import itertools
import json
import math

import networkx as nx


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


def canon(part):
    return tuple(sorted(tuple(sorted(c)) for c in part if c))


def independent_partitions(g: nx.Graph, k: int, exact: bool):
    out = []
    for part in set_partitions(sorted(g.nodes)):
        if (len(part) == k) if exact else (len(part) <= k):
            if all(not g.has_edge(u, v) for c in part for u, v in itertools.combinations(c, 2)):
                out.append(canon(part))
    return sorted(out)


def restrict(p, x):
    return canon([[v for v in c if v != x] for c in p])


def colour_graph(g: nx.Graph, k: int, exact: bool) -> nx.Graph:
    verts = independent_partitions(g, k, exact)
    h = nx.Graph()
    h.add_nodes_from(verts)
    for p, q in itertools.combinations(verts, 2):
        if any(restrict(p, x) == restrict(q, x) for x in g.nodes):
            h.add_edge(p, q)
    return h


def hamiltonian_cycle_exists(h: nx.Graph) -> bool:
    nodes = list(h.nodes)
    if len(nodes) < 3:
        return False
    first = nodes[0]
    for perm in itertools.permutations(nodes[1:]):
        seq = (first,) + perm
        if all(h.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))):
            return True
    return False


def hamiltonian_path_exists(h: nx.Graph, u, v) -> bool:
    mid = [w for w in h.nodes if w not in (u, v)]
    return any(
        all(h.has_edge(a, b) for a, b in zip((u,) + p + (v,), p + (v,)))
        for p in itertools.permutations(mid)
    )


def stats(h: nx.Graph):
    return [h.number_of_nodes(), h.number_of_edges()]


def main():
    P4 = nx.path_graph(4)
    out = {}
    out["complement_P4_edges"] = sorted(map(sorted, nx.complement(P4).edges))
    lg = nx.line_graph(nx.complement(P4))
    out["line_complement_P4_is_path"] = nx.is_isomorphic(lg, nx.path_graph(3))
    out["prism_stats"] = stats(nx.cartesian_product(nx.complete_graph(3), nx.complete_graph(2)))
    q3 = nx.hypercube_graph(3)
    out["q3_stats"] = stats(q3)
    rook = nx.convert_node_labels_to_integers(nx.cartesian_product(nx.complete_graph(2), nx.complete_graph(2)))
    rook.add_edges_from([(4, 0)] + [(4, u) for u in list(rook.neighbors(0))])
    out["rook_plus_2_2_stats"] = stats(rook)
    out["rook_plus_2_2_clone_to_antipode"] = hamiltonian_path_exists(rook, 4, 3)
    out["q2_path_00_01"] = hamiltonian_path_exists(nx.cycle_graph(4), 0, 1)

    out["empty4_at_most_2"] = len(independent_partitions(nx.empty_graph(4), 2, False))
    out["star_s3_counts"] = {n: len(independent_partitions(nx.star_graph(n), 3, True)) for n in range(2, 8)}
    out["classical_bell_table"] = {
        n: [sum(1 for p in set_partitions(range(n)) if len(p) <= k) for k in range(0, n + 1)] for n in range(0, 7)
    }
    s3k14 = colour_graph(nx.star_graph(4), 3, True)
    out["s3_k14_parts"] = sorted(len(s) for s in nx.bipartite.sets(s3k14))
    out["s3_k14_hamiltonian"] = hamiltonian_cycle_exists(s3k14)
    out["s3_p4_stats"] = stats(colour_graph(P4, 3, True))
    out["s3_p5_stats"] = stats(colour_graph(nx.path_graph(5), 3, True))
    out["b4_p4_stats"] = stats(colour_graph(P4, 4, False))
    out["b3_p3_members"] = [list(map(list, p)) for p in independent_partitions(nx.path_graph(3), 3, False)]
    out["b4_c4_stats"] = stats(colour_graph(nx.cycle_graph(4), 4, False))
    out["b3_empty3_stats"] = stats(colour_graph(nx.empty_graph(3), 3, False))
    k2k1 = nx.disjoint_union(nx.complete_graph(2), nx.empty_graph(1))
    out["b2_k2_k1_stats"] = stats(colour_graph(k2k1, 2, False))
    k3k1 = nx.disjoint_union(nx.complete_graph(3), nx.empty_graph(1))
    out["b3_k3_k1_stats"] = stats(colour_graph(k3k1, 3, False))
    k2e2 = nx.disjoint_union(nx.complete_graph(2), nx.empty_graph(2))
    out["b2_k2_e2_stats"] = stats(colour_graph(k2e2, 2, False))
    out["parity_gap"] = {f"{t},{l}": sum((-1) ** i * math.comb(t, i) for i in range(l + 1)) for t in range(1, 6) for l in range(t + 1)}
    out["graph_counts"] = {n: sum(1 for g in nx.graph_atlas_g() if g.number_of_nodes() == n) for n in range(1, 7)}
    out["tree_counts"] = {n: sum(1 for _ in nx.nonisomorphic_trees(n)) for n in range(3, 10)}
    # labelled colourings of small graphs, for the labelled-mode count identity
    out["labeled_p3_k3"] = sum(
        1 for c in itertools.product(range(3), repeat=3) if c[0] != c[1] and c[1] != c[2]
    )
    out["s_top_sizes_p5"] = stats(colour_graph(nx.path_graph(5), 4, True))
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
