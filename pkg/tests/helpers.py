"""Shared oracles for the test suite."""

from functools import lru_cache

import networkx as nx

from edgeturan.graph import Graph, canonical_form, from_edge_list

# number of unlabelled graphs on n vertices, n = 0..8
GRAPH_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044, 12346]


def from_nx(h) -> Graph:
    idx = {v: i for i, v in enumerate(h.nodes())}
    return from_edge_list([(idx[a], idx[b]) for a, b in h.edges()], n=h.number_of_nodes())


@lru_cache(maxsize=1)
def all_graphs_up_to_8() -> dict[int, list[Graph]]:
    """One graph per isomorphism class for every n <= 8.

    n <= 7 comes from the networkx atlas; n = 8 from joining a new vertex
    to every subset of every 7-vertex class, deduplicated by certificate.
    """
    by_n: dict[int, list[Graph]] = {n: [] for n in range(9)}
    for h in nx.graph_atlas_g():
        by_n[h.number_of_nodes()].append(from_nx(h))
    seen = set()
    for g in by_n[7]:
        for mask in range(1 << 7):
            adj = list(g.adj) + [mask]
            for v in range(7):
                if mask >> v & 1:
                    adj[v] |= 1 << 7
            h = Graph(8, tuple(adj))
            cert = canonical_form(h)
            if cert not in seen:
                seen.add(cert)
                by_n[8].append(h)
    return by_n
