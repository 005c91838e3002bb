import math
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from edgeturan.cliques import (clique_number, clique_profile, count_kt, count_kt_naive,
                               has_clique, induced_k12_count, vertex_clique_bound,
                               vertex_diagnostics)
from edgeturan.colex import build_colex
from edgeturan.graph import (complete_graph, disjoint_union, empty_graph, from_edge_list,
                             path_graph, star_graph)
from helpers import all_graphs_up_to_8, from_nx


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(chosen, n=n)


K4_MINUS_E = from_edge_list([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])  # 2,3 missing


def test_count_examples():
    assert count_kt(complete_graph(5), 4) == 5
    assert count_kt(from_nx(nx.petersen_graph()), 3) == 0
    assert count_kt(build_colex(8), 3) == 5
    assert count_kt(complete_graph(3), 4) == 0
    assert count_kt(path_graph(5), 2) == 4


def test_profile_examples():
    p = clique_profile(complete_graph(4))
    assert p.counts == {2: 6, 3: 4, 4: 1} and p.total == 11
    p = clique_profile(disjoint_union([complete_graph(3), complete_graph(2)]))
    assert p.counts == {2: 4, 3: 1} and p.total == 5
    assert clique_profile(empty_graph(3)).counts == {}
    assert clique_profile(complete_graph(10)).total == 2 ** 10 - 10 - 1


def test_profile_json_uses_decimal_strings():
    js = clique_profile(complete_graph(4)).to_json()
    assert js == {"counts": {"2": "6", "3": "4", "4": "1"}, "total": "11"}


def test_has_clique_and_clique_number():
    g = disjoint_union([complete_graph(5), path_graph(4)])
    assert has_clique(g, 5) and not has_clique(g, 6)
    assert clique_number(g) == 5
    assert clique_number(empty_graph(4)) == 1
    assert clique_number(empty_graph(0)) == 0


def test_vertex_diagnostics_examples():
    d = vertex_diagnostics(K4_MINUS_E, 3)
    assert d.degree[0] == 3 and d.mu[0] == 1 and d.mu_t[0] == 1
    s = vertex_diagnostics(star_graph(3), 3)
    assert s.degree[0] == 3 and s.mu[0] == 3 and s.mu_t[0] == 3
    assert vertex_clique_bound(3, 1, 3) == 2


def test_induced_k12_examples():
    assert induced_k12_count(complete_graph(3)) == 0
    assert induced_k12_count(path_graph(3)) == 1
    assert induced_k12_count(K4_MINUS_E) == 2
    assert induced_k12_count(star_graph(4)) == 6


def check_identities(g, ts=(3, 4, 5)):
    for t in ts:
        d = vertex_diagnostics(g, t)
        rhs = sum(math.comb(d.degree[v], t - 1) - d.mu_t[v] for v in range(g.n))
        assert t * count_kt(g, t) == rhs
    assert sum(vertex_diagnostics(g, 3).mu) == induced_k12_count(g)


@settings(max_examples=150)
@given(graphs())
def test_counting_identities(g):
    check_identities(g)
    assert 2 * g.m == sum(g.degree(v) for v in range(g.n))


@settings(max_examples=150)
@given(graphs(max_n=12))
def test_count_matches_naive(g):
    for t in range(2, 7):
        assert count_kt(g, t) == count_kt_naive(g, t)
    prof = clique_profile(g)
    assert prof.counts == {t: c for t in range(2, g.n + 1) if (c := count_kt_naive(g, t))}


def test_count_matches_networkx_cliques():
    h = nx.gnp_random_graph(30, 0.5, seed=3)
    g = from_nx(h)
    tally = {}
    for c in nx.enumerate_all_cliques(h):
        tally[len(c)] = tally.get(len(c), 0) + 1
    for t in range(2, max(tally) + 1):
        assert count_kt(g, t) == tally[t]


def test_rejects_bad_t():
    with pytest.raises(ValueError):
        vertex_diagnostics(complete_graph(3), 2)


@pytest.mark.slow
def test_count_matches_naive_all_graphs_up_to_8():
    by_n = all_graphs_up_to_8()
    for n, gs in by_n.items():
        for g in gs:
            for t in range(1, 7):
                assert count_kt(g, t) == count_kt_naive(g, t)
