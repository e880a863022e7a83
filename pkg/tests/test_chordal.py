import itertools

import networkx as nx
import pytest
from hypothesis import given

from chordal1p.chordal import (
    EliminationOrder,
    HoleCertificate,
    ScaleExceeded,
    is_chordal,
    is_k_tree,
    is_perfect_elimination_order,
    ktree_edge_count,
    mcs_order,
    minimal_separators,
    minimal_separators_are_cliques,
    simplicial_vertices,
)
from chordal1p.families import random_k_tree
from chordal1p.graph import complete_graph, cycle_graph, from_edge_list, join_complete_empty
from conftest import graphs, k6_minus_e, to_nx


@given(graphs(max_n=9))
def test_chordality_agrees_with_networkx_and_certifies(g):
    cert = is_chordal(g)
    assert cert.check(g)
    assert isinstance(cert, EliminationOrder) == nx.is_chordal(to_nx(g))


def test_hole_in_cycle():
    cert = is_chordal(cycle_graph(6))
    assert isinstance(cert, HoleCertificate) and len(cert.cycle) == 6


def test_reversed_mcs_order_is_peo_for_chordal():
    g = random_k_tree(12, 3, seed=3)
    assert is_perfect_elimination_order(g, mcs_order(g)[::-1])


@pytest.mark.parametrize("g, k", [(complete_graph(4), 4), (complete_graph(5), 4), (k6_minus_e(), 4),
                                  (join_complete_empty(4, 3), 4)])
def test_small_k_trees(g, k):
    assert is_k_tree(g, k) is not None


def test_non_k_trees():
    assert is_k_tree(cycle_graph(5), 2) is None
    assert is_k_tree(complete_graph(6), 4) is None  # too many edges
    # right edge count for a 2-tree, but not one
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)])
    assert g.m == ktree_edge_count(5, 2) and is_k_tree(g, 2) is not None
    h = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4)])
    assert h.m == ktree_edge_count(5, 2) and is_k_tree(h, 2) is None


def test_k_tree_order_is_a_construction_order():
    g = random_k_tree(10, 4, seed=11)
    order = is_k_tree(g, 4)
    alive = set(range(g.n))
    for v in order[:-4]:
        nb = [w for w in g.neighbors(v) if w in alive and w != v]
        assert len(nb) == 4 and g.is_clique(sum(1 << w for w in nb))
        alive.discard(v)


def test_simplicial_vertices():
    assert simplicial_vertices(k6_minus_e()) == [0, 1]
    assert simplicial_vertices(join_complete_empty(4, 3)) == [4, 5, 6]


@given(graphs(max_n=8))
def test_minimal_separators_are_cliques_iff_chordal(g):
    ok, _ = minimal_separators_are_cliques(g)
    assert ok == nx.is_chordal(to_nx(g))


def test_minimal_separators_of_a_path():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert sorted(minimal_separators(g)) == [1 << 1, 1 << 2]


def test_separator_guard():
    with pytest.raises(ScaleExceeded):
        minimal_separators(complete_graph(15))


def test_brute_force_minimal_separators():
    g = random_k_tree(8, 2, seed=5)
    h = to_nx(g)
    brute = set()
    for r in range(1, g.n - 1):
        for s in itertools.combinations(range(g.n), r):
            rest = h.subgraph(set(h) - set(s))
            comps = list(nx.connected_components(rest))
            full = [c for c in comps if all(any(h.has_edge(v, w) for w in c) for v in s)]
            if len(full) >= 2:
                brute.add(sum(1 << v for v in s))
    assert set(minimal_separators(g)) == brute
