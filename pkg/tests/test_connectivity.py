from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given

from chordal1p.chordal import ScaleExceeded
from chordal1p.connectivity import (
    INFINITE,
    check_chvatal_bound,
    connectivity_by_subsets,
    local_connectivity,
    toughness,
    vertex_connectivity,
)
from chordal1p.families import g0, glued_family
from chordal1p.graph import complete_graph, count_components, cycle_graph, join_complete_empty
from conftest import graphs, to_nx


@given(graphs(max_n=9))
def test_connectivity_two_routes(g):
    kappa, wit = vertex_connectivity(g)
    assert kappa == connectivity_by_subsets(g)
    if g.n > 1:
        assert kappa == nx.node_connectivity(to_nx(g))
    if wit is not None and kappa > 0:
        assert len(wit.separator) == kappa and wit.check(g)


@given(graphs(min_n=2, max_n=8))
def test_local_connectivity_matches_networkx(g):
    s, t = 0, g.n - 1
    if g.has_edge(s, t):
        return
    k, sep = local_connectivity(g, s, t)
    assert k == nx.node_connectivity(to_nx(g), s, t)
    assert len(sep) == k


def test_known_connectivities():
    assert vertex_connectivity(complete_graph(6)) == (5, None)
    assert vertex_connectivity(cycle_graph(7))[0] == 2
    assert vertex_connectivity(g0()[0])[0] == 3


def test_toughness_values():
    assert toughness(complete_graph(5)) is INFINITE
    assert toughness(cycle_graph(6)).value == 1
    t = toughness(join_complete_empty(4, 5))
    assert t.value == Fraction(4, 5)
    t = toughness(g0()[0])
    assert t.value == Fraction(5, 6) and t.cut_set == (0, 1, 3, 5, 7) and t.component_count == 6


@given(graphs(min_n=2, max_n=8))
def test_toughness_witness_and_lower_bound(g):
    t = toughness(g)
    if t is INFINITE:
        assert g.is_complete()
        return
    mask = sum(1 << v for v in t.cut_set)
    c = count_components(g, g.vertex_mask & ~mask)
    assert c == t.component_count >= 2 or (not t.cut_set and c >= 2)
    assert t.value == Fraction(len(t.cut_set), c)
    assert check_chvatal_bound(g)


def test_guards():
    with pytest.raises(ScaleExceeded):
        toughness(cycle_graph(20))
    with pytest.raises(ScaleExceeded):
        connectivity_by_subsets(cycle_graph(13))


def test_chvatal_bound_on_large_graphs_uses_the_separator():
    g, _, _ = glued_family(1)
    assert g.n > 18 and check_chvatal_bound(g)
