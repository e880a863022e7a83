import itertools

import networkx as nx
import pytest

from chordal1p.chordal import EliminationOrder, is_chordal, is_k_tree, simplicial_vertices
from chordal1p.connectivity import vertex_connectivity
from chordal1p.embedding import DrawingError, validate
from chordal1p.families import (
    GlueSpec,
    RetryBudgetExceeded,
    all_k_trees,
    g0,
    g0_cut_set,
    glue_g0,
    glued_family,
    k_cliques,
    qualifying_faces,
    random_k_tree,
    two_simplicial_k_tree,
)
from chordal1p.graph import complete_graph, count_components


def _cut_components(g, cut):
    return count_components(g, g.vertex_mask & ~sum(1 << v for v in cut))


def test_g0_shape():
    g, d = g0()
    assert (g.n, g.m) == (13, 34)
    assert isinstance(is_chordal(g), EliminationOrder)
    assert vertex_connectivity(g)[0] == 3
    assert _cut_components(g, g0_cut_set()) == 6
    assert d.crossing_count == 1 and validate(d) is True


def test_qualifying_faces():
    _, d = g0()
    faces = qualifying_faces(d)
    assert faces
    for f in faces:
        assert f.size == 3 and not f.is_crossed
        assert all(d.arcs[a][2] not in d.crossed_edges for a, _ in f.darts)


def test_every_gluing_choice_gives_a_valid_counterexample():
    g, d = g0()
    for f in qualifying_faces(d):
        for image in itertools.permutations((0, 11, 12)):
            h, e = glue_g0(GlueSpec(d, f, dict(zip(f.nodes, image))))
            assert validate(e) is True
            assert (h.n, h.m, e.crossing_count) == (23, 65, 2)
            assert isinstance(is_chordal(h), EliminationOrder)
            assert vertex_connectivity(h)[0] == 3


def test_glue_spec_is_checked():
    _, d = g0()
    f = qualifying_faces(d)[0]
    with pytest.raises(DrawingError):
        GlueSpec(d, f, dict(zip(f.nodes, (0, 11, 11)))).check()
    crossed = next(x for x in d.faces if x.is_crossed)
    with pytest.raises(DrawingError):
        GlueSpec(d, crossed, dict(zip(crossed.nodes[:3], (0, 11, 12)))).check()


@pytest.mark.parametrize("depth, order", [(0, 13), (1, 23), (2, 33)])
def test_glued_family(depth, order):
    g, d, cut = glued_family(depth)
    assert g.n == order and validate(d) is True
    assert isinstance(is_chordal(g), EliminationOrder)
    assert vertex_connectivity(g)[0] == 3
    assert len(cut) == 5 and _cut_components(g, cut) == 6


def test_random_k_tree_is_seeded():
    a = random_k_tree(12, 4, seed=9)
    assert a == random_k_tree(12, 4, seed=9)
    assert is_k_tree(a, 4) is not None
    assert len({random_k_tree(12, 4, seed=s) for s in range(10)}) > 1
    with pytest.raises(ValueError):
        random_k_tree(3, 4, seed=0)


def test_two_simplicial_k_trees():
    for k in (3, 4, 5):
        for seed in range(20):
            g = two_simplicial_k_tree(k + 6, k, seed)
            assert is_k_tree(g, k) is not None and len(simplicial_vertices(g)) == 2
    assert two_simplicial_k_tree(10, 3, 4) == two_simplicial_k_tree(10, 3, 4)
    with pytest.raises(RetryBudgetExceeded):
        two_simplicial_k_tree(9, 3, 0, retries=0)


def test_k_cliques():
    assert len(k_cliques(complete_graph(5), 3)) == 10


def _nx_k_trees(n, k):
    """All k-trees on n vertices up to isomorphism, by plain construction and networkx deduplication."""
    level = [nx.complete_graph(k)]
    for size in range(k, n):
        nxt = []
        for h in level:
            for c in itertools.combinations(range(size), k):
                if all(h.has_edge(a, b) for a, b in itertools.combinations(c, 2)):
                    h2 = h.copy()
                    h2.add_edges_from((v, size) for v in c)
                    if not any(nx.is_isomorphic(h2, r) for r in nxt):
                        nxt.append(h2)
        level = nxt
    return level


@pytest.mark.parametrize("k, n", [(2, 6), (2, 7), (3, 7), (4, 7), (4, 8)])
def test_all_k_trees_against_networkx(k, n):
    assert len(all_k_trees(n, k)) == len(_nx_k_trees(n, k))


def test_four_tree_counts():
    assert [len(all_k_trees(n, 4)) for n in range(4, 10)] == [1, 1, 1, 2, 5, 15]
    assert all(is_k_tree(g, 4) is not None for g in all_k_trees(9, 4))
