import itertools
import random

import pytest
from hypothesis import given

from chordal1p.catalog import catalog
from chordal1p.chordal import ScaleExceeded
from chordal1p.embedding import drawing_code, validate
from chordal1p.graph import complete_graph, from_edge_list, join_complete_empty
from chordal1p.oneplanarity import (
    CrossingSet,
    _is_3_connected,
    enumerate_drawings,
    is_one_planar,
    max_edges_one_planar,
    one_planar_by_matchings,
    realize,
)
from conftest import graphs, k6_minus_e


def all_crossing_sets(g):
    """Every set of pairwise disjoint, non-adjacent edge pairs (no pruning at all)."""
    cand = [(i, j) for i, j in itertools.combinations(range(g.m), 2) if not set(g.edges[i]) & set(g.edges[j])]

    def rec(start, used, cur):
        yield list(cur)
        for k in range(start, len(cand)):
            i, j = cand[k]
            if i in used or j in used:
                continue
            cur.append((i, j))
            yield from rec(k + 1, used | {i, j}, cur)
            cur.pop()

    return rec(0, frozenset(), [])


def test_edge_bound_values():
    assert [max_edges_one_planar(n) for n in range(3, 11)] == [3, 6, 10, 15, 19, 24, 27, 32]


def test_k7_is_refuted_by_edge_count():
    r = is_one_planar(complete_graph(7))
    assert r.verdict == "impossible" and "19" in r.reason and r.nodes == 0


def test_k4_plus_three_isolated_is_refuted():
    r = is_one_planar(join_complete_empty(4, 3))
    assert r.verdict == "impossible" and not r


def test_k4_plus_three_without_shortcuts():
    r = is_one_planar(join_complete_empty(4, 3), symmetry=False, heredity=False)
    assert r.verdict == "impossible"


@pytest.mark.parametrize("name, g", [("K5", complete_graph(5)), ("K6", complete_graph(6)), ("A1", k6_minus_e())])
def test_minimum_crossing_drawings(name, g):
    r = is_one_planar(g)
    assert r and validate(r.drawing) is True
    assert r.drawing.crossing_count == catalog(name).crossing_count


@given(graphs(min_n=4, max_n=6, density=0.7))
def test_pruned_search_matches_unpruned(g):
    ref = one_planar_by_matchings(g)
    r = is_one_planar(g)
    assert bool(r) == (ref is not None)
    if ref is not None:
        assert r.drawing.crossing_count == ref.crossing_count
        assert validate(r.drawing) is True and r.drawing.graph == g


def _random_dense(rnd, n, m):
    edges = rnd.sample(list(itertools.combinations(range(n), 2)), m)
    return from_edge_list(n, edges)


def test_symmetry_and_heredity_do_not_change_answers():
    rnd = random.Random(5)
    for _ in range(8):
        g = _random_dense(rnd, 7, rnd.randint(15, 19))
        results = {
            (s, h): is_one_planar(g, symmetry=s, heredity=h)
            for s in (True, False)
            for h in (True, False)
        }
        verdicts = {r.verdict for r in results.values()}
        assert len(verdicts) == 1
        if "drawing" in verdicts:
            assert len({r.drawing.crossing_count for r in results.values()}) == 1


def test_budget_exhaustion_is_reported():
    r = is_one_planar(join_complete_empty(4, 3), budget=3, heredity=False)
    assert r.verdict == "exhausted" and "budget" in r.reason


def test_realize_respects_pairs():
    g = complete_graph(5)
    d = catalog("K5")
    pairs = [tuple(p) for p in d.crossings]
    r = realize(g, pairs)
    assert r is not None and validate(r) is True and sorted(r.crossings) == sorted(pairs)
    assert realize(g, []) is None


def test_crossing_set_check():
    g = complete_graph(5)
    e = g.edge_index
    assert CrossingSet(((e(0, 1), e(2, 3)),)).check(g)
    assert not CrossingSet(((e(0, 1), e(1, 3)),)).check(g)
    assert not CrossingSet(((e(0, 1), e(2, 3)), (e(0, 1), e(2, 4)))).check(g)


@pytest.mark.parametrize("g, names", [(complete_graph(5), ["K5"]), (k6_minus_e(), ["A1", "A2", "A3"])])
def test_enumeration_matches_brute_force(g, names):
    brute = set()
    for pairs in all_crossing_sets(g):
        d = realize(g, pairs)
        if d is not None and _is_3_connected(d.n_nodes, d):
            brute.add(drawing_code(d))
    en = enumerate_drawings(g)
    assert en.complete
    assert set(en.classes) == brute == {drawing_code(catalog(n)) for n in names}


def test_enumeration_guard():
    with pytest.raises(ScaleExceeded):
        enumerate_drawings(complete_graph(8))
