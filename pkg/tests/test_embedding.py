import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chordal1p.catalog import PATTERN_NAMES, catalog, catalog_names, pattern
from chordal1p.chordal import is_k_tree, simplicial_vertices
from chordal1p.embedding import (
    Drawing,
    DrawingError,
    _keyed,
    drawing_code,
    drawing_from_rotation,
    drawing_isomorphisms,
    four_join,
    from_json,
    insertion_capacity,
    is_twin_pair,
    opposite_face,
    planar_skeleton,
    remove_vertex,
    to_json,
    twin_faces,
    uncrossed_face_skeleton,
    vacated_face,
    validate,
)
from chordal1p.graph import are_isomorphic, complete_graph
from chordal1p.oneplanarity import is_planar
from chordal1p.phi_family import generate_phi
from conftest import k6_minus_e

DRAWINGS = ("K5", "K6", "A1", "A2", "A3", "B1", "B2", "B3", "G0")
CROSSINGS = {"K5": 1, "K6": 3, "A1": 2, "A2": 3, "A3": 3, "B1": 3, "B2": 3, "B3": 4, "G0": 1}


def relabel(d: Drawing, perm) -> Drawing:
    """The same drawing with vertex v renamed perm[v]."""
    rot, _ = _keyed(d)

    def e(x):
        a, b = perm[x[0]], perm[x[1]]
        return (min(a, b), max(a, b))

    def arc(ek, s):
        # segment 0 is the piece at the smaller endpoint
        if d.graph.edges.index(ek) in d.crossed_edges and perm[ek[0]] > perm[ek[1]]:
            s = 1 - s
        return (e(ek), s)

    new = {}
    for key, lst in rot.items():
        nk = perm[key] if isinstance(key, int) else ("x",) + tuple(sorted((e(key[1]), e(key[2]))))
        new[nk] = [arc(ek, s) for ek, s in lst]
    edges = [e(x) for x in d.graph.edges]
    crossings = [(e(d.graph.edges[i]), e(d.graph.edges[j])) for i, j in d.crossings]
    return drawing_from_rotation(d.n, edges, crossings, new)


def planar_k4() -> Drawing:
    return is_planar(complete_graph(4))


# catalog ----------------------------------------------------------------------


@pytest.mark.parametrize("name", catalog_names())
def test_catalog_entries_validate(name):
    assert validate(catalog(name)) is True


@pytest.mark.parametrize("name", DRAWINGS)
def test_catalog_crossing_counts(name):
    assert catalog(name).crossing_count == CROSSINGS[name]


def test_catalog_graphs():
    for name in ("A1", "A2", "A3"):
        g = catalog(name).graph
        assert (g.n, g.m) == (6, 14) and are_isomorphic(g, k6_minus_e())
    for name in ("B1", "B2", "B3"):
        assert catalog(name).n == 7 and is_k_tree(catalog(name).graph, 4) is not None
    assert catalog("G0").n == 13
    assert catalog("K6").graph == complete_graph(6)


def test_unknown_catalog_name():
    with pytest.raises(KeyError):
        catalog("K7")


def test_order_seven_graphs_coincide():
    g1, g2, g3 = (catalog(n).graph for n in ("B1", "B2", "B3"))
    assert are_isomorphic(g1, g2) and are_isomorphic(g2, g3)


def test_typo_neighbourhood_is_a_four_clique():
    # u7 in B3 is joined to u1, u4, u5 and u3 (ids 0, 3, 4, 2); together a K4
    d = catalog("B3")
    assert sorted(d.graph.neighbors(6)) == [0, 2, 3, 4]
    assert d.graph.is_clique(sum(1 << v for v in (0, 2, 3, 4)))


# faces and validation -------------------------------------------------------------


@pytest.mark.parametrize("name", DRAWINGS)
def test_euler_and_face_degrees(name):
    d = catalog(name)
    assert d.n_nodes - len(d.arcs) + len(d.faces) == 2
    assert sum(f.size for f in d.faces) == 2 * len(d.arcs)
    for f in d.faces:
        assert f.is_crossed == any(v >= d.n for v in f.nodes)


def test_triangulated_entries():
    assert catalog("A1").is_triangulated()
    assert catalog("G0").is_triangulated()
    k4 = planar_k4()
    assert len(k4.faces) == 4 and k4.is_triangulated()


def test_skeletons():
    assert planar_skeleton(catalog("K6")).m == 15 - 6
    assert planar_skeleton(catalog("A1")).m == 14 - 4
    k4 = planar_k4()
    assert planar_skeleton(k4) == k4.graph


def _with(d: Drawing, **kw) -> Drawing:
    parts = dict(graph=d.graph, crossings=d.crossings, arcs=d.arcs, rotation=d.rotation)
    parts.update(kw)
    return Drawing(**parts)


def test_violations_are_named():
    d = catalog("K5")
    g = d.graph
    adj = (g.edge_index(0, 1), g.edge_index(0, 2))
    assert validate(_with(d, crossings=((adj[0], adj[0]),))).kind == "self_crossing"
    assert validate(_with(d, crossings=(adj,))).kind == "adjacent_edges_cross"
    assert validate(_with(d, crossings=((0, 99),))).kind == "unknown_edge"
    i, j = d.crossings[0]
    k = next(e for e in range(g.m) if not set(g.edges[e]) & set(g.edges[i]) and e != j)
    assert validate(_with(d, crossings=((i, j), (i, k)))).kind == "multiply_crossed"
    assert validate(_with(d, arcs=d.arcs[::-1])).kind == "arc_mismatch"
    assert validate(_with(d, rotation=d.rotation[:-1])).kind == "rotation_size"
    rot = list(d.rotation)
    rot[0], rot[1] = rot[1], rot[0]
    assert validate(_with(d, rotation=tuple(rot))).kind == "rotation_mismatch"
    c = d.n
    r = d.rotation[c]
    rot = list(d.rotation)
    rot[c] = (r[0], r[2], r[1], r[3])
    assert validate(_with(d, rotation=tuple(rot))).kind == "not_alternating"


def test_bad_rotation_is_not_spherical():
    d = catalog("K6")
    rot = list(d.rotation)
    r = rot[0]
    rot[0] = (r[0], r[2], r[1]) + tuple(r[3:])
    v = validate(_with(d, rotation=tuple(rot)))
    assert v.kind == "not_spherical" and not v


# codes and isomorphisms --------------------------------------------------------------


def test_codes_distinguish_catalog_drawings():
    codes = [drawing_code(catalog(n)) for n in DRAWINGS]
    assert len(set(codes)) == len(codes)


@pytest.mark.parametrize("name", DRAWINGS)
def test_mirror_has_same_code(name):
    d = catalog(name)
    m = d.mirror()
    assert validate(m) is True
    assert drawing_code(m) == drawing_code(d)


@given(st.sampled_from(DRAWINGS), st.randoms(use_true_random=False))
def test_code_is_invariant_under_relabelling(name, rnd):
    d = catalog(name)
    perm = list(range(d.n))
    rnd.shuffle(perm)
    e = relabel(d, perm)
    assert validate(e) is True
    assert drawing_code(e) == drawing_code(d)
    maps = drawing_isomorphisms(d, e)
    assert maps and any(list(m[: d.n]) == perm for m in maps)


def test_isomorphisms_preserve_adjacency():
    d = catalog("B1")
    for m in drawing_isomorphisms(d, d):
        assert all(d.graph.has_edge(m[u], m[v]) for u, v in d.graph.edges)


def test_code_refines_graph_isomorphism():
    atlas = generate_phi(10)
    members = list(atlas.members())
    for (c1, d1), (c2, d2) in itertools.combinations(members, 2):
        assert c1 != c2
        if d1.n == d2.n and not are_isomorphic(d1.graph, d2.graph):
            assert c1 != c2


def test_json_round_trip():
    for name in DRAWINGS:
        d = catalog(name)
        text = to_json(d)
        assert from_json(text) == d
        assert list(__import__("json").loads(text)) == ["n", "edges", "crossings", "rotation"]


def test_malformed_json():
    with pytest.raises(DrawingError):
        from_json('{"n": 3}')


# twin faces, 4-join ---------------------------------------------------------------------


def test_twin_face_counts():
    assert len(twin_faces(catalog("B1"))) == 4
    assert len(twin_faces(catalog("B2"))) == 4
    assert twin_faces(catalog("B3")) == []


def test_twin_faces_by_definition():
    for name in DRAWINGS + ("D1",):
        d = catalog(name)
        tri = [f for f in d.faces if f.size == 3 and not f.is_crossed]
        brute = set()
        for f1, f2 in itertools.permutations(tri, 2):
            e1 = {frozenset(d.graph.edges[d.arcs[a][2]]) for a, _ in f1.darts}
            e2 = {frozenset(d.graph.edges[d.arcs[a][2]]) for a, _ in f2.darts}
            quad = set(f1.nodes) | set(f2.nodes)
            if len(e1 & e2) == 1 and len(quad) == 4 and d.graph.is_clique(sum(1 << v for v in quad)):
                brute.add((f1.key, f2.key))
        assert {(a.key, b.key) for a, b in twin_faces(d)} == brute


def test_opposite_face_of_twin_is_twin():
    d = catalog("B1")
    for f1, f2 in twin_faces(d):
        a, b, _, _ = is_twin_pair(d, f1, f2)
        assert opposite_face(d, f1, (a, b)) == f2
    crossed = next(iter(d.crossed_edges))
    f = next(f for f in d.faces if any(d.arcs[x][2] == crossed for x, _ in f.darts))
    with pytest.raises(DrawingError):
        opposite_face(d, f, crossed)


def test_planar_k4_opposite_faces():
    d = planar_k4()
    for f in d.faces:
        for arc, _ in f.darts:
            g = opposite_face(d, f, d.arcs[arc][2])
            assert g != f and g.size == 3


def test_insertion_capacity():
    k6 = catalog("K6")
    crossed_triangles = [f for f in k6.faces if f.size == 3 and f.is_crossed]
    assert crossed_triangles and all(insertion_capacity(k6, f) < 4 for f in crossed_triangles)
    assert all(insertion_capacity(catalog("A2"), f) < 4 for f in catalog("A2").faces)
    k4 = planar_k4()
    assert all(insertion_capacity(k4, f) == 6 for f in k4.faces)


@pytest.mark.parametrize("seed", ["B1", "B2"])
def test_four_join_properties(seed):
    d = catalog(seed)
    codes = set()
    for f1, f2 in twin_faces(d):
        e = four_join(d, f1, f2)
        assert validate(e) is True
        assert e.n == d.n + 1 and e.crossing_count == d.crossing_count + 1
        assert e.graph.degree(d.n) == 4 and e.graph.is_clique(e.graph.adj[d.n])
        assert e.is_triangulated() == d.is_triangulated()
        assert is_k_tree(e.graph, 4) is not None
        # the new vertex bounds new twin faces
        assert any(d.n in f.nodes for pair in twin_faces(e) for f in pair)
        # deleting it gives back the original drawing
        assert drawing_code(remove_vertex(e, d.n)) == drawing_code(d)
        codes.add(drawing_code(e))
    assert len(codes) == 2


def test_four_join_direction_matters():
    d = catalog("B1")
    f1, f2 = twin_faces(d)[0]
    assert drawing_code(four_join(d, f1, f2)) != drawing_code(four_join(d, f2, f1))


def test_four_join_rejects_non_twins():
    d = catalog("G0")
    tri = [f for f in d.faces if not f.is_crossed]
    f1, f2 = next((a, b) for a, b in itertools.permutations(tri, 2) if not is_twin_pair(d, a, b))
    with pytest.raises(DrawingError):
        four_join(d, f1, f2)


def test_skeleton_of_planar_drawing_is_itself():
    d = planar_k4()
    s, verts = uncrossed_face_skeleton(d)
    assert verts == [0, 1, 2, 3] and drawing_code(s) == drawing_code(d)


@pytest.mark.parametrize("name", PATTERN_NAMES)
def test_patterns_are_two_diamonds(name):
    p = pattern(name)
    assert len(p.faces) == 4 and all(len(f) == 3 for f in p.faces)
    assert p.drawing.crossing_count == 0


def test_vacated_faces_of_family_members_are_uncrossed():
    for _, d in generate_phi(10).members():
        for v in simplicial_vertices(d.graph):
            _, f = vacated_face(d, v)
            assert not f.is_crossed and f.size == 3


@pytest.mark.parametrize("name", DRAWINGS)
def test_edge_bound(name):
    d = catalog(name)
    assert d.graph.m <= 4 * d.n - 8
