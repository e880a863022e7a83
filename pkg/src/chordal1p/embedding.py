"""Combinatorial 1-planar drawings.

A :class:`Drawing` stores a graph, the set of crossing edge pairs and a
rotation system of the *planarization*: every crossing becomes a node of
degree four, every edge becomes one arc (uncrossed) or two arcs (crossed).
Node ``v < n`` is graph vertex ``v``; node ``n + i`` is crossing ``i``.

Faces are traced with a single rule: arriving at a node along arc ``a``,
leave along the arc that follows ``a`` in that node's rotation list.
Coordinates never enter the model; :func:`drawing_from_coordinates` only
converts a picture into this combinatorial form.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .graph import Graph, GraphError, bits, from_edge_list

__all__ = [
    "Drawing",
    "Face",
    "DrawingCode",
    "DrawingError",
    "Violation",
    "validate",
    "faces",
    "planar_skeleton",
    "twin_faces",
    "is_twin_pair",
    "four_join",
    "opposite_face",
    "insertion_capacity",
    "uncrossed_face_skeleton",
    "restrict",
    "remove_vertex",
    "vacated_face",
    "drawing_code",
    "drawing_isomorphisms",
    "drawing_from_coordinates",
    "drawing_from_rotation",
    "to_json",
    "from_json",
]


class DrawingError(ValueError):
    """Raised when an operation's precondition on a drawing fails."""


@dataclass(frozen=True)
class Violation:
    kind: str
    location: object
    message: str

    def __bool__(self) -> bool:  # a violation is a failed check
        return False


@dataclass(frozen=True)
class Face:
    """A face as its cyclic list of darts ``(arc, forward)``.

    ``nodes[i]`` is the tail of ``darts[i]``; ``corners[i]`` is
    ``(node, incoming arc, outgoing arc)``.
    """

    darts: tuple[tuple[int, bool], ...]
    nodes: tuple[int, ...]
    n_vertices: int = field(repr=False)

    @property
    def is_crossed(self) -> bool:
        return any(v >= self.n_vertices for v in self.nodes)

    @property
    def size(self) -> int:
        return len(self.nodes)

    @property
    def corners(self) -> tuple[tuple[int, int, int], ...]:
        k = len(self.darts)
        return tuple(
            (self.nodes[i], self.darts[i - 1][0], self.darts[i][0]) for i in range(k)
        )

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self.nodes if v < self.n_vertices)

    @property
    def key(self) -> tuple[int, bool]:
        return min(self.darts)


@dataclass(frozen=True, order=True)
class DrawingCode:
    """Canonical identifier of a drawing up to sphere homeomorphism."""

    code: bytes

    def hex(self) -> str:
        return self.code.hex()


Arc = tuple[int, int, int, int]  # (tail node, head node, edge index, segment)


@dataclass(frozen=True, eq=False)
class Drawing:
    graph: Graph
    crossings: tuple[tuple[int, int], ...]
    arcs: tuple[Arc, ...]
    rotation: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def n_nodes(self) -> int:
        return self.graph.n + len(self.crossings)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @cached_property
    def crossed_edges(self) -> frozenset[int]:
        return frozenset(e for pair in self.crossings for e in pair)

    @cached_property
    def _pos(self) -> list[dict[int, int]]:
        return [{a: i for i, a in enumerate(r)} for r in self.rotation]

    def other_end(self, arc: int, node: int) -> int:
        p, q = self.arcs[arc][:2]
        return q if p == node else p

    def next_dart(self, arc: int, forward: bool) -> tuple[int, bool]:
        head = self.arcs[arc][1] if forward else self.arcs[arc][0]
        r = self.rotation[head]
        nxt = r[(self._pos[head][arc] + 1) % len(r)]
        return nxt, self.arcs[nxt][0] == head

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        seen = set()
        out = []
        for a in range(len(self.arcs)):
            for fwd in (True, False):
                if (a, fwd) in seen:
                    continue
                darts = []
                d = (a, fwd)
                while d not in seen:
                    seen.add(d)
                    darts.append(d)
                    d = self.next_dart(*d)
                nodes = tuple(self.arcs[x][0] if f else self.arcs[x][1] for x, f in darts)
                out.append(Face(tuple(darts), nodes, self.n))
        return tuple(out)

    @cached_property
    def dart_face(self) -> dict[tuple[int, bool], int]:
        return {d: i for i, f in enumerate(self.faces) for d in f.darts}

    def edge_arcs(self, e: int) -> list[int]:
        return [i for i, a in enumerate(self.arcs) if a[2] == e]

    def is_triangulated(self) -> bool:
        return all(f.size == 3 for f in self.faces)

    def uncrossed_faces(self) -> list[Face]:
        return [f for f in self.faces if not f.is_crossed]

    def mirror(self) -> "Drawing":
        return Drawing(self.graph, self.crossings, self.arcs, tuple(_norm_cycle(tuple(reversed(r))) for r in self.rotation))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Drawing)
            and self.graph == other.graph
            and self.crossings == other.crossings
            and self.arcs == other.arcs
            and self.rotation == other.rotation
        )

    def __hash__(self) -> int:
        return hash((self.graph, self.crossings, self.rotation))

    def __repr__(self) -> str:
        return f"Drawing(n={self.n}, m={self.graph.m}, crossings={self.crossing_count})"


def _norm_cycle(r: Sequence[int]) -> tuple[int, ...]:
    if not r:
        return ()
    i = min(range(len(r)), key=r.__getitem__)
    return tuple(r[i:]) + tuple(r[:i])


# ---------------------------------------------------------------------------
# building drawings from keyed rotation systems
# ---------------------------------------------------------------------------
#
# Editing works on a keyed form: vertex nodes are ints, a crossing node is
# ("x", e, f) with e < f edge tuples, and an arc is (edge tuple, segment).
# Segment 0 of a crossed edge (u, v), u < v, runs from u to the crossing.


def _xnode(e, f):
    return ("x",) + tuple(sorted((tuple(e), tuple(f))))


def drawing_from_rotation(
    n: int,
    edges: Iterable[tuple[int, int]],
    crossings: Iterable[tuple[tuple[int, int], tuple[int, int]]],
    rot: dict,
) -> Drawing:
    """Assemble a :class:`Drawing` from a keyed rotation system.

    ``rot`` maps each node key to the cyclic list of its arc keys.  Node keys
    are vertex ids or ``("x", e, f)``; arc keys are ``(edge, segment)``.
    """
    g = from_edge_list(n, edges)
    cross_pairs = []
    partner: dict[tuple[int, int], tuple[int, int]] = {}
    for e, f in crossings:
        e, f = tuple(sorted(e)), tuple(sorted(f))
        if e == f:
            raise DrawingError(f"edge {e} crosses itself")
        for x in (e, f):
            if x in partner:
                raise DrawingError(f"edge {x} is crossed more than once")
        partner[e], partner[f] = f, e
        i, j = sorted((g.edge_index(*e), g.edge_index(*f)))
        cross_pairs.append((i, j))
    cross_pairs.sort()
    xindex = {}
    for k, (i, j) in enumerate(cross_pairs):
        xindex[_xnode(g.edges[i], g.edges[j])] = n + k
    arcs: list[Arc] = []
    arc_index = {}
    for ei, (u, v) in enumerate(g.edges):
        if (u, v) in partner:
            c = xindex[_xnode((u, v), partner[(u, v)])]
            arc_index[((u, v), 0)] = len(arcs)
            arcs.append((u, c, ei, 0))
            arc_index[((u, v), 1)] = len(arcs)
            arcs.append((c, v, ei, 1))
        else:
            arc_index[((u, v), 0)] = len(arcs)
            arcs.append((u, v, ei, 0))
    n_nodes = n + len(cross_pairs)
    rotation: list[tuple[int, ...]] = [()] * n_nodes
    for key, lst in rot.items():
        node = key if isinstance(key, int) else xindex.get(key)
        if node is None:
            raise DrawingError(f"rotation given for unknown node {key}")
        try:
            rotation[node] = _norm_cycle([arc_index[(tuple(a[0]), a[1])] for a in lst])
        except KeyError as exc:
            raise DrawingError(f"unknown arc {exc.args[0]} at node {key}") from None
    return Drawing(g, tuple(cross_pairs), tuple(arcs), tuple(rotation))


def _keyed(d: Drawing) -> tuple[dict, list[tuple]]:
    """Keyed rotation of ``d`` plus the node key of every node index."""
    g = d.graph
    node_key: list = list(range(d.n))
    for i, j in d.crossings:
        node_key.append(_xnode(g.edges[i], g.edges[j]))
    arc_key = [(g.edges[e], s) for (_, _, e, s) in d.arcs]
    rot = {node_key[v]: [arc_key[a] for a in r] for v, r in enumerate(d.rotation)}
    return rot, node_key


def _crossing_tuples(d: Drawing) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    return [(d.graph.edges[i], d.graph.edges[j]) for i, j in d.crossings]


# ---------------------------------------------------------------------------
# validation and basic queries
# ---------------------------------------------------------------------------


def validate(d: Drawing) -> Violation | bool:
    """``True`` if ``d`` is a good 1-planar drawing on the sphere, else the first :class:`Violation`."""
    g = d.graph
    seen: dict[int, int] = {}
    for k, (i, j) in enumerate(d.crossings):
        if not (0 <= i < g.m and 0 <= j < g.m):
            return Violation("unknown_edge", k, f"crossing {k} names a missing edge")
        if i == j:
            return Violation("self_crossing", k, f"edge {g.edges[i]} crosses itself")
        for e in (i, j):
            if e in seen:
                return Violation(
                    "multiply_crossed", g.edges[e], f"edge {g.edges[e]} is crossed more than once"
                )
            seen[e] = k
        if set(g.edges[i]) & set(g.edges[j]):
            return Violation(
                "adjacent_edges_cross", (g.edges[i], g.edges[j]), "adjacent edges cross"
            )
    # arcs
    expect: list[Arc] = []
    for ei, (u, v) in enumerate(g.edges):
        if ei in seen:
            c = g.n + seen[ei]
            expect += [(u, c, ei, 0), (c, v, ei, 1)]
        else:
            expect.append((u, v, ei, 0))
    if list(d.arcs) != expect:
        return Violation("arc_mismatch", None, "arcs do not match edges and crossings")
    if len(d.rotation) != d.n_nodes:
        return Violation("rotation_size", None, "rotation needs one entry per node")
    incident: list[list[int]] = [[] for _ in range(d.n_nodes)]
    for a, (p, q, _, _) in enumerate(d.arcs):
        incident[p].append(a)
        incident[q].append(a)
    for v in range(d.n_nodes):
        if sorted(d.rotation[v]) != incident[v]:
            return Violation("rotation_mismatch", v, f"rotation at node {v} is not its incident arcs")
    for k, (i, j) in enumerate(d.crossings):
        c = g.n + k
        owners = [d.arcs[a][2] for a in d.rotation[c]]
        if len(owners) != 4 or owners[0] != owners[2] or owners[1] != owners[3] or owners[0] == owners[1]:
            return Violation("not_alternating", c, f"crossing node {c} does not alternate its edges")
    # sphere check per connected component of the planarization
    comp = _node_components(d)
    verts: dict[int, int] = {}
    edges: dict[int, int] = {}
    nfaces: dict[int, int] = {}
    for v in range(d.n_nodes):
        verts[comp[v]] = verts.get(comp[v], 0) + 1
    for p, _, _, _ in d.arcs:
        edges[comp[p]] = edges.get(comp[p], 0) + 1
    for f in d.faces:
        c = comp[f.nodes[0]]
        nfaces[c] = nfaces.get(c, 0) + 1
    for c in verts:
        if edges.get(c, 0) == 0:
            continue
        if verts[c] - edges[c] + nfaces.get(c, 0) != 2:
            return Violation("not_spherical", c, "rotation system does not describe a sphere embedding")
    return True


def _node_components(d: Drawing) -> list[int]:
    comp = [-1] * d.n_nodes
    nxt = 0
    for s in range(d.n_nodes):
        if comp[s] >= 0:
            continue
        comp[s] = nxt
        stack = [s]
        while stack:
            v = stack.pop()
            for a in d.rotation[v]:
                w = d.other_end(a, v)
                if comp[w] < 0:
                    comp[w] = nxt
                    stack.append(w)
        nxt += 1
    return comp


def faces(d: Drawing) -> tuple[Face, ...]:
    return d.faces


def planar_skeleton(d: Drawing) -> Graph:
    """The graph minus every crossed edge."""
    keep = [e for i, e in enumerate(d.graph.edges) if i not in d.crossed_edges]
    return from_edge_list(d.n, keep)


def _triangle(d: Drawing, f: Face) -> tuple[int, int, int] | None:
    if f.size != 3 or f.is_crossed:
        return None
    return f.nodes  # type: ignore[return-value]


def is_twin_pair(d: Drawing, f1: Face, f2: Face) -> tuple[int, int, int, int] | None:
    """``(a, b, v1, v2)`` if ``f1 = [a b v1]`` and ``f2 = [a b v2]`` are twin faces."""
    t1, t2 = _triangle(d, f1), _triangle(d, f2)
    if t1 is None or t2 is None or f1 == f2:
        return None
    e1 = {d.arcs[a][2] for a, _ in f1.darts}
    e2 = {d.arcs[a][2] for a, _ in f2.darts}
    shared = e1 & e2
    if len(shared) != 1:
        return None
    a, b = d.graph.edges[shared.pop()]
    v1 = next(v for v in t1 if v not in (a, b))
    v2 = next(v for v in t2 if v not in (a, b))
    if v1 == v2:
        return None
    mask = (1 << a) | (1 << b) | (1 << v1) | (1 << v2)
    if not d.graph.is_clique(mask):
        return None
    return a, b, v1, v2


def twin_faces(d: Drawing) -> list[tuple[Face, Face]]:
    """All ordered pairs of twin faces."""
    tri = [f for f in d.faces if _triangle(d, f) is not None]
    out = []
    for f1 in tri:
        for f2 in tri:
            if f1 is not f2 and is_twin_pair(d, f1, f2):
                out.append((f1, f2))
    return out


def opposite_face(d: Drawing, f: Face, e: int | tuple[int, int]) -> Face:
    """The other face along uncrossed edge ``e`` of ``f``."""
    if not isinstance(e, int):
        e = d.graph.edge_index(*e)
    if e in d.crossed_edges:
        raise DrawingError(f"edge {d.graph.edges[e]} is crossed")
    arc = d.edge_arcs(e)[0]
    if (arc, True) in f.darts:
        other = (arc, False)
    elif (arc, False) in f.darts:
        other = (arc, True)
    else:
        raise DrawingError(f"edge {d.graph.edges[e]} is not on the face boundary")
    return d.faces[d.dart_face[other]]


def insertion_capacity(d: Drawing, f: Face) -> int:
    """Uncrossed corners of ``f`` plus its uncrossed edges whose opposite face has >= 3 uncrossed corners.

    Bounds the degree of a vertex that can be added inside ``f`` keeping the
    drawing 1-planar: each new edge either ends at a corner of ``f`` or
    crosses one uncrossed boundary edge into the face beyond.
    """
    total = len(set(f.vertices))
    edges = {d.arcs[a][2] for a, _ in f.darts}
    for e in sorted(edges):
        if e in d.crossed_edges:
            continue
        g = opposite_face(d, f, e)
        if g is not f and len(set(g.vertices)) >= 3:
            total += 1
    return total


# ---------------------------------------------------------------------------
# editing
# ---------------------------------------------------------------------------


def four_join(d: Drawing, f1: Face, f2: Face) -> Drawing:
    """Insert a vertex into twin face ``f1``; its fourth edge crosses the shared edge into ``f2``.

    The new vertex gets id ``n``.  Its edges to the three corners of ``f1``
    stay inside ``f1``; the edge to the far corner of ``f2`` crosses the
    shared edge ``ab``.
    """
    twin = is_twin_pair(d, f1, f2)
    if twin is None:
        raise DrawingError("faces are not twin faces")
    a, b, v1, v2 = twin
    x = d.n
    ab = (min(a, b), max(a, b))
    xv2 = (v2, x)
    cnode = _xnode(ab, xv2)
    rot, node_key = _keyed(d)

    arc_key = [(d.graph.edges[e], s) for (_, _, e, s) in d.arcs]
    # corners of f1 and f2 keyed, before editing
    corner1 = {node_key[v]: (arc_key[i], arc_key[o]) for v, i, o in f1.corners}
    corner2 = {node_key[v]: (arc_key[i], arc_key[o]) for v, i, o in f2.corners}
    seq1 = [node_key[v] for v in f1.nodes]  # traversal order of f1

    # split ab at the crossing: at the larger endpoint the arc becomes segment 1
    old = (ab, 0)
    hi_key = (ab, 1)

    def rename(k):
        return hi_key if k == old else k

    hi = ab[1]
    rot[hi] = [rename(k) for k in rot[hi]]
    for cmap in (corner1, corner2):
        if hi in cmap:
            i, o = cmap[hi]
            cmap[hi] = (rename(i), rename(o))
    f1_forward = seq1.index(ab[1]) == (seq1.index(ab[0]) + 1) % 3  # f1 runs lo -> hi
    lo_arc, hi_arc = (ab, 0), (ab, 1)
    new_x = ((xv2, 1))  # crossing -> x
    new_v2 = ((xv2, 0))  # v2 -> crossing
    if f1_forward:
        rot[cnode] = [lo_arc, new_x, hi_arc, new_v2]
    else:
        rot[cnode] = [lo_arc, new_v2, hi_arc, new_x]

    def insert_after(node, after, key):
        lst = rot[node]
        lst.insert(lst.index(after) + 1, key)

    for t in (a, b, v1):
        e = (min(t, x), max(t, x))
        insert_after(t, corner1[t][0], (e, 0))
    insert_after(v2, corner2[v2][0], new_v2)
    # around x: reverse of f1's traversal, with the crossing between a and b
    full = []
    for k in seq1:
        full.append(k)
        nxt = seq1[(seq1.index(k) + 1) % 3]
        if {k, nxt} == {a, b}:
            full.append(cnode)
    xrot = []
    for k in reversed(full):
        if k == cnode:
            xrot.append(new_x)
        else:
            xrot.append(((min(k, x), max(k, x)), 0))
    rot[x] = xrot
    edges = list(d.graph.edges) + [(a, x), (b, x), (v1, x), (v2, x)]
    crossings = _crossing_tuples(d) + [(ab, xv2)]
    return drawing_from_rotation(d.n + 1, edges, crossings, rot)


def restrict(d: Drawing, keep_vertices: Iterable[int], keep_edges: Iterable[int] | None = None) -> Drawing:
    """Sub-drawing on the given vertices and edge indices, vertices relabelled in order.

    Edges with an endpoint outside ``keep_vertices`` are dropped.  A crossing
    with one of its edges dropped disappears and the other edge's two
    segments merge; rotation order of surviving arcs is preserved.
    """
    keepv = sorted(set(keep_vertices))
    kv = set(keepv)
    if keep_edges is None:
        ke = {i for i, (u, v) in enumerate(d.graph.edges) if u in kv and v in kv}
    else:
        ke = {i for i in keep_edges if set(d.graph.edges[i]) <= kv}
    rot, node_key = _keyed(d)
    keep_keys = {d.graph.edges[i] for i in ke}
    new_rot = {}
    merged_hi = set()
    crossings = []
    for i, j in d.crossings:
        e, f = d.graph.edges[i], d.graph.edges[j]
        node = _xnode(e, f)
        if e in keep_keys and f in keep_keys:
            crossings.append((e, f))
            new_rot[node] = rot[node]
        elif e in keep_keys or f in keep_keys:
            merged_hi.add(e if e in keep_keys else f)
    for v in keepv:
        lst = []
        for ek, s in rot[v]:
            if ek not in keep_keys:
                continue
            if ek in merged_hi and s == 1:
                s = 0
            lst.append((ek, s))
        new_rot[v] = lst
    relabel = {v: i for i, v in enumerate(keepv)}

    def rl_edge(e):
        u, v = relabel[e[0]], relabel[e[1]]
        return (min(u, v), max(u, v))

    final_rot = {}
    for key, lst in new_rot.items():
        nk = relabel[key] if isinstance(key, int) else _xnode(rl_edge(key[1]), rl_edge(key[2]))
        final_rot[nk] = [(rl_edge(ek), s) for ek, s in lst]
    edges = [rl_edge(e) for e in keep_keys]
    crossings = [(rl_edge(e), rl_edge(f)) for e, f in crossings]
    return drawing_from_rotation(len(keepv), edges, crossings, final_rot)


def remove_vertex(d: Drawing, v: int) -> Drawing:
    """``D | (G - v)``, vertices above ``v`` shift down by one."""
    return restrict(d, [w for w in range(d.n) if w != v])


def vacated_face(d: Drawing, v: int) -> tuple[Drawing, Face]:
    """``D - v`` and its face that contained ``v``.

    Any dart next to ``v`` on a surviving edge keeps its side, so its face in
    ``D - v`` is the region left by ``v``.
    """
    g = d.graph
    gone = {i for i, e in enumerate(g.edges) if v in e}
    if not gone:
        raise DrawingError(f"vertex {v} is isolated")
    small = remove_vertex(d, v)
    for f in d.faces:
        if v not in f.nodes:
            continue
        for arc, fwd in f.darts:
            _, _, e, seg = d.arcs[arc]
            if e in gone:
                continue
            a, b = (x - (x > v) for x in g.edges[e])
            ne = small.graph.edge_index(a, b)
            arcs = small.edge_arcs(ne)
            narc = arcs[seg] if len(arcs) == 2 else arcs[0]
            return small, small.faces[small.dart_face[(narc, fwd)]]
    raise DrawingError(f"no surviving edge borders a face at {v}")  # pragma: no cover


def uncrossed_face_skeleton(d: Drawing) -> tuple[Drawing, list[int]]:
    """The sub-drawing on edges that bound some uncrossed face.

    Returns the drawing and the original id of each of its vertices.
    """
    ufaces = d.uncrossed_faces()
    if not ufaces:
        raise DrawingError("drawing has no uncrossed face")
    edges = set()
    for f in ufaces:
        for a, _ in f.darts:
            edges.add(d.arcs[a][2])
    verts = sorted({v for e in edges for v in d.graph.edges[e]})
    return restrict(d, verts, edges), verts


# ---------------------------------------------------------------------------
# canonical codes
# ---------------------------------------------------------------------------


def _traverse(d: Drawing, start: int, arc: int, sign: int) -> tuple[list[int], list[int]]:
    n = d.n
    pos = d._pos
    label = {start: 0}
    ref = {start: pos[start][arc]}
    order = [start]
    code: list[int] = []
    i = 0
    while i < len(order):
        v = order[i]
        r = d.rotation[v]
        k = len(r)
        p = ref[v]
        code.append(1 if v >= n else 0)
        code.append(k)
        for j in range(k):
            a = r[(p + sign * j) % k]
            w = d.other_end(a, v)
            if w not in label:
                label[w] = len(order)
                order.append(w)
                ref[w] = pos[w][a]
            code.append(label[w])
        i += 1
    return code, order


def _start_darts(d: Drawing) -> list[tuple[int, int]]:
    classes: dict[tuple[int, int], list[int]] = {}
    for v in range(d.n_nodes):
        if d.rotation[v]:
            classes.setdefault((1 if v >= d.n else 0, len(d.rotation[v])), []).append(v)
    key = min(classes, key=lambda c: (len(classes[c]), c))
    return [(v, a) for v in classes[key] for a in d.rotation[v]]


def _check_connected(d: Drawing) -> None:
    comp = _node_components(d)
    if len(set(comp)) != 1:
        raise DrawingError("planarization is disconnected")


def _encode(code: list[int]) -> bytes:
    return b"".join(x.to_bytes(2, "big") for x in code)


def drawing_code(d: Drawing) -> DrawingCode:
    """Canonical code, equal exactly for drawings related by a sphere homeomorphism.

    Minimum over traversals from every start dart of a fixed node class, in
    both orientations, so reflections are identified.
    """
    _check_connected(d)
    best = None
    for v, a in _start_darts(d):
        for sign in (1, -1):
            code, _ = _traverse(d, v, a, sign)
            if best is None or code < best:
                best = code
    return DrawingCode(_encode([d.n, d.crossing_count] + best))


def drawing_isomorphisms(d1: Drawing, d2: Drawing) -> list[list[int]]:
    """Every node map ``d1 -> d2`` induced by a sphere homeomorphism (possibly reflecting)."""
    _check_connected(d1)
    _check_connected(d2)
    if (d1.n, d1.n_nodes, len(d1.arcs)) != (d2.n, d2.n_nodes, len(d2.arcs)):
        return []
    # fix one canonical traversal of d2, match every traversal of d1 against it
    v2, a2 = _start_darts(d2)[0]
    target, order2 = _traverse(d2, v2, a2, 1)
    out = []
    seen = set()
    for v in range(d1.n_nodes):
        for a in d1.rotation[v]:
            for sign in (1, -1):
                code, order1 = _traverse(d1, v, a, sign)
                if code == target:
                    m = [0] * d1.n_nodes
                    for x, y in zip(order1, order2):
                        m[x] = y
                    t = tuple(m)
                    if t not in seen:
                        seen.add(t)
                        out.append(m)
    return out


# ---------------------------------------------------------------------------
# geometry -> combinatorics
# ---------------------------------------------------------------------------


def _seg_intersect(p, q, r, s, eps=1e-9):
    # parameters (t, u) of the proper intersection of segments pq and rs
    dx1, dy1 = q[0] - p[0], q[1] - p[1]
    dx2, dy2 = s[0] - r[0], s[1] - r[1]
    den = dx1 * dy2 - dy1 * dx2
    if abs(den) < eps:
        return None
    t = ((r[0] - p[0]) * dy2 - (r[1] - p[1]) * dx2) / den
    u = ((r[0] - p[0]) * dy1 - (r[1] - p[1]) * dx1) / den
    if eps < t < 1 - eps and eps < u < 1 - eps:
        return t, u
    return None


def bezier_path(p0, p3, out_deg: float, in_deg: float, looseness: float = 1.0, steps: int = 64):
    """Polyline of a curve leaving ``p0`` at angle ``out_deg`` and entering ``p3`` from ``in_deg``."""
    dist = math.dist(p0, p3)
    ln = 0.3915 * looseness * dist
    p1 = (p0[0] + ln * math.cos(math.radians(out_deg)), p0[1] + ln * math.sin(math.radians(out_deg)))
    p2 = (p3[0] + ln * math.cos(math.radians(in_deg)), p3[1] + ln * math.sin(math.radians(in_deg)))
    pts = []
    for i in range(steps + 1):
        t = i / steps
        c = ((1 - t) ** 3, 3 * (1 - t) ** 2 * t, 3 * (1 - t) * t * t, t ** 3)
        pts.append(
            (
                c[0] * p0[0] + c[1] * p1[0] + c[2] * p2[0] + c[3] * p3[0],
                c[0] * p0[1] + c[1] * p1[1] + c[2] * p2[1] + c[3] * p3[1],
            )
        )
    return pts


def drawing_from_coordinates(
    n: int,
    edges: Sequence[tuple[int, int]],
    positions: dict[int, tuple[float, float]] | Sequence[tuple[float, float]],
    paths: dict[tuple[int, int], Sequence[tuple[float, float]]] | None = None,
) -> Drawing:
    """Read a combinatorial drawing off a picture.

    Edges are straight unless ``paths`` gives a polyline (from the smaller
    endpoint to the larger).  Crossings are located geometrically; the
    rotation at every node is the counter-clockwise order of its arcs.
    """
    paths = dict(paths or {})
    poly = {}
    for u, v in edges:
        e = (min(u, v), max(u, v))
        if e in paths:
            pts = list(paths[e])
        elif (e[1], e[0]) in paths:
            pts = list(reversed(paths[(e[1], e[0])]))
        else:
            pts = [tuple(positions[e[0]]), tuple(positions[e[1]])]
        poly[e] = pts
    keys = sorted(poly)
    hits: dict[tuple[int, int], list] = {e: [] for e in keys}
    for i, e in enumerate(keys):
        for f in keys[i + 1:]:
            pe, pf = poly[e], poly[f]
            for s in range(len(pe) - 1):
                for t in range(len(pf) - 1):
                    r = _seg_intersect(pe[s], pe[s + 1], pf[t], pf[t + 1])
                    if r is None:
                        continue
                    if set(e) & set(f):
                        raise DrawingError(f"adjacent edges {e} and {f} cross")
                    hits[e].append((s + r[0], f))
                    hits[f].append((t + r[1], e))
    crossings = []
    for e in keys:
        if len(hits[e]) > 1:
            raise DrawingError(f"edge {e} is crossed {len(hits[e])} times")
        if hits[e] and e < hits[e][0][1]:
            crossings.append((e, hits[e][0][1]))

    def direction(pts, at, forward):
        # unit direction leaving parameter ``at`` along the polyline
        s = int(at)
        frac = at - s
        if forward:
            if frac > 1e-12 or s == len(pts) - 1:
                a, b = pts[min(s, len(pts) - 2)], pts[min(s, len(pts) - 2) + 1]
            else:
                a, b = pts[s], pts[s + 1]
        else:
            if frac > 1e-12:
                a, b = pts[s + 1], pts[s]
            else:
                a, b = pts[s], pts[s - 1]
        return math.atan2(b[1] - a[1], b[0] - a[0])

    ends: dict = {}
    for e in keys:
        pts = poly[e]
        last = len(pts) - 1
        if hits[e]:
            at, f = hits[e][0]
            c = _xnode(e, f)
            ends.setdefault(e[0], []).append((direction(pts, 0, True), (e, 0)))
            ends.setdefault(c, []).append((direction(pts, at, False), (e, 0)))
            ends.setdefault(c, []).append((direction(pts, at, True), (e, 1)))
            ends.setdefault(e[1], []).append((direction(pts, last, False), (e, 1)))
        else:
            ends.setdefault(e[0], []).append((direction(pts, 0, True), (e, 0)))
            ends.setdefault(e[1], []).append((direction(pts, last, False), (e, 0)))
    rot = {k: [a for _, a in sorted(v)] for k, v in ends.items()}
    return drawing_from_rotation(n, keys, crossings, rot)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def to_json(d: Drawing) -> str:
    """Serialise in the canonical key order used by every command-line tool."""
    obj = {
        "n": d.n,
        "edges": [list(e) for e in d.graph.edges],
        "crossings": [list(c) for c in d.crossings],
        "rotation": {
            "nodes": list(range(d.n_nodes)),
            "arcs": [list(a) for a in d.arcs],
            "order": [list(r) for r in d.rotation],
        },
    }
    return json.dumps(obj, separators=(",", ":"))


def from_json(text: str | dict) -> Drawing:
    obj = json.loads(text) if isinstance(text, str) else text
    try:
        g = from_edge_list(obj["n"], obj["edges"])
        if [list(e) for e in g.edges] != [sorted(e) for e in obj["edges"]]:
            raise DrawingError("edges must be listed sorted and without repeats")
        rot = obj["rotation"]
        return Drawing(
            g,
            tuple(tuple(c) for c in obj["crossings"]),
            tuple(tuple(a) for a in rot["arcs"]),
            tuple(tuple(r) for r in rot["order"]),
        )
    except (KeyError, TypeError) as exc:
        raise DrawingError(f"malformed drawing JSON: {exc}") from None
    except GraphError as exc:
        raise DrawingError(str(exc)) from None
