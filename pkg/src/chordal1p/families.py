"""Example families and seeded random corpora.

Random generators draw from :class:`random.Random` (MT19937) seeded with the
caller's integer; the sequence of draws is fixed per generator version, see
``GENERATOR_VERSION``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .catalog import catalog
from .chordal import simplicial_vertices
from .embedding import Drawing, DrawingError, Face, drawing_from_rotation
from .graph import Graph, bits, canonical_form, complete_graph

__all__ = [
    "GENERATOR_VERSION",
    "GlueSpec",
    "g0",
    "g0_cut_set",
    "qualifying_faces",
    "glue_g0",
    "glued_family",
    "random_k_tree",
    "two_simplicial_k_tree",
    "all_k_trees",
    "k_cliques",
    "RetryBudgetExceeded",
]

GENERATOR_VERSION = 1

# the five vertices whose removal leaves six components
_G0_CUT = (0, 1, 3, 5, 7)
_G0_OUTER = (0, 11, 12)


class RetryBudgetExceeded(RuntimeError):
    pass


def g0() -> tuple[Graph, Drawing]:
    d = catalog("G0")
    return d.graph, d


def g0_cut_set() -> tuple[int, ...]:
    return _G0_CUT


def qualifying_faces(d: Drawing) -> list[Face]:
    """Uncrossed triangular faces whose three boundary edges are uncrossed."""
    out = []
    for f in d.faces:
        if f.size != 3 or f.is_crossed:
            continue
        if all(d.arcs[a][2] not in d.crossed_edges for a, _ in f.darts):
            out.append(f)
    return out


@dataclass(frozen=True)
class GlueSpec:
    """Where to attach a fresh copy of G0.

    ``correspondence`` maps each corner of ``face`` to one of 0, 11, 12.
    """

    host: Drawing
    face: Face
    correspondence: dict

    def check(self) -> None:
        f = self.face
        if f not in self.host.faces:
            raise DrawingError("face does not belong to the host drawing")
        if f.is_crossed or f.size != 3:
            raise DrawingError("host face must be an uncrossed triangle")
        if any(self.host.arcs[a][2] in self.host.crossed_edges for a, _ in f.darts):
            raise DrawingError("host face has a crossed boundary edge")
        if set(self.correspondence) != set(f.nodes) or set(self.correspondence.values()) != set(_G0_OUTER):
            raise DrawingError("correspondence must map the face corners onto 0, 11, 12")


def _keyed_rotation(d: Drawing) -> dict:
    g = d.graph
    out = {}
    for v, r in enumerate(d.rotation):
        if v < d.n:
            key = v
        else:
            i, j = d.crossings[v - d.n]
            key = ("x",) + tuple(sorted((g.edges[i], g.edges[j])))
        out[key] = [(g.edges[d.arcs[a][2]], d.arcs[a][3]) for a in r]
    return out


def _map_arc(arc, mapping, crossed):
    (u, v), s = arc
    a, b = mapping[u], mapping[v]
    if a > b and (u, v) in crossed:
        s = 1 - s
    return ((min(a, b), max(a, b)), s)


def glue_g0(recipe: GlueSpec) -> tuple[Graph, Drawing]:
    """Paste a copy of G0 into the host face, identifying its corners with 0, 11, 12.

    G0's outer triangle is traversed against the host face so that the copy
    fills the face; G0 is mirrored when needed.  Copy vertices other than
    0, 11, 12 get ids after the host's.
    """
    recipe.check()
    host = recipe.host
    _, gd = g0()
    outer = next(f for f in gd.faces if set(f.nodes) == set(_G0_OUTER))
    sigma = recipe.correspondence
    r, p, q = recipe.face.nodes
    # host face r -> p -> q needs the copy's outer face to run sigma(q) -> sigma(p) -> sigma(r)
    want = [sigma[q], sigma[p], sigma[r]]
    o = list(outer.nodes)
    i = o.index(want[0])
    if o[i:] + o[:i] != want:
        gd = gd.mirror()
        outer = next(f for f in gd.faces if set(f.nodes) == set(_G0_OUTER))
    inv = {t: h for h, t in sigma.items()}
    mapping = {}
    nxt = host.n
    for t in range(gd.n):
        if t in inv:
            mapping[t] = inv[t]
        else:
            mapping[t] = nxt
            nxt += 1
    g_crossed = {gd.graph.edges[e] for e in gd.crossed_edges}
    rot = _keyed_rotation(host)
    grot = _keyed_rotation(gd)
    # corners of the two triangles, keyed
    host_corner = {}
    for v, a_in, a_out in recipe.face.corners:
        host_corner[v] = (host.graph.edges[host.arcs[a_in][2]], 0)
    g_corner = {}
    for v, a_in, a_out in outer.corners:
        g_corner[v] = ((gd.graph.edges[gd.arcs[a_in][2]], 0), (gd.graph.edges[gd.arcs[a_out][2]], 0))
    new_rot = dict(rot)
    for t in _G0_OUTER:
        h = mapping[t]
        lst = grot[t]
        a_in, a_out = g_corner[t]
        k = lst.index(a_out)
        cyc = lst[k:] + lst[:k]  # a_out, interior..., a_in
        interior = [_map_arc(a, mapping, g_crossed) for a in cyc[1:-1]]
        hl = list(new_rot[h])
        at = hl.index(host_corner[h])
        new_rot[h] = hl[: at + 1] + interior + hl[at + 1:]
    for key, lst in grot.items():
        if isinstance(key, int):
            if key in _G0_OUTER:
                continue
            nk = mapping[key]
        else:
            e1, e2 = (_map_arc((e, 0), mapping, set())[0] for e in key[1:])
            nk = ("x",) + tuple(sorted((e1, e2)))
        new_rot[nk] = [_map_arc(a, mapping, g_crossed) for a in lst]
    edges = set(host.graph.edges)
    for u, v in gd.graph.edges:
        a, b = mapping[u], mapping[v]
        edges.add((min(a, b), max(a, b)))
    crossings = [(host.graph.edges[i], host.graph.edges[j]) for i, j in host.crossings]
    for i, j in gd.crossings:
        e, f = gd.graph.edges[i], gd.graph.edges[j]
        crossings.append(tuple(_map_arc((x, 0), mapping, set())[0] for x in (e, f)))
    d = drawing_from_rotation(nxt, sorted(edges), crossings, new_rot)
    return d.graph, d


def glued_family(depth: int) -> tuple[Graph, Drawing, tuple[int, ...]]:
    """G0 glued into itself ``depth`` times, plus the cut set of the newest copy.

    Each step uses the first qualifying face of the current drawing with its
    corners sent to 0, 11, 12 in traversal order.
    """
    g, d = g0()
    cut = _G0_CUT
    for _ in range(depth):
        f = qualifying_faces(d)[0]
        recipe = GlueSpec(d, f, dict(zip(f.nodes, _G0_OUTER)))
        base = d.n
        g, d = glue_g0(recipe)
        inv = {t: h for h, t in recipe.correspondence.items()}
        mapping = {}
        k = base
        for t in range(13):
            if t in inv:
                mapping[t] = inv[t]
            else:
                mapping[t] = k
                k += 1
        cut = tuple(sorted(mapping[t] for t in _G0_CUT))
    return g, d, cut


# k-trees ----------------------------------------------------------------------


def random_k_tree(n: int, k: int, seed: int) -> Graph:
    """Random k-tree: start from K_k, attach each new vertex to a uniformly chosen k-clique."""
    if k < 1 or n < k + 1:
        raise ValueError("need k >= 1 and n >= k + 1")
    rng = random.Random(seed)
    adj = [0] * n
    for u in range(k):
        for v in range(k):
            if u != v:
                adj[u] |= 1 << v
    cliques = [tuple(range(k))]
    for v in range(k, n):
        base = cliques[rng.randrange(len(cliques))]
        for u in base:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        for w in base:
            cliques.append(tuple(sorted([x for x in base if x != w] + [v])))
    return Graph(n, adj)


def two_simplicial_k_tree(n: int, k: int, seed: int, retries: int = 1000) -> Graph:
    """A k-tree with exactly two simplicial vertices.

    A k-clique front rolls forward: every new vertex joins the front and a
    random old front vertex retires.  Samples with more than two simplicial
    vertices are redrawn from the same random stream.
    """
    if k < 1 or n < k + 2:
        raise ValueError("need k >= 1 and n >= k + 2")
    rng = random.Random(seed)
    for _ in range(retries):
        adj = [0] * n
        for u in range(k):
            for v in range(k):
                if u != v:
                    adj[u] |= 1 << v
        front = list(range(k))
        for v in range(k, n):
            for u in front:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            front.pop(rng.randrange(len(front)))
            front.append(v)
        g = Graph(n, adj)
        if len(simplicial_vertices(g)) == 2:
            return g
    raise RetryBudgetExceeded(f"no two-simplicial {k}-tree on {n} vertices after {retries} tries")


def k_cliques(g: Graph, k: int) -> list[tuple[int, ...]]:
    out = []

    def rec(start: int, chosen: list[int], cand: int) -> None:
        if len(chosen) == k:
            out.append(tuple(chosen))
            return
        for v in bits(cand):
            if v >= start:
                rec(v + 1, chosen + [v], cand & g.adj[v])

    rec(0, [], g.vertex_mask)
    return out


def all_k_trees(n: int, k: int) -> list[Graph]:
    """Every k-tree on ``n`` vertices up to isomorphism, in canonical-code order."""
    if n < k:
        return []
    level = {canonical_form(complete_graph(min(n, k)))[0]: complete_graph(min(n, k))}
    for size in range(k, n):
        nxt: dict = {}
        for g in level.values():
            for c in k_cliques(g, k):
                adj = list(g.adj) + [0]
                for u in c:
                    adj[u] |= 1 << size
                    adj[size] |= 1 << u
                h = Graph(size + 1, adj)
                nxt.setdefault(canonical_form(h)[0], h)
        level = nxt
    return [level[c] for c in sorted(level)]
