"""The family of 1-planar 4-tree drawings generated from two seeds by 4-joins.

Seeds are the catalog drawings ``B1`` and ``B2``.  Every member of order
``n + 1`` is ``four_join(D, f1, f2)`` for a member ``D`` of order ``n`` and an
ordered twin pair ``(f1, f2)`` of ``D``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .catalog import PATTERN_NAMES, catalog, pattern
from .chordal import simplicial_vertices
from .embedding import (
    Drawing,
    DrawingCode,
    DrawingError,
    _node_components,
    drawing_code,
    drawing_isomorphisms,
    four_join,
    is_twin_pair,
    remove_vertex,
    restrict,
    twin_faces,
    uncrossed_face_skeleton,
    validate,
)
from .graph import Graph, canonical_form

__all__ = [
    "PhiAtlas",
    "Membership",
    "PatternMatch",
    "SEEDS",
    "generate_phi",
    "phi_membership",
    "phi_graphs",
    "match_skeleton_pattern",
]

SEEDS = ("B1", "B2")


@dataclass(frozen=True)
class Parent:
    code: DrawingCode
    pair: tuple[tuple[int, ...], tuple[int, ...]]  # corner sequences of (f1, f2) in the parent


@dataclass
class PhiAtlas:
    """Members by order, each keyed by drawing code, with the first parent that produced it."""

    by_order: dict[int, dict[DrawingCode, Drawing]] = field(default_factory=dict)
    parents: dict[DrawingCode, Parent] = field(default_factory=dict)

    def members(self, order: int | None = None):
        orders = sorted(self.by_order) if order is None else [order]
        for n in orders:
            yield from self.by_order.get(n, {}).items()

    def counts(self) -> dict[int, int]:
        return {n: len(level) for n, level in sorted(self.by_order.items())}


def generate_phi(max_order: int = 12) -> PhiAtlas:
    """Breadth-first closure of the seeds under 4-join, deduplicated by drawing code."""
    if max_order < 7:
        raise ValueError("the family starts at order 7")
    atlas = PhiAtlas()
    level = {}
    for name in SEEDS:
        d = catalog(name)
        level.setdefault(drawing_code(d), d)
    atlas.by_order[7] = level
    for n in range(7, max_order):
        nxt: dict[DrawingCode, Drawing] = {}
        for code, d in level.items():
            for f1, f2 in twin_faces(d):
                child = four_join(d, f1, f2)
                c = drawing_code(child)
                if c not in nxt:
                    nxt[c] = child
                    atlas.parents[c] = Parent(code, (f1.nodes, f2.nodes))
        atlas.by_order[n + 1] = nxt
        level = nxt
    return atlas


@dataclass
class Membership:
    accepted: bool
    reason: str
    base: str | None = None
    chain: list[Drawing] = field(default_factory=list)  # base first, input last

    def __bool__(self) -> bool:
        return self.accepted


_SEED_CODES: dict[DrawingCode, str] = {}


def _seed_codes() -> dict[DrawingCode, str]:
    if not _SEED_CODES:
        for name in SEEDS:
            _SEED_CODES[drawing_code(catalog(name))] = name
    return _SEED_CODES


def _peel(d: Drawing, memo: dict) -> tuple[str, list[Drawing]] | None:
    code = drawing_code(d)
    if code in memo:
        return memo[code]
    if d.n == 7:
        name = _seed_codes().get(code)
        memo[code] = (name, [d]) if name else None
        return memo[code]
    g = d.graph
    result = None
    for v in simplicial_vertices(g):
        if g.degree(v) != 4:
            continue
        smaller = remove_vertex(d, v)
        # v must be the vertex added by a 4-join of the smaller drawing
        if not any(drawing_code(four_join(smaller, f1, f2)) == code for f1, f2 in twin_faces(smaller)):
            continue
        sub = _peel(smaller, memo)
        if sub is not None:
            result = (sub[0], sub[1] + [d])
            break
    memo[code] = result
    return result


def phi_membership(d: Drawing) -> Membership:
    """Peel 4-joins off ``d`` down to order 7 and compare with the seeds.

    Every simplicial degree-4 vertex is tried before rejecting.
    """
    v = validate(d)
    if v is not True:
        return Membership(False, f"not a valid 1-planar drawing: {v.message}")
    if d.n < 7:
        raise DrawingError("membership is defined for order >= 7")
    if len(set(_node_components(d))) != 1:
        return Membership(False, "planarization is disconnected")
    found = _peel(d, {})
    if found is None:
        if d.n == 7:
            return Membership(False, "order-7 drawing is not a seed")
        return Membership(False, "no sequence of 4-join removals reaches a seed")
    name, chain = found
    return Membership(True, "accepted", name, chain)


def phi_graphs(max_order: int = 12, atlas: PhiAtlas | None = None) -> dict[int, list[Graph]]:
    """Underlying graphs of the atlas, one per isomorphism class, per order."""
    atlas = atlas or generate_phi(max_order)
    out = {}
    for n, level in sorted(atlas.by_order.items()):
        if n > max_order:
            continue
        seen: dict = {}
        for d in level.values():
            seen.setdefault(canonical_form(d.graph)[0], d.graph)
        out[n] = [seen[c] for c in sorted(seen)]
    return out


# skeleton patterns --------------------------------------------------------------


@dataclass(frozen=True)
class PatternMatch:
    name: str
    mapping: dict[int, int]  # pattern vertex -> vertex of the parent drawing


def _components(d: Drawing) -> list[tuple[Drawing, list[int]]]:
    comp = _node_components(d)
    groups: dict[int, list[int]] = {}
    for v in range(d.n):
        groups.setdefault(comp[v], []).append(v)
    return [(restrict(d, vs), vs) for vs in groups.values()]


def _vertex_isomorphisms(p: Drawing, q: Drawing) -> list[dict[int, int]]:
    pc, qc = _components(p), _components(q)
    if len(pc) != len(qc):
        return []
    out = []
    for perm in permutations(range(len(qc))):
        partial = [{}]
        for (pd, pv), j in zip(pc, perm):
            qd, qv = qc[j]
            isos = drawing_isomorphisms(pd, qd) if pd.n == qd.n else []
            partial = [
                {**acc, **{pv[a]: qv[m[a]] for a in range(pd.n)}} for acc in partial for m in isos
            ]
            if not partial:
                break
        out.extend(partial)
    return out


def match_skeleton_pattern(d: Drawing) -> PatternMatch | None:
    """The first pattern D1..D6 isomorphic to the uncrossed-face skeleton of ``d`` with both side conditions.

    First condition: each diamond's two triangles are twin faces of ``d``.
    Second (D1 and D2 only): ``v0v2``, ``v1v2`` and ``v1v3`` are non-edges of ``d``.
    """
    skel, verts = uncrossed_face_skeleton(d)
    tri = {}
    for f in d.faces:
        if f.size == 3 and not f.is_crossed:
            tri[frozenset(f.nodes)] = f
    g = d.graph
    for name in PATTERN_NAMES:
        pat = pattern(name)
        if pat.drawing.n != skel.n or pat.drawing.graph.m != skel.graph.m:
            continue
        for iso in _vertex_isomorphisms(pat.drawing, skel):
            m = {a: verts[b] for a, b in iso.items()}
            faces = [tri.get(frozenset(m[x] for x in f)) for f in pat.faces]
            if any(f is None for f in faces):
                continue
            if not (is_twin_pair(d, faces[0], faces[1]) and is_twin_pair(d, faces[2], faces[3])):
                continue
            if pat.labels:
                lab = {k: m[v] for k, v in pat.labels.items()}
                if any(g.has_edge(lab[a], lab[b]) for a, b in (("v0", "v2"), ("v1", "v2"), ("v1", "v3"))):
                    continue
            return PatternMatch(name, m)
    return None
