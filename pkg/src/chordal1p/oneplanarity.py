"""Planarity with embeddings, and exhaustive 1-planarity for tiny graphs.

A candidate drawing is fixed by its crossing set, a matching of pairwise
vertex-disjoint edges.  The set is realizable iff the planarization with a
small wheel around every crossing node is planar: the wheel rim forces the
two edges to alternate around the crossing, so crossings are true crossings
and not touchings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .chordal import ScaleExceeded, mcs_order
from .connectivity import vertex_connectivity
from .embedding import Drawing, DrawingCode, drawing_code, drawing_from_rotation, validate
from .graph import Graph, automorphisms, canonical_form, from_edge_list
from .planarity import planar_rotation

__all__ = [
    "CrossingSet",
    "OnePlanarity",
    "Enumeration",
    "is_planar",
    "realize",
    "is_one_planar",
    "enumerate_drawings",
    "one_planar_by_matchings",
    "max_edges_one_planar",
]


@dataclass(frozen=True)
class CrossingSet:
    """Pairs of edge indices; each edge in at most one pair, paired edges disjoint."""

    pairs: tuple[tuple[int, int], ...]

    def check(self, g: Graph) -> bool:
        used = set()
        for i, j in self.pairs:
            if i in used or j in used or i == j:
                return False
            used |= {i, j}
            if set(g.edges[i]) & set(g.edges[j]):
                return False
        return True


@dataclass(frozen=True)
class OnePlanarity:
    """Outcome of :func:`is_one_planar`.

    ``verdict`` is ``"drawing"``, ``"impossible"`` or ``"exhausted"``.
    """

    verdict: str
    drawing: Drawing | None = None
    reason: str = ""
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.verdict == "drawing"


@dataclass
class Enumeration:
    """Drawings of one graph up to isomorphism, keyed by code."""

    classes: dict[DrawingCode, Drawing] = field(default_factory=dict)
    incomplete: list[CrossingSet] = field(default_factory=list)
    crossing_sets: int = 0

    @property
    def complete(self) -> bool:
        return not self.incomplete


def max_edges_one_planar(n: int) -> int:
    """Largest edge count of a 1-planar graph on ``n >= 3`` vertices."""
    complete = n * (n - 1) // 2
    if n < 3:
        return complete
    return min(complete, 4 * n - 9 if n in (7, 9) else 4 * n - 8)


def _drawing_from_neighbours(g: Graph, rot: list[list[int]]) -> Drawing:
    keyed = {v: [((min(v, w), max(v, w)), 0) for w in rot[v]] for v in range(g.n)}
    return drawing_from_rotation(g.n, g.edges, [], keyed)


def is_planar(g: Graph) -> Drawing | None:
    """A crossing-free drawing of ``g``, or ``None`` if it is not planar."""
    rot = planar_rotation(g.n, g.edges)
    if rot is None:
        return None
    return _drawing_from_neighbours(g, rot)


def _gadget_edges(g: Graph, uncrossed, pairs) -> tuple[int, list[tuple[int, int]]]:
    # node layout: vertices, crossing hubs, then four rim nodes per crossing
    n = g.n
    c = len(pairs)
    out = [g.edges[e] for e in uncrossed]
    for k, (e, f) in enumerate(pairs):
        a, b = g.edges[e]
        p, q = g.edges[f]
        hub = n + k
        rim = [n + c + 4 * k + i for i in range(4)]
        for end, r in zip((a, p, b, q), rim):
            out.append((end, r))
            out.append((r, hub))
        for i in range(4):
            out.append((rim[i], rim[(i + 1) % 4]))
    return n + 5 * c, out


def realize(g: Graph, pairs, uncrossed=None) -> Drawing | None:
    """A drawing of ``g`` whose crossings are exactly ``pairs``, if one exists.

    ``uncrossed`` restricts the other edges (default: all of them); a partial
    result is not a :class:`Drawing`, so only full sets produce one.
    """
    pairs = [tuple(sorted(p)) for p in pairs]
    crossed = {e for p in pairs for e in p}
    if uncrossed is None:
        uncrossed = [e for e in range(g.m) if e not in crossed]
    nn, edges = _gadget_edges(g, uncrossed, pairs)
    rot = planar_rotation(nn, edges)
    if rot is None:
        return None
    n, c = g.n, len(pairs)
    # map each neighbour in the gadget graph back to an arc key
    side_edge = {}
    for k, (e, f) in enumerate(pairs):
        a, b = g.edges[e]
        p, q = g.edges[f]
        for i, (end, edge) in enumerate(((a, e), (p, f), (b, e), (q, f))):
            side_edge[n + c + 4 * k + i] = (end, g.edges[edge])
    keyed: dict = {}
    for v in range(n):
        lst = []
        for w in rot[v]:
            if w < n:
                lst.append(((min(v, w), max(v, w)), 0))
            else:
                end, edge = side_edge[w]
                lst.append((edge, 0 if v == edge[0] else 1))
        keyed[v] = lst
    cross_tuples = []
    for k, (e, f) in enumerate(pairs):
        hub = n + k
        ee, ff = g.edges[e], g.edges[f]
        node = ("x",) + tuple(sorted((ee, ff)))
        lst = []
        for w in rot[hub]:
            end, edge = side_edge[w]
            lst.append((edge, 0 if end == edge[0] else 1))
        keyed[node] = lst
        cross_tuples.append((ee, ff))
    return drawing_from_rotation(n, g.edges, cross_tuples, keyed)


def _edge_order(g: Graph) -> list[int]:
    # vertex-incremental: every prefix is an induced subgraph grown by maximum
    # cardinality search, so dense obstructions close early
    rank = {v: i for i, v in enumerate(mcs_order(g))}
    return sorted(range(g.m), key=lambda e: (max(rank[x] for x in g.edges[e]), min(rank[x] for x in g.edges[e])))


class _Budget(Exception):
    pass


@dataclass
class _Limits:
    lo: int
    hi: int


def _search(g: Graph, limits: _Limits, budget: int | None, on_leaf, counter: list[int], group=None) -> None:
    """Depth-first search over crossing sets with planarity pruning.

    Edges are decided in a fixed order: uncrossed, or paired with a later
    undecided disjoint edge.  Pairs are therefore created in increasing order
    of their first edge, which makes lexicographic-leader pruning under
    ``group`` (edge permutations) sound.  ``limits`` bounds the number of
    pairs and may be tightened by ``on_leaf``, which receives each realizable
    full set and returns ``True`` to stop.
    """
    order = _edge_order(g)
    m = g.m
    pos = {e: i for i, e in enumerate(order)}
    ends = [1 << u | 1 << v for u, v in g.edges]
    disjoint = [0] * m
    for e in range(m):
        for f in range(m):
            if not ends[e] & ends[f]:
                disjoint[e] |= 1 << f
    perms = [tuple(pos[order_e] for order_e in (sg[order[i]] for i in range(m))) for sg in (group or [])[1:]]
    status = [-1] * m
    undecided = (1 << m) - 1
    uncrossed: list[int] = []
    pairs: list[tuple[int, int]] = []
    key: list[tuple[int, int]] = []  # pairs as sorted order positions

    def dominated() -> bool:
        for p in perms:
            img = sorted((min(p[a], p[b]), max(p[a], p[b])) for a, b in key)
            if img < key:
                return True
        return False

    def feasible() -> bool:
        counter[0] += 1
        if budget is not None and counter[0] > budget:
            raise _Budget
        extra = []
        if len(pairs) >= limits.hi:
            extra = bits_of(undecided)
        else:
            for f in bits_of(undecided):
                if not disjoint[f] & undecided:
                    extra.append(f)
        if len(uncrossed) + len(extra) > m - 2 * limits.lo:
            return False
        nn, edges = _gadget_edges(g, uncrossed + extra, pairs)
        return planar_rotation(nn, edges) is not None

    def rec(i: int) -> bool:
        nonlocal undecided
        if len(pairs) > limits.hi:
            return False
        while i < m and status[order[i]] >= 0:
            i += 1
        if i == m:
            if not limits.lo <= len(pairs) <= limits.hi:
                return False
            return on_leaf(list(pairs))
        e = order[i]
        undecided &= ~(1 << e)
        if len(uncrossed) < m - 2 * limits.lo:
            status[e] = 0
            uncrossed.append(e)
            if feasible() and rec(i + 1):
                return True
            uncrossed.pop()
        if len(pairs) < limits.hi:
            status[e] = 1
            for k in range(i + 1, m):
                f = order[k]
                if status[f] >= 0 or not disjoint[e] >> f & 1:
                    continue
                if len(pairs) >= limits.hi:
                    break
                status[f] = 1
                undecided &= ~(1 << f)
                pairs.append((min(e, f), max(e, f)))
                key.append((i, k))
                if not dominated() and feasible() and rec(i + 1):
                    return True
                key.pop()
                pairs.pop()
                undecided |= 1 << f
                status[f] = -1
        status[e] = -1
        undecided |= 1 << e
        return False

    rec(0)


def bits_of(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _edge_group(g: Graph, limit: int = 5040) -> list[tuple[int, ...]]:
    """Edge permutations induced by automorphisms (identity first)."""
    out = []
    for a in automorphisms(g, limit):
        out.append(tuple(g.edge_index(*sorted((a[u], a[v]))) for u, v in g.edges))
    return out


def _refuting_subgraph(g: Graph, budget: int) -> int | None:
    """A vertex whose deletion leaves a graph proved not 1-planar within ``budget`` tests."""
    seen = set()
    for v in sorted(range(g.n), key=lambda v: g.degree(v)):
        h, _ = g.remove_vertices([v])
        code = canonical_form(h)[0]
        if code in seen:
            continue
        seen.add(code)
        if is_one_planar(h, budget, heredity=False).verdict == "impossible":
            return v
    return None


def is_one_planar(
    g: Graph, budget: int | None = 2_000_000, symmetry: bool = True, heredity: bool = True
) -> OnePlanarity:
    """Find a 1-planar drawing with the fewest crossings, or prove none exists.

    No drawing can have fewer than ``m - 3n + 6`` crossings (its planarization
    would have too many edges to be planar).  The search is branch and bound
    on the crossing count, so the returned drawing has the minimum number.
    Subgraphs of 1-planar graphs are 1-planar, so a quickly refuted
    vertex-deleted subgraph refutes ``g``.  ``budget`` caps the number of
    planarity tests of the main search; running out is reported, never hidden.
    """
    n, m = g.n, g.m
    bound = max_edges_one_planar(n)
    if m > bound:
        return OnePlanarity("impossible", reason=f"{m} edges exceed the 1-planar maximum {bound} for n = {n}")
    if heredity and n >= 6:
        v = _refuting_subgraph(g, 5_000)
        if v is not None:
            return OnePlanarity("impossible", reason=f"deleting vertex {v} leaves a graph that is not 1-planar")
    lo = max(0, m - 3 * n + 6) if n >= 3 else 0
    limits = _Limits(lo, m // 2)
    counter = [0]
    best: list[Drawing] = []

    def leaf(pairs):
        d = realize(g, pairs)
        if d is None:
            return False
        best[:] = [d]
        limits.hi = len(pairs) - 1
        return limits.hi < limits.lo

    group = _edge_group(g) if symmetry else None
    try:
        _search(g, limits, budget, leaf, counter, group)
    except _Budget:
        if best:
            return OnePlanarity(
                "drawing", best[0], f"{best[0].crossing_count} crossings, minimality not confirmed", counter[0]
            )
        return OnePlanarity("exhausted", reason=f"budget of {budget} planarity tests spent", nodes=counter[0])
    if best:
        return OnePlanarity("drawing", best[0], f"{best[0].crossing_count} crossings", counter[0])
    return OnePlanarity("impossible", reason="no crossing set is realizable", nodes=counter[0])


def _is_3_connected(n_nodes: int, d: Drawing) -> bool:
    edges = {(min(p, q), max(p, q)) for p, q, _, _ in d.arcs}
    h = from_edge_list(n_nodes, edges)
    k, _ = vertex_connectivity(h)
    return k >= 3


def enumerate_drawings(g: Graph, budget: int | None = 2_000_000, max_n: int = 7) -> Enumeration:
    """All 1-planar drawings of ``g`` up to isomorphism.

    Every realizable crossing set is found.  When its planarization is
    3-connected the embedding is unique up to reflection and one drawing
    stands for the set; otherwise the set is listed in ``incomplete``.
    """
    if g.n > max_n:
        raise ScaleExceeded(f"drawing enumeration limited to n <= {max_n}, got {g.n}")
    out = Enumeration()
    if g.m > max_edges_one_planar(g.n):
        return out
    counter = [0]

    def leaf(pairs):
        d = realize(g, pairs)
        if d is None:
            return False
        out.crossing_sets += 1
        if not _is_3_connected(d.n_nodes, d):
            out.incomplete.append(CrossingSet(tuple(sorted(pairs))))
            return False
        out.classes.setdefault(drawing_code(d), d)
        return False

    lo = max(0, g.m - 3 * g.n + 6) if g.n >= 3 else 0
    try:
        _search(g, _Limits(lo, g.m // 2), budget, leaf, counter, _edge_group(g))
    except _Budget:
        raise ScaleExceeded(f"enumeration budget of {budget} planarity tests spent") from None
    return out


def one_planar_by_matchings(g: Graph, max_n: int = 6) -> Drawing | None:
    """Unpruned reference: try every crossing set, smallest first (test oracle)."""
    if g.n > max_n:
        raise ScaleExceeded(f"unpruned 1-planarity limited to n <= {max_n}, got {g.n}")
    cand = [
        (i, j)
        for i, j in combinations(range(g.m), 2)
        if not set(g.edges[i]) & set(g.edges[j])
    ]

    def matchings(size, start, used):
        if size == 0:
            yield []
            return
        for k in range(start, len(cand)):
            i, j = cand[k]
            if i in used or j in used:
                continue
            for rest in matchings(size - 1, k + 1, used | {i, j}):
                yield [(i, j)] + rest

    for size in range(g.m // 2 + 1):
        for pairs in matchings(size, 0, frozenset()):
            d = realize(g, pairs)
            if d is not None:
                assert validate(d) is True
                return d
    return None
