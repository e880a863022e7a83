"""Simple undirected graphs on dense integer vertices, plus isomorphism.

Vertices are ``0..n-1``.  Adjacency is stored as one Python ``int`` bitmask
per vertex, which keeps set operations cheap for the small graphs this
package deals with while still working for any ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "IsoCertificate",
    "from_edge_list",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "empty_graph",
    "join_complete_empty",
    "induced_subgraph",
    "components",
    "canonical_form",
    "are_isomorphic",
    "automorphisms",
    "parse_edge_list",
    "format_edge_list",
    "bits",
    "popcount",
]


class GraphError(ValueError):
    """Raised for malformed graph input."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int) -> list[int]:
    """Indices of the set bits of ``x`` in increasing order."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


class Graph:
    """Immutable simple graph.

    Use :func:`from_edge_list` (or the small constructors in this module)
    rather than calling the class directly.
    """

    __slots__ = ("n", "adj", "edges", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)
        self.edges = tuple(
            (u, v) for u in range(n) for v in bits(self.adj[u]) if v > u
        )
        self._hash = None

    # basic queries -------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_complete(self) -> bool:
        return self.is_clique(self.vertex_mask)

    def edge_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        lo, hi = 0, len(self.edges)
        key = (u, v)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.edges[mid] < key:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(self.edges) or self.edges[lo] != key:
            raise GraphError(f"{key} is not an edge")
        return lo

    def remove_vertices(self, vs: Iterable[int]) -> tuple["Graph", list[int]]:
        """``G - vs`` relabelled; returns the graph and the list old-id per new-id."""
        drop = 0
        for v in vs:
            drop |= 1 << v
        keep = [v for v in range(self.n) if not drop >> v & 1]
        return induced_subgraph(self, keep)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for u, v in self.edges:
            a, b = perm[u], perm[v]
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return Graph(self.n, adj)

    def adjacency_matrix(self) -> list[list[int]]:
        return [[self.adj[u] >> v & 1 for v in range(self.n)] for u in range(self.n)]

    # dunder ----------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# construction --------------------------------------------------------------


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, dropping duplicate pairs.

    Raises :class:`GraphError` naming the offending pair for out-of-range
    endpoints or self-loops.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    for pair in pairs:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"pair ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def join_complete_empty(k: int, r: int) -> Graph:
    """``K_k + \\bar K_r``: a k-clique ``0..k-1`` joined to ``r`` independent vertices."""
    if k < 1 or r < 0:
        raise GraphError(f"need k >= 1 and r >= 0, got k={k}, r={r}")
    pairs = list(combinations(range(k), 2))
    pairs += [(i, k + j) for j in range(r) for i in range(k)]
    return from_edge_list(k + r, pairs)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``keep``, relabelled ``0..|keep|-1`` in increasing order.

    Returns ``(subgraph, old)`` where ``old[i]`` is the original id of new vertex ``i``.
    """
    old = sorted(set(keep))
    if not old:
        raise GraphError("induced_subgraph needs a nonempty vertex set")
    new = {v: i for i, v in enumerate(old)}
    adj = [0] * len(old)
    for i, v in enumerate(old):
        for w in bits(g.adj[v]):
            j = new.get(w)
            if j is not None:
                adj[i] |= 1 << j
    return Graph(len(old), adj), old


def components(g: Graph, mask: int | None = None) -> list[list[int]]:
    """Connected components of ``g`` (or of ``g[mask]``), each sorted, ordered by least vertex."""
    if mask is None:
        mask = g.vertex_mask
    out = []
    rest = mask
    while rest:
        comp = _component_mask(g, rest & -rest, rest)
        out.append(bits(comp))
        rest &= ~comp
    return out


def _component_mask(g: Graph, seed: int, allowed: int) -> int:
    comp = seed
    frontier = seed
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def count_components(g: Graph, mask: int) -> int:
    n = 0
    rest = mask
    while rest:
        rest &= ~_component_mask(g, rest & -rest, rest)
        n += 1
    return n


def is_connected(g: Graph, mask: int | None = None) -> bool:
    if mask is None:
        mask = g.vertex_mask
    if not mask:
        return True
    return _component_mask(g, mask & -mask, mask) == mask


# edge-list text format -----------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(pairs) != m:
        raise GraphError(f"header announces {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# isomorphism -----------------------------------------------------------------


@dataclass(frozen=True)
class IsoCertificate:
    """``mapping[v]`` is the image in the second graph of vertex ``v`` of the first."""

    mapping: tuple[int, ...]

    def inverse(self) -> "IsoCertificate":
        inv = [0] * len(self.mapping)
        for v, w in enumerate(self.mapping):
            inv[w] = v
        return IsoCertificate(tuple(inv))

    def check(self, g1: Graph, g2: Graph) -> bool:
        if g1.n != g2.n or sorted(self.mapping) != list(range(g1.n)):
            return False
        return g1.relabel(self.mapping) == g2


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    # split cells by neighbour counts into each cell until the partition is equitable
    while True:
        for si in range(len(cells)):
            smask = 0
            for v in cells[si]:
                smask |= 1 << v
            new: list[list[int]] = []
            split = False
            for c in cells:
                if len(c) == 1:
                    new.append(c)
                    continue
                groups: dict[int, list[int]] = {}
                for v in c:
                    groups.setdefault(popcount(adj[v] & smask), []).append(v)
                if len(groups) == 1:
                    new.append(c)
                else:
                    split = True
                    new.extend(groups[k] for k in sorted(groups))
            if split:
                cells = new
                break
        else:
            return cells


def _leaf_code(adj: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    code = []
    for v in order:
        row = 0
        for w in bits(adj[v]):
            row |= 1 << pos[w]
        code.append(row)
    return tuple(code)


def canonical_form(g: Graph) -> tuple[tuple, tuple[int, ...]]:
    """Canonical code and labelling of ``g``.

    Returns ``(code, labelling)``: ``labelling[v]`` is the canonical position of
    ``v`` and ``code`` is identical for isomorphic graphs.  The search
    individualises vertices of the first smallest non-singleton cell of an
    equitable partition and keeps the lexicographically largest leaf code.
    Subtrees shown equivalent to the first explored subtree by an
    automorphism are skipped.
    """
    adj = g.adj
    if g.n == 0:
        return (0, ()), ()
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        by_deg.setdefault(popcount(adj[v]), []).append(v)
    start = [by_deg[d] for d in sorted(by_deg)]
    root = _refine(adj, start)

    best: list = [None, None]  # code, order
    first: list = [None, None, None]  # code, path, order
    autos: list[tuple[int, ...]] = []

    def orbit_rep_filter(prefix: list[int], cands: list[int]) -> list[int]:
        # orbits of candidates under stored automorphisms fixing the prefix
        gens = [a for a in autos if all(a[p] == p for p in prefix)]
        if not gens:
            return cands
        parent = {v: v for v in range(g.n)}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in gens:
            for v in range(g.n):
                ra, rb = find(v), find(a[v])
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        seen = set()
        out = []
        for v in cands:
            r = find(v)
            if r not in seen:
                seen.add(r)
                out.append(v)
        return out

    def search(cells: list[list[int]], path: list[int]) -> int:
        """Returns the depth to backjump to (len(path) means continue normally)."""
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if first[0] is None:
                first[:] = [code, list(path), order]
                best[0], best[1] = code, order
                return len(path)
            if code == first[0]:
                fo = first[2]
                auto = [0] * g.n
                for a, b in zip(fo, order):
                    auto[a] = b
                autos.append(tuple(auto))
                # first differing level of the two paths
                d = 0
                while d < len(path) and path[d] == first[1][d]:
                    d += 1
                return d
            if code > best[0]:
                best[0], best[1] = code, order
            return len(path)
        cell = cells[target]
        on_first = first[1] is None or path == first[1][: len(path)]
        done: list[int] = []
        for v in cell:
            if on_first and done:
                reps = orbit_rep_filter(path, done + [v])
                if v not in reps:
                    continue
            nxt = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1:]
            jump = search(_refine(adj, nxt), path + [v])
            done.append(v)
            if jump < len(path):
                return jump
        return len(path)

    search(root, [])
    order = best[1]
    labelling = [0] * g.n
    for i, v in enumerate(order):
        labelling[v] = i
    return (g.n, best[0]), tuple(labelling)


def are_isomorphic(g1: Graph, g2: Graph) -> IsoCertificate | None:
    """An isomorphism ``g1 -> g2`` or ``None``."""
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    c1, l1 = canonical_form(g1)
    c2, l2 = canonical_form(g2)
    if c1 != c2:
        return None
    inv2 = [0] * g2.n
    for v, i in enumerate(l2):
        inv2[i] = v
    return IsoCertificate(tuple(inv2[l1[v]] for v in range(g1.n)))


def automorphisms(g: Graph, limit: int | None = None) -> list[tuple[int, ...]]:
    """All automorphisms of ``g`` (identity first), or the first ``limit`` found.

    Plain backtracking over vertices in order, matching refined cells and
    adjacency to the vertices already placed.
    """
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        by_deg.setdefault(popcount(g.adj[v]), []).append(v)
    cells = _refine(g.adj, [by_deg[d] for d in sorted(by_deg)])
    cell_of = [0] * g.n
    for i, c in enumerate(cells):
        for v in c:
            cell_of[v] = i
    image = [-1] * g.n
    used = 0
    out: list[tuple[int, ...]] = []

    def rec(v: int) -> bool:
        nonlocal used
        if v == g.n:
            out.append(tuple(image))
            return limit is not None and len(out) >= limit
        # identity first so that out[0] is the identity
        cands = sorted(cells[cell_of[v]], key=lambda w: (w != v, w))
        for w in cands:
            if used >> w & 1:
                continue
            ok = True
            for u in range(v):
                if (g.adj[v] >> u & 1) != (g.adj[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if rec(v + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    rec(0)
    return out
