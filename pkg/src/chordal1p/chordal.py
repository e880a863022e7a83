"""Chordality with certificates, simplicial vertices and k-tree recognition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, bits, components, induced_subgraph, popcount

__all__ = [
    "EliminationOrder",
    "HoleCertificate",
    "ScaleExceeded",
    "mcs_order",
    "peo_violation",
    "is_perfect_elimination_order",
    "is_chordal",
    "find_hole",
    "is_induced_cycle",
    "simplicial_vertices",
    "is_simplicial",
    "is_k_tree",
    "ktree_edge_count",
    "minimal_separators",
    "minimal_separators_are_cliques",
]


class ScaleExceeded(RuntimeError):
    """An exhaustive routine was asked to run past its size guard."""


@dataclass(frozen=True)
class EliminationOrder:
    """A perfect elimination order: each vertex's later neighbours form a clique."""

    order: tuple[int, ...]

    def check(self, g: Graph) -> bool:
        return sorted(self.order) == list(range(g.n)) and peo_violation(g, self.order) is None


@dataclass(frozen=True)
class HoleCertificate:
    """An induced cycle of length at least four."""

    cycle: tuple[int, ...]

    def check(self, g: Graph) -> bool:
        return len(self.cycle) >= 4 and is_induced_cycle(g, self.cycle)


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visiting order.

    Each step visits the unvisited vertex with the most visited neighbours,
    smallest id first on ties.  The reversed visiting order is a perfect
    elimination order exactly when ``g`` is chordal.
    """
    weight = [0] * g.n
    visited = 0
    order = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if not visited >> v & 1 and (best < 0 or weight[v] > weight[best]):
                best = v
        order.append(best)
        visited |= 1 << best
        for w in bits(g.adj[best] & ~visited):
            weight[w] += 1
    return order


def peo_violation(g: Graph, order: list[int] | tuple[int, ...]) -> tuple[int, int, int] | None:
    """First ``(u, x, y)`` where ``x, y`` are non-adjacent later neighbours of ``u``."""
    later = (1 << g.n) - 1
    for u in order:
        later &= ~(1 << u)
        for x in bits(g.adj[u] & later):
            missing = (g.adj[u] & later) & ~g.adj[x] & ~(1 << x)
            if missing:
                return u, x, bits(missing)[0]
    return None


def is_perfect_elimination_order(g: Graph, order) -> bool:
    return peo_violation(g, list(order)) is None


def is_induced_cycle(g: Graph, cycle) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    mask = 0
    for v in cycle:
        mask |= 1 << v
    for i, v in enumerate(cycle):
        want = (1 << cycle[i - 1]) | (1 << cycle[(i + 1) % k])
        if g.adj[v] & mask != want:
            return False
    return True


def _hole_through(g: Graph, u: int, x: int, y: int) -> tuple[int, ...] | None:
    # shortest x-y path avoiding N[u] - {x, y}; closes to an induced cycle through u
    blocked = (g.adj[u] | 1 << u) & ~(1 << x) & ~(1 << y)
    prev = {x: None}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        if v == y:
            break
        for w in bits(g.adj[v] & ~blocked):
            if w not in prev:
                prev[w] = v
                queue.append(w)
    if y not in prev:
        return None
    path = []
    v = y
    while v is not None:
        path.append(v)
        v = prev[v]
    path.reverse()
    return (u, *path)


def find_hole(g: Graph, hint: tuple[int, int, int] | None = None) -> tuple[int, ...] | None:
    """Some induced cycle of length >= 4, or ``None`` if ``g`` is chordal.

    Tries ``hint = (u, x, y)`` first, then every vertex with a non-adjacent
    pair of neighbours; every hole is found through one of its own vertices.
    """
    if hint is not None:
        cyc = _hole_through(g, *hint)
        if cyc is not None:
            return cyc
    for u in range(g.n):
        nb = bits(g.adj[u])
        for i, x in enumerate(nb):
            for y in nb[i + 1:]:
                if not g.has_edge(x, y):
                    cyc = _hole_through(g, u, x, y)
                    if cyc is not None:
                        return cyc
    return None


def is_chordal(g: Graph) -> EliminationOrder | HoleCertificate:
    """Either a perfect elimination order or a hole."""
    order = mcs_order(g)[::-1]
    bad = peo_violation(g, order)
    if bad is None:
        return EliminationOrder(tuple(order))
    hole = find_hole(g, bad)
    if hole is None:  # pragma: no cover - contradicts the PEO characterisation
        raise AssertionError("PEO check failed but no hole exists")
    return HoleCertificate(hole)


def is_simplicial(g: Graph, v: int) -> bool:
    return g.is_clique(g.adj[v])


def simplicial_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.is_clique(g.adj[v])]


def ktree_edge_count(n: int, k: int) -> int:
    return k * n - k * (k + 1) // 2


def is_k_tree(g: Graph, k: int) -> list[int] | None:
    """Reverse construction order of a k-tree, or ``None``.

    Repeatedly deletes the smallest degree-``k`` simplicial vertex; ``g`` is a
    k-tree iff this ends at ``K_k``.  The returned list holds the deleted
    vertices in deletion order followed by the ``k`` vertices of the base clique.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n < k or g.m != ktree_edge_count(g.n, k):
        return None
    alive = g.vertex_mask
    removed = []
    for _ in range(g.n - k):
        for v in bits(alive):
            nb = g.adj[v] & alive
            if popcount(nb) == k and g.is_clique(nb):
                removed.append(v)
                alive &= ~(1 << v)
                break
        else:
            return None
    if not g.is_clique(alive):
        return None
    return removed + bits(alive)


def minimal_separators(g: Graph, max_n: int = 14) -> list[int]:
    """All minimal vertex separators as bitmasks, by closure under neighbourhood moves.

    Seeds are ``N(C)`` for components ``C`` of ``G - N[v]``; each separator
    ``S`` and ``x in S`` generate ``N(C)`` for components of ``G - (S | N(x))``.
    """
    if g.n > max_n:
        raise ScaleExceeded(f"minimal separator enumeration limited to n <= {max_n}, got {g.n}")
    full = g.vertex_mask

    def close_seps(removed: int) -> list[int]:
        out = []
        for comp in components(g, full & ~removed):
            nb = 0
            for v in comp:
                nb |= g.adj[v]
            cmask = 0
            for v in comp:
                cmask |= 1 << v
            nb &= ~cmask
            # N(C) is a minimal separator only if some other component is full
            if nb and _is_minimal_separator(g, nb):
                out.append(nb)
        return out

    found: set[int] = set()
    todo: list[int] = []
    for v in range(g.n):
        for s in close_seps(g.adj[v] | 1 << v):
            if s not in found:
                found.add(s)
                todo.append(s)
    while todo:
        s = todo.pop()
        for x in bits(s):
            for t in close_seps(s | g.adj[x]):
                if t not in found:
                    found.add(t)
                    todo.append(t)
    return sorted(found)


def _is_minimal_separator(g: Graph, s: int) -> bool:
    full_comps = 0
    for comp in components(g, g.vertex_mask & ~s):
        nb = 0
        for v in comp:
            nb |= g.adj[v]
        if nb & s == s:
            full_comps += 1
    return full_comps >= 2


def minimal_separators_are_cliques(g: Graph, max_n: int = 14) -> tuple[bool, list[int] | None]:
    """``(True, None)`` if every minimal separator is a clique, else ``(False, separator)``."""
    for s in minimal_separators(g, max_n):
        if not g.is_clique(s):
            return False, bits(s)
    return True, None


def induced_is_chordal(g: Graph, keep) -> bool:
    sub, _ = induced_subgraph(g, keep)
    return isinstance(is_chordal(sub), EliminationOrder)
