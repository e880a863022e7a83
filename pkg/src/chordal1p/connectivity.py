"""Vertex connectivity, separators and toughness."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .chordal import ScaleExceeded
from .graph import Graph, bits, components, count_components, is_connected, popcount

__all__ = [
    "SeparatorWitness",
    "ToughnessWitness",
    "INFINITE",
    "vertex_connectivity",
    "local_connectivity",
    "connectivity_by_subsets",
    "toughness",
    "check_chvatal_bound",
    "separates",
]


@dataclass(frozen=True)
class SeparatorWitness:
    separator: tuple[int, ...]
    sides: tuple[tuple[int, ...], tuple[int, ...]]

    def check(self, g: Graph) -> bool:
        s = 0
        for v in self.separator:
            s |= 1 << v
        return separates(g, s, self.sides[0][0], self.sides[1][0])


class _Infinite:
    """Toughness of a complete graph."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = _Infinite()


@dataclass(frozen=True)
class ToughnessWitness:
    value: Fraction
    cut_set: tuple[int, ...]
    component_count: int


def separates(g: Graph, sep_mask: int, a: int, b: int) -> bool:
    """True if ``a`` and ``b`` lie in different components of ``g - sep``."""
    allowed = g.vertex_mask & ~sep_mask
    if not (allowed >> a & 1 and allowed >> b & 1):
        return False
    seen = 1 << a
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return not seen >> b & 1


def local_connectivity(g: Graph, s: int, t: int, cap: int | None = None) -> tuple[int, list[int]]:
    """Maximum number of internally disjoint s-t paths for non-adjacent ``s, t``.

    Vertex-split unit-capacity flow with BFS augmentation.  Returns the count and
    a minimum s-t separator.  If ``cap`` is given the search stops once the
    flow reaches it (the separator is then meaningless).
    """
    n = g.n
    # node 2v = v_in, 2v+1 = v_out
    res: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in res:
            out[a].append(b)
            out[b].append(a)
            res[(a, b)] = 0
            res.setdefault((b, a), 0)
        res[(a, b)] += c

    big = n + 1
    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges:
        add(2 * u + 1, 2 * v, big)
        add(2 * v + 1, 2 * u, big)
    src, dst = 2 * s + 1, 2 * t
    flow = 0
    while cap is None or flow < cap:
        prev = {src: None}
        q = deque([src])
        while q and dst not in prev:
            a = q.popleft()
            for b in out[a]:
                if b not in prev and res[(a, b)] > 0:
                    prev[b] = a
                    q.append(b)
        if dst not in prev:
            break
        b = dst
        while prev[b] is not None:
            a = prev[b]
            res[(a, b)] -= 1
            res[(b, a)] += 1
            b = a
        flow += 1
    # residual reachability gives the cut
    reach = {src}
    q = deque([src])
    while q:
        a = q.popleft()
        for b in out[a]:
            if b not in reach and res[(a, b)] > 0:
                reach.add(b)
                q.append(b)
    sep = [v for v in range(n) if 2 * v in reach and 2 * v + 1 not in reach]
    return flow, sep


def _witness(g: Graph, sep: list[int]) -> SeparatorWitness:
    mask = 0
    for v in sep:
        mask |= 1 << v
    comps = components(g, g.vertex_mask & ~mask)
    return SeparatorWitness(tuple(sep), (tuple(comps[0]), tuple(v for c in comps[1:] for v in c)))


def vertex_connectivity(g: Graph) -> tuple[int, SeparatorWitness | None]:
    """``(kappa, witness)``.  Complete graphs give ``n - 1`` and no witness.

    Disconnected graphs give ``0`` with an empty separator.
    """
    if g.n <= 1:
        return 0, None
    if not is_connected(g):
        return 0, _witness(g, [])
    if g.is_complete():
        return g.n - 1, None
    best = g.n - 1
    best_sep: list[int] | None = None
    # a minimum separator misses one of the first kappa + 1 vertices
    v = 0
    while v < g.n and v <= best:
        for w in range(g.n):
            if w != v and not g.has_edge(v, w):
                k, sep = local_connectivity(g, v, w)
                if best_sep is None or k < best:
                    best, best_sep = k, sep
        v += 1
    assert best_sep is not None
    return best, _witness(g, best_sep)


def connectivity_by_subsets(g: Graph, max_n: int = 12) -> int:
    """Connectivity by trying every vertex subset in order of size (test oracle)."""
    if g.n > max_n:
        raise ScaleExceeded(f"subset connectivity limited to n <= {max_n}")
    if g.is_complete():
        return max(g.n - 1, 0)
    for size in range(g.n - 1):
        for sub in combinations(range(g.n), size):
            mask = 0
            for v in sub:
                mask |= 1 << v
            if count_components(g, g.vertex_mask & ~mask) > 1:
                return size
    return g.n - 1  # pragma: no cover


def toughness(g: Graph, max_n: int = 18) -> ToughnessWitness | _Infinite:
    """Exact toughness by exhaustive search over cut sets.

    Subsets are scanned by increasing size; once ``|X| / (n - |X|)`` reaches the
    best ratio found no larger set can improve on it.
    """
    if g.n > max_n:
        raise ScaleExceeded(f"toughness search limited to n <= {max_n}, got {g.n}")
    if g.is_complete():
        return INFINITE
    best: ToughnessWitness | None = None
    if not is_connected(g):
        best = ToughnessWitness(Fraction(0), (), count_components(g, g.vertex_mask))
        return best
    full = g.vertex_mask
    for size in range(1, g.n - 1):
        if best is not None and Fraction(size, g.n - size) >= best.value:
            break
        for sub in combinations(range(g.n), size):
            mask = 0
            for v in sub:
                mask |= 1 << v
            c = count_components(g, full & ~mask)
            if c > 1:
                val = Fraction(size, c)
                if best is None or val < best.value:
                    best = ToughnessWitness(val, sub, c)
    assert best is not None
    return best


def check_chvatal_bound(g: Graph, max_n: int = 18) -> bool:
    """True iff ``kappa(g) >= ceil(2 * toughness(g))``; complete graphs pass.

    Up to ``max_n`` vertices the exact toughness is used.  Beyond that a
    minimum separator ``X`` leaves ``c >= 2`` components, so
    ``toughness <= |X| / c <= kappa / 2`` is certified directly from it.
    """
    if g.is_complete():
        return True
    kappa, wit = vertex_connectivity(g)
    if g.n > max_n:
        if wit is None:  # pragma: no cover - only complete graphs lack a witness
            return False
        mask = 0
        for v in wit.separator:
            mask |= 1 << v
        c = count_components(g, g.vertex_mask & ~mask)
        return c >= 2 and kappa >= math.ceil(2 * Fraction(len(wit.separator), c))
    t = toughness(g, max_n)
    return kappa >= math.ceil(2 * t.value)
