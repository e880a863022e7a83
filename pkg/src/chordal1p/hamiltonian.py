"""Hamiltonian paths: exhaustive oracles and a constructive builder for k-trees.

The builder removes a simplicial vertex ``u`` together with the simplicial
neighbour ``a`` it leaves behind, solves the smaller instances and splices
``u`` back in.  Oracles are plain backtracking searches used to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Sequence

from .chordal import HoleCertificate, ScaleExceeded, is_chordal, is_k_tree, simplicial_vertices
from .connectivity import vertex_connectivity
from .graph import Graph, bits, popcount

__all__ = [
    "HamPath",
    "NotApplicable",
    "HypothesisError",
    "is_ham_path",
    "oracle_ham_path",
    "oracle_ham_cycle",
    "oracle_ham_connected",
    "splice_extend",
    "ktree_ham_path",
    "theorem_ham_path",
]

SubPath = Callable[[int, int, int], Sequence[int]]


class HypothesisError(ValueError):
    """A constructive step was called on input outside its hypotheses."""


@dataclass(frozen=True)
class HamPath:
    sequence: tuple[int, ...]

    @property
    def ends(self) -> tuple[int, int]:
        return self.sequence[0], self.sequence[-1]

    def check(self, g: Graph, x: int | None = None, y: int | None = None) -> bool:
        return is_ham_path(g, self.sequence, x, y)


@dataclass(frozen=True)
class NotApplicable:
    reason: str

    def __bool__(self) -> bool:
        return False


def is_ham_path(g: Graph, seq: Sequence[int], x: int | None = None, y: int | None = None,
                mask: int | None = None) -> bool:
    """Independent validity check: a permutation of the vertex set, consecutive vertices adjacent."""
    mask = g.vertex_mask if mask is None else mask
    seen = 0
    for v in seq:
        if not 0 <= v < g.n or seen >> v & 1:
            return False
        seen |= 1 << v
    if seen != mask or not seq:
        return False
    if any(not g.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1)):
        return False
    if x is not None and seq[0] != x:
        return False
    return y is None or seq[-1] == y


# oracles ------------------------------------------------------------------------


def _reach(g: Graph, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v] & allowed
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def _search(g: Graph, x: int, targets: int, mask: int) -> list[int] | None:
    """Hamiltonian path of ``g[mask]`` from ``x`` ending in ``targets``.

    Failed states ``(current vertex, unvisited set)`` are memoised, so the
    search is bounded by ``n * 2^n`` states.
    """
    dead: set[tuple[int, int]] = set()
    path = [x]

    def rec(cur: int, rest: int) -> bool:
        if not rest:
            return bool(targets >> cur & 1)
        if (cur, rest) in dead:
            return False
        # everything unvisited must stay reachable and a target must remain
        if not rest & targets or _reach(g, cur, rest) | (1 << cur) != rest | (1 << cur):
            dead.add((cur, rest))
            return False
        # a vertex with fewer than two free neighbours can only be the last one
        ends = 0
        live = rest | 1 << cur
        for w in bits(rest):
            if popcount(g.adj[w] & live) < 2:
                if ends or not targets >> w & 1:
                    dead.add((cur, rest))
                    return False
                ends += 1
        for w in bits(g.adj[cur] & rest):
            path.append(w)
            if rec(w, rest & ~(1 << w)):
                return True
            path.pop()
        dead.add((cur, rest))
        return False

    return list(path) if rec(x, mask & ~(1 << x)) else None


def _guard(g: Graph, max_n: int, what: str) -> None:
    if g.n > max_n:
        raise ScaleExceeded(f"{what} limited to n <= {max_n}, got {g.n}")


def oracle_ham_path(g: Graph, x: int, y: int, max_n: int = 15) -> HamPath | None:
    """Exact search for a Hamiltonian x-y path."""
    _guard(g, max_n, "Hamiltonian path search")
    if x == y:
        return HamPath((x,)) if g.n == 1 else None
    p = _search(g, x, 1 << y, g.vertex_mask)
    return HamPath(tuple(p)) if p else None


def oracle_ham_cycle(g: Graph, max_n: int = 15) -> tuple[int, ...] | None:
    """A Hamiltonian cycle as a vertex sequence (closing edge implied), or ``None``."""
    _guard(g, max_n, "Hamiltonian cycle search")
    if g.n < 3:
        return None
    p = _search(g, 0, g.adj[0], g.vertex_mask)
    return tuple(p) if p else None


def oracle_ham_connected(g: Graph, max_n: int = 12) -> tuple[bool, tuple[int, int] | None]:
    """Whether every pair is joined by a Hamiltonian path; else the first failing pair."""
    _guard(g, max_n, "Hamiltonian-connectivity check")
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if oracle_ham_path(g, x, y, max_n) is None:
                return False, (x, y)
    return True, None


# constructive builder -------------------------------------------------------------


def _check_splice(g: Graph, alive: int, u: int, a: int) -> None:
    nu = g.adj[u] & alive
    na = g.adj[a] & alive
    if popcount(nu) < 3:
        raise HypothesisError(f"degree of {u} is {popcount(nu)} < 3")
    if not g.is_clique(nu):
        raise HypothesisError(f"{u} is not simplicial")
    if not nu >> a & 1:
        raise HypothesisError(f"{a} is not a neighbour of {u}")
    if (nu | 1 << u) & ~(na | 1 << a):
        raise HypothesisError(f"closed neighbourhood of {u} is not inside that of {a}")
    if popcount(na & ~(nu | 1 << u)) > 1:
        raise HypothesisError(f"{a} has more than one neighbour outside N[{u}]")


def splice_extend(g: Graph, u: int, a: int, x: int, y: int, sub_path: SubPath,
                  alive: int | None = None, trace: list | None = None) -> HamPath:
    """Hamiltonian x-y path of ``g[alive]`` from paths of ``g[alive] - u`` and ``g[alive] - {u, a}``.

    ``sub_path(mask, s, t)`` must return a Hamiltonian s-t path of ``g[mask]``.
    Three cases: ``u`` is an end; neither ``u`` nor ``a`` is an end, so some
    path edge ``ab`` with ``b`` in ``N(u)`` becomes ``a u b``; ``a`` is an end,
    so the path starts ``a u b`` (``a u c`` when ``b`` is the other end).
    ``trace`` receives the case number when given.
    """
    alive = g.vertex_mask if alive is None else alive
    _check_splice(g, alive, u, a)
    if x == y or not (alive >> x & 1 and alive >> y & 1):
        raise HypothesisError("ends must be two distinct vertices of the graph")
    # put u, or failing that a, at the start
    if y == u or (y == a and x != u):
        return HamPath(splice_extend(g, u, a, y, x, sub_path, alive, trace).sequence[::-1])
    nu = g.adj[u] & alive & ~(1 << u)
    if x == u:
        b = min(bits(nu & ~(1 << y)))
        rest = list(sub_path(alive & ~(1 << u), b, y))
        seq = [u] + rest
        case = 1
    elif x != a:
        rest = list(sub_path(alive & ~(1 << u), x, y))
        i = rest.index(a)
        # earlier path edge first
        for j in (i - 1, i + 1):
            if 0 <= j < len(rest) and nu >> rest[j] & 1:
                lo = min(i, j)
                seq = rest[: lo + 1] + [u] + rest[lo + 1:]
                break
        else:
            raise AssertionError(f"no edge from {a} into N({u}) on the sub-path; splice hypotheses are broken")
        case = 2
    else:
        b, c = bits(nu & ~(1 << a))[:2]
        t = b if b != y else c
        rest = list(sub_path(alive & ~(1 << u) & ~(1 << a), t, y))
        seq = [a, u] + rest
        case = 3
    if trace is not None:
        trace.append(case)
    if not is_ham_path(g, seq, x, y, alive):
        raise AssertionError(f"case {case} splice produced an invalid path")
    return HamPath(tuple(seq))


def _small_path(g: Graph, alive: int, x: int, y: int) -> list[int] | None:
    inner = [v for v in bits(alive) if v not in (x, y)]
    if g.is_clique(alive):
        return [x] + inner + [y]
    for perm in permutations(inner):
        seq = [x, *perm, y]
        if all(g.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1)):
            return seq
    return None


def ktree_ham_path(g: Graph, k: int, x: int, y: int, trace: list | None = None) -> HamPath:
    """Hamiltonian x-y path in a k-tree with exactly two simplicial vertices (k >= 3).

    Orders up to ``k + 2`` are solved directly.  Otherwise ``u`` is the smaller
    simplicial vertex and ``a`` the simplicial vertex of ``G - u`` adjacent to
    ``u``; the paths of ``G - u`` and ``G - {u, a}`` come from recursion.
    """
    if k < 3:
        raise HypothesisError(f"k = {k} < 3")
    if g.n < k + 1:
        raise HypothesisError(f"order {g.n} < k + 1 = {k + 1}")
    if x == y:
        raise HypothesisError("ends must differ")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise HypothesisError("ends must be vertices of the graph")
    if is_k_tree(g, k) is None:
        raise HypothesisError(f"not a {k}-tree")
    if g.n >= k + 2 and len(simplicial_vertices(g)) != 2:
        raise HypothesisError(f"{len(simplicial_vertices(g))} simplicial vertices, need exactly 2")

    def solve(alive: int, s: int, t: int) -> list[int]:
        if popcount(alive) <= k + 2:
            p = _small_path(g, alive, s, t)
            if p is None:
                raise AssertionError("small k-tree without the requested Hamiltonian path")
            return p
        simp = [v for v in bits(alive) if g.is_clique(g.adj[v] & alive)]
        if len(simp) != 2:
            raise AssertionError(f"sub-k-tree has {len(simp)} simplicial vertices")
        u = simp[0]
        rest = alive & ~(1 << u)
        cand = [v for v in bits(g.adj[u] & rest) if g.is_clique(g.adj[v] & rest)]
        if len(cand) != 1:
            raise AssertionError(f"expected one simplicial neighbour of {u} after its removal, got {cand}")
        return list(splice_extend(g, u, cand[0], s, t, solve, alive, trace).sequence)

    return HamPath(tuple(solve(g.vertex_mask, x, y)))


def theorem_ham_path(g: Graph, x: int, y: int) -> HamPath | NotApplicable:
    """Hamiltonian x-y path when ``g`` is chordal and 4-connected, via the 4-tree route.

    1-planarity is not tested.  A chordal 4-connected graph of order >= 7 that
    is not a 4-tree with exactly two simplicial vertices cannot be 1-planar,
    and is reported as not applicable with that reason.
    """
    if x == y or not (0 <= x < g.n and 0 <= y < g.n):
        raise HypothesisError("ends must be two distinct vertices of the graph")
    cert = is_chordal(g)
    if isinstance(cert, HoleCertificate):
        return NotApplicable(f"not chordal: hole {list(cert.cycle)}")
    kappa, _ = vertex_connectivity(g)
    if kappa < 4:
        return NotApplicable(f"connectivity {kappa} < 4")
    if g.n <= 6:
        p = _small_path(g, g.vertex_mask, x, y)
        if p is None:  # pragma: no cover - K5, K6 and K6-e are Hamiltonian-connected
            raise AssertionError("small 4-connected chordal graph without the path")
        return HamPath(tuple(p))
    if is_k_tree(g, 4) is None:
        return NotApplicable("not a 4-tree; hypotheses imply g is not 1-planar")
    s = len(simplicial_vertices(g))
    if s != 2:
        return NotApplicable(f"{s} simplicial vertices; hypotheses imply g is not 1-planar")
    return ktree_ham_path(g, 4, x, y)
