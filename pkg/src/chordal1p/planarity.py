"""Planarity testing with a rotation system, by path addition.

Each biconnected block is embedded by the Demoucron-Malgrange-Pertuiset
procedure: start from a cycle, then repeatedly route a path of some
fragment through a face containing all of the fragment's attachment
vertices, preferring fragments with a single admissible face.  Block
rotations are concatenated at cut vertices.

Rotations follow the face rule used by :mod:`chordal1p.embedding`: entering
``v`` from ``u``, a face continues to the neighbour after ``u`` in ``v``'s list.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

__all__ = ["planar_rotation"]


def _blocks(n: int, adj: list[list[int]]) -> list[list[tuple[int, int]]]:
    """Edge lists of the biconnected blocks (iterative Hopcroft-Tarjan)."""
    disc = [-1] * n
    low = [0] * n
    t = 0
    out = []
    for root in range(n):
        if disc[root] >= 0 or not adj[root]:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(adj[root]))]
        estack: list[tuple[int, int]] = []
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    estack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = estack.pop()
                        block.append(e)
                        if e == (u, v):
                            break
                    out.append(block)
    return out


def _embed_block(edges: list[tuple[int, int]]) -> dict[int, list[int]] | None:
    if len(edges) == 1:
        u, v = edges[0]
        return {u: [v], v: [u]}
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    if len(edges) > 3 * len(adj) - 6:
        return None
    # initial cycle through the first edge
    u0, v0 = edges[0]
    prev = {v0: None}
    q = deque([v0])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if y not in prev and not (x == v0 and y == u0):
                prev[y] = x
                q.append(y)
    cyc = [u0]
    x = prev[u0]
    while x is not None:
        cyc.append(x)
        x = prev[x]
    # cyc = u0, ..., v0 ; closing edge v0-u0
    faces = [cyc, cyc[::-1]]
    in_h = set(cyc)
    emb = {frozenset((cyc[i], cyc[i - 1])) for i in range(len(cyc))}
    total = len(edges)
    while len(emb) < total:
        frags = []  # (attachments, path-finder data)
        for u, v in edges:
            if u in in_h and v in in_h and frozenset((u, v)) not in emb:
                frags.append(({u, v}, (u, v), None))
        seen = set()
        for s in adj:
            if s in in_h or s in seen:
                continue
            comp = {s}
            q = deque([s])
            att = set()
            while q:
                x = q.popleft()
                for y in adj[x]:
                    if y in in_h:
                        att.add(y)
                    elif y not in comp:
                        comp.add(y)
                        q.append(y)
            seen |= comp
            frags.append((att, None, comp))
        face_sets = [set(f) for f in faces]
        best = None
        for att, chord, comp in frags:
            ok = [i for i, fs in enumerate(face_sets) if att <= fs]
            if not ok:
                return None
            if best is None or len(ok) < len(best[0]):
                best = (ok, att, chord, comp)
                if len(ok) == 1:
                    break
        ok, att, chord, comp = best
        if chord is not None:
            path = list(chord)
        else:
            a = min(att)
            b = min(att - {a})
            # a -> comp ... -> b with interior inside comp
            pr = {a: None}
            q = deque([a])
            while q:
                x = q.popleft()
                if x == b:
                    break
                for y in adj[x]:
                    if y in pr:
                        continue
                    if y in comp or (y == b and x != a):
                        pr[y] = x
                        q.append(y)
            path = []
            x = b
            while x is not None:
                path.append(x)
                x = pr[x]
            path.reverse()
        fi = ok[0]
        f = faces[fi]
        x, y = path[0], path[-1]
        i = f.index(x)
        f = f[i:] + f[:i]
        j = f.index(y)
        inner = path[1:-1]
        f1 = f[: j + 1] + inner[::-1]
        f2 = f[j:] + [x] + inner
        faces[fi] = f1
        faces.append(f2)
        in_h.update(inner)
        for k in range(len(path) - 1):
            emb.add(frozenset((path[k], path[k + 1])))
    succ: dict[int, dict[int, int]] = {v: {} for v in adj}
    for f in faces:
        k = len(f)
        for i in range(k):
            succ[f[i]][f[i - 1]] = f[(i + 1) % k]
    rot = {}
    for v, s in succ.items():
        start = min(s)
        lst = [start]
        w = s[start]
        while w != start:
            lst.append(w)
            w = s[w]
        if len(lst) != len(adj[v]):  # pragma: no cover - faces must close up
            raise AssertionError("inconsistent face structure")
        rot[v] = lst
    return rot


def planar_rotation(n: int, edges: Sequence[tuple[int, int]]) -> list[list[int]] | None:
    """Neighbour rotation of a planar embedding of the simple graph, or ``None`` if non-planar."""
    if n >= 3 and len(edges) > 3 * n - 6:
        return None
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    rot: list[list[int]] = [[] for _ in range(n)]
    for block in _blocks(n, adj):
        r = _embed_block(block)
        if r is None:
            return None
        for v, lst in r.items():
            rot[v].extend(lst)
    return rot
