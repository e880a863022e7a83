"""Reference drawings, transcribed from picture coordinates.

Each entry lists vertex positions, edges and the few curved edges as cubic
curves; :func:`~chordal1p.embedding.drawing_from_coordinates` turns them
into combinatorial drawings, so crossings and rotations are read off the
geometry rather than typed in by hand.

The ``D1`` to ``D6`` entries are skeleton patterns: each is two diamonds
(``K4 - e`` drawn as two triangles) with the triangles named ``f1 .. f4``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .embedding import Drawing, bezier_path, drawing_from_coordinates

__all__ = ["catalog", "catalog_names", "pattern", "Pattern", "PATTERN_NAMES"]


def _polar(deg: float, r: float) -> tuple[float, float]:
    return (r * math.cos(math.radians(deg)), r * math.sin(math.radians(deg)))


def _k5():
    # v0 v1 w0 w1 w2 -> 0..4
    pos = [_polar(210, 3), _polar(330, 3), _polar(200, 1.3), _polar(340, 1.3), _polar(90, 3)]
    edges = [(1, 2), (1, 3), (1, 4), (0, 3), (0, 1), (0, 4), (2, 3), (3, 4), (4, 2), (0, 2)]
    return 5, edges, pos, {}


def _k6():
    # v0 v1 v2 w0 w1 w2 -> 0..5
    pos = [_polar(a, 3) for a in (210, 330, 90)] + [_polar(a, 1.5) for a in (210, 330, 90)]
    edges = []
    for i in range(3):
        j = (i + 1) % 3
        edges += [(i, j), (3 + i, 3 + j), (i, 3 + i), (i, 3 + j), (j, 3 + i)]
    return 6, edges, pos, {}


def _relabel(nodes, pos, edges, paths=None):
    idx = {v: i for i, v in enumerate(nodes)}
    p = [pos[v] for v in nodes]
    e = [(idx[a], idx[b]) for a, b in edges]
    curves = {}
    for (a, b), pts in (paths or {}).items():
        ia, ib = idx[a], idx[b]
        curves[(ia, ib) if ia < ib else (ib, ia)] = pts if ia < ib else list(reversed(pts))
    return len(nodes), e, p, curves


_A_POS = {
    0: (-5, 6), 1: (-8, 1), 2: (-2, 1), 3: (-4, 2.5), 4: (-6, 2.5), 15: (-5, 4),
    5: (2, 6), 6: (-1, 1), 7: (5, 1), 8: (3, 2.5), 9: (1, 2.5), 16: (2, 4),
    10: (9, 6), 11: (6, 1), 12: (12, 1), 13: (10, 2.5), 14: (8, 2.5), 17: (9, 4),
}


def _a1():
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 2), (4, 1), (4, 3), (15, 4), (15, 3), (0, 15),
             (0, 4), (15, 1), (1, 3), (4, 2)]
    return _relabel([0, 1, 2, 3, 4, 15], _A_POS, edges)


def _a2():
    edges = [(5, 6), (6, 7), (7, 5), (8, 7), (9, 6), (9, 8), (16, 8), (16, 9),
             (6, 16), (5, 9), (5, 8), (16, 7), (6, 8), (9, 7)]
    return _relabel([5, 6, 7, 8, 9, 16], _A_POS, edges)


def _a3():
    edges = [(10, 11), (11, 12), (12, 10), (13, 12), (14, 11), (14, 13), (17, 14), (17, 10),
             (10, 14), (11, 17), (10, 13), (17, 12), (11, 13), (14, 12)]
    return _relabel([10, 11, 12, 13, 14, 17], _A_POS, edges)


# u1..u7 -> 0..6 in all three order-7 drawings
_B_SHARED = [(1, 2), (2, 3), (3, 1), (1, 5), (5, 3), (4, 2), (4, 5), (6, 4), (6, 5),
             (1, 6), (1, 4), (6, 2), (2, 5), (4, 3)]


def _b(pos, extra, curves):
    p = {u: pos[u] for u in pos}
    edges = [(a - 1, b - 1) for a, b in _B_SHARED + extra]
    paths = {}
    for (a, b), (out_deg, in_deg) in curves.items():
        paths[(a - 1, b - 1)] = bezier_path(p[a], p[b], out_deg, in_deg)
    nodes = list(range(7))
    return _relabel(nodes, {u - 1: p[u] for u in p}, edges, paths)


def _b1():
    pos = {1: (-12, 11), 2: (-18, 1), 3: (-6, 1), 5: (-9, 2.5), 4: (-15, 2.5), 6: (-12, 6), 7: (-12, 3.5)}
    extra = [(6, 7), (7, 4), (7, 5), (1, 7)]
    return _b(pos, extra, {(1, 7): (-90, 20)})


def _b2():
    pos = {1: (3, 11), 2: (-3, 1), 3: (9, 1), 5: (6, 2.5), 4: (0, 2.5), 6: (2, 6), 7: (4, 6)}
    extra = [(1, 7), (7, 4), (7, 5), (6, 7)]
    return _b(pos, extra, {(7, 4): (-105, 15)})


def _b3():
    pos = {1: (18, 11), 2: (12, 1), 3: (24, 1), 4: (15, 2.5), 5: (21, 2.5), 6: (17, 6), 7: (19, 6)}
    extra = [(7, 5), (7, 4), (7, 3), (1, 7)]
    # "bend left=15" leaves 15 degrees left of the chord and arrives symmetrically
    chord = math.degrees(math.atan2(pos[4][1] - pos[7][1], pos[4][0] - pos[7][0]))
    return _b(pos, extra, {(7, 4): (chord + 15, chord + 180 - 15), (7, 3): (-30, 135)})


def _g0():
    # picture node -> vertex label
    label = {0: 0, 1: 2, 2: 1, 3: 3, 4: 6, 5: 8, 6: 7, 7: 9, 8: 4, 9: 5, 10: 10, 11: 11, 12: 12}
    pic = {0: (0, 10), 1: (-4.5, 1), 2: (4.5, 1), 3: (-3.5, 2), 4: (0.25, 5.75), 5: (2, 4.75),
           6: (1, 4.5), 7: (1.5, 3.5), 8: (-1.75, 4.5), 9: (-0.5, 3.75), 10: (-0.75, 2.5),
           11: (-6.25, 0), 12: (6, 0)}
    pic_edges = [(0, 1), (1, 2), (2, 0), (0, 4), (4, 6), (6, 5), (5, 0), (0, 6), (8, 3), (3, 1),
                 (3, 10), (10, 2), (2, 3), (8, 9), (0, 8), (0, 3), (9, 10), (3, 9), (9, 4), (0, 9),
                 (9, 7), (2, 7), (9, 2), (6, 7), (6, 2), (2, 5), (0, 11), (11, 1), (12, 11),
                 (11, 2), (1, 12), (12, 2), (12, 0), (9, 6)]
    pos = [None] * 13
    for k, v in label.items():
        pos[v] = pic[k]
    edges = [(label[a], label[b]) for a, b in pic_edges]
    return 13, edges, pos, {}


_BUILDERS = {
    "K5": _k5, "K6": _k6, "A1": _a1, "A2": _a2, "A3": _a3,
    "B1": _b1, "B2": _b2, "B3": _b3, "G0": _g0,
}


@dataclass(frozen=True)
class Pattern:
    """A two-diamond skeleton with its four named triangles.

    ``faces[i]`` is the vertex set of triangle ``f(i+1)``; triangles 1, 2 form
    one diamond and 3, 4 the other.  ``labels`` names ``v0 .. v3`` where the
    pattern carries the non-edge condition.
    """

    name: str
    drawing: Drawing
    faces: tuple[frozenset[int], ...]
    labels: dict | None = None


def _pattern_data(name):
    if name == "D1":
        # v0 v1 (13) (14) v2 v3 -> 0..5
        pos = [(-15.25, 2.5), (-13, 5), (-13, 0), (-10, 5), (-8, 2.5), (-10, 0)]
        edges = [(1, 2), (1, 0), (0, 2), (1, 3), (3, 2), (2, 5), (3, 4), (4, 5), (2, 4)]
        faces = [(0, 1, 2), (1, 3, 2), (2, 3, 4), (2, 4, 5)]
        labels = {"v0": 0, "v1": 1, "v2": 4, "v3": 5}
    elif name == "D2":
        pos = [(-4.25, 2.5), (-2, 5), (-2, 0), (1, 5), (3, 2.5), (1, 0)]
        edges = [(1, 2), (1, 0), (0, 2), (1, 3), (3, 2), (2, 5), (5, 3), (3, 4), (4, 5)]
        faces = [(0, 1, 2), (1, 3, 2), (2, 3, 5), (3, 4, 5)]
        labels = {"v0": 0, "v1": 1, "v2": 4, "v3": 5}
    else:
        # two diamonds top/left/bottom/right with a vertical diagonal
        def diamond(cx, cy, w, h):
            return [(cx, cy + h), (cx - w, cy), (cx, cy - h), (cx + w, cy)]

        if name == "D3":
            pos = diamond(9, 2.5, 2.25, 2.5) + diamond(14.5, 2.5, 2.25, 2.5)
            quads = [(0, 1, 2, 3), (4, 5, 6, 7)]
        elif name == "D4":  # right tip of the first is the left tip of the second
            pos = diamond(-13.5, -6.5, 2.25, 2.5) + diamond(-9, -6.5, 2.25, 2.5)
            pos = pos[:4] + [pos[4], pos[6], pos[7]]
            quads = [(0, 1, 2, 3), (4, 3, 5, 6)]
        elif name == "D5":  # tip of the first is a diagonal end of the second
            pos = diamond(-2.5, -6.5, 2.25, 2.5) + [(2, -4), (2, -9), (4.25, -6.5)]
            quads = [(0, 1, 2, 3), (3, 4, 6, 5)]
        else:  # D6: diagonal ends meet
            pos = [(8.5, -4.5), (6, -6.75), (8.5, -9), (11, -6.75),
                   (13.5, -4.5), (13.5, -9), (16, -6.75)]
            quads = [(1, 2, 3, 0), (3, 4, 6, 5)]
        edges = []
        faces = []
        # (t, l, b, r): rim t-l-b-r with diagonal t-b
        for t, lf, bt, rt in quads:
            edges += [(t, lf), (lf, bt), (bt, rt), (rt, t), (t, bt)]
            faces += [(t, lf, bt), (t, bt, rt)]
        labels = None
    return pos, edges, faces, labels


PATTERN_NAMES = ("D1", "D2", "D3", "D4", "D5", "D6")


@lru_cache(maxsize=None)
def pattern(name: str) -> Pattern:
    if name not in PATTERN_NAMES:
        raise KeyError(f"unknown pattern {name!r}")
    pos, edges, faces, labels = _pattern_data(name)
    d = drawing_from_coordinates(len(pos), edges, pos)
    return Pattern(name, d, tuple(frozenset(f) for f in faces), labels)


def catalog_names() -> tuple[str, ...]:
    return tuple(_BUILDERS) + PATTERN_NAMES


@lru_cache(maxsize=None)
def catalog(name: str) -> Drawing:
    """The named reference drawing: K5, K6, A1-A3, B1-B3, G0 or a pattern D1-D6."""
    if name in PATTERN_NAMES:
        return pattern(name).drawing
    try:
        build = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown drawing {name!r}; choose from {', '.join(catalog_names())}") from None
    n, edges, pos, curves = build()
    return drawing_from_coordinates(n, edges, pos, curves)
