"""Command-line interface.

Results go to stdout as one JSON object ``{"status": ..., "result": ...}``;
progress messages go to stderr.  Graph files ending in ``.drawing.json``
are drawings, anything else is read as an edge list.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from .catalog import catalog, catalog_names
from .chordal import EliminationOrder, ScaleExceeded, is_chordal, is_k_tree, simplicial_vertices
from .connectivity import INFINITE, toughness, vertex_connectivity
from .embedding import (
    Drawing,
    DrawingError,
    drawing_code,
    four_join,
    from_json,
    insertion_capacity,
    to_json,
    twin_faces,
    uncrossed_face_skeleton,
    validate,
)
from .families import RetryBudgetExceeded, all_k_trees, g0, glued_family, random_k_tree, two_simplicial_k_tree
from .graph import Graph, GraphError, parse_edge_list
from .hamiltonian import (
    HypothesisError,
    NotApplicable,
    ktree_ham_path,
    oracle_ham_connected,
    oracle_ham_path,
    theorem_ham_path,
)
from .oneplanarity import enumerate_drawings, is_one_planar
from .phi_family import generate_phi, match_skeleton_pattern, phi_membership
from .verify import run_checks

__all__ = ["CommandResult", "run", "main"]

EXIT_CODES = {"ok": 0, "not_applicable": 2, "violation": 3, "scale_exceeded": 4}
log = logging.getLogger("chordal1p")


@dataclass
class CommandResult:
    status: str
    payload: Any
    raw: bool = False

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_json(self) -> str:
        if self.raw:
            return json.dumps(self.payload, sort_keys=True)
        return json.dumps({"status": self.status, "result": self.payload}, sort_keys=True)


class UsageError(Exception):
    pass


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def _drawing_json(d: Drawing) -> dict:
    return json.loads(to_json(d))


def _load(path: str) -> tuple[Graph, Drawing | None]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        if path.endswith(".drawing.json"):
            d = from_json(text)
            return d.graph, d
        return parse_edge_list(text), None
    except (GraphError, DrawingError, ValueError) as exc:
        raise UsageError(f"malformed input {path}: {exc}") from None


def _need_drawing(path: str) -> Drawing:
    _, d = _load(path)
    if d is None:
        raise UsageError(f"{path} is not a .drawing.json file")
    return d


# commands ----------------------------------------------------------------------


def cmd_recognize(a) -> CommandResult:
    g, _ = _load(a.file)
    cert = is_chordal(g)
    out: dict = {"n": g.n, "m": g.m, "chordal": isinstance(cert, EliminationOrder)}
    if isinstance(cert, EliminationOrder):
        out["elimination_order"] = list(cert.order)
    else:
        out["hole"] = list(cert.cycle)
    out["simplicial"] = simplicial_vertices(g)
    out["k_tree"] = {str(k): is_k_tree(g, k) is not None for k in range(2, 6)}
    kappa, wit = vertex_connectivity(g)
    out["kappa"] = kappa
    out["separator"] = list(wit.separator) if wit else None
    try:
        t = toughness(g, a.toughness_max_n)
        out["toughness"] = "inf" if t is INFINITE else {
            "value": str(t.value), "cut_set": list(t.cut_set), "components": t.component_count}
    except ScaleExceeded as exc:
        out["toughness"] = None
        out["toughness_skipped"] = str(exc)
    return CommandResult("ok", out)


def cmd_hampath(a) -> CommandResult:
    g, _ = _load(a.file)
    x, y = a.x, a.y
    if not (0 <= x < g.n and 0 <= y < g.n) or x == y:
        raise UsageError("x and y must be two distinct vertices")
    if a.mode == "oracle":
        p = oracle_ham_path(g, x, y)
        return CommandResult("ok", None if p is None else list(p.sequence))
    if a.mode == "ktree":
        try:
            p = ktree_ham_path(g, a.k, x, y)
        except HypothesisError as exc:
            return CommandResult("not_applicable", {"reason": str(exc)})
        return CommandResult("ok", list(p.sequence))
    r = theorem_ham_path(g, x, y)
    if isinstance(r, NotApplicable):
        return CommandResult("not_applicable", {"reason": r.reason})
    return CommandResult("ok", list(r.sequence))


def cmd_hamconn(a) -> CommandResult:
    g, _ = _load(a.file)
    ok, pair = oracle_ham_connected(g)
    return CommandResult("ok", {"hamiltonian_connected": ok, "failing_pair": list(pair) if pair else None})


def cmd_oneplanar(a) -> CommandResult:
    g, _ = _load(a.file)
    if a.enumerate:
        en = enumerate_drawings(g, a.budget)
        classes = [{"code": c.hex(), "crossings": d.crossing_count, "drawing": _drawing_json(d)}
                   for c, d in sorted(en.classes.items())]
        return CommandResult("ok", {"classes": classes, "crossing_sets": en.crossing_sets,
                                    "unresolved_crossing_sets": [list(map(list, s.pairs)) for s in en.incomplete]})
    r = is_one_planar(g, a.budget)
    if r.verdict == "exhausted":
        return CommandResult("scale_exceeded", {"verdict": r.verdict, "reason": r.reason})
    payload = {"verdict": r.verdict, "reason": r.reason}
    if r.drawing is not None:
        payload["drawing"] = _drawing_json(r.drawing)
    return CommandResult("ok", payload)


def _face_json(f) -> dict:
    return {"nodes": list(f.nodes), "crossed": f.is_crossed}


def cmd_drawing(a) -> CommandResult:
    d = _need_drawing(a.file)
    v = validate(d)
    if v is not True:
        return CommandResult("violation", {"kind": v.kind, "location": v.location, "message": v.message})
    verb = a.verb
    if verb == "validate":
        return CommandResult("ok", {"valid": True, "crossings": d.crossing_count})
    if verb == "faces":
        return CommandResult("ok", [dict(_face_json(f), capacity=insertion_capacity(d, f)) for f in d.faces])
    if verb == "twins":
        return CommandResult("ok", [[list(f1.nodes), list(f2.nodes)] for f1, f2 in twin_faces(d)])
    if verb == "fourjoin":
        pairs = twin_faces(d)
        if not 0 <= a.pair < len(pairs):
            raise UsageError(f"--pair must be in 0..{len(pairs) - 1}")
        return CommandResult("ok", _drawing_json(four_join(d, *pairs[a.pair])))
    if verb == "code":
        return CommandResult("ok", drawing_code(d).hex())
    if verb == "uf":
        skel, verts = uncrossed_face_skeleton(d)
        m = match_skeleton_pattern(d)
        return CommandResult("ok", {"vertices": verts, "edges": [[verts[u], verts[v]] for u, v in skel.graph.edges],
                                    "pattern": None if m is None else m.name})
    if verb == "membership":
        r = phi_membership(d)
        return CommandResult("ok", {"accepted": r.accepted, "reason": r.reason, "base": r.base})
    raise UsageError(f"unknown drawing verb {verb!r}")  # pragma: no cover - argparse restricts choices


def cmd_generate(a) -> CommandResult:
    fam = a.family
    if fam == "g0":
        g, d = g0()
        return CommandResult("ok", _drawing_json(d) if a.drawing else _graph_json(g))
    if fam == "glued":
        g, d, cut = glued_family(a.depth)
        out = _drawing_json(d) if a.drawing else _graph_json(g)
        return CommandResult("ok", dict(out, cut=list(cut)))
    if fam == "catalog":
        if a.name not in catalog_names():
            raise UsageError(f"unknown catalog entry; choose from {', '.join(catalog_names())}")
        d = catalog(a.name)
        return CommandResult("ok", _drawing_json(d) if a.drawing else _graph_json(d.graph))
    if fam == "ktree":
        return CommandResult("ok", _graph_json(random_k_tree(a.n, a.k, a.seed)))
    if fam == "twosimp":
        return CommandResult("ok", _graph_json(two_simplicial_k_tree(a.n, a.k, a.seed)))
    if fam == "alltrees":
        return CommandResult("ok", [_graph_json(g) for g in all_k_trees(a.n, a.k)])
    if fam == "phi":
        atlas = generate_phi(a.order)
        members = [{"order": d.n, "code": c.hex(), "drawing": _drawing_json(d)} for c, d in atlas.members()]
        return CommandResult("ok", {"counts": {str(k): v for k, v in atlas.counts().items()}, "members": members})
    raise UsageError(f"unknown family {fam!r}")  # pragma: no cover


def cmd_verify(a) -> CommandResult:
    workers = int(os.environ.get("CHORDAL1P_WORKERS", "1") or 1)
    checks = run_checks(a.max_order, workers=workers, log=log.info)
    passed = all(c.passed for c in checks)
    report = {"max_order": a.max_order, "passed": passed, "checks": [c.as_dict() for c in checks]}
    return CommandResult("ok" if passed else "violation", json.loads(json.dumps(report, default=str)))


# parser -------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chordal1p", description="Chordal 1-planar graph toolkit.")
    p.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    p.add_argument("--raw", action="store_true", help="print only the result, e.g. to save a drawing file")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("recognize", help="chordality, simplicial vertices, k-tree tests, connectivity, toughness")
    s.add_argument("file")
    s.add_argument("--toughness-max-n", type=int, default=18)
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("hampath", help="Hamiltonian path between two vertices")
    s.add_argument("file")
    s.add_argument("x", type=int)
    s.add_argument("y", type=int)
    s.add_argument("--mode", choices=("theorem", "ktree", "oracle"), default="theorem")
    s.add_argument("--k", type=int, default=4, help="k for --mode ktree")
    s.set_defaults(func=cmd_hampath)

    s = sub.add_parser("hamconn", help="all-pairs Hamiltonian connectivity by exhaustive search")
    s.add_argument("file")
    s.set_defaults(func=cmd_hamconn)

    s = sub.add_parser("oneplanar", help="decide 1-planarity or enumerate drawings")
    s.add_argument("file")
    s.add_argument("--enumerate", action="store_true")
    s.add_argument("--budget", type=int, default=2_000_000, help="planarity tests before giving up")
    s.set_defaults(func=cmd_oneplanar)

    s = sub.add_parser("drawing", help="operations on a .drawing.json file")
    s.add_argument("verb", choices=("validate", "faces", "twins", "fourjoin", "code", "uf", "membership"))
    s.add_argument("file")
    s.add_argument("--pair", type=int, default=0, help="twin pair index for fourjoin")
    s.set_defaults(func=cmd_drawing)

    s = sub.add_parser("generate", help="build a family member")
    s.add_argument("family", choices=("g0", "glued", "catalog", "ktree", "twosimp", "alltrees", "phi"))
    s.add_argument("--depth", type=int, default=1)
    s.add_argument("--name", default="K5")
    s.add_argument("--n", type=int, default=8)
    s.add_argument("--k", type=int, default=4)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--order", type=int, default=9)
    s.add_argument("--drawing", action="store_true", help="emit the drawing instead of the graph")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("verify", help="end-to-end verification report")
    s.add_argument("target", choices=("theorem",))
    s.add_argument("--max-order", type=int, default=12)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str]) -> CommandResult:
    """Parse ``argv`` and run the command.  Usage problems raise :class:`UsageError`."""
    p = _parser()
    try:
        a = p.parse_args(list(argv))
    except SystemExit as exc:
        raise UsageError("invalid arguments") from exc
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(message)s")
    try:
        res = a.func(a)
        res.raw = a.raw
        return res
    except (ScaleExceeded, RetryBudgetExceeded) as exc:
        return CommandResult("scale_exceeded", {"reason": str(exc)})
    except HypothesisError as exc:
        return CommandResult("not_applicable", {"reason": str(exc)})
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        res = run(argv)
    except UsageError as exc:
        if str(exc) != "invalid arguments":
            print(f"error: {exc}", file=sys.stderr)
        return 1
    print(res.to_json())
    return res.exit_code
