"""End-to-end verification report.

Each check is a pure function of ``max_order`` returning a :class:`Check`;
details hold only deterministic data so the report is byte-stable.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .catalog import catalog
from .chordal import EliminationOrder, is_chordal, is_k_tree, ktree_edge_count, simplicial_vertices
from .connectivity import check_chvatal_bound, toughness, vertex_connectivity
from .embedding import drawing_code, validate
from .families import all_k_trees, g0, g0_cut_set, glued_family, random_k_tree, two_simplicial_k_tree
from .graph import Graph, are_isomorphic, canonical_form, complete_graph, count_components, from_edge_list, join_complete_empty
from .hamiltonian import is_ham_path, ktree_ham_path, oracle_ham_cycle, oracle_ham_path, theorem_ham_path
from .oneplanarity import enumerate_drawings, is_one_planar, max_edges_one_planar
from .phi_family import generate_phi, match_skeleton_pattern, phi_graphs

__all__ = ["Check", "CHECKS", "run_checks", "corpus", "ktree_samples", "two_simplicial_samples"]


@dataclass
class Check:
    id: int
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"id": self.id, "name": self.name, "passed": self.passed, "detail": self.detail}


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _k6_minus_e() -> Graph:
    return from_edge_list(6, [e for e in complete_graph(6).edges if e != (0, 1)])


def two_simplicial_samples(count: int = 200) -> list[tuple[int, Graph]]:
    """``(k, graph)`` for seeds ``0 .. count-1``; k cycles through 3, 4, 5 and n <= 12."""
    out = []
    for seed in range(count):
        k = 3 + seed % 3
        n = random.Random(seed).randint(k + 2, 12)
        out.append((k, two_simplicial_k_tree(n, k, seed)))
    return out


def ktree_samples(count: int = 1000) -> list[tuple[int, Graph]]:
    """``(k, graph)`` for seeds ``0 .. count-1``; k cycles through 3, 4, 5 and n <= 14."""
    out = []
    for seed in range(count):
        k = 3 + seed % 3
        n = random.Random(10_000 + seed).randint(k + 2, 14)
        out.append((k, random_k_tree(n, k, seed)))
    return out


def corpus(max_order: int = 12) -> list[tuple[str, Graph]]:
    """Named graphs the bound checks sweep over."""
    out = [(f"catalog {name}", catalog(name).graph)
           for name in ("K5", "K6", "A1", "A2", "A3", "B1", "B2", "B3", "G0")]
    out += [("K4+3K1", join_complete_empty(4, 3)), ("K4+5K1", join_complete_empty(4, 5))]
    for depth in (1, 2):
        out.append((f"glued depth {depth}", glued_family(depth)[0]))
    for n, gs in phi_graphs(max_order).items():
        out += [(f"phi order {n} #{i}", g) for i, g in enumerate(gs)]
    for n in range(5, 9):
        out += [(f"4-tree order {n} #{i}", g) for i, g in enumerate(all_k_trees(n, 4))]
    out += [(f"two-simplicial {k}-tree #{i}", g) for i, (k, g) in enumerate(two_simplicial_samples())]
    return out


# checks -------------------------------------------------------------------------


def check_g0_facts(max_order: int) -> Check:
    g, _ = g0()
    cut = g0_cut_set()
    kappa, _ = vertex_connectivity(g)
    comps = count_components(g, g.vertex_mask & ~_mask(cut))
    t = toughness(g)
    ratio = Fraction(len(cut), comps)
    ok = (
        isinstance(is_chordal(g), EliminationOrder)
        and kappa == 3
        and oracle_ham_cycle(g) is None
        and comps == 6
        and t.value <= Fraction(5, 6)
        and ratio == Fraction(5, 6)
    )
    return Check(1, "G0 facts", ok, {"kappa": kappa, "components": comps, "toughness": str(t.value)})


def _codes(names) -> dict:
    return {drawing_code(catalog(n)): n for n in names}


def check_small_uniqueness(max_order: int) -> Check:
    detail = {}
    ok = True
    for name, g, cross in (("K5", complete_graph(5), 1), ("K6", complete_graph(6), 3)):
        en = enumerate_drawings(g)
        got = [(_codes([name]).get(c), d.crossing_count) for c, d in en.classes.items()]
        detail[name] = got
        ok &= en.complete and got == [(name, cross)]
    return Check(2, "unique drawings of K5 and K6", ok, detail)


def check_k6_minus_e(max_order: int) -> Check:
    en = enumerate_drawings(_k6_minus_e())
    ref = _codes(["A1", "A2", "A3"])
    names = sorted(ref.get(c, "?") for c in en.classes)
    return Check(3, "three drawings of K6-e", en.complete and names == ["A1", "A2", "A3"], {"classes": names})


def check_order7(max_order: int) -> Check:
    trees = all_k_trees(7, 4)
    k4k3 = join_complete_empty(4, 3)
    detail: dict = {"classes": len(trees)}
    ok = len(trees) == 2
    bad = [g for g in trees if are_isomorphic(g, k4k3)]
    good = [g for g in trees if not are_isomorphic(g, k4k3)]
    ok &= len(bad) == 1 and len(good) == 1
    if ok:
        refuted = is_one_planar(bad[0])
        accepted = is_one_planar(good[0])
        en = enumerate_drawings(good[0])
        ref = _codes(["B1", "B2", "B3"])
        names = sorted(ref.get(c, "?") for c in en.classes)
        detail.update(k4k3=refuted.verdict, other=accepted.verdict, drawings=names)
        ok = refuted.verdict == "impossible" and accepted.verdict == "drawing" and en.complete and names == ["B1", "B2", "B3"]
    return Check(4, "order-7 classification", ok, detail)


def check_order8(max_order: int) -> Check:
    atlas = generate_phi(8)
    phi = {canonical_form(d.graph)[0] for _, d in atlas.members(8)}
    accepted = set()
    exhausted = 0
    trees = all_k_trees(8, 4)
    for g in trees:
        r = is_one_planar(g)
        if r.verdict == "exhausted":
            exhausted += 1
        elif r:
            accepted.add(canonical_form(g)[0])
    ok = exhausted == 0 and phi == accepted
    return Check(5, "order-8 exhaustiveness", ok,
                 {"four_trees": len(trees), "accepted": len(accepted), "phi_classes": len(phi), "exhausted": exhausted})


def check_phi_properties(max_order: int) -> Check:
    atlas = generate_phi(max_order)
    seen = failed = 0
    patterns: dict[str, int] = {}
    for code, d in atlas.members():
        seen += 1
        g = d.graph
        parent = atlas.parents.get(code)
        want_cross = 3 if parent is None else atlas.by_order[d.n - 1][parent.code].crossing_count + 1
        kappa, _ = vertex_connectivity(g)
        m = match_skeleton_pattern(d)
        good = (
            validate(d) is True
            and is_k_tree(g, 4) is not None
            and len(simplicial_vertices(g)) == 2
            and kappa == 4
            and d.crossing_count == want_cross
            and m is not None
        )
        if m is not None:
            patterns[m.name] = patterns.get(m.name, 0) + 1
        failed += not good
    return Check(6, "family property sweep", failed == 0,
                 {"members": atlas.counts(), "checked": seen, "failed": failed, "patterns": dict(sorted(patterns.items()))})


def check_theorem_paths(max_order: int) -> Check:
    valid = total = oracle_checked = disagree = 0
    for n, gs in phi_graphs(max_order).items():
        for g in gs:
            for x, y in itertools.permutations(range(n), 2):
                p = theorem_ham_path(g, x, y)
                total += 1
                valid += bool(p) and is_ham_path(g, p.sequence, x, y)
                if n <= 9:
                    oracle_checked += 1
                    disagree += oracle_ham_path(g, x, y) is None
    return Check(7, "constructive Hamiltonian paths on the family", valid == total and disagree == 0,
                 {"pairs": total, "valid": valid, "oracle_checked": oracle_checked, "disagreements": disagree})


def check_two_simplicial(max_order: int) -> Check:
    total = valid = oracle_checked = disagree = 0
    for k, g in two_simplicial_samples():
        for x, y in itertools.combinations(range(g.n), 2):
            total += 1
            p = ktree_ham_path(g, k, x, y)
            valid += is_ham_path(g, p.sequence, x, y)
            if g.n <= 10:
                oracle_checked += 1
                disagree += oracle_ham_path(g, x, y) is None
    return Check(8, "two-simplicial k-trees beyond 1-planarity", valid == total and disagree == 0,
                 {"pairs": total, "valid": valid, "oracle_checked": oracle_checked, "disagreements": disagree})


def check_simplicial_sweep(max_order: int) -> Check:
    failed = 0
    for k, g in ktree_samples():
        simp = simplicial_vertices(g)
        good = len(simp) >= 2 and not any(g.has_edge(a, b) for a, b in itertools.combinations(simp, 2))
        if g.n >= k + 3:
            for v in simp:
                h, _ = g.remove_vertices([v])
                good &= len(simplicial_vertices(h)) <= len(simp)
        failed += not good
    return Check(9, "simplicial vertices of k-trees", failed == 0, {"samples": 1000, "failed": failed})


def check_edge_bounds(max_order: int) -> Check:
    ktrees = [(k, g) for k, g in ktree_samples()] + two_simplicial_samples()
    ktrees += [(4, g) for name, g in corpus(max_order) if name.startswith(("phi", "4-tree"))]
    bad_k = sum(g.m != ktree_edge_count(g.n, k) or is_k_tree(g, k) is None for k, g in ktrees)
    drawings = [catalog(n) for n in ("K5", "K6", "A1", "A2", "A3", "B1", "B2", "B3", "G0")]
    drawings += [d for _, d in generate_phi(max_order).members()]
    drawings += [glued_family(depth)[1] for depth in (1, 2)]
    bad_d = sum(validate(d) is not True or d.graph.m > 4 * d.n - 8 for d in drawings)
    k7 = is_one_planar(complete_graph(7))
    ok = bad_k == 0 and bad_d == 0 and k7.verdict == "impossible" and max_edges_one_planar(7) == 19
    return Check(10, "edge bounds", ok,
                 {"k_trees": len(ktrees), "k_tree_failures": bad_k, "drawings": len(drawings),
                  "drawing_failures": bad_d, "K7": k7.verdict})


def check_counterexamples(max_order: int) -> Check:
    detail: dict = {}
    ok = oracle_ham_cycle(join_complete_empty(4, 5)) is None
    detail["K4+5K1_hamiltonian"] = not ok
    for depth in (1, 2):
        g, _, cut = glued_family(depth)
        kappa, _ = vertex_connectivity(g)
        c = count_components(g, g.vertex_mask & ~_mask(cut))
        good = isinstance(is_chordal(g), EliminationOrder) and kappa == 3 and len(cut) < c
        detail[f"glued_{depth}"] = {"n": g.n, "kappa": kappa, "cut": len(cut), "components": c}
        ok &= good
    names = [name for name, g in corpus(max_order) if not check_chvatal_bound(g)]
    detail["chvatal_failures"] = names
    return Check(11, "counterexample battery", ok and not names, detail)


CHECKS: list[Callable[[int], Check]] = [
    check_g0_facts,
    check_small_uniqueness,
    check_k6_minus_e,
    check_order7,
    check_order8,
    check_phi_properties,
    check_theorem_paths,
    check_two_simplicial,
    check_simplicial_sweep,
    check_edge_bounds,
    check_counterexamples,
]


def run_checks(max_order: int = 12, workers: int = 1, log: Callable[[str], None] | None = None) -> list[Check]:
    """Run every check; ``max_order`` caps the family used by checks 6, 7, 10 and 11."""
    if max_order < 8:
        raise ValueError("max_order must be at least 8")
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_one, [(i, max_order) for i in range(len(CHECKS))]))
    else:
        results = []
        for i in range(len(CHECKS)):
            results.append(_run_one((i, max_order)))
            if log:
                log(f"check {results[-1].id}: {'pass' if results[-1].passed else 'FAIL'}")
    return results


def _run_one(arg: tuple[int, int]) -> Check:
    i, max_order = arg
    return CHECKS[i](max_order)
