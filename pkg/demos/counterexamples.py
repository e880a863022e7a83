"""Chordal, 1-planar and 3-connected is not enough for a Hamiltonian cycle.

Builds the 13-vertex graph G0, shows why it has no Hamiltonian cycle, then
glues copies of it onto its own triangles to get larger graphs of the same kind.
"""

from chordal1p import g0, glued_family, is_chordal, toughness, validate, vertex_connectivity
from chordal1p.families import g0_cut_set
from chordal1p.graph import count_components
from chordal1p.hamiltonian import oracle_ham_cycle

g, d = g0()
print(f"G0: n={g.n} m={g.m}, drawing valid={validate(d) is True}, crossings={d.crossing_count}")
print("chordal:", type(is_chordal(g)).__name__)
print("connectivity:", vertex_connectivity(g)[0])

cut = g0_cut_set()
left = count_components(g, g.vertex_mask & ~sum(1 << v for v in cut))
print(f"removing {list(cut)} leaves {left} components, so no Hamiltonian cycle can exist")
print("exhaustive cycle search agrees:", oracle_ham_cycle(g) is None)

t = toughness(g)
print(f"toughness {t.value} attained by {list(t.cut_set)}")

for depth in (1, 2):
    h, e, cut = glued_family(depth)
    left = count_components(h, h.vertex_mask & ~sum(1 << v for v in cut))
    print(f"depth {depth}: n={h.n}, crossings={e.crossing_count}, kappa={vertex_connectivity(h)[0]}, "
          f"|X|={len(cut)} < c(G-X)={left}")
