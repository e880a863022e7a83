"""Grow the 4-join family of 1-planar 4-tree drawings and look around in it."""

from chordal1p import generate_phi, phi_membership, theorem_ham_path
from chordal1p.phi_family import match_skeleton_pattern, phi_graphs

atlas = generate_phi(11)
graphs = phi_graphs(11, atlas)
for n, count in atlas.counts().items():
    print(f"order {n:2d}: {count:3d} drawings, {len(graphs[n]):2d} graphs")

# peel one order-11 member back to its seed
code, d = next(atlas.members(11))
m = phi_membership(d)
print("\nmembership:", m.reason, "via seed", m.base, "orders", [x.n for x in m.chain])
print("uncrossed-face skeleton pattern:", match_skeleton_pattern(d).name)

# every pair of vertices is joined by a Hamiltonian path
g = d.graph
p = theorem_ham_path(g, 0, g.n - 1)
print("path 0 ->", g.n - 1, ":", p.sequence, "valid:", p.check(g, 0, g.n - 1))
