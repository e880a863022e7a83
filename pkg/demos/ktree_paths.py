"""Hamiltonian paths in k-trees with two simplicial vertices, built by splicing."""

import collections

from chordal1p import ktree_ham_path, two_simplicial_k_tree
from chordal1p.hamiltonian import oracle_ham_path

for k in (3, 4, 5):
    g = two_simplicial_k_tree(14, k, seed=k)
    cases = collections.Counter()
    pairs = 0
    for x in range(g.n):
        for y in range(x + 1, g.n):
            trace = []
            p = ktree_ham_path(g, k, x, y, trace)
            assert p.check(g, x, y)
            cases.update(trace)
            pairs += 1
    print(f"k={k} n={g.n} m={g.m}: {pairs} pairs, splice cases used {dict(sorted(cases.items()))}")

g = two_simplicial_k_tree(10, 4, seed=1)
print("constructed:", ktree_ham_path(g, 4, 2, 7).sequence)
print("searched:   ", oracle_ham_path(g, 2, 7).sequence)
