"""
Toric invariants of Bier spheres
================================

h-vectors, Betti numbers of the toric manifold, and the mod 2 test for the
real toric manifold, over every complex on [4].
"""

import collections

import numpy as np

from bierfan import bier_sphere, char_matrix, enumerate_complexes, toric_report

reports = [toric_report(bier_sphere(K)) for K in enumerate_complexes(4)]
print(len(reports), "complexes on [4]")

h = np.array([r.fh.h for r in reports])
print("h-vectors symmetric:", bool((h == h[:, ::-1]).all()))

# the Euler characteristic equals the number of facets
print("distinct Euler characteristics:", sorted({r.euler for r in reports}))

tally = collections.Counter(r.fh.h for r in reports)
for vec, n in sorted(tally.items()):
    print("  h =", vec, "x", n)

# characteristic matrix of one example, integer and mod 2
cm = char_matrix(bier_sphere(next(iter(enumerate_complexes(4)))))
print(cm.matrix)
print(cm.mod2)

odd = [r for r in reports if not r.m_parity_matches]
print("orientability vs parity mismatches on [4]:", len(odd))
