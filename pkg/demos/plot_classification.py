"""
Classifying Bier spheres up to isomorphism
==========================================

Enumerate every complex on [m], build the Bier sphere, and bucket by a
canonical form of the geometric part.
"""

import time

from bierfan import classify_bier

for m in (2, 3, 4):
    t = time.perf_counter()
    rep = classify_bier(m)
    dt = time.perf_counter() - t
    print(f"m={m}: {rep.total_complexes} complexes, {len(rep.classes)} types ({dt:.2f} s)")
    for c in rep.classes:
        print(f"   {c.n_vertices} vertices  h={c.fh.h}  x{c.multiplicity}  complete={c.complete}")

# at m = 3 the types are the 3-, 4-, 5- and 6-gon
