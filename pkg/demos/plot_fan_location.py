"""
Point location in a Bier fan
============================

The fan over the Bier sphere is complete and smooth. Every rational point
lies in the relative interior of exactly one cone.
"""

import numpy as np

from bierfan import (
    bier_sphere,
    canonical_fan,
    from_facets,
    is_regular,
    locate_point,
    locate_point_bruteforce,
    sample_points,
    verify_complete,
)
from bierfan.fan import locate_batch, sample_integer_points, split_labels

K = from_facets(4, [[1, 2], [3], [2, 4]])
F = canonical_fan(bier_sphere(K))
print(len(F.max_cones), "maximal cones in dimension", F.dim)

for cone in F.max_cones[:4]:
    print(cone.tag, cone.generators)

# unimodular maximal cones
print("regular:", bool(is_regular(F)))

rep = verify_complete(F)
print(rep.verdict)

# a single point, against the brute force oracle
x = ("1/2", "-3", "2/7")
print("locate:", locate_point(F, x), " brute force:", locate_point_bruteforce(F, x))

# batch location on integer-scaled seeded samples
X = sample_integer_points(4, 2000, seed=7)
count, face = locate_batch(F, X)
assert (count == 1).all()
tags, hits = np.unique(face, return_counts=True)
print("cones hit by 2000 samples:", len(tags))
for t, h in sorted(zip(tags, hits), key=lambda p: -p[1])[:5]:
    print("  ", split_labels(int(t), 4), h)

pts = sample_points(4, 3, seed=7)
print([locate_point(F, p) for p in pts])
