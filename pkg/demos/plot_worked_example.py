"""
A Bier sphere from a two-facet complex
======================================

Build K = <{1}, {2,3}> on [3], its Alexander dual, and the Bier sphere.
"""

from bierfan import alexander_dual, bier_sphere, fh_vectors, from_facets
from bierfan.bier import format_face
from bierfan.simplicial import mask_to_labels

K = from_facets(3, [[1], [2, 3]])
print("K facets:", [mask_to_labels(f) for f in K.facet_list])

# the dual lives on the same ground set; its faces are complements of non-faces
D = alexander_dual(K)
print("dual facets:", [mask_to_labels(f) for f in D.facet_list])

B = bier_sphere(K)
print("Bier facets:", " ".join(sorted(format_face(f, 3) for f in B.facets)))

# one primed vertex never appears, so the sphere is a pentagon on 5 vertices
print("geometric vertices:", B.geometric_vertices)
print("ghost vertices:", B.ghost_vertices)

fh = fh_vectors(B.complex)
print("f =", fh.f, " h =", fh.h)
