"""Bier spheres, their canonical complete regular fans and toric invariants.

Typical use::

    from bierfan import from_facets, bier_sphere, canonical_fan, verify_complete

    K = from_facets(3, [[1], [2, 3]])
    F = canonical_fan(bier_sphere(K))
    verify_complete(F).verdict      # 'complete (verified)'
"""

from .bier import BierComplex, alexander_dual, bier_increment, bier_sphere, vertex_counts
from .classify import classify_bier, enumerate_complexes, orientability_survey
from .errors import (
    BierfanError,
    DomainError,
    EnumerationBoundError,
    OverflowGuardError,
    PreconditionError,
    ValidationError,
    VerificationError,
)
from .fan import (
    Cone,
    Fan,
    canonical_fan,
    fan_increment,
    is_regular,
    locate_point,
    locate_point_bruteforce,
    sample_points,
    verify_complete,
    vertex_generator,
)
from .simplicial import (
    FHVectors,
    SimplicialComplex,
    canonical_form,
    fh_vectors,
    from_facets,
    minimal_non_faces,
    simplex,
    simplex_boundary,
    void,
)
from .toric import char_matrix, is_orientable_real, toric_report

__version__ = "0.1.0"
