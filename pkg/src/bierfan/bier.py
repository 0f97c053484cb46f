"""Alexander duality and Bier spheres.

A Bier sphere lives on the ground set [2m]: label ``i <= m`` is the vertex
``i`` and label ``m + i`` is the primed vertex ``i'``.  A face ``I ⊔ J'`` is
therefore the bitmask ``I | (J << m)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DomainError, PreconditionError, ValidationError
from .simplicial import (
    SimplicialComplex,
    from_facet_masks,
    labels_to_mask,
    mask_to_labels,
    minimal_non_faces,
    popcount,
)


def _check_domain(K: SimplicialComplex) -> None:
    if K.m < 2:
        raise DomainError(f"Bier construction requires m >= 2, got m = {K.m}")
    if K.is_simplex:
        raise DomainError("Bier construction requires K ≠ Δ")


def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """``K^∨`` on a ground set of size m: σ is a face iff [m] ∖ σ is not a face of K."""
    _check_domain(K)
    full = K.full_mask
    faces = K.faces
    return SimplicialComplex(K.m, frozenset(s for s in range(full + 1) if full ^ s not in faces))


@dataclass(frozen=True, eq=False)
class BierComplex:
    """Bier sphere of ``source`` together with the dual it was built from."""

    m: int
    complex: SimplicialComplex
    source: SimplicialComplex
    dual: SimplicialComplex

    def __eq__(self, other):
        if not isinstance(other, BierComplex):
            return NotImplemented
        return self.m == other.m and self.complex == other.complex and self.source == other.source

    def __hash__(self):
        return hash((self.m, self.complex, self.source))

    def __repr__(self):
        return f"BierComplex(m={self.m}, facets={[format_face(f, self.m) for f in self.facet_list]})"

    @property
    def faces(self) -> frozenset[int]:
        return self.complex.faces

    @property
    def facets(self) -> frozenset[int]:
        return self.complex.facets

    @property
    def facet_list(self) -> tuple[int, ...]:
        return self.complex.facet_list

    def split(self, face: int) -> tuple[int, int]:
        """``(I, J)`` masks over [m] of a face ``I ⊔ J'``."""
        low = (1 << self.m) - 1
        return face & low, face >> self.m

    @cached_property
    def geometric_vertices(self) -> tuple[int, ...]:
        return self.complex.vertices

    @cached_property
    def ghost_vertices(self) -> tuple[int, ...]:
        return self.complex.ghost_vertices


def join_mask(I: int, J: int, m: int) -> int:
    return I | (J << m)


def format_face(face: int, m: int) -> str:
    """Human-readable face, e.g. ``{1,2'}``."""
    parts = []
    for v in mask_to_labels(face):
        parts.append(str(v) if v <= m else f"{v - m}'")
    return "{" + ",".join(parts) + "}"


def bier_sphere(K: SimplicialComplex) -> BierComplex:
    """Deleted join of ``K`` and its Alexander dual."""
    dual = alexander_dual(K)
    m = K.m
    dual_faces = sorted(dual.faces)
    faces = frozenset(I | (J << m) for I in K.faces for J in dual_faces if not I & J)
    return BierComplex(m=m, complex=SimplicialComplex(2 * m, faces), source=K, dual=dual)


def increment_sets(K: SimplicialComplex, A: int) -> tuple[frozenset[int], frozenset[int]]:
    """The facets removed and added when the minimal non-face ``A`` joins ``K``.

    Removed: ``(A ∖ {i}) ⊔ (A^c)'`` for ``i ∈ A``.
    Added: ``A ⊔ (A^c ∖ {i})'`` for ``i ∈ A^c``.
    """
    m = K.m
    comp = K.full_mask ^ A
    removed = frozenset(join_mask(A ^ (1 << i), comp, m) for i in range(m) if A >> i & 1)
    added = frozenset(join_mask(A, comp ^ (1 << i), m) for i in range(m) if comp >> i & 1)
    return removed, added


def _as_mask(A, m: int) -> int:
    if isinstance(A, int):
        if not 0 <= A < 1 << m:
            raise ValidationError(f"mask {A:#b} is not a subset of [{m}]")
        return A
    return labels_to_mask(A, m)


def bier_increment(B: BierComplex, A: int | Iterable[int]) -> BierComplex:
    """Bier sphere of ``K ∪ {A}`` obtained by rewriting the facets of ``B``.

    ``A`` is a minimal non-face of ``K = B.source``, given as labels or a mask.
    """
    K = B.source
    m = B.m
    A = _as_mask(A, m)
    if A == K.full_mask:
        raise DomainError("Bier construction requires K ≠ Δ")
    if A not in minimal_non_faces(K):
        raise PreconditionError(f"{list(mask_to_labels(A))} is not a minimal non-face of K")
    removed, added = increment_sets(K, A)
    assert removed <= B.facets, "increment: removed facets missing from Bier(K)"
    facets = (B.facets - removed) | added
    source = SimplicialComplex(m, K.faces | {A})
    # σ is dual to K ∪ {A} iff its complement is a non-face of K other than A
    dual = SimplicialComplex(m, B.dual.faces - {K.full_mask ^ A})
    out = BierComplex(m=m, complex=from_facet_masks(2 * m, facets), source=source, dual=dual)
    assert all(popcount(f) == m - 1 for f in out.facets), "increment: result not pure"
    return out


def vertex_counts(K: SimplicialComplex) -> tuple[int, int]:
    """Predicted (geometric, ghost) vertex counts of Bier(K) from the f-vector of K."""
    f0 = K.f_count(0)
    top = K.f_count(K.m - 2)
    return K.m + f0 - top, K.m - f0 + top


def recover_source(complex: SimplicialComplex, m: int) -> SimplicialComplex:
    """K from Bier(K): its faces are exactly the faces of Bier(K) with no primed label."""
    if complex.m != 2 * m:
        raise ValidationError(f"Bier complex must have ground set 2m = {2 * m}, got {complex.m}")
    low = (1 << m) - 1
    return SimplicialComplex(m, frozenset(f for f in complex.faces if not f & ~low))
