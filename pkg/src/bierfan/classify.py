"""Exhaustive enumeration of complexes on a small ground set and classification
of their Bier spheres up to combinatorial isomorphism."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .bier import BierComplex, bier_sphere
from .errors import EnumerationBoundError
from .fan import DEFAULT_SAMPLES, DEFAULT_SEED, canonical_fan, is_regular, verify_complete
from .simplicial import (
    FHVectors,
    SimplicialComplex,
    canonical_form,
    fh_vectors,
    mask_to_labels,
    popcount,
)
from .toric import Orientability, is_orientable_real

MAX_ENUMERATE_M = 5
MAX_CLASSIFY_M = 4


def facet_key(K: SimplicialComplex) -> tuple[tuple[int, ...], ...]:
    return tuple(mask_to_labels(f) for f in K.facet_list)


def _down_sets(m: int) -> list[frozenset[int]]:
    order = sorted(range(1, 1 << m), key=lambda s: (popcount(s), s))
    out = []
    faces = {0}

    def rec(idx):
        if idx == len(order):
            out.append(frozenset(faces))
            return
        s = order[idx]
        rec(idx + 1)
        rest = s
        while rest:
            low = rest & -rest
            if s ^ low not in faces:
                return
            rest ^= low
        faces.add(s)
        rec(idx + 1)
        faces.discard(s)

    rec(0)
    return out


def enumerate_complexes(m: int) -> Iterator[SimplicialComplex]:
    """Every simplicial complex on [m] other than the full simplex, once each.

    Complexes are yielded in lexicographic order of their sorted facet lists.
    """
    if not 1 <= m <= MAX_ENUMERATE_M:
        raise EnumerationBoundError(f"enumerate_complexes supports 1 <= m <= {MAX_ENUMERATE_M}, got {m}")
    full = (1 << m) - 1
    complexes = [SimplicialComplex(m, fs) for fs in _down_sets(m) if full not in fs]
    complexes.sort(key=facet_key)
    yield from complexes


@dataclass(frozen=True)
class BierClass:
    canonical: SimplicialComplex
    multiplicity: int
    representative: SimplicialComplex
    fh: FHVectors
    regular: bool | None = None
    complete: bool | None = None

    @property
    def n_vertices(self) -> int:
        return len(self.canonical.vertices)


@dataclass(frozen=True)
class ClassificationReport:
    m: int
    total_complexes: int
    classes: tuple[BierClass, ...]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "total_complexes": self.total_complexes,
            "classes": [
                {
                    "vertices": c.n_vertices,
                    "facets": [list(mask_to_labels(f)) for f in c.canonical.facet_list],
                    "multiplicity": c.multiplicity,
                    "representative": {
                        "m": c.representative.m,
                        "facets": [list(t) for t in facet_key(c.representative)],
                    },
                    "f": list(c.fh.f),
                    "h": list(c.fh.h),
                    "regular": c.regular,
                    "complete": c.complete,
                }
                for c in self.classes
            ],
        }


def classify_bier(
    m: int,
    check_fans: bool = True,
    dedupe: bool = False,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> ClassificationReport:
    """Bucket the Bier spheres of all complexes on [m] by combinatorial type.

    Types are taken on geometric vertices only.  With ``dedupe`` isomorphic
    inputs K are counted once.
    """
    if not 2 <= m <= MAX_CLASSIFY_M:
        raise EnumerationBoundError(f"classify_bier supports 2 <= m <= {MAX_CLASSIFY_M}, got {m}")
    buckets: dict[SimplicialComplex, list[BierComplex]] = {}
    seen = set()
    total = 0
    for K in enumerate_complexes(m):
        if dedupe:
            key = canonical_form(K)
            if key in seen:
                continue
            seen.add(key)
        total += 1
        B = bier_sphere(K)
        buckets.setdefault(canonical_form(B.complex, strip_ghosts=True), []).append(B)

    classes = []
    for canon in sorted(buckets, key=lambda C: (C.m, facet_key(C))):
        members = buckets[canon]
        rep = members[0]
        regular = complete = None
        if check_fans:
            F = canonical_fan(rep)
            regular = bool(is_regular(F))
            complete = verify_complete(F, samples=samples, seed=seed).complete
        classes.append(
            BierClass(
                canonical=canon,
                multiplicity=len(members),
                representative=rep.source,
                fh=fh_vectors(canon),
                regular=regular,
                complete=complete,
            )
        )
    return ClassificationReport(m=m, total_complexes=total, classes=tuple(classes))


@dataclass(frozen=True)
class OrientabilityCase:
    source: SimplicialComplex
    verdict: Orientability
    m_geometric: bool
    m_prime_geometric: bool

    @property
    def both_ghost(self) -> bool:
        return not (self.m_geometric or self.m_prime_geometric)


def orientability_survey(m: int) -> list[OrientabilityCase]:
    """Compare the mod 2 criterion with the parity of m for every complex on [m]."""
    out = []
    for K in enumerate_complexes(m):
        B = bier_sphere(K)
        verts = set(B.geometric_vertices)
        out.append(OrientabilityCase(K, is_orientable_real(B), m in verts, 2 * m in verts))
    return out
