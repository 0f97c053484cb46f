"""Abstract simplicial complexes on a labeled ground set [m].

Faces are stored as integer bitmasks: label ``i`` (1-based) is bit ``i - 1``.
The full face family is stored explicitly, which is cheap at the sizes this
package works with (ground sets of at most a few dozen labels, and typically
at most ten).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import EnumerationBoundError, ValidationError

MAX_GROUND = 64

# Ground-set size above which canonical_form refuses to run (factorial search).
CANONICAL_BOUND = 10


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_to_labels(mask: int) -> tuple[int, ...]:
    """Sorted 1-based labels of the bits set in ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def labels_to_mask(labels: Iterable[int], m: int) -> int:
    mask = 0
    for v in labels:
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
            raise ValidationError(f"vertex label {v!r} is not an integer")
        if not 1 <= v <= m:
            raise ValidationError(f"vertex label {v} outside 1..{m}")
        mask |= 1 << (int(v) - 1)
    return mask


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def facet_sort_key(mask: int) -> tuple[int, ...]:
    return mask_to_labels(mask)


@dataclass(frozen=True)
class FHVectors:
    n: int
    f: tuple[int, ...]
    h: tuple[int, ...]
    euler: int


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of subsets of [m] containing the empty face."""

    m: int
    faces: frozenset[int]

    def __post_init__(self):
        if not isinstance(self.m, int) or not 1 <= self.m <= MAX_GROUND:
            raise ValidationError(f"ground set size must be in 1..{MAX_GROUND}, got {self.m!r}")
        if 0 not in self.faces:
            raise ValidationError("a simplicial complex must contain the empty face")
        top = 1 << self.m
        faces = self.faces
        for face in faces:
            if face < 0 or face >= top:
                raise ValidationError(f"face {face:#b} is not a subset of [{self.m}]")
            rest = face
            while rest:
                low = rest & -rest
                if face ^ low not in faces:
                    raise ValidationError(
                        f"face {mask_to_labels(face)} present but {mask_to_labels(face ^ low)} missing"
                    )
                rest ^= low

    def __contains__(self, face: int) -> bool:
        return face in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def __repr__(self) -> str:
        facets = [list(mask_to_labels(f)) for f in self.facet_list]
        return f"SimplicialComplex(m={self.m}, facets={facets})"

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    @cached_property
    def facets(self) -> frozenset[int]:
        faces = self.faces
        out = []
        for face in faces:
            free = self.full_mask & ~face
            maximal = True
            while free:
                low = free & -free
                if face | low in faces:
                    maximal = False
                    break
                free ^= low
            if maximal:
                out.append(face)
        return frozenset(out)

    @cached_property
    def facet_list(self) -> tuple[int, ...]:
        """Facets sorted lexicographically by their label tuples."""
        return tuple(sorted(self.facets, key=facet_sort_key))

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.m + 1) if 1 << (i - 1) in self.faces)

    @cached_property
    def ghost_vertices(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.m + 1) if 1 << (i - 1) not in self.faces)

    @cached_property
    def dim(self) -> int:
        return max(popcount(f) for f in self.faces) - 1

    @property
    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facets}) == 1

    @property
    def is_simplex(self) -> bool:
        return self.full_mask in self.faces

    def f_count(self, i: int) -> int:
        """Number of i-dimensional faces (``i = -1`` counts the empty face)."""
        return sum(1 for f in self.faces if popcount(f) == i + 1)

    def faces_of_dim(self, i: int) -> list[int]:
        return sorted((f for f in self.faces if popcount(f) == i + 1), key=facet_sort_key)

    def relabel(self, perm: Sequence[int], m: int | None = None) -> SimplicialComplex:
        """Image under the label map ``v -> perm[v - 1]`` (1-based images)."""
        m = self.m if m is None else m
        bits = [1 << (p - 1) for p in perm]
        faces = set()
        for face in self.faces:
            img = 0
            for v in mask_to_labels(face):
                img |= bits[v - 1]
            faces.add(img)
        return SimplicialComplex(m, frozenset(faces))


def from_facets(m: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of ``facets`` (1-based labels) together with the empty face."""
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValidationError(f"ground set size must be a positive integer, got {m!r}")
    faces = {0}
    for facet in facets:
        mask = labels_to_mask(facet, m)
        if mask in faces:
            continue
        faces.update(submasks(mask))
    return SimplicialComplex(m, frozenset(faces))


def from_facet_masks(m: int, masks: Iterable[int]) -> SimplicialComplex:
    faces = {0}
    for mask in masks:
        if mask not in faces:
            faces.update(submasks(mask))
    return SimplicialComplex(m, frozenset(faces))


def void(m: int) -> SimplicialComplex:
    return SimplicialComplex(m, frozenset({0}))


def simplex(m: int) -> SimplicialComplex:
    return SimplicialComplex(m, frozenset(range(1 << m)))


def simplex_boundary(m: int) -> SimplicialComplex:
    return SimplicialComplex(m, frozenset(range((1 << m) - 1)))


def fh_vectors(K: SimplicialComplex) -> FHVectors:
    """f- and h-vectors of ``K`` and its Euler characteristic.

    The h-vector is read off from the expansion of
    ``sum_j f_j (t - 1)^(n - j - 1)`` in powers of ``t``.
    """
    n = K.dim + 1
    f = [0] * (n + 1)
    for face in K.faces:
        f[popcount(face)] += 1
    # f[k] counts faces of cardinality k, i.e. index k is f_{k-1}
    coeffs = [0] * (n + 1)  # coeffs[d] is the coefficient of t^d
    for k, fk in enumerate(f):
        e = n - k
        for d in range(e + 1):
            coeffs[d] += fk * comb(e, d) * (-1) ** (e - d)
    h = tuple(coeffs[n - i] for i in range(n + 1))
    euler = sum((-1) ** (k - 1) * fk for k, fk in enumerate(f) if k >= 1)
    return FHVectors(n=n, f=tuple(f), h=h, euler=euler)


def minimal_non_faces(K: SimplicialComplex) -> frozenset[int]:
    """Inclusion-minimal subsets of [m] that are not faces of ``K``."""
    out = []
    faces = K.faces
    for face in faces:
        free = K.full_mask & ~face
        while free:
            low = free & -free
            cand = face | low
            free ^= low
            if cand in faces:
                continue
            # cand is minimal iff every codimension-one subset is a face
            rest = cand
            ok = True
            while rest:
                b = rest & -rest
                if cand ^ b not in faces:
                    ok = False
                    break
                rest ^= b
            if ok:
                out.append(cand)
    return frozenset(out)


def strip_ghosts(K: SimplicialComplex) -> SimplicialComplex:
    """Restrict to geometric vertices, relabeled 1..|V(K)| in increasing order."""
    verts = K.vertices
    if not verts:
        return SimplicialComplex(1, frozenset({0}))
    bits = {old: 1 << (new - 1) for new, old in enumerate(verts, start=1)}
    faces = set()
    for face in K.faces:
        img = 0
        for v in mask_to_labels(face):
            img |= bits[v]
        faces.add(img)
    return SimplicialComplex(len(verts), frozenset(faces))


def _lexmin_rows(rows: np.ndarray) -> np.ndarray:
    order = np.lexsort(rows.T[::-1])
    return rows[order[0]]


def canonical_form(
    K: SimplicialComplex, strip_ghosts: bool = False, bound: int = CANONICAL_BOUND
) -> SimplicialComplex:
    """Lexicographically least relabeling of ``K`` over all permutations of [m].

    Complexes are compared by the ascending tuple of their facet bitmasks, so
    two complexes on the same ground set are isomorphic iff their canonical
    forms are equal.  With ``strip_ghosts`` the ghost vertices are dropped
    first, so only the geometric vertices matter.
    """
    if strip_ghosts:
        K = _strip(K)
    n = K.m
    if n > bound:
        raise EnumerationBoundError(f"canonical_form: ground set {n} exceeds bound {bound}")
    facets = list(K.facets)
    incidence = np.zeros((n, len(facets)), dtype=np.int64)
    for col, facet in enumerate(facets):
        for v in mask_to_labels(facet):
            incidence[v - 1, col] = 1

    # enumerate permutations as a fixed prefix times a block of tail permutations
    tail = min(n, 8)
    head = n - tail
    tail_perms = np.array(list(itertools.permutations(range(tail))), dtype=np.int64).reshape(-1, tail)
    best = None
    for prefix in itertools.permutations(range(n), head):
        remaining = np.array([v for v in range(n) if v not in prefix], dtype=np.int64)
        block = remaining[tail_perms]
        if head:
            block = np.hstack([np.broadcast_to(np.array(prefix, dtype=np.int64), (len(block), head)), block])
        weights = np.left_shift(np.int64(1), block)
        images = np.sort(weights @ incidence, axis=1)
        cand = tuple(int(x) for x in _lexmin_rows(images))
        if best is None or cand < best:
            best = cand
    return from_facet_masks(n, best)


_strip = strip_ghosts


def is_isomorphic(K: SimplicialComplex, L: SimplicialComplex, strip_ghosts: bool = False) -> bool:
    a = canonical_form(K, strip_ghosts=strip_ghosts)
    b = canonical_form(L, strip_ghosts=strip_ghosts)
    return a == b
