"""The canonical fan of a Bier sphere in Z^(m-1) and its exact verification.

Vertex ``i`` of Bier(K) is sent to ``-e_i`` and ``i'`` to ``e_i``, where
``e_1, ..., e_{m-1}`` is the standard basis and ``e_m = -(e_1 + ... + e_{m-1})``.
The maximal cones are spanned by the images of the facets of Bier(K).

Everything here is exact.  Points are sequences of :class:`fractions.Fraction`
and the vectorized paths used for bulk sampling work on integer arrays obtained
by clearing denominators, which is harmless because cones are invariant under
positive scaling.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .bier import BierComplex, bier_increment, increment_sets
from .errors import OverflowGuardError, ValidationError, VerificationError
from .simplicial import mask_to_labels, submasks

LatticeVector = tuple[int, ...]
Point = tuple[Fraction, ...]
Tag = tuple[tuple[int, ...], tuple[int, ...]]

DEFAULT_SEED = 0xB1E2
DEFAULT_SAMPLES = 1000
SAMPLE_RANGE = 10
SAMPLE_MAX_DENOMINATOR = 7

# keep every intermediate of the int64 fast paths below this magnitude
_INT64_SAFE = 1 << 62


def vertex_generator(v: int, m: int) -> LatticeVector:
    """Ray generator in Z^(m-1) of Bier vertex label ``v`` (``m + i`` encodes ``i'``)."""
    if not 1 <= v <= 2 * m:
        raise ValidationError(f"Bier vertex label {v} outside 1..{2 * m}")
    sign = -1 if v <= m else 1
    i = v if v <= m else v - m
    if i == m:
        return tuple([-sign] * (m - 1))
    return tuple(sign if k == i - 1 else 0 for k in range(m - 1))


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class Cone:
    """The cone ``C(I, J)`` spanned by ``-e_i`` (i in I) and ``e_j`` (j in J)."""

    I: tuple[int, ...]
    J: tuple[int, ...]
    generators: tuple[LatticeVector, ...]

    @property
    def tag(self) -> Tag:
        return self.I, self.J

    def face_mask(self, m: int) -> int:
        mask = 0
        for i in self.I:
            mask |= 1 << (i - 1)
        for j in self.J:
            mask |= 1 << (m + j - 1)
        return mask


def split_labels(face: int, m: int) -> Tag:
    labels = mask_to_labels(face)
    return tuple(v for v in labels if v <= m), tuple(v - m for v in labels if v > m)


def generators_of(face: int, m: int) -> tuple[LatticeVector, ...]:
    return tuple(vertex_generator(v, m) for v in mask_to_labels(face))


def cone_for_face(face: int, m: int) -> Cone:
    I, J = split_labels(face, m)
    return Cone(I=I, J=J, generators=generators_of(face, m))


def _tag_key(cone: Cone):
    return cone.I, cone.J


@dataclass(frozen=True)
class Fan:
    m: int
    max_cones: tuple[Cone, ...]
    source: BierComplex = field(compare=False)

    @property
    def dim(self) -> int:
        return self.m - 1

    @cached_property
    def max_masks(self) -> frozenset[int]:
        return frozenset(c.face_mask(self.m) for c in self.max_cones)

    @cached_property
    def face_masks(self) -> tuple[int, ...]:
        """Every face of a maximal cone, as a Bier face mask."""
        out = set()
        for mask in self.max_masks:
            out.update(submasks(mask))
        return tuple(sorted(out))

    def without(self, tag: Tag) -> Fan:
        """Copy of the fan with one maximal cone deleted (used to build broken fans)."""
        cones = tuple(c for c in self.max_cones if c.tag != tag)
        return Fan(self.m, cones, self.source)


def canonical_fan(B: BierComplex) -> Fan:
    cones = sorted((cone_for_face(f, B.m) for f in B.facets), key=_tag_key)
    return Fan(m=B.m, max_cones=tuple(cones), source=B)


def fan_increment(F: Fan, A) -> Fan:
    """Fan of ``K ∪ {A}`` by swapping the removed cones for the added ones."""
    B = bier_increment(F.source, A)
    A_mask = B.source.faces - F.source.source.faces
    (A_mask,) = A_mask
    removed, added = increment_sets(F.source.source, A_mask)
    kept = [c for c in F.max_cones if c.face_mask(F.m) not in removed]
    cones = sorted(kept + [cone_for_face(f, F.m) for f in added], key=_tag_key)
    return Fan(m=F.m, max_cones=tuple(cones), source=B)


# -- regularity ---------------------------------------------------------------


@dataclass(frozen=True)
class RegularityVerdict:
    regular: bool
    witness: tuple[Tag, int] | None = None

    def __bool__(self):
        return self.regular


def cone_determinant(cone: Cone) -> int:
    return determinant(cone.generators)


def is_regular(F: Fan) -> RegularityVerdict:
    """Every maximal cone is unimodular (determinant ±1).

    Bier spheres are pure, so smoothness of the maximal cones covers all cones.
    """
    for cone in F.max_cones:
        if len(cone.generators) != F.dim:
            return RegularityVerdict(False, (cone.tag, 0))
        d = cone_determinant(cone)
        if d not in (1, -1):
            return RegularityVerdict(False, (cone.tag, d))
    return RegularityVerdict(True)


# -- point location -----------------------------------------------------------


def as_point(x: Iterable, m: int) -> Point:
    pt = tuple(Fraction(c) for c in x)
    if len(pt) != m - 1:
        raise ValidationError(f"point must have {m - 1} coordinates, got {len(pt)}")
    return pt


def locate_point(F: Fan, x: Iterable) -> Tag:
    """The unique face ``I ⊔ J'`` of Bier(K) whose open cone contains ``x``.

    Write ``x = sum_k g_k e_k`` with ``g = (x_1, ..., x_{m-1}, 0)``.  Since
    ``e_1 + ... + e_m = 0``, subtracting a constant ``c`` from every ``g_k``
    keeps the sum, and the coefficients become ``-e_i`` weights for ``g_i < c``
    and ``e_j`` weights for ``g_j > c``.  Exactly one level ``c`` taken from the
    values of ``g`` gives a face of the Bier sphere.
    """
    K = F.source.source
    dual = F.source.dual
    m = F.m
    g = as_point(x, m) + (Fraction(0),)
    found = []
    for c in sorted(set(g)):
        I = J = 0
        for k, gk in enumerate(g):
            if gk < c:
                I |= 1 << k
            elif gk > c:
                J |= 1 << k
        if I in K.faces and J in dual.faces:
            found.append((mask_to_labels(I), mask_to_labels(J)))
    if len(found) != 1:
        raise VerificationError(f"point {g[:-1]} located in {len(found)} cones", witness=found)
    return found[0]


def _solve_exact(gens: Sequence[LatticeVector], x: Point) -> list[Fraction] | None:
    """Coefficients ``c`` with ``sum c_k gens[k] = x``, or None if no solution."""
    k = len(gens)
    n = len(x)
    rows = [[Fraction(gens[c][r]) for c in range(k)] + [x[r]] for r in range(n)]
    pivots = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if piv is None:
            return None  # dependent generators
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [v / p for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, n)):
        return None
    return [rows[i][k] for i in range(k)]


def locate_point_bruteforce(F: Fan, x: Iterable) -> list[Tag]:
    """Every face of the fan whose open cone contains ``x``, by exact linear solves."""
    m = F.m
    pt = as_point(x, m)
    out = []
    for face in F.face_masks:
        if face == 0:
            if all(c == 0 for c in pt):
                out.append(((), ()))
            continue
        coeffs = _solve_exact(generators_of(face, m), pt)
        if coeffs is not None and all(c > 0 for c in coeffs):
            out.append(split_labels(face, m))
    return sorted(out)


# -- vectorized paths for bulk sampling ---------------------------------------


def integer_points(points: Sequence[Point]) -> np.ndarray:
    """Rows of ``points`` scaled to integers by their own denominator lcm."""
    scaled = []
    for pt in points:
        den = math.lcm(*(c.denominator for c in pt)) if pt else 1
        scaled.append([int(c * den) for c in pt])
    big = max((abs(v) for row in scaled for v in row), default=0)
    if big >= 1 << 40:
        raise OverflowGuardError(f"scaled point coordinate {big} exceeds the int64 fast path")
    return np.array(scaled, dtype=np.int64).reshape(len(points), -1)


def locate_batch(F: Fan, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized :func:`locate_point` over integer rows.

    Returns ``(count, face)``: the number of valid levels per row and the Bier
    face mask of the last valid level (-1 when there is none).
    """
    m = F.m
    K = F.source.source
    dual = F.source.dual
    in_K = np.zeros(1 << m, dtype=bool)
    in_K[list(K.faces)] = True
    in_dual = np.zeros(1 << m, dtype=bool)
    in_dual[list(dual.faces)] = True
    N = len(X)
    g = np.hstack([X, np.zeros((N, 1), dtype=np.int64)])
    bits = np.left_shift(np.int64(1), np.arange(m, dtype=np.int64))
    count = np.zeros(N, dtype=np.int64)
    face = np.full(N, -1, dtype=np.int64)
    for k in range(m):
        c = g[:, k : k + 1]
        first = ~(g[:, :k] == c).any(axis=1)
        I = ((g < c) * bits).sum(axis=1)
        J = ((g > c) * bits).sum(axis=1)
        ok = first & in_K[I] & in_dual[J]
        count += ok
        face = np.where(ok, I | (J << m), face)
    return count, face


def _adjugate(M: Sequence[Sequence[int]]) -> list[list[int]]:
    k = len(M)
    if k == 1:
        return [[1]]
    adj = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            minor = [row[:j] + row[j + 1 :] for r, row in enumerate(M) if r != i]
            adj[j][i] = (-1) ** (i + j) * determinant(minor)
    return adj


@lru_cache(maxsize=4096)
def _face_solver(face: int, m: int):
    """``(rows, adj, det, G)`` for an invertible square row selection of a face's generator matrix."""
    gens = generators_of(face, m)
    k = len(gens)
    n = m - 1
    G = [[gens[c][r] for c in range(k)] for r in range(n)]
    for rows in itertools.combinations(range(n), k):
        sub = [G[r] for r in rows]
        d = determinant(sub)
        if d != 0:
            amax = max(abs(a) for row in _adjugate(sub) for a in row)
            adj = np.array(_adjugate(sub), dtype=np.int64)
            return list(rows), adj, d, np.array(G, dtype=np.int64).reshape(n, k), amax
    return None


def bruteforce_batch(F: Fan, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized :func:`locate_point_bruteforce`; returns ``(count, face)`` like :func:`locate_batch`."""
    m = F.m
    n = m - 1
    N = len(X)
    count = np.zeros(N, dtype=np.int64)
    face_out = np.full(N, -1, dtype=np.int64)
    xmax = int(np.abs(X).max()) if X.size else 0
    for face in F.face_masks:
        if face == 0:
            ok = (X == 0).all(axis=1)
        else:
            solver = _face_solver(face, m)
            if solver is None:
                continue
            rows, adj, d, Gm, amax = solver
            k = len(rows)
            if k * k * amax * max(xmax, 1) * max(abs(d), 1) >= _INT64_SAFE:
                raise OverflowGuardError("brute-force solve exceeds the int64 fast path")
            coef = X[:, rows] @ adj.T
            ok = ((coef * (1 if d > 0 else -1)) > 0).all(axis=1)
            ok &= (coef @ Gm.T == d * X).all(axis=1)
        count += ok
        face_out = np.where(ok, face, face_out)
    return count, face_out


@lru_cache(maxsize=32)
def _sample_arrays(m: int, samples: int, seed: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    rng = np.random.default_rng(seed)
    q = rng.integers(1, SAMPLE_MAX_DENOMINATOR + 1, size=(samples, m - 1))
    p = rng.integers(-SAMPLE_RANGE * q, SAMPLE_RANGE * q + 1)
    den = np.lcm.reduce(q, axis=1, keepdims=True) if m > 1 else np.ones((samples, 1), dtype=np.int64)
    X = p * (den // q)
    for a in (p, q, X):
        a.flags.writeable = False
    return p, q, X


def sample_points(m: int, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> list[Point]:
    """Deterministic rational points with coordinates in [-10, 10] and denominators at most 7."""
    p, q, _ = _sample_arrays(m, samples, seed)
    return [tuple(Fraction(int(a), int(b)) for a, b in zip(pr, qr)) for pr, qr in zip(p, q)]


def sample_integer_points(m: int, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> np.ndarray:
    """The points of :func:`sample_points`, each scaled by the lcm of its denominators."""
    return _sample_arrays(m, samples, seed)[2]


# -- completeness -------------------------------------------------------------


@dataclass(frozen=True)
class CompletenessReport:
    regular: bool
    pseudomanifold: bool
    walls: bool
    connected: bool
    sampled: bool
    samples: int
    seed: int
    regularity_witness: tuple | None = None
    ridge_witnesses: tuple = ()
    wall_witnesses: tuple = ()
    point_witnesses: tuple = ()

    @property
    def complete(self) -> bool:
        return self.regular and self.pseudomanifold and self.walls and self.connected and self.sampled

    @property
    def verdict(self) -> str:
        if self.complete:
            return "complete (verified)"
        failed = [
            name
            for name, ok in [
                ("regular", self.regular),
                ("pseudomanifold", self.pseudomanifold),
                ("walls", self.walls),
                ("connected", self.connected),
                ("sampled", self.sampled),
            ]
            if not ok
        ]
        return "not verified: " + ", ".join(failed)


def _ridge_map(F: Fan) -> dict[int, list[int]]:
    ridges = defaultdict(list)
    for facet in sorted(F.max_masks):
        rest = facet
        while rest:
            low = rest & -rest
            ridges[facet ^ low].append(facet)
            rest ^= low
    return ridges


def ridge_normal(ridge: int, m: int) -> LatticeVector:
    """Integer normal of the hyperplane spanned by the ridge generators (generalized cross product)."""
    gens = generators_of(ridge, m)
    n = m - 1
    cols = [[g[r] for g in gens] for r in range(n)]
    return tuple((-1) ** r * determinant(cols[:r] + cols[r + 1 :]) for r in range(n))


def _connected(nodes: Sequence[int], edges: Iterable[tuple[int, int]]) -> bool:
    if not nodes:
        return False
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(v) for v in nodes}) == 1


def verify_complete(F: Fan, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> CompletenessReport:
    """Falsifiable completeness checks for ``F``.

    (a) every ridge lies in exactly two maximal cones; (b) across every such
    ridge the two opposite rays lie strictly on opposite sides of its
    hyperplane, and the maximal cones are connected through ridges; (c) each
    sampled point lies in exactly one open cone, found identically by
    :func:`locate_point` and by brute force.
    """
    reg = is_regular(F)
    if not reg:
        return CompletenessReport(False, False, False, False, False, samples, seed, regularity_witness=reg.witness)
    m = F.m
    ridges = _ridge_map(F)
    bad_ridges = tuple(
        sorted((split_labels(r, m), len(fs)) for r, fs in ridges.items() if len(fs) != 2)
    )
    bad_walls = []
    edges = []
    for r, fs in ridges.items():
        if len(fs) != 2:
            continue
        edges.append((fs[0], fs[1]))
        normal = ridge_normal(r, m)
        sides = []
        for f in fs:
            g = vertex_generator((f ^ r).bit_length(), m)
            sides.append(sum(a * b for a, b in zip(normal, g)))
        if not sides[0] * sides[1] < 0:
            bad_walls.append((split_labels(r, m), tuple(sides)))
    connected = _connected(sorted(F.max_masks), edges)

    bad_points = []
    if samples:
        p, q, X = _sample_arrays(m, samples, seed)
        lc, lf = locate_batch(F, X)
        bc, bf = bruteforce_batch(F, X)
        for idx in np.flatnonzero((lc != 1) | (bc != 1) | (lf != bf)):
            pt = tuple(Fraction(int(a), int(b)) for a, b in zip(p[idx], q[idx]))
            loc = split_labels(int(lf[idx]), m) if lc[idx] == 1 else None
            brute = locate_point_bruteforce(F, pt)
            bad_points.append((tuple(str(c) for c in pt), loc, tuple(brute)))
    bad_points.sort(key=repr)
    return CompletenessReport(
        regular=True,
        pseudomanifold=not bad_ridges,
        walls=not bad_walls,
        connected=connected,
        sampled=not bad_points,
        samples=samples,
        seed=seed,
        ridge_witnesses=bad_ridges,
        wall_witnesses=tuple(sorted(bad_walls)),
        point_witnesses=tuple(bad_points),
    )
