"""Toric invariants of the canonical fan: characteristic matrix, Betti numbers,
dimension bookkeeping and the orientability criterion for the real quotient.

The quotient manifolds themselves are never built; everything here is read off
from the combinatorics of Bier(K) and the integer matrix of ray generators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bier import BierComplex
from .fan import determinant, vertex_generator
from .simplicial import FHVectors, fh_vectors, mask_to_labels


@dataclass(frozen=True)
class CharMatrix:
    m: int
    labels: tuple[int, ...]
    columns: tuple[tuple[int, ...], ...]
    unimodular: bool

    @property
    def shape(self) -> tuple[int, int]:
        return self.m - 1, len(self.columns)

    @property
    def matrix(self) -> np.ndarray:
        """The ``(m-1) x |V|`` integer matrix, one column per geometric vertex."""
        return np.array(self.columns, dtype=np.int64).reshape(len(self.columns), self.m - 1).T

    @property
    def mod2(self) -> np.ndarray:
        return self.matrix % 2


def char_matrix(B: BierComplex) -> CharMatrix:
    """Columns are the ray generators of the geometric vertices, in label order."""
    labels = B.geometric_vertices
    columns = tuple(vertex_generator(v, B.m) for v in labels)
    col_of = dict(zip(labels, columns))
    unimodular = all(
        determinant([col_of[v] for v in mask_to_labels(f)]) in (1, -1) for f in B.facets
    )
    return CharMatrix(m=B.m, labels=labels, columns=columns, unimodular=unimodular)


@dataclass(frozen=True)
class Orientability:
    criterion: bool
    m_even: bool

    @property
    def matches(self) -> bool:
        return self.criterion == self.m_even


def is_orientable_real(B: BierComplex) -> Orientability:
    """Every column of the mod 2 characteristic matrix has odd coordinate sum.

    This is evaluated on the geometric columns and compared with the parity of
    m; the two disagree exactly when neither ``m`` nor ``m'`` is a vertex and
    m is odd.
    """
    cm = char_matrix(B)
    sums = cm.mod2.sum(axis=0) % 2
    return Orientability(criterion=bool(np.all(sums == 1)), m_even=B.m % 2 == 0)


@dataclass(frozen=True)
class ToricDims:
    dim_Z: int
    dim_R: int
    dim_M: int
    dim_M_real: int
    rank_H: int


@dataclass(frozen=True)
class ToricReport:
    m: int
    fh: FHVectors
    betti: tuple[int, ...]
    euler: int
    dims: ToricDims
    ds_ok: bool
    orientability: Orientability

    @property
    def orientable_real(self) -> bool:
        return self.orientability.criterion

    @property
    def m_parity_matches(self) -> bool:
        return self.orientability.matches

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "f": list(self.fh.f),
            "h": list(self.fh.h),
            "betti": list(self.betti),
            "euler": self.euler,
            "dims": {
                "dim_Z": self.dims.dim_Z,
                "dim_R": self.dims.dim_R,
                "dim_M": self.dims.dim_M,
                "dim_M_real": self.dims.dim_M_real,
                "rank_H": self.dims.rank_H,
            },
            "ds_ok": self.ds_ok,
            "orientable_real": self.orientable_real,
            "m_even": self.orientability.m_even,
            "m_parity_matches": self.m_parity_matches,
        }


def toric_report(B: BierComplex) -> ToricReport:
    m = B.m
    K = B.source
    fh = fh_vectors(B.complex)
    n = m - 1
    # only even Betti numbers survive for a smooth complete toric variety
    betti = [0] * (2 * n + 1)
    for i, hi in enumerate(fh.h):
        betti[2 * i] = hi
    nverts = len(B.geometric_vertices)
    dims = ToricDims(
        dim_Z=2 * m + K.f_count(0) - K.f_count(m - 2) - 1,
        dim_R=n,
        dim_M=2 * n,
        dim_M_real=n,
        rank_H=nverts - n,
    )
    ds_ok = fh.n == n and all(fh.h[i] == fh.h[n - i] for i in range(n + 1))
    return ToricReport(
        m=m,
        fh=fh,
        betti=tuple(betti),
        euler=sum(betti),
        dims=dims,
        ds_ok=ds_ok,
        orientability=is_orientable_real(B),
    )
