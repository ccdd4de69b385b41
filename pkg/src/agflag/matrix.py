"""Dense exact linear algebra over GF(q).

Matrices hold integer element encodings in a 2-D numpy array; every kernel
goes through the vectorised field methods, so rows are processed whole.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .field import FieldElement, FieldMismatch, FieldSpec


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GFMatrix:
    field: FieldSpec
    data: np.ndarray

    def __post_init__(self):
        data = np.array(self.data, dtype=np.int64, copy=True)
        if data.ndim == 1 and data.size == 0:
            data = data.reshape(0, 0)
        if data.ndim != 2:
            raise ShapeMismatch(f"expected a 2-D array, got shape {data.shape}")
        if data.size and (data.min() < 0 or data.max() >= self.field.q):
            raise ValueError(f"entries outside {self.field}")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[FieldElement | int]],
                  cols: int | None = None) -> GFMatrix:
        rows = [list(r) for r in rows]
        if not rows:
            return cls.zeros(field, 0, cols or 0)
        for r in rows:
            for e in r:
                if isinstance(e, FieldElement):
                    field.check(e)
        return cls(field, np.array([[int(e) for e in r] for r in rows], dtype=np.int64))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> GFMatrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> GFMatrix:
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __getitem__(self, idx: tuple[int, int]) -> FieldElement:
        i, j = idx
        return FieldElement(self.field, int(self.data[i, j]))

    def to_lists(self) -> list[list[int]]:
        return self.data.tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GFMatrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.data, other.data)

    def __repr__(self) -> str:
        return f"GFMatrix({self.field!r}, {self.rows}x{self.cols})"

    def vstack(self, other: GFMatrix) -> GFMatrix:
        _same_field(self, other)
        if self.cols != other.cols:
            raise ShapeMismatch(f"{self.cols} vs {other.cols} columns")
        return GFMatrix(self.field, np.vstack([self.data, other.data]))

    def transpose(self) -> GFMatrix:
        return GFMatrix(self.field, self.data.T)

    def is_zero(self) -> bool:
        return not np.any(self.data)


def _same_field(a: GFMatrix, b: GFMatrix) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")


def _rref_array(F: FieldSpec, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    a = a.copy()
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = F.mul(a[r], F._inv(int(a[r, c])))
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = F.sub(a[hit], F.mul(col[hit, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: GFMatrix) -> tuple[GFMatrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns.

    Zero rows are kept at the bottom so the shape is preserved.
    """
    a, pivots = _rref_array(m.field, m.data)
    return GFMatrix(m.field, a), len(pivots), pivots


def rank(m: GFMatrix) -> int:
    return len(_rref_array(m.field, m.data)[1])


def row_basis(m: GFMatrix) -> GFMatrix:
    """Nonzero rows of the RREF: a canonical basis of the row space."""
    a, pivots = _rref_array(m.field, m.data)
    return GFMatrix(m.field, a[: len(pivots)])


def _nullspace_array(F: FieldSpec, a: np.ndarray) -> np.ndarray:
    ncols = a.shape[1]
    red, pivots = _rref_array(F, a)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    if not free:
        return basis
    basis[np.arange(len(free)), free] = 1
    if pivots:
        # x_pivot = -sum(red[row, free] * x_free)
        block = red[: len(pivots)][:, free]
        basis[:, pivots] = F.neg(block.T)
    return basis


def nullspace(m: GFMatrix) -> GFMatrix:
    """Basis (as rows) of {v : m v^T = 0}."""
    return GFMatrix(m.field, _nullspace_array(m.field, m.data))


def rowspace_equal(a: GFMatrix, b: GFMatrix) -> bool:
    _same_field(a, b)
    if a.cols != b.cols:
        raise ShapeMismatch(f"{a.cols} vs {b.cols} columns")
    ra, pa = _rref_array(a.field, a.data)
    rb, pb = _rref_array(b.field, b.data)
    return pa == pb and np.array_equal(ra[: len(pa)], rb[: len(pb)])


def _matmul_array(F: FieldSpec, a: np.ndarray, b: np.ndarray, chunk: int = 2**22) -> np.ndarray:
    n, k = a.shape
    m = b.shape[1]
    out = np.zeros((n, m), dtype=np.int64)
    if n == 0 or m == 0 or k == 0:
        return out
    step = max(1, chunk // max(1, k * m))
    for s in range(0, n, step):
        prod = F.mul(a[s:s + step, :, None], b[None, :, :])
        out[s:s + step] = F.sum(prod, axis=1)
    return out


def matmul(a: GFMatrix, b: GFMatrix) -> GFMatrix:
    _same_field(a, b)
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return GFMatrix(a.field, _matmul_array(a.field, a.data, b.data))


def scale_columns(m: GFMatrix, x: Sequence[FieldElement | int]) -> GFMatrix:
    """Multiply column j by x[j]."""
    xs = np.array([int(v) for v in x], dtype=np.int64)
    if xs.shape != (m.cols,):
        raise ShapeMismatch(f"{xs.size} scale factors for {m.cols} columns")
    return GFMatrix(m.field, m.field.mul(m.data, xs[None, :]))


class EchelonBasis:
    """Row space grown one vector at a time, kept in reduced echelon form.

    ``add`` reports whether the vector enlarged the span, which turns a
    sequence of nested spans into a sequence of rank jumps without
    re-eliminating from scratch.
    """

    def __init__(self, field: FieldSpec, ncols: int):
        self.field = field
        self.ncols = ncols
        self._rows = np.zeros((0, ncols), dtype=np.int64)
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64)
        if not self._pivots:
            return v.copy()
        F = self.field
        coef = v[self._pivots]
        return F.sub(v, F.sum(F.mul(coef[:, None], self._rows), axis=0))

    def add(self, v) -> bool:
        F = self.field
        w = self.reduce(v)
        nz = np.flatnonzero(w)
        if nz.size == 0:
            return False
        c = int(nz[0])
        w = F.mul(w, F._inv(int(w[c])))
        col = self._rows[:, c].copy()
        hit = np.flatnonzero(col)
        if hit.size:
            self._rows[hit] = F.sub(self._rows[hit], F.mul(col[hit, None], w[None, :]))
        self._rows = np.vstack([self._rows, w[None, :]])
        self._pivots.append(c)
        return True

    def matrix(self) -> GFMatrix:
        order = np.argsort(self._pivots, kind="stable")
        return GFMatrix(self.field, self._rows[order])
