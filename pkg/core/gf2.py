#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - GF(2) Linear Algebra
Bit-packed binary matrices with rank, products and row-space membership
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Tuple

import numpy as np

from core.errors import DimensionMismatchError

logger = logging.getLogger(__name__)

# Column c of a row lives in byte c >> 3, bit c & 7
BITORDER = 'little'


def _byte_count(n_cols: int) -> int:
    return (n_cols + 7) // 8


def pack_rows(dense: np.ndarray) -> np.ndarray:
    """Pack a 2-D 0/1 array into row-major uint8 words"""
    dense = np.asarray(dense, dtype=np.uint8)
    return np.packbits(dense, axis=1, bitorder=BITORDER)


def pack_vector(vector: Sequence[int], n_cols: int) -> np.ndarray:
    """Pack a 0/1 vector of length n_cols"""
    arr = np.asarray(vector, dtype=np.uint8).reshape(1, -1)
    if arr.shape[1] != n_cols:
        raise DimensionMismatchError(
            f"vector length {arr.shape[1]} does not match {n_cols} columns"
        )
    return pack_rows(arr)[0]


@dataclass(frozen=True, eq=False)
class BinMatrix:
    """Immutable binary matrix stored as packed row-major bits

    Derived views (dense copy, row supports, Tanner-graph edges, reduced
    echelon basis) are computed lazily and cached on the instance.
    """

    n_rows: int
    n_cols: int
    bits: np.ndarray

    def __post_init__(self):
        if self.n_rows < 0 or self.n_cols < 0:
            raise DimensionMismatchError(
                f"negative shape ({self.n_rows}, {self.n_cols})"
            )

        bits = np.array(self.bits, dtype=np.uint8, copy=True)
        expected = (self.n_rows, _byte_count(self.n_cols))
        if bits.shape != expected:
            raise DimensionMismatchError(
                f"packed bits have shape {bits.shape}, expected {expected}"
            )

        spare = self.n_cols % 8
        if spare and self.n_rows:
            padding = bits[:, -1] & np.uint8((0xFF << spare) & 0xFF)
            if padding.any():
                raise DimensionMismatchError("padding bits beyond n_cols must be zero")

        bits.setflags(write=False)
        object.__setattr__(self, 'bits', bits)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def from_dense(cls, dense) -> 'BinMatrix':
        """Build from a 2-D array-like of zeros and ones"""
        arr = np.asarray(dense)
        if arr.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-D array, got {arr.ndim}-D")
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise ValueError("binary matrix entries must be 0 or 1")
        n_rows, n_cols = arr.shape
        return cls(n_rows, n_cols, pack_rows(arr))

    @classmethod
    def from_supports(cls, n_cols: int, supports: Sequence[Iterable[int]]) -> 'BinMatrix':
        """Build from per-row lists of column positions holding a one"""
        dense = np.zeros((len(supports), n_cols), dtype=np.uint8)
        for row, support in enumerate(supports):
            cols = np.fromiter(support, dtype=np.int64)
            if cols.size and (cols.min() < 0 or cols.max() >= n_cols):
                raise DimensionMismatchError(
                    f"row {row} has a column outside [0, {n_cols})"
                )
            dense[row, cols] ^= 1
        return cls.from_dense(dense)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> 'BinMatrix':
        return cls(n_rows, n_cols, np.zeros((n_rows, _byte_count(n_cols)), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> 'BinMatrix':
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    # ------------------------------------------------------------------
    # Cached views
    # ------------------------------------------------------------------
    @property
    def shape(self) -> Tuple[int, int]:
        return (self.n_rows, self.n_cols)

    @cached_property
    def dense(self) -> np.ndarray:
        """Read-only unpacked uint8 copy"""
        if self.n_cols == 0:
            arr = np.zeros((self.n_rows, 0), dtype=np.uint8)
        else:
            arr = np.unpackbits(self.bits, axis=1, count=self.n_cols, bitorder=BITORDER)
        arr.setflags(write=False)
        return arr

    @cached_property
    def row_support(self) -> Tuple[np.ndarray, ...]:
        """Sorted column positions of the ones in each row"""
        return tuple(np.flatnonzero(row) for row in self.dense)

    @cached_property
    def edges(self) -> Tuple[np.ndarray, np.ndarray]:
        """(row, column) coordinates of every one, ordered by row"""
        rows, cols = np.nonzero(self.dense)
        return rows.astype(np.int64), cols.astype(np.int64)

    @cached_property
    def echelon(self) -> Tuple[np.ndarray, Tuple[int, ...]]:
        """Packed reduced row echelon basis and its pivot columns"""
        return _reduce(self.bits, self.n_cols)

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------
    def row(self, index: int) -> np.ndarray:
        return self.dense[index]

    def row_weights(self) -> np.ndarray:
        return self.dense.sum(axis=1, dtype=np.int64)

    def col_weights(self) -> np.ndarray:
        return self.dense.sum(axis=0, dtype=np.int64)

    def permute_columns(self, perm: Sequence[int]) -> 'BinMatrix':
        """Move old column c to new column perm[c]"""
        perm = np.asarray(perm, dtype=np.int64)
        if perm.shape != (self.n_cols,) or not np.array_equal(np.sort(perm), np.arange(self.n_cols)):
            raise DimensionMismatchError("column permutation must be a permutation of range(n_cols)")
        out = np.zeros_like(self.dense)
        out[:, perm] = self.dense
        return BinMatrix.from_dense(out)

    def permute_rows(self, order: Sequence[int]) -> 'BinMatrix':
        """New row k is old row order[k]"""
        order = np.asarray(order, dtype=np.int64)
        if order.shape != (self.n_rows,) or not np.array_equal(np.sort(order), np.arange(self.n_rows)):
            raise DimensionMismatchError("row order must be a permutation of range(n_rows)")
        return BinMatrix(self.n_rows, self.n_cols, self.bits[order])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.bits, other.bits)

    __hash__ = None

    def __repr__(self) -> str:
        return f"BinMatrix({self.n_rows}x{self.n_cols}, ones={int(self.row_weights().sum())})"


def _reduce(bits: np.ndarray, n_cols: int) -> Tuple[np.ndarray, Tuple[int, ...]]:
    """Gauss-Jordan elimination on a scratch copy of packed rows"""
    work = bits.copy()
    n_rows = work.shape[0]
    pivots = []
    rank = 0

    for col in range(n_cols):
        if rank == n_rows:
            break
        byte, shift = col >> 3, col & 7
        candidates = np.flatnonzero((work[rank:, byte] >> shift) & 1)
        if candidates.size == 0:
            continue

        pivot = rank + candidates[0]
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]

        hits = ((work[:, byte] >> shift) & 1).astype(bool)
        hits[rank] = False
        work[hits] ^= work[rank]

        pivots.append(col)
        rank += 1

    basis = work[:rank].copy()
    basis.setflags(write=False)
    return basis, tuple(pivots)


def rank(m: BinMatrix) -> int:
    """Dimension of the row space over GF(2)"""
    return len(m.echelon[1])


def mul_transpose(a: BinMatrix, b: BinMatrix) -> BinMatrix:
    """a · bᵀ over GF(2)"""
    if a.n_cols != b.n_cols:
        raise DimensionMismatchError(
            f"cannot multiply {a.shape} by the transpose of {b.shape}"
        )
    # float matmul keeps BLAS speed; overlap counts stay far below 2**53
    overlaps = a.dense.astype(np.float64) @ b.dense.T.astype(np.float64)
    return BinMatrix.from_dense(overlaps.astype(np.int64) & 1)


def in_rowspace(vector: Sequence[int], m: BinMatrix) -> bool:
    """True iff the vector is a GF(2) combination of the rows of m"""
    residual = pack_vector(vector, m.n_cols).copy()
    basis, pivots = m.echelon
    for row, col in zip(basis, pivots):
        if (residual[col >> 3] >> (col & 7)) & 1:
            residual ^= row
    return not residual.any()


def vstack(*matrices: BinMatrix) -> BinMatrix:
    """Stack matrices with equal column counts"""
    if not matrices:
        raise DimensionMismatchError("vstack needs at least one matrix")
    n_cols = matrices[0].n_cols
    for m in matrices:
        if m.n_cols != n_cols:
            raise DimensionMismatchError(f"cannot stack {m.n_cols} columns onto {n_cols}")
    bits = np.concatenate([m.bits for m in matrices], axis=0)
    return BinMatrix(bits.shape[0], n_cols, bits)


def hstack(*matrices: BinMatrix) -> BinMatrix:
    """Concatenate matrices with equal row counts side by side"""
    if not matrices:
        raise DimensionMismatchError("hstack needs at least one matrix")
    n_rows = matrices[0].n_rows
    for m in matrices:
        if m.n_rows != n_rows:
            raise DimensionMismatchError(f"cannot join {m.n_rows} rows to {n_rows}")
    return BinMatrix.from_dense(np.concatenate([m.dense for m in matrices], axis=1))


def syndrome(m: BinMatrix, vector: np.ndarray) -> np.ndarray:
    """m · vectorᵀ over GF(2) as a uint8 vector"""
    vector = np.asarray(vector, dtype=np.uint8)
    if vector.shape != (m.n_cols,):
        raise DimensionMismatchError(
            f"vector length {vector.shape} does not match {m.n_cols} columns"
        )
    rows, cols = m.edges
    counts = np.bincount(rows, weights=vector[cols], minlength=m.n_rows)
    return (counts.astype(np.int64) & 1).astype(np.uint8)
