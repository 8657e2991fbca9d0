# Copyright 2025 The tautring Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Dense exact matrices over Q on top of sympy's DomainMatrix.
"""

from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .scalar import ScalarLike, format_scalar, from_qq, to_qq


class ExactMatrix:
    """Immutable matrix over QQ; entries read back as Fractions."""

    __slots__ = ("_rep",)

    def __init__(self, rows: Sequence[Sequence[ScalarLike]], num_cols: Optional[int] = None):
        grid = [[to_qq(entry) for entry in row] for row in rows]
        if num_cols is None:
            num_cols = len(grid[0]) if grid else 0

        for row in grid:
            if len(row) != num_cols:
                raise ValueError(f"Ragged matrix: expected {num_cols} columns, got a row of length {len(row)}.")

        self._rep = DomainMatrix(grid, (len(grid), num_cols), QQ)

    @classmethod
    def from_domain_matrix(cls, rep: DomainMatrix) -> "ExactMatrix":
        matrix = cls.__new__(cls)
        matrix._rep = rep.convert_to(QQ)
        return matrix

    @classmethod
    def identity(cls, size: int) -> "ExactMatrix":
        return cls.from_domain_matrix(DomainMatrix.eye(size, QQ))

    @classmethod
    def zeros(cls, num_rows: int, num_cols: int) -> "ExactMatrix":
        return cls.from_domain_matrix(DomainMatrix.zeros((num_rows, num_cols), QQ))

    @property
    def domain_matrix(self) -> DomainMatrix:
        return self._rep

    @property
    def rows(self) -> int:
        return self._rep.shape[0]

    @property
    def cols(self) -> int:
        return self._rep.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._rep.shape

    def to_lists(self) -> List[List[Fraction]]:
        return [[from_qq(entry) for entry in row] for row in self._rep.to_list()]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return tuple(self.to_lists()[i])

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row[j] for row in self.to_lists())

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return from_qq(self._rep[i, j].element)

    def __iter__(self):
        return iter(tuple(row) for row in self.to_lists())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented

        return self.shape == other.shape and self.to_lists() == other.to_lists()

    def __hash__(self) -> int:
        return hash((self.shape, tuple(tuple(row) for row in self.to_lists())))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.from_domain_matrix(self._rep.transpose())

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}.")

        return ExactMatrix.from_domain_matrix(self._rep.matmul(other._rep))

    def permute_rows(self, order: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix.from_domain_matrix(self._rep.extract(list(order), list(range(self.cols))))

    def determinant(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError(f"Determinant of a non-square {self.shape} matrix.")

        if self.rows == 0:
            return Fraction(1)

        return from_qq(self._rep.det())

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(format_scalar(x) for x in row) + "]" for row in self.to_lists()) + "]"

    def __repr__(self) -> str:
        return f"ExactMatrix({self})"


class RowReduction(NamedTuple):
    rank: int
    echelon: ExactMatrix
    pivot_columns: Tuple[int, ...]


def row_reduce(m: ExactMatrix) -> RowReduction:
    """Reduced row echelon form, pivots scanned left to right.

    Zero rows are dropped, so `echelon.rows == rank`.
    """
    if m.rows == 0 or m.cols == 0:
        return RowReduction(rank=0, echelon=ExactMatrix([], num_cols=m.cols), pivot_columns=())

    reduced, pivots = m.domain_matrix.rref()
    rank = len(pivots)
    if rank == 0:
        return RowReduction(rank=0, echelon=ExactMatrix([], num_cols=m.cols), pivot_columns=())

    echelon = reduced.extract(list(range(rank)), list(range(m.cols)))
    return RowReduction(rank=rank, echelon=ExactMatrix.from_domain_matrix(echelon), pivot_columns=tuple(pivots))


def rank(m: ExactMatrix) -> int:
    return row_reduce(m).rank


def solve_linear(m: ExactMatrix, rhs: Sequence[ScalarLike]) -> Optional[List[Fraction]]:
    """One solution of `m x = rhs` with free variables set to zero, or None when inconsistent."""
    if len(rhs) != m.rows:
        raise ValueError(f"Right-hand side has {len(rhs)} entries for {m.rows} equations.")

    augmented = ExactMatrix([list(row) + [b] for row, b in zip(m, rhs)], num_cols=m.cols + 1)
    reduction = row_reduce(augmented)
    if m.cols in reduction.pivot_columns:
        return None

    solution = [Fraction(0)] * m.cols
    for row_index, col in enumerate(reduction.pivot_columns):
        solution[col] = reduction.echelon[row_index, m.cols]

    return solution
