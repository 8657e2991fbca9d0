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
Finitely presented weighted-graded Q-algebras, computed one degree at a time.

The degree-d piece of the ideal is spanned by all products m * r with r a
relation and m a monomial of the complementary degree. Its reduced echelon form
gives the ideal rank, a normal form for every element (reduce by the echelon
rows) and a quotient basis (the non-pivot monomials).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra import ExactMatrix, GradedPoly, VariableTable, format_monomial, monomial_basis, row_reduce
from ..algebra.poly import Exponents


class SocleError(ValueError):
    """Raised when a pairing is requested into a degree that is not one-dimensional."""


@dataclass(frozen=True)
class GradedPiece:
    degree: int
    monomials: Tuple[Exponents, ...]
    ideal_rank: int
    quotient_basis: Tuple[Exponents, ...]
    echelon: ExactMatrix
    pivot_columns: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.monomials) - self.ideal_rank


@dataclass
class DualityReport:
    """Outcome of a Poincare duality test, truthy when the ring passes."""

    holds: bool
    top: int
    hilbert: Tuple[int, ...]
    pairing_ranks: Dict[int, int] = field(default_factory=dict)
    pairing_determinants: Dict[int, Fraction] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds


class RingPresentation:
    """Q[variables] / (homogeneous relations), with graded pieces memoized per degree."""

    def __init__(self, table: VariableTable, relations: Sequence[GradedPoly], label: str = ""):
        self.table = table
        self.label = label
        cleaned = []
        for relation in relations:
            relation = relation.embed(table)
            if relation.is_zero():
                raise ValueError(f"Relation {len(cleaned)} of {label or 'presentation'} is zero.")

            if not relation.is_homogeneous():
                raise ValueError(f"Relation {relation} is not homogeneous, degrees {relation.degrees()}.")

            cleaned.append(relation)

        self.relations: Tuple[GradedPoly, ...] = tuple(cleaned)
        self._pieces: Dict[int, GradedPiece] = {}

    @property
    def relation_degrees(self) -> List[int]:
        return [relation.degree() for relation in self.relations]

    def ideal_degree_piece(self, d: int) -> ExactMatrix:
        """Coefficient rows of every m * r of degree d, relation-major, multipliers in basis order."""
        if d < 0:
            raise ValueError(f"Degree must be nonnegative, got {d}.")

        basis = monomial_basis(self.table, d)
        rows = []
        for relation in self.relations:
            offset = d - relation.degree()
            if offset < 0:
                continue

            for multiplier in monomial_basis(self.table, offset):
                product = relation * GradedPoly.monomial(self.table, multiplier)
                rows.append(product.to_vector(basis))

        return ExactMatrix(rows, num_cols=len(basis))

    def piece(self, d: int) -> GradedPiece:
        cached = self._pieces.get(d)
        if cached is not None:
            return cached

        monomials = monomial_basis(self.table, d)
        reduction = row_reduce(self.ideal_degree_piece(d))
        pivots = set(reduction.pivot_columns)
        graded_piece = GradedPiece(
            degree=d,
            monomials=monomials,
            ideal_rank=reduction.rank,
            quotient_basis=tuple(m for i, m in enumerate(monomials) if i not in pivots),
            echelon=reduction.echelon,
            pivot_columns=reduction.pivot_columns,
        )
        # identical values may race in, setdefault keeps the first
        return self._pieces.setdefault(d, graded_piece)

    def dim(self, d: int) -> int:
        return self.piece(d).dim

    def hilbert_function(self, max_d: int) -> Tuple[int, ...]:
        if max_d < 0:
            raise ValueError(f"max_d must be nonnegative, got {max_d}.")

        return tuple(self.dim(d) for d in range(max_d + 1))

    def total_dimension(self, max_d: int) -> int:
        return sum(self.hilbert_function(max_d))

    def vanishes_above(self, d: int, up_to: Optional[int] = None) -> bool:
        """R^e = 0 for d < e <= up_to (default: enough degrees to force vanishing in every higher degree)."""
        if up_to is None:
            up_to = d + max(self.table.weights, default=1)

        return all(self.dim(e) == 0 for e in range(d + 1, up_to + 1))

    def socle_degree(self, max_d: int) -> Optional[int]:
        """Highest degree <= max_d with a nonzero piece."""
        nonzero = [d for d, dim in enumerate(self.hilbert_function(max_d)) if dim > 0]
        return nonzero[-1] if nonzero else None

    def basis_elements(self, d: int) -> List[GradedPoly]:
        return [GradedPoly.monomial(self.table, m) for m in self.piece(d).quotient_basis]

    def _reduce_component(self, x: GradedPoly, d: int) -> GradedPoly:
        graded_piece = self.piece(d)
        vector = x.to_vector(graded_piece.monomials)
        for row_index, column in enumerate(graded_piece.pivot_columns):
            factor = vector[column]
            if factor:
                row = graded_piece.echelon.row(row_index)
                vector = [v - factor * r for v, r in zip(vector, row)]

        return GradedPoly.from_vector(self.table, graded_piece.monomials, vector)

    def normal_form(self, x: GradedPoly) -> GradedPoly:
        """Coset representative supported on the quotient basis, computed degree by degree."""
        x = x.embed(self.table)
        result = GradedPoly.zero(self.table)
        for d in x.degrees():
            result = result + self._reduce_component(x.homogeneous_component(d), d)

        return result

    def is_zero(self, x: GradedPoly) -> bool:
        return self.normal_form(x).is_zero()

    def socle_coordinate(self, x: GradedPoly, top: int) -> Fraction:
        """Coefficient of x in the one-dimensional degree-`top` piece."""
        graded_piece = self.piece(top)
        if graded_piece.dim != 1:
            raise SocleError(f"Degree {top} of {self.label or 'the ring'} has dimension {graded_piece.dim}, not 1.")

        x = x.embed(self.table).homogeneous_component(top)
        return self.normal_form(x).coefficient(graded_piece.quotient_basis[0])

    def pairing_matrix(self, i: int, top: int) -> ExactMatrix:
        """Products basis(R^i) x basis(R^(top-i)) read off in the socle."""
        if not 0 <= i <= top:
            raise ValueError(f"Pairing degree {i} must lie in [0, {top}].")

        if self.dim(top) != 1:
            raise SocleError(f"Degree {top} of {self.label or 'the ring'} has dimension {self.dim(top)}, not 1.")

        left = self.basis_elements(i)
        right = self.basis_elements(top - i)
        return ExactMatrix([[self.socle_coordinate(a * b, top) for b in right] for a in left], num_cols=len(right))

    def is_poincare_duality(self, top: int) -> DualityReport:
        hilbert = self.hilbert_function(top)
        report = DualityReport(holds=True, top=top, hilbert=hilbert)
        if hilbert[top] != 1:
            report.failures.append(f"top degree {top} has dimension {hilbert[top]}")

        for i in range(top + 1):
            if hilbert[i] != hilbert[top - i]:
                report.failures.append(f"dim R^{i} = {hilbert[i]} but dim R^{top - i} = {hilbert[top - i]}")
                break

        if not self.vanishes_above(top):
            report.failures.append(f"ring does not vanish above degree {top}")

        if not report.failures:
            for i in range(top + 1):
                pairing = self.pairing_matrix(i, top)
                report.pairing_ranks[i] = row_reduce(pairing).rank
                report.pairing_determinants[i] = pairing.determinant()
                if report.pairing_ranks[i] != hilbert[i]:
                    report.failures.append(
                        f"pairing R^{i} x R^{top - i} has rank {report.pairing_ranks[i]} < {hilbert[i]}"
                    )

        report.holds = not report.failures
        return report

    def describe_basis(self, d: int) -> List[str]:
        return [format_monomial(self.table, m) or "1" for m in self.piece(d).quotient_basis]

    def __repr__(self) -> str:
        relations = ", ".join(str(r) for r in self.relations)
        return f"RingPresentation({self.label!r}: Q[{self.table.describe()}]/({relations}))"
