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
Chow rings of Grassmannians G(k, n) of k-planes in C^n.

The ring is generated by the special Schubert classes s_i = c_i(Q) of the
universal quotient bundle, i = 1..n-k. Since c(S) c(Q) = 1 and S has rank k,
the relations are the components [1 / c(Q)]_d for d = k+1..n. Schubert classes
of other shapes come from the Giambelli determinant.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import List

from sympy.polys.matrices import DomainMatrix

from ..algebra import GradedPoly, VariableTable
from ..bundles.character import series_inverse
from ..rings import RingPresentation
from ..schur import Partition


class NotTopDegreeError(ValueError):
    """Raised when an integrand is not homogeneous of the top degree."""


@dataclass(frozen=True)
class GrassmannData:
    k: int
    n: int

    def __post_init__(self):
        grass_dim(self.k, self.n)

    @cached_property
    def chow(self) -> RingPresentation:
        k, n = self.k, self.n
        table = VariableTable.graded_family("s", n - k)
        quotient = [GradedPoly.constant(table, 1)] + [GradedPoly.variable(table, f"s{i}") for i in range(1, n - k + 1)]
        quotient += [GradedPoly.zero(table)] * k
        sub = series_inverse(quotient, n)
        return RingPresentation(table, [sub[d] for d in range(k + 1, n + 1)], label=str(self))

    @property
    def table(self) -> VariableTable:
        return self.chow.table

    @property
    def dim(self) -> int:
        return grass_dim(self.k, self.n)

    def special(self, i: int) -> GradedPoly:
        """s_i, with s_0 = 1 and s_i = 0 outside 0..n-k."""
        if i == 0:
            return GradedPoly.constant(self.table, 1)

        if i < 0 or i > self.n - self.k:
            return GradedPoly.zero(self.table)

        return GradedPoly.variable(self.table, f"s{i}")

    def __str__(self) -> str:
        return f"G({self.k},{self.n})"


def grass_dim(k: int, n: int) -> int:
    if not 1 <= k < n:
        raise ValueError(f"G({k},{n}) needs 1 <= k < n.")

    return k * (n - k)


@lru_cache(maxsize=None)
def grassmannian(k: int, n: int) -> GrassmannData:
    """G(k, n); the Chow ring is built on first use."""
    return GrassmannData(k=k, n=n)


def _determinant(matrix: List[List[GradedPoly]], table: VariableTable) -> GradedPoly:
    """Determinant over the polynomial domain QQ[s_1, ..., s_{n-k}]."""
    domain = table.ring.to_domain()
    rows = [[entry.element for entry in row] for row in matrix]
    return GradedPoly.from_element(table, DomainMatrix(rows, (len(rows), len(rows)), domain).det())


def schubert_class(grass: GrassmannData, partition: Partition) -> GradedPoly:
    """Giambelli: s_lambda = det(s_{lambda_i + j - i}); zero unless lambda fits in the k x (n-k) box."""
    if len(partition) > grass.k or (partition.parts and partition.parts[0] > grass.n - grass.k):
        return GradedPoly.zero(grass.table)

    size = len(partition)
    matrix = [[grass.special(partition[i] + j - i) for j in range(size)] for i in range(size)]
    return _determinant(matrix, grass.table) if size else GradedPoly.constant(grass.table, 1)


def point_class(grass: GrassmannData) -> GradedPoly:
    return grass.special(grass.n - grass.k) ** grass.k


def grass_integrate(grass: GrassmannData, x: GradedPoly) -> Fraction:
    """Degree of x against the fundamental class, with the point class normalized to 1."""
    x = x.embed(grass.table)
    if x.is_zero():
        return Fraction(0)

    if x.degrees() != [grass.dim]:
        raise NotTopDegreeError(f"Integrand {x} has degrees {x.degrees()}, expected {grass.dim} on {grass}.")

    return grass.chow.socle_coordinate(x, grass.dim) / grass.chow.socle_coordinate(point_class(grass), grass.dim)


def plucker_degree(k: int, n: int) -> int:
    grass = grassmannian(k, n)
    degree = grass_integrate(grass, grass.special(1) ** grass.dim)
    return degree.numerator
