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
Presentations of the tautological rings used by the verifier.
"""

from typing import Tuple

from ..algebra import GradedPoly, ScalarLike, VariableTable
from .presentation import RingPresentation


KAPPA_TABLE = VariableTable(("k1", "k2"), (1, 2))

# 127 k1^3 - 2304 k1 k2 and 113 k1^4 - 36864 k2^2
M6_COEFFICIENTS = (127, 2304, 113, 36864)


def kappa_table(count: int) -> VariableTable:
    """k1..k_count with k_a of weight a."""
    return VariableTable.graded_family("k", count)


def m6_presentation(
    coefficients: Tuple[ScalarLike, ScalarLike, ScalarLike, ScalarLike] = M6_COEFFICIENTS,
) -> RingPresentation:
    """Q[k1, k2] / (a k1^3 - b k1 k2, c k1^4 - d k2^2); pass other coefficients for sensitivity runs."""
    a, b, c, d = coefficients
    k1 = GradedPoly.variable(KAPPA_TABLE, "k1")
    k2 = GradedPoly.variable(KAPPA_TABLE, "k2")
    label = "M6" if tuple(coefficients) == M6_COEFFICIENTS else f"M6[{a},{b},{c},{d}]"
    return RingPresentation(KAPPA_TABLE, [a * k1**3 - b * k1 * k2, c * k1**4 - d * k2**2], label=label)


def tautological_presentation(g: int) -> RingPresentation:
    """Q[k1] / (k1^(g-1)), the ring of genus g <= 5."""
    if g < 2:
        raise ValueError(f"Genus must be at least 2, got {g}.")

    table = VariableTable(("k1",), (1,))
    return RingPresentation(table, [GradedPoly.variable(table, "k1") ** (g - 1)], label=f"R(M{g})")


def free_presentation(table: VariableTable, label: str = "free") -> RingPresentation:
    return RingPresentation(table, [], label=label)
