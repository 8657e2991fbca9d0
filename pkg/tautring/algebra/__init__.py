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

from .errors import GuardError, InconsistencyError, TableMismatchError
from .matrix import ExactMatrix, RowReduction, rank, row_reduce, solve_linear
from .poly import (
    Exponents,
    GradedPoly,
    VariableTable,
    format_monomial,
    format_poly,
    monomial_basis,
    poly_arith,
    unify,
)
from .scalar import RationalScalar, ScalarLike, as_integer, format_scalar, from_qq, is_scalar, to_qq, to_scalar


__all__ = [
    "ExactMatrix",
    "Exponents",
    "GradedPoly",
    "GuardError",
    "InconsistencyError",
    "RationalScalar",
    "RowReduction",
    "ScalarLike",
    "TableMismatchError",
    "VariableTable",
    "as_integer",
    "format_monomial",
    "format_poly",
    "format_scalar",
    "from_qq",
    "is_scalar",
    "monomial_basis",
    "poly_arith",
    "rank",
    "row_reduce",
    "solve_linear",
    "to_qq",
    "to_scalar",
    "unify",
]
