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

from .partition import MAX_PARTITION_SIZE, Partition, centralizer_size, partitions, partitions_in_box, sign
from .products import (
    SchurDecomposition,
    decompose_sym2_wedge2,
    dim_schur,
    kostka,
    lr_coefficient,
    lr_product,
    schur_expand,
    schur_to_monomial,
    standard_tableaux,
    syt_count,
)


__all__ = [
    "MAX_PARTITION_SIZE",
    "Partition",
    "SchurDecomposition",
    "centralizer_size",
    "decompose_sym2_wedge2",
    "dim_schur",
    "kostka",
    "lr_coefficient",
    "lr_product",
    "partitions",
    "partitions_in_box",
    "schur_expand",
    "schur_to_monomial",
    "sign",
    "standard_tableaux",
    "syt_count",
]
