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

from ..bundles import bernoulli_numbers
from .kappa import (
    FiExpressions,
    FiOnQuotient,
    PsiSeries,
    ch_pushforward_omega_power,
    fi_excess_on_quotient,
    fi_in_terms_of_vi,
    fve_roundtrip,
    hodge_bundle,
    mumford_hodge_character,
    omega_power_bundle,
    omega_power_rank,
    psi_table,
    push_psi,
    quadric_bundle,
    todd_series,
)


__all__ = [
    "FiExpressions",
    "FiOnQuotient",
    "PsiSeries",
    "bernoulli_numbers",
    "ch_pushforward_omega_power",
    "fi_excess_on_quotient",
    "fi_in_terms_of_vi",
    "fve_roundtrip",
    "hodge_bundle",
    "mumford_hodge_character",
    "omega_power_bundle",
    "omega_power_rank",
    "psi_table",
    "push_psi",
    "quadric_bundle",
    "todd_series",
]
