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

from .bundle import (
    DEFAULT_TRUNC,
    MAX_ROOTS,
    FormalBundle,
    LineClass,
    chern_character,
    chern_from_character,
    determinant,
    direct_sum,
    dual,
    line_bundle,
    residual_classes,
    sequence_quotient,
    sym_power,
    tensor,
    todd_class,
    twist,
    wedge_power,
)
from .character import bernoulli_numbers
from .twists import (
    TrigonalSolution,
    TwistSolution,
    maroni_twist_degree,
    solution_summary,
    solve_degreewise,
    solve_hyperelliptic_twist,
    solve_plane_quintic_twist,
    solve_sl_twist,
    solve_sym_power_twist,
    solve_trigonal_twist,
)


__all__ = [
    "DEFAULT_TRUNC",
    "MAX_ROOTS",
    "FormalBundle",
    "LineClass",
    "TrigonalSolution",
    "TwistSolution",
    "bernoulli_numbers",
    "chern_character",
    "chern_from_character",
    "determinant",
    "direct_sum",
    "dual",
    "line_bundle",
    "maroni_twist_degree",
    "residual_classes",
    "sequence_quotient",
    "solution_summary",
    "solve_degreewise",
    "solve_hyperelliptic_twist",
    "solve_plane_quintic_twist",
    "solve_sl_twist",
    "solve_sym_power_twist",
    "solve_trigonal_twist",
    "sym_power",
    "tensor",
    "todd_class",
    "twist",
    "wedge_power",
]
