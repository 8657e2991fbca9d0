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

from .presentation import DualityReport, GradedPiece, RingPresentation, SocleError
from .standard import (
    KAPPA_TABLE,
    M6_COEFFICIENTS,
    free_presentation,
    kappa_table,
    m6_presentation,
    tautological_presentation,
)


__all__ = [
    "KAPPA_TABLE",
    "M6_COEFFICIENTS",
    "DualityReport",
    "GradedPiece",
    "RingPresentation",
    "SocleError",
    "free_presentation",
    "kappa_table",
    "m6_presentation",
    "tautological_presentation",
]
