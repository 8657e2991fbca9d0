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

from .counts import (
    StratumDimension,
    canonical_quadrics,
    dim_gl,
    dim_pgl,
    dim_sl,
    forms_dim,
    hyperelliptic_dim,
    maroni_divisor_dim,
    moduli_dim,
    mukai_bookkeeping,
    nodal_sextic_dim,
    plane_curve_dim,
    stratum_dimensions,
    trigonal_stratum_dim,
)
from .grassmannian import (
    GrassmannData,
    NotTopDegreeError,
    grass_dim,
    grass_integrate,
    grassmannian,
    plucker_degree,
    point_class,
    schubert_class,
)
from .hirzebruch import (
    HirzebruchClass,
    admissible_maroni,
    aut_dim,
    genus_of_class,
    h0_hirzebruch,
    intersect,
    maroni_k,
)


__all__ = [
    "GrassmannData",
    "HirzebruchClass",
    "NotTopDegreeError",
    "StratumDimension",
    "admissible_maroni",
    "aut_dim",
    "canonical_quadrics",
    "dim_gl",
    "dim_pgl",
    "dim_sl",
    "forms_dim",
    "genus_of_class",
    "grass_dim",
    "grass_integrate",
    "grassmannian",
    "h0_hirzebruch",
    "hyperelliptic_dim",
    "intersect",
    "maroni_divisor_dim",
    "maroni_k",
    "moduli_dim",
    "mukai_bookkeeping",
    "nodal_sextic_dim",
    "plane_curve_dim",
    "plucker_degree",
    "point_class",
    "schubert_class",
    "stratum_dimensions",
    "trigonal_stratum_dim",
]
