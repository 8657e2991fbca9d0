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
Dimension bookkeeping for the strata of M_g, each computed from a quotient
presentation: (parameter space) minus (scaling) minus (group acting).
"""

from dataclasses import dataclass
from math import comb
from typing import Dict, List

from .grassmannian import grass_dim
from .hirzebruch import HirzebruchClass, aut_dim, h0_hirzebruch, maroni_k


@dataclass(frozen=True)
class StratumDimension:
    name: str
    dimension: int
    derivation: str


def forms_dim(m: int, d: int) -> int:
    """h^0(P^m, O(d)) = C(m + d, d)."""
    if m < 0 or d < 0:
        raise ValueError(f"forms_dim needs m, d >= 0, got ({m}, {d}).")

    return comb(m + d, d)


def canonical_quadrics(g: int) -> int:
    """Quadrics containing the canonical curve: h^0(P^{g-1}, O(2)) - (3g - 3) = (g - 2)(g - 3) / 2."""
    if g < 3:
        raise ValueError(f"Canonical quadrics need g >= 3, got {g}.")

    return forms_dim(g - 1, 2) - (3 * g - 3)


def dim_gl(r: int) -> int:
    return r * r


def dim_sl(r: int) -> int:
    return r * r - 1


def dim_pgl(r: int) -> int:
    """PGL(r) acting on P^{r-1}."""
    return r * r - 1


def moduli_dim(g: int) -> int:
    return 3 * g - 3


def trigonal_stratum_dim(g: int, n: int) -> int:
    """Curves in |3S + kF| on F_n modulo Aut(F_n)."""
    k = maroni_k(g, n)
    if k.denominator != 1:
        raise ValueError(f"Maroni invariant {n} has the wrong parity for genus {g}.")

    return h0_hirzebruch(HirzebruchClass.trigonal_curve(n, k)) - 1 - aut_dim(n)


def hyperelliptic_dim(g: int) -> int:
    """Binary forms on the (2g + 3)-dimensional parameter space modulo GL(2)."""
    return (2 * g + 3) - dim_gl(2)


def bielliptic_dim(g: int) -> int:
    return 2 * g - 2


def plane_curve_dim(d: int) -> int:
    """Smooth plane curves of degree d modulo PGL(3)."""
    return forms_dim(2, d) - 1 - dim_pgl(3)


def nodal_sextic_dim(nodes: int = 4) -> int:
    """Plane sextics with the given number of assigned nodes, as a hypersurface complement in projective space."""
    return forms_dim(2, 6) - 1 - 3 * nodes


def stratum_dimensions(g: int) -> List[StratumDimension]:
    """Dimensions of the strata of M_g used in the stratification arguments for g = 3..6."""
    if g == 6:
        return [
            StratumDimension("M6", moduli_dim(6), "3g - 3"),
            StratumDimension("trigonal F0", trigonal_stratum_dim(6, 0), "h0(F0, 3S+4F) - 1 - dim Aut(F0)"),
            StratumDimension("plane quintics", plane_curve_dim(5), "forms_dim(2,5) - 1 - dim PGL(3)"),
            StratumDimension("hyperelliptic", hyperelliptic_dim(6), "(2g + 3) - dim GL(2)"),
            StratumDimension("bielliptic", bielliptic_dim(6), "2g - 2"),
        ]
    elif g == 5:
        return [
            StratumDimension("nets of quadrics", grass_dim(3, 15) - dim_sl(5), "dim G(3,15) - dim SL(5)"),
            StratumDimension("trigonal F1", trigonal_stratum_dim(5, 1), "h0(F1, 3S+2F) - 1 - dim Aut(F1)"),
            StratumDimension("hyperelliptic", hyperelliptic_dim(5), "(2g + 3) - dim GL(2)"),
        ]
    elif g == 4:
        return [
            StratumDimension("trigonal F0", trigonal_stratum_dim(4, 0), "h0(F0, 3S+3F) - 1 - dim Aut(F0)"),
            StratumDimension("trigonal F2", trigonal_stratum_dim(4, 2), "h0(F2, 3S) - 1 - dim Aut(F2)"),
            StratumDimension("hyperelliptic", hyperelliptic_dim(4), "(2g + 3) - dim GL(2)"),
        ]
    elif g == 3:
        return [
            StratumDimension("plane quartics", plane_curve_dim(4), "forms_dim(2,4) - 1 - dim PGL(3)"),
            StratumDimension("hyperelliptic", hyperelliptic_dim(3), "(2g + 3) - dim GL(2)"),
        ]
    else:
        raise ValueError(f"Strata are tabulated for genus 3 to 6, got {g}.")


def maroni_divisor_dim(g: int = 6, n: int = 2) -> int:
    return trigonal_stratum_dim(g, n)


def mukai_bookkeeping() -> Dict[str, int]:
    """Ranks and dimensions around the Mukai model of a general genus 6 curve."""
    quadrics = forms_dim(5, 2)
    residual = quadrics - 5
    return {
        "quadrics_on_P5": quadrics,
        "plucker_quadrics": 5,
        "residual_rank": residual,
        "grassmannian_dim": grass_dim(4, 10),
        "total_dim": grass_dim(4, 10) + residual,
        "wedge2_rank": comb(5, 2),
        "sub_rank": 4,
        "quotient_rank": comb(5, 2) - 4,
    }
