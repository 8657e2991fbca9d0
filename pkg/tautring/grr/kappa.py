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
Grothendieck-Riemann-Roch on the universal curve pi: C -> M_g, done formally.

Classes upstairs are polynomials in psi = c_1(omega) with coefficients in the
kappa ring. The pushforward sends psi^{a+1} to kappa_a, with kappa_0 = 2g - 2,
and kills psi^0. For the relative tangent bundle T = omega^dual,

    td(T) = psi / (e^psi - 1) = sum_n B_n psi^n / n!      (B_1 = -1/2)

so ch(pi_! omega^k) = pi_*(e^{k psi} td(T)).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional

from ..algebra import GradedPoly, InconsistencyError, ScalarLike, VariableTable
from ..bundles import (
    DEFAULT_TRUNC,
    FormalBundle,
    LineClass,
    bernoulli_numbers,
    chern_from_character,
    sequence_quotient,
    sym_power,
    twist,
    wedge_power,
)
from ..rings import kappa_table


def psi_table(trunc: int) -> VariableTable:
    """psi (weight 1) followed by k1..k_trunc."""
    return VariableTable.from_pairs([("psi", 1)] + [(f"k{a}", a) for a in range(1, trunc + 1)])


class PsiSeries:
    """A class on the universal curve, truncated above degree trunc + 1."""

    __slots__ = ("genus", "trunc", "poly")

    def __init__(self, genus: int, poly: GradedPoly, trunc: int = DEFAULT_TRUNC):
        if genus < 2:
            raise ValueError(f"Genus must be at least 2, got {genus}.")

        table = psi_table(trunc)
        poly = poly.embed(table)
        self.genus = genus
        self.trunc = trunc
        self.poly = GradedPoly(table, {e: c for e, c in poly.terms.items() if table.degree(e) <= trunc + 1})

    @classmethod
    def psi(cls, genus: int, trunc: int = DEFAULT_TRUNC) -> "PsiSeries":
        return cls(genus, GradedPoly.variable(psi_table(trunc), "psi"), trunc)

    @classmethod
    def exp_psi(cls, genus: int, k: ScalarLike, trunc: int = DEFAULT_TRUNC) -> "PsiSeries":
        """e^{k psi}."""
        psi = GradedPoly.variable(psi_table(trunc), "psi")
        return cls(genus, sum((psi**j * Fraction(k) ** j / factorial(j) for j in range(trunc + 2)), psi * 0), trunc)

    @classmethod
    def todd(cls, genus: int, trunc: int = DEFAULT_TRUNC) -> "PsiSeries":
        return cls(genus, todd_series(trunc), trunc)

    def coefficient(self, j: int) -> GradedPoly:
        """Coefficient of psi^j, a polynomial in the kappa classes."""
        table = kappa_table(self.trunc)
        terms = {e[1:]: c for e, c in self.poly.terms.items() if e[0] == j}
        return GradedPoly(table, terms)

    def __add__(self, other: "PsiSeries") -> "PsiSeries":
        return PsiSeries(self.genus, self.poly + other.poly, min(self.trunc, other.trunc))

    def __mul__(self, other) -> "PsiSeries":
        if isinstance(other, PsiSeries):
            return PsiSeries(self.genus, self.poly * other.poly, min(self.trunc, other.trunc))

        return PsiSeries(self.genus, self.poly * other, self.trunc)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return str(self.poly)


def todd_series(trunc: int = DEFAULT_TRUNC) -> GradedPoly:
    """td(omega^dual) = sum_{n <= trunc+1} B_n psi^n / n!."""
    table = psi_table(trunc)
    psi = GradedPoly.variable(table, "psi")
    bernoulli = bernoulli_numbers(trunc + 2)
    return sum((psi**n * bernoulli[n] / factorial(n) for n in range(trunc + 2)), GradedPoly.zero(table))


def push_psi(series: PsiSeries) -> GradedPoly:
    """psi^{a+1} -> kappa_a, psi -> 2g - 2, 1 -> 0, linear over the kappa ring."""
    target = kappa_table(series.trunc)
    result = GradedPoly.zero(target)
    for exponents, coefficient in series.poly.terms.items():
        j, kappa = exponents[0], exponents[1:]
        if j == 0:
            continue

        term = GradedPoly.monomial(target, kappa, coefficient)
        if j == 1:
            result = result + term * (2 * series.genus - 2)
        else:
            result = result + term * GradedPoly.variable(target, f"k{j - 1}")

    return result


def ch_pushforward_omega_power(k: int, g: int, trunc: int = DEFAULT_TRUNC) -> List[GradedPoly]:
    """ch_0..ch_D of pi_* omega^k; for k = 1 the trivial R^1 pi_* omega is added back."""
    if k < 1:
        raise ValueError(f"Power of omega must be positive, got {k}.")

    pushed = push_psi(PsiSeries.exp_psi(g, k, trunc) * PsiSeries.todd(g, trunc))
    character = [pushed.homogeneous_component(d) for d in range(trunc + 1)]
    if k == 1:
        character[0] = character[0] + 1

    return character


def omega_power_rank(k: int, g: int) -> int:
    """Riemann-Roch: h^0(omega^k) = g for k = 1, (2k - 1)(g - 1) for k >= 2."""
    return g if k == 1 else (2 * k - 1) * (g - 1)


def omega_power_bundle(k: int, g: int, trunc: int = DEFAULT_TRUNC) -> FormalBundle:
    rank = omega_power_rank(k, g)
    character = ch_pushforward_omega_power(k, g, trunc)
    if character[0] != rank:
        raise InconsistencyError(f"ch_0 of pi_* omega^{k} is {character[0]}, expected {rank}.")

    # below the truncation order the kappa classes are free, so classes above the rank need not vanish
    return chern_from_character(character, rank, trunc, exact=rank >= trunc)


def hodge_bundle(g: int, trunc: int = DEFAULT_TRUNC) -> FormalBundle:
    """E = pi_* omega over the kappa ring; lambda_i = c_i(E)."""
    return omega_power_bundle(1, g, trunc)


def mumford_hodge_character(g: int, trunc: int = DEFAULT_TRUNC) -> List[GradedPoly]:
    """ch_a(E) = B_{a+1} / (a+1)! kappa_a for odd a, zero for even a > 0."""
    table = kappa_table(trunc)
    bernoulli = bernoulli_numbers(trunc + 2)
    character = [GradedPoly.constant(table, g)]
    for a in range(1, trunc + 1):
        if a % 2:
            character.append(GradedPoly.variable(table, f"k{a}") * bernoulli[a + 1] / factorial(a + 1))
        else:
            character.append(GradedPoly.zero(table))

    return character


def quadric_bundle(g: int, trunc: int = DEFAULT_TRUNC) -> FormalBundle:
    """G in 0 -> G -> Sym^2 E -> pi_* omega^2 -> 0, the quadrics containing the canonical curve."""
    sym2 = sym_power(hodge_bundle(g, trunc), 2)
    image = omega_power_bundle(2, g, trunc)
    rank = sym2.rank - image.rank
    return sequence_quotient(sym2, image, exact=rank >= trunc)


@dataclass
class FiExpressions:
    f: Dict[int, GradedPoly]
    """c_i(F) for i <= rank F"""
    excess: Dict[int, GradedPoly] = field(default_factory=dict)
    """nonzero c_i(F) above the rank, i.e. relations forced on v, l and ell"""
    bundle: Optional[FormalBundle] = None


def fi_in_terms_of_vi(trunc: int = DEFAULT_TRUNC, strict: bool = False) -> FiExpressions:
    """c(F) = c(wedge^2 V) / c(E (x) L'), F of rank 4, V of rank 5, E of rank 6, ell = c1(L') symbolic."""
    wedge2 = wedge_power(FormalBundle.free(5, "v", trunc), 2)
    ell = LineClass(GradedPoly.variable(VariableTable(("ell",), (1,)), "ell"))
    quotient = twist(FormalBundle.free(6, "l", trunc), ell)
    bundle = sequence_quotient(wedge2, quotient, exact=strict)
    f = {i: bundle.c(i) for i in range(1, min(bundle.rank, trunc) + 1)}
    excess = {i: bundle.c(i) for i in range(bundle.rank + 1, trunc + 1) if not bundle.c(i).is_zero()}
    return FiExpressions(f=f, excess=excess, bundle=bundle)


def fve_roundtrip(trunc: int = 6) -> FormalBundle:
    """Define E' = wedge^2 V / F with F free of rank 4, then recover F exactly from wedge^2 V and E'."""
    wedge2 = wedge_power(FormalBundle.free(5, "v", trunc), 2)
    free = FormalBundle.free(4, "f", trunc)
    quotient = sequence_quotient(wedge2, free, exact=False)
    return sequence_quotient(wedge2, quotient, exact=True)


@dataclass
class FiOnQuotient:
    f: Dict[int, GradedPoly]
    excess: Dict[int, GradedPoly]
    free: FormalBundle


def fi_excess_on_quotient(trunc: int = 6) -> FiOnQuotient:
    """Put E' = wedge^2 V / F (F free of rank 4, ell = 0) into the expressions for f_i.

    f_1..f_4 come back as the classes of F and the excess classes vanish.
    """
    if trunc > 6:
        raise ValueError(f"E' has rank 6, its classes determine f_i only through degree 6, not {trunc}.")

    expressions = fi_in_terms_of_vi(trunc)
    free = FormalBundle.free(4, "f", trunc)
    quotient = sequence_quotient(wedge_power(FormalBundle.free(5, "v", trunc), 2), free, exact=False)
    values = {f"l{i}": quotient.c(i) for i in range(1, min(quotient.rank, trunc) + 1)}
    values["ell"] = 0
    return FiOnQuotient(
        f={i: c.substitute(values) for i, c in expressions.f.items()},
        excess={i: expressions.bundle.c(i).substitute(values) for i in range(5, trunc + 1)},
        free=free,
    )
