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
Solve bundle identities of the form c(lhs) = c(rhs) for unknown Chern classes.

Each unknown has a degree d and must enter c_d linearly with a nonzero
scalar coefficient once lower-degree unknowns are substituted. Degrees with
no unknown left over become residual relations on the target classes.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Mapping

from ..algebra import GradedPoly, InconsistencyError, VariableTable
from .bundle import DEFAULT_TRUNC, FormalBundle, direct_sum, sym_power, twist


@dataclass
class TwistSolution:
    solutions: Dict[str, GradedPoly]
    """unknown name -> its value in the target classes"""
    residuals: Dict[int, GradedPoly] = field(default_factory=dict)
    """degree -> relation among target classes that the identity forces (only nonzero ones are kept)"""
    convention: str = ""
    """normalization chosen for parameters the identity leaves free"""

    def __getitem__(self, name: str) -> GradedPoly:
        return self.solutions[name]

    def coefficient(self, name: str, monomial: Mapping[str, int]) -> Fraction:
        value = self.solutions[name]
        if any(variable not in value.table for variable in monomial):
            return Fraction(0)

        return value.coefficient(monomial)


def solve_degreewise(
    lhs: FormalBundle, rhs: FormalBundle, unknowns: Mapping[int, str], trunc: int
) -> TwistSolution:
    """Match c_d(lhs) = c_d(rhs) for d = 1..trunc, solving for `unknowns[d]` in degree d."""
    if lhs.rank != rhs.rank:
        raise InconsistencyError(f"Ranks differ: {lhs.rank} != {rhs.rank}.")

    solutions: Dict[str, GradedPoly] = {}
    residuals: Dict[int, GradedPoly] = {}
    for d in range(1, trunc + 1):
        table = lhs.table.merge(rhs.table)
        equation = lhs.c(d).embed(table) - rhs.c(d).embed(table)
        if solutions:
            equation = equation.substitute({name: value for name, value in solutions.items() if name in table})

        name = unknowns.get(d)
        if name is None:
            if not equation.is_zero():
                residuals[d] = equation
            continue

        coefficient = equation.coefficient({name: 1}) if name in equation.table else Fraction(0)
        if coefficient == 0:
            raise InconsistencyError(f"Unknown {name} does not appear linearly in degree {d}: {equation} = 0.")

        remainder = equation - GradedPoly.variable(equation.table, name) * coefficient
        if name in remainder.variables_used():
            raise InconsistencyError(f"Unknown {name} appears nonlinearly in degree {d}: {equation} = 0.")

        solutions[name] = -remainder / coefficient

    return TwistSolution(solutions=solutions, residuals=residuals)


def _target(rank: int, prefix: str, trunc: int) -> FormalBundle:
    return FormalBundle.free(rank, prefix, trunc)


def solve_sym_power_twist(
    rank: int, k: int, trunc: int = DEFAULT_TRUNC, prefix: str = "b", target: str = "l"
) -> TwistSolution:
    """Solve Sym^k(B) = E for the Chern classes of B (rank `rank`), E free of rank C(rank+k-1, k)."""
    bundle = FormalBundle.free(rank, prefix, trunc)
    image = sym_power(bundle, k)
    unknowns = {d: f"{prefix}{d}" for d in range(1, min(rank, trunc) + 1)}
    solution = solve_degreewise(image, _target(image.rank, target, trunc), unknowns, trunc)
    solution.convention = f"c(Sym^{k} {prefix}) = c({target}), rank {image.rank}"
    return solution


def solve_hyperelliptic_twist(g: int, trunc: int = DEFAULT_TRUNC) -> TwistSolution:
    """Sym^{g-1} W = E on the hyperelliptic locus; w1 = l1 / C(g, 2)."""
    if g < 2:
        raise ValueError(f"Genus must be at least 2, got {g}.")

    solution = solve_sym_power_twist(2, g - 1, trunc, prefix="w", target="l")
    expected = GradedPoly.variable(VariableTable(("l1",), (1,)), "l1") / comb(g, 2)
    if solution["w1"] != expected.embed(solution["w1"].table):
        raise InconsistencyError(f"w1 = {solution['w1']} differs from l1/{comb(g, 2)}.")

    return solution


def solve_plane_quintic_twist(trunc: int = DEFAULT_TRUNC) -> TwistSolution:
    """Sym^2 V = E for the rank 3 bundle of a plane quintic."""
    return solve_sym_power_twist(3, 2, trunc, prefix="v", target="l")


def solve_sl_twist(rank: int, trunc: int = DEFAULT_TRUNC, prefix: str = "v", target: str = "l") -> TwistSolution:
    """V (x) L = E with det V trivial: c1(L) = l1 / rank, higher c_i(V) solved degree by degree."""
    degrees = range(2, min(rank, trunc) + 1)
    table = VariableTable.from_pairs([("t", 1)] + [(f"{prefix}{i}", i) for i in degrees])
    classes = [GradedPoly.zero(table)] + [GradedPoly.variable(table, f"{prefix}{i}") for i in degrees]
    bundle = FormalBundle(rank, classes, trunc=trunc, table=table)
    image = twist(bundle, GradedPoly.variable(table, "t"))
    unknowns = {1: "t", **{d: f"{prefix}{d}" for d in degrees}}
    solution = solve_degreewise(image, _target(rank, target, trunc), unknowns, trunc)
    solution.convention = f"c1({prefix}) = 0, t = c1(L)"
    return solution


@dataclass
class TrigonalSolution:
    g: int
    n: int
    k: int
    t: Fraction
    """c1(M) = t * l1"""
    q: Fraction
    """a1 = q * l1"""
    r: Fraction
    """coefficient of l1^2 in b2"""
    s: Fraction
    """coefficient of l2 in b2"""
    solution: TwistSolution


def maroni_twist_degree(g: int, n: int) -> int:
    """k with the curve in class 3S + kF on F_n; requires n = g mod 2 and 0 <= n <= (g+2)/3."""
    if n < 0 or 3 * n > g + 2:
        raise ValueError(f"Maroni invariant {n} is out of range for genus {g}.")

    if (g - n) % 2:
        raise ValueError(f"Maroni invariant {n} must have the parity of the genus {g}.")

    return (g - 3 * n + 2) // 2


def solve_trigonal_twist(
    g: int, n: int, t: Fraction = Fraction(0), trunc: int = DEFAULT_TRUNC
) -> TrigonalSolution:
    """E (x) M = Sym^{2n+k-2} V + L (x) Sym^{n+k-2} V with c1(V) = 0, c2(V) = b2, c1(L) = a1, c1(M) = t l1."""
    k = maroni_twist_degree(g, n)
    high, low = 2 * n + k - 2, n + k - 2
    if (high + 1) + (low + 1) != g:
        raise InconsistencyError(f"Ranks {high + 1} + {low + 1} do not add up to the genus {g}.")

    table = VariableTable(("a1", "b2"), (1, 2))
    base = FormalBundle(2, [GradedPoly.zero(table), GradedPoly.variable(table, "b2")], trunc=trunc, table=table)
    rhs = direct_sum(sym_power(base, high), twist(sym_power(base, low), GradedPoly.variable(table, "a1")))

    hodge = _target(g, "l", trunc)
    lhs = twist(hodge, hodge.c(1) * Fraction(t))
    solution = solve_degreewise(lhs, rhs, {1: "a1", 2: "b2"}, trunc)
    solution.convention = f"c1(M) = {t} * l1"
    return TrigonalSolution(
        g=g,
        n=n,
        k=k,
        t=Fraction(t),
        q=solution.coefficient("a1", {"l1": 1}),
        r=solution.coefficient("b2", {"l1": 2}),
        s=solution.coefficient("b2", {"l2": 1}),
        solution=solution,
    )


def solution_summary(solution: TwistSolution) -> List[str]:
    lines = [f"{name} = {value}" for name, value in solution.solutions.items()]
    lines += [f"relation in degree {d}: {value} = 0" for d, value in sorted(solution.residuals.items())]
    return lines
