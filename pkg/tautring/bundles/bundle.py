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
Formal vector bundles: a rank and a total Chern class truncated at order D.

Every construction goes through the Chern character. Dual is the Adams
operation psi^{-1}, tensor products multiply characters, and Sym^k / wedge^k
come from the cycle index of the symmetric group,

    ch(Sym^k E)    = sum_{mu |- k} p_mu[ch E] / z_mu
    ch(wedge^k E)  = sum_{mu |- k} sign(mu) p_mu[ch E] / z_mu

where p_mu[ch E] is the product of psi^{mu_i}(ch E). This is the splitting
principle with the Chern roots never written down.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Union

from ..algebra import GradedPoly, GuardError, InconsistencyError, ScalarLike, VariableTable, is_scalar
from ..schur.partition import centralizer_size, partitions, sign
from .character import (
    Series,
    adams,
    character_from_chern,
    chern_from_character_series,
    line_character,
    one_series,
    power_sums_from_chern,
    series_add,
    series_inverse,
    series_multiply,
    series_scale,
    todd_from_power_sums,
    twist_chern,
    zero_series,
)


DEFAULT_TRUNC = 4

MAX_ROOTS = 1_000_000

EMPTY_TABLE = VariableTable((), ())


@dataclass(frozen=True)
class LineClass:
    c1: GradedPoly
    """first Chern class, homogeneous of degree 1"""

    def __post_init__(self):
        if not self.c1.is_zero() and self.c1.degrees() != [1]:
            raise ValueError(f"A line class must have degree 1, got {self.c1} of degrees {self.c1.degrees()}.")

    @classmethod
    def zero(cls, table: VariableTable = EMPTY_TABLE) -> "LineClass":
        return cls(GradedPoly.zero(table))

    def __add__(self, other: "LineClass") -> "LineClass":
        table = self.c1.table.merge(other.c1.table)
        return LineClass(self.c1.embed(table) + other.c1.embed(table))

    def __neg__(self) -> "LineClass":
        return LineClass(-self.c1)

    def __mul__(self, scale: ScalarLike) -> "LineClass":
        return LineClass(self.c1 * scale)

    __rmul__ = __mul__

    def as_bundle(self, trunc: int = DEFAULT_TRUNC) -> "FormalBundle":
        return FormalBundle(1, [self.c1], trunc=trunc)

    def __str__(self) -> str:
        return str(self.c1)


class FormalBundle:
    """Rank plus c_1..c_D. When rank < D the classes above the rank are asserted to vanish exactly."""

    __slots__ = ("rank", "trunc", "table", "chern", "exact")

    def __init__(
        self,
        rank: int,
        chern: Sequence[Union[GradedPoly, ScalarLike]],
        trunc: Optional[int] = None,
        table: Optional[VariableTable] = None,
        exact: bool = True,
    ):
        if rank < 0:
            raise ValueError(f"Rank must be nonnegative, got {rank}.")

        trunc = len(chern) if trunc is None else trunc
        if table is None:
            table = EMPTY_TABLE

        for c in chern:
            if isinstance(c, GradedPoly):
                table = table.merge(c.table)

        classes = []
        for i in range(1, trunc + 1):
            c = chern[i - 1] if i <= len(chern) else 0
            c = c.embed(table) if isinstance(c, GradedPoly) else GradedPoly.constant(table, c)
            if not c.is_zero() and c.degrees() != [i]:
                raise ValueError(f"c_{i} = {c} is not homogeneous of degree {i}.")

            if exact and i > rank and not c.is_zero():
                raise InconsistencyError(f"c_{i} = {c} is nonzero above the rank {rank}.")

            classes.append(c)

        self.rank = rank
        self.trunc = trunc
        self.table = table
        self.chern = tuple(classes)
        self.exact = exact

    @classmethod
    def free(cls, rank: int, prefix: str, trunc: int = DEFAULT_TRUNC) -> "FormalBundle":
        """Bundle whose Chern classes are the variables prefix1, prefix2, ... up to the rank."""
        count = min(rank, trunc)
        table = VariableTable.graded_family(prefix, count)
        return cls(rank, [GradedPoly.variable(table, f"{prefix}{i}") for i in range(1, count + 1)], trunc=trunc)

    @classmethod
    def trivial(cls, rank: int, trunc: int = DEFAULT_TRUNC, table: VariableTable = EMPTY_TABLE) -> "FormalBundle":
        return cls(rank, [], trunc=trunc, table=table)

    @classmethod
    def from_total(cls, rank: int, series: Sequence[GradedPoly], trunc: int, exact: bool = True) -> "FormalBundle":
        return cls(rank, list(series[1 : trunc + 1]), trunc=trunc, exact=exact)

    def c(self, i: int) -> GradedPoly:
        if i == 0:
            return GradedPoly.constant(self.table, 1)

        if i > self.trunc:
            if self.exact and i > self.rank:
                return GradedPoly.zero(self.table)

            raise ValueError(f"c_{i} is beyond the truncation order {self.trunc}.")

        return self.chern[i - 1]

    def total(self) -> Series:
        """c_0..c_D as a series."""
        return [self.c(i) for i in range(self.trunc + 1)]

    def total_chern(self) -> GradedPoly:
        return sum(self.total(), GradedPoly.zero(self.table))

    def embed(self, table: VariableTable) -> "FormalBundle":
        chern = [c.embed(table) for c in self.chern]
        return FormalBundle(self.rank, chern, trunc=self.trunc, table=table, exact=self.exact)

    def truncate(self, trunc: int) -> "FormalBundle":
        if trunc > self.trunc:
            raise ValueError(f"Cannot extend truncation from {self.trunc} to {trunc}.")

        return FormalBundle(self.rank, self.chern[:trunc], trunc=trunc, table=self.table, exact=self.exact)

    def character(self, trunc: Optional[int] = None) -> Series:
        return character_from_chern(self.rank, self.total(), self.trunc if trunc is None else trunc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalBundle):
            return NotImplemented

        if self.rank != other.rank:
            return False

        left, right = _common(self, other)
        return left.chern == right.chern

    def __hash__(self) -> int:
        return hash(self.rank)

    def __str__(self) -> str:
        if not self.chern:
            return f"bundle({self.rank})"

        return f"bundle({self.rank}; " + ", ".join(str(c) for c in self.chern) + ")"

    def __repr__(self) -> str:
        return f"FormalBundle({self})"


def _common(*bundles: FormalBundle) -> List[FormalBundle]:
    """Re-express bundles over one table and the smallest truncation order."""
    table = bundles[0].table
    for bundle in bundles[1:]:
        table = table.merge(bundle.table)

    trunc = min(bundle.trunc for bundle in bundles)
    return [bundle.embed(table).truncate(trunc) for bundle in bundles]


def _line(t: Union[LineClass, GradedPoly, ScalarLike], table: VariableTable) -> GradedPoly:
    if isinstance(t, LineClass):
        t = t.c1

    if is_scalar(t):
        if t != 0:
            raise ValueError(f"A line class must have degree 1, got the scalar {t}.")

        return GradedPoly.zero(table)

    return LineClass(t).c1


def _check_rank(rank: int, max_roots: int) -> None:
    if rank > max_roots:
        raise GuardError(f"Resulting rank {rank} exceeds the guard of {max_roots} Chern roots.")


def chern_character(bundle: FormalBundle, trunc: Optional[int] = None) -> Series:
    """ch_0..ch_D with ch_0 = rank."""
    return bundle.character(trunc)


def chern_from_character(character: Sequence[GradedPoly], rank: int, trunc: int, exact: bool = True) -> FormalBundle:
    if character[0] != rank:
        raise ValueError(f"ch_0 = {character[0]} does not match the rank {rank}.")

    table = character[0].table
    for ch in character:
        table = table.merge(ch.table)

    character = [ch.embed(table) for ch in character]
    return FormalBundle.from_total(rank, chern_from_character_series(character, trunc), trunc, exact=exact)


def dual(bundle: FormalBundle) -> FormalBundle:
    return FormalBundle(
        bundle.rank,
        [c * (-1) ** i for i, c in enumerate(bundle.chern, start=1)],
        trunc=bundle.trunc,
        table=bundle.table,
        exact=bundle.exact,
    )


def twist(bundle: FormalBundle, t: Union[LineClass, GradedPoly, ScalarLike]) -> FormalBundle:
    """bundle (x) L with c_1(L) = t; every root x_i becomes x_i + t."""
    c1 = _line(t, bundle.table)
    table = bundle.table.merge(c1.table)
    bundle = bundle.embed(table)
    classes = twist_chern(bundle.rank, bundle.total(), c1.embed(table), bundle.trunc)
    return FormalBundle.from_total(bundle.rank, classes, bundle.trunc, exact=bundle.exact)


def direct_sum(*bundles: FormalBundle) -> FormalBundle:
    bundles = _common(*bundles)
    trunc = bundles[0].trunc
    total = one_series(bundles[0].table, trunc)
    for bundle in bundles:
        total = series_multiply(total, bundle.total(), trunc)

    return FormalBundle.from_total(sum(b.rank for b in bundles), total, trunc, exact=all(b.exact for b in bundles))


def tensor(left: FormalBundle, right: FormalBundle, max_roots: int = MAX_ROOTS) -> FormalBundle:
    left, right = _common(left, right)
    rank = left.rank * right.rank
    _check_rank(rank, max_roots)
    character = series_multiply(left.character(), right.character(), left.trunc)
    return chern_from_character(character, rank, left.trunc, exact=left.exact and right.exact)


def _schur_power(bundle: FormalBundle, k: int, alternating: bool, max_roots: int) -> FormalBundle:
    rank = comb(bundle.rank, k) if alternating else comb(bundle.rank + k - 1, k)
    _check_rank(rank, max_roots)
    trunc = bundle.trunc
    character = bundle.character()
    result = zero_series(bundle.table, trunc)
    for mu in partitions(k):
        term = one_series(bundle.table, trunc)
        for part in mu:
            term = series_multiply(term, adams(character, part), trunc)

        weight = Fraction(sign(mu) if alternating else 1, centralizer_size(mu))
        result = series_add(result, series_scale(term, weight))

    return chern_from_character(result, rank, trunc, exact=bundle.exact)


def sym_power(bundle: FormalBundle, k: int, max_roots: int = MAX_ROOTS) -> FormalBundle:
    if k < 0:
        raise ValueError(f"Symmetric power must be nonnegative, got {k}.")

    return _schur_power(bundle, k, alternating=False, max_roots=max_roots)


def wedge_power(bundle: FormalBundle, k: int, max_roots: int = MAX_ROOTS) -> FormalBundle:
    if not 0 <= k <= bundle.rank:
        raise ValueError(f"Exterior power {k} is out of range for a bundle of rank {bundle.rank}.")

    return _schur_power(bundle, k, alternating=True, max_roots=max_roots)


def determinant(bundle: FormalBundle) -> FormalBundle:
    return FormalBundle(1, [bundle.c(1)], trunc=bundle.trunc, table=bundle.table)


def sequence_quotient(total: FormalBundle, sub: FormalBundle, exact: bool = True) -> FormalBundle:
    """Q in 0 -> sub -> total -> Q -> 0, c(Q) = c(total) / c(sub) by Whitney."""
    if sub.rank > total.rank:
        raise ValueError(f"Subbundle rank {sub.rank} exceeds the rank {total.rank} of the total bundle.")

    total, sub = _common(total, sub)
    trunc = total.trunc
    classes = series_multiply(total.total(), series_inverse(sub.total(), trunc), trunc)
    rank = total.rank - sub.rank
    if exact:
        excess = [i for i in range(rank + 1, trunc + 1) if not classes[i].is_zero()]
        if excess:
            raise InconsistencyError(
                f"c(total)/c(sub) has nonzero classes in degrees {excess} above the quotient rank {rank}: "
                + ", ".join(f"c_{i} = {classes[i]}" for i in excess)
            )

    return FormalBundle.from_total(rank, classes, trunc, exact=exact)


def residual_classes(total: FormalBundle, sub: FormalBundle) -> List[GradedPoly]:
    """Degrees above the quotient rank of c(total)/c(sub); all zero when the sequence can be exact."""
    quotient = sequence_quotient(total, sub, exact=False)
    return [quotient.c(i) for i in range(quotient.rank + 1, quotient.trunc + 1)]


def todd_class(bundle: FormalBundle, trunc: Optional[int] = None) -> Series:
    trunc = bundle.trunc if trunc is None else trunc
    return todd_from_power_sums(power_sums_from_chern(bundle.total(), trunc), trunc)


def line_bundle(t: Union[LineClass, GradedPoly], trunc: int = DEFAULT_TRUNC) -> FormalBundle:
    c1 = _line(t, EMPTY_TABLE)
    return FormalBundle(1, [c1], trunc=trunc, table=c1.table)


def line_chern_character(t: Union[LineClass, GradedPoly], trunc: int = DEFAULT_TRUNC) -> Series:
    return line_character(_line(t, EMPTY_TABLE), trunc)
