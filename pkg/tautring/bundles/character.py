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
Truncated graded power series and the symmetric-function identities behind
the splitting principle.

A series is a list `s[0..D]` of GradedPoly with `s[d]` homogeneous of degree d.
Chern classes are elementary symmetric functions of the Chern roots, the
Chern character collects their power sums: `ch_k = p_k / k!`. Newton's
identities move between the two.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List, Sequence, Tuple

from sympy import bernoulli

from ..algebra import GradedPoly, VariableTable, to_scalar


Series = List[GradedPoly]


def zero_series(table: VariableTable, trunc: int) -> Series:
    return [GradedPoly.zero(table) for _ in range(trunc + 1)]


def one_series(table: VariableTable, trunc: int) -> Series:
    series = zero_series(table, trunc)
    series[0] = GradedPoly.constant(table, 1)
    return series


def series_add(a: Sequence[GradedPoly], b: Sequence[GradedPoly]) -> Series:
    return [x + y for x, y in zip(a, b)]


def series_scale(a: Sequence[GradedPoly], scale) -> Series:
    return [x * scale for x in a]


def series_multiply(a: Sequence[GradedPoly], b: Sequence[GradedPoly], trunc: int) -> Series:
    table = a[0].table
    result = zero_series(table, trunc)
    for i in range(min(len(a), trunc + 1)):
        if a[i].is_zero():
            continue

        for j in range(min(len(b), trunc + 1 - i)):
            if not b[j].is_zero():
                result[i + j] = result[i + j] + a[i] * b[j]

    return result


def series_inverse(a: Sequence[GradedPoly], trunc: int) -> Series:
    """Inverse of a series with constant term 1."""
    if a[0] != 1:
        raise ValueError(f"Only series with constant term 1 can be inverted, got {a[0]}.")

    table = a[0].table
    inverse = one_series(table, trunc)
    for n in range(1, trunc + 1):
        total = GradedPoly.zero(table)
        for i in range(1, min(n, len(a) - 1) + 1):
            total = total + a[i] * inverse[n - i]

        inverse[n] = -total

    return inverse


def series_exp(a: Sequence[GradedPoly], trunc: int) -> Series:
    """exp of a series without constant term."""
    if not a[0].is_zero():
        raise ValueError("exp is only taken of series with zero constant term.")

    table = a[0].table
    result = one_series(table, trunc)
    term = one_series(table, trunc)
    for n in range(1, trunc + 1):
        term = series_scale(series_multiply(term, a, trunc), Fraction(1, n))
        result = series_add(result, term)

    return result


def power_sums_from_chern(chern: Sequence[GradedPoly], trunc: int) -> Series:
    """p_0..p_D (p_0 left zero) from c_0..c_D by Newton's identities.

    p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-2} e_{k-1} p_1 + (-1)^{k-1} k e_k
    """
    table = chern[0].table
    power = zero_series(table, trunc)
    for k in range(1, trunc + 1):
        total = chern[k] * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            total = total + chern[i] * power[k - i] * (-1) ** (i - 1)

        power[k] = total

    return power


def chern_from_power_sums(power: Sequence[GradedPoly], trunc: int) -> Series:
    """c_0..c_D from p_1..p_D: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i."""
    table = power[0].table
    chern = one_series(table, trunc)
    for k in range(1, trunc + 1):
        total = GradedPoly.zero(table)
        for i in range(1, k + 1):
            total = total + chern[k - i] * power[i] * (-1) ** (i - 1)

        chern[k] = total / k

    return chern


def character_from_chern(rank: int, chern: Sequence[GradedPoly], trunc: int) -> Series:
    power = power_sums_from_chern(chern, trunc)
    character = [p / factorial(k) for k, p in enumerate(power)]
    character[0] = GradedPoly.constant(chern[0].table, rank)
    return character


def chern_from_character_series(character: Sequence[GradedPoly], trunc: int) -> Series:
    power = [ch * factorial(k) for k, ch in enumerate(character[: trunc + 1])]
    return chern_from_power_sums(power, trunc)


def adams(character: Sequence[GradedPoly], j: int) -> Series:
    """psi^j on a Chern character: every root x becomes j x."""
    return [ch * Fraction(j) ** k for k, ch in enumerate(character)]


def line_character(c1: GradedPoly, trunc: int) -> Series:
    """1 + x + x^2/2 + ... for a line bundle with first Chern class x."""
    return [c1**k / factorial(k) for k in range(trunc + 1)]


def twist_chern(rank: int, chern: Sequence[GradedPoly], t: GradedPoly, trunc: int) -> Series:
    """c_k(E (x) L) = sum_i C(r - i, k - i) c_i(E) t^(k - i)."""
    table = chern[0].table
    result = zero_series(table, trunc)
    for k in range(trunc + 1):
        total = GradedPoly.zero(table)
        for i in range(k + 1):
            coefficient = comb(rank - i, k - i) if rank >= i else 0
            if coefficient:
                total = total + chern[i] * t ** (k - i) * coefficient

        result[k] = total

    return result


@lru_cache(maxsize=None)
def bernoulli_numbers(count: int) -> Tuple[Fraction, ...]:
    """B_0..B_{count-1} with B_1 = -1/2; sympy's `bernoulli(1)` is +1/2."""
    return tuple(Fraction(-1, 2) if m == 1 else to_scalar(bernoulli(m)) for m in range(count))


def todd_log_coefficients(trunc: int) -> List[Fraction]:
    """Coefficients a_k with log(x / (1 - e^{-x})) = sum_k a_k x^k."""
    bernoulli = bernoulli_numbers(trunc + 1)
    coefficients = [Fraction(0)] * (trunc + 1)
    if trunc >= 1:
        coefficients[1] = Fraction(1, 2)

    for k in range(2, trunc + 1, 2):
        coefficients[k] = -bernoulli[k] / (k * factorial(k))

    return coefficients


def todd_from_power_sums(power: Sequence[GradedPoly], trunc: int) -> Series:
    """Multiplicative Todd class: exp(sum_k a_k p_k)."""
    table = power[0].table
    log_series = zero_series(table, trunc)
    for k, a in enumerate(todd_log_coefficients(trunc)):
        if k and a:
            log_series[k] = power[k] * a

    return series_exp(log_series, trunc)
