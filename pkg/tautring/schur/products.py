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
Schur functors of GL(n): dimensions, tableau counts, Kostka numbers,
Littlewood-Richardson products and the decomposition of Sym^2(wedge^2 C^n).
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, factorial
from typing import Dict, Iterator, List, Mapping, Tuple

import lrcalc

from ..algebra import GuardError, InconsistencyError
from .partition import (
    MAX_PARTITION_SIZE,
    Partition,
    check_size,
    horizontal_strips,
    partitions,
)


MAX_VARIABLES = 12


class SchurDecomposition:
    """A multiset of Schur functors, sum of multiplicity * S_lambda."""

    def __init__(self, terms: Mapping[Partition, int]):
        self._terms = {p: int(m) for p, m in terms.items() if m}
        for partition, multiplicity in self._terms.items():
            if multiplicity < 1:
                raise ValueError(f"Multiplicity of {partition} is {multiplicity}, must be positive.")

    def items(self) -> List[Tuple[Partition, int]]:
        return sorted(self._terms.items(), key=lambda item: (item[0].size, item[0].parts), reverse=True)

    def multiplicity(self, partition: Partition) -> int:
        return self._terms.get(partition, 0)

    def partitions(self) -> List[Partition]:
        return [p for p, _ in self.items()]

    def dimension(self, n: int) -> int:
        return sum(m * dim_schur(p, n) for p, m in self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SchurDecomposition):
            return self._terms == other._terms

        if isinstance(other, Mapping):
            return self._terms == {Partition.of(*p) if isinstance(p, tuple) else p: m for p, m in other.items()}

        return NotImplemented

    def __str__(self) -> str:
        if not self._terms:
            return "0"

        return " + ".join(f"s{p}" if m == 1 else f"{m}*s{p}" for p, m in self.items())

    def __repr__(self) -> str:
        return f"SchurDecomposition({self})"


def dim_schur(partition: Partition, n: int) -> int:
    """dim S_lambda(C^n) by the hook content formula."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}.")

    if len(partition) > n:
        return 0

    result = Fraction(1)
    for i, j in partition.cells():
        result *= Fraction(n + j - i, partition.hook_length(i, j))

    return int(result)


def syt_count(partition: Partition) -> int:
    """Number of standard Young tableaux by the hook length formula."""
    check_size(partition.size)
    hooks = 1
    for i, j in partition.cells():
        hooks *= partition.hook_length(i, j)

    return factorial(partition.size) // hooks


def standard_tableaux(partition: Partition) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Every standard Young tableau, built by placing 1..n into addable corners."""
    check_size(partition.size)
    rows = [[] for _ in range(len(partition))]

    def place(entry: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
        if entry > partition.size:
            yield tuple(tuple(row) for row in rows)
            return

        for i, row in enumerate(rows):
            fits_row = len(row) < partition[i]
            fits_column = i == 0 or len(rows[i - 1]) > len(row)
            if fits_row and fits_column:
                row.append(entry)
                yield from place(entry + 1)
                row.pop()

    yield from place(1)


@lru_cache(maxsize=None)
def kostka(shape: Partition, content: Tuple[int, ...]) -> int:
    """Semistandard tableaux of the given shape and content, by peeling the largest label as a horizontal strip."""
    if sum(content) != shape.size:
        return 0

    if not content:
        return 1 if shape.size == 0 else 0

    *rest, last = content
    return sum(kostka(inner, tuple(rest)) for inner in horizontal_strips(shape, last))


def schur_to_monomial(partition: Partition, n: int) -> Dict[Partition, int]:
    """Monomial expansion of s_lambda(x_1..x_n): K_{lambda,mu} for mu of length <= n."""
    check_size(partition.size)
    return {
        mu: kostka(partition, mu.parts)
        for mu in partitions(partition.size, max_length=n)
        if kostka(partition, mu.parts)
    }


def schur_expand(monomial_coefficients: Mapping[Partition, int], n: int) -> SchurDecomposition:
    """Rewrite a symmetric polynomial (coefficients of m_mu) in the Schur basis by leading-term subtraction."""
    remaining = Counter({mu: c for mu, c in monomial_coefficients.items() if c})
    terms: Dict[Partition, int] = {}
    while remaining:
        leading = max(remaining, key=lambda mu: (mu.size, mu.parts))
        coefficient = remaining[leading]
        if coefficient < 0:
            raise InconsistencyError(f"Negative Schur multiplicity {coefficient} for {leading}.")

        terms[leading] = coefficient
        for mu, k in schur_to_monomial(leading, n).items():
            remaining[mu] -= coefficient * k
            if remaining[mu] == 0:
                del remaining[mu]

    return SchurDecomposition(terms)


def lr_product(left: Partition, right: Partition, max_size: int = MAX_PARTITION_SIZE) -> SchurDecomposition:
    """s_lambda * s_mu through liblrcalc."""
    check_size(left.size + right.size, max_size)
    product = lrcalc.mult(list(left.parts), list(right.parts))
    return SchurDecomposition({Partition.of(*shape): k for shape, k in product.items()})


def lr_coefficient(left: Partition, right: Partition, outer: Partition) -> int:
    if outer.size != left.size + right.size:
        return 0

    return lrcalc.lrcoef(list(outer.parts), list(left.parts), list(right.parts))


def sym2_wedge2_monomials(n: int) -> Dict[Partition, int]:
    """Monomial coefficients of h_2[e_2](x_1..x_n): products of two (possibly equal) pairs x_i x_j, i < j."""
    if n > MAX_VARIABLES:
        raise GuardError(f"{n} variables exceeds the guard of {MAX_VARIABLES}.")

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    coefficients: Counter = Counter()
    for first, second in combinations_with_replacement(pairs, 2):
        exponents = [0] * n
        for index in first + second:
            exponents[index] += 1

        # only dominant monomials are needed for the m_mu coefficients
        if all(a >= b for a, b in zip(exponents, exponents[1:])):
            coefficients[Partition.of(*exponents)] += 1

    return dict(coefficients)


def decompose_sym2_wedge2(n: int) -> SchurDecomposition:
    """Sym^2(wedge^2 C^n) as a GL(n)-representation; S_(2,2) + S_(1,1,1,1) for n >= 4."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}.")

    decomposition = schur_expand(sym2_wedge2_monomials(n), n)
    expected = comb(comb(n, 2) + 1, 2)
    if decomposition.dimension(n) != expected:
        raise InconsistencyError(
            f"Sym^2(wedge^2 C^{n}) decomposes into dimension {decomposition.dimension(n)} != {expected}."
        )

    return decomposition
