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
Integer partitions and the combinatorics attached to Young diagrams.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, List, Optional, Tuple

from ..algebra import GuardError


MAX_PARTITION_SIZE = 12


def check_size(size: int, limit: int = MAX_PARTITION_SIZE) -> None:
    if size > limit:
        raise GuardError(f"Partition size {size} exceeds the guard of {limit}.")


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...]
    """weakly decreasing positive integers"""

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"Partition parts must be positive, got {parts}.")

        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"Partition parts must be weakly decreasing, got {parts}.")

        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Build from parts in any order, dropping zeros."""
        return cls(tuple(sorted((p for p in parts if p), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self

        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def cells(self) -> Iterator[Tuple[int, int]]:
        for i, part in enumerate(self.parts):
            for j in range(part):
                yield i, j

    def hook_length(self, i: int, j: int) -> int:
        return self[i] - j + self.conjugate()[j] - i - 1

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(self[i] >= p for i, p in enumerate(other.parts))

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self) -> str:
        return f"Partition{self}"


def partitions(
    n: int, max_part: Optional[int] = None, max_length: Optional[int] = None
) -> Iterator[Partition]:
    """Partitions of n in lexicographically descending order."""
    if max_part is None:
        max_part = n

    def build(remaining: int, bound: int, length: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return

        if max_length is not None and length == max_length:
            return

        for part in range(min(remaining, bound), 0, -1):
            for tail in build(remaining - part, part, length + 1):
                yield (part,) + tail

    for parts in build(n, max_part, 0):
        yield Partition(parts)


def partitions_in_box(rows: int, cols: int) -> List[Partition]:
    return [p for size in range(rows * cols + 1) for p in partitions(size, max_part=cols, max_length=rows)]


def centralizer_size(mu: Partition) -> int:
    """z_mu = prod_i i^{m_i} m_i!, the order of the centralizer of a permutation of cycle type mu."""
    result = 1
    for part, count in mu.multiplicities().items():
        result *= part**count * factorial(count)

    return result


def sign(mu: Partition) -> int:
    return -1 if (mu.size - len(mu)) % 2 else 1


@lru_cache(maxsize=None)
def horizontal_strips(outer: Partition, size: int) -> Tuple[Partition, ...]:
    """All inner partitions nu with outer/nu a horizontal strip of the given size."""

    def build(row: int, remaining: int) -> Iterator[Tuple[int, ...]]:
        if row == len(outer):
            if remaining == 0:
                yield ()
            return

        # nu_row lies between outer_{row+1} and outer_row
        low = outer[row + 1]
        for removed in range(min(remaining, outer[row] - low), -1, -1):
            for tail in build(row + 1, remaining - removed):
                yield (outer[row] - removed,) + tail

    return tuple(Partition.of(*parts) for parts in build(0, size))
