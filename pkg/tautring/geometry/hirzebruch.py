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
Divisor classes on the Hirzebruch surface F_n = P(O + O(n)).

Classes are written aE + bF where E is the negative section (E^2 = -n) and F
the fiber. The section S = E + nF does not meet E and has S^2 = n.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from ..algebra import GuardError, ScalarLike, as_integer, format_scalar, to_scalar


@dataclass(frozen=True)
class HirzebruchClass:
    n: int
    """the surface F_n"""
    a: Fraction
    """coefficient of E"""
    b: Fraction
    """coefficient of F"""

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Hirzebruch index must be nonnegative, got {self.n}.")

        object.__setattr__(self, "a", to_scalar(self.a))
        object.__setattr__(self, "b", to_scalar(self.b))

    @classmethod
    def E(cls, n: int) -> "HirzebruchClass":
        return cls(n, 1, 0)

    @classmethod
    def F(cls, n: int) -> "HirzebruchClass":
        return cls(n, 0, 1)

    @classmethod
    def S(cls, n: int) -> "HirzebruchClass":
        return cls(n, 1, n)

    @classmethod
    def canonical(cls, n: int) -> "HirzebruchClass":
        return cls(n, -2, -(n + 2))

    @classmethod
    def trigonal_curve(cls, n: int, k: ScalarLike) -> "HirzebruchClass":
        """3S + kF."""
        return 3 * cls.S(n) + to_scalar(k) * cls.F(n)

    def _check(self, other: "HirzebruchClass") -> None:
        if self.n != other.n:
            raise ValueError(f"Classes live on different surfaces F_{self.n} and F_{other.n}.")

    def __add__(self, other: "HirzebruchClass") -> "HirzebruchClass":
        self._check(other)
        return HirzebruchClass(self.n, self.a + other.a, self.b + other.b)

    def __neg__(self) -> "HirzebruchClass":
        return HirzebruchClass(self.n, -self.a, -self.b)

    def __sub__(self, other: "HirzebruchClass") -> "HirzebruchClass":
        return self + (-other)

    def __mul__(self, scale: ScalarLike) -> "HirzebruchClass":
        scale = to_scalar(scale)
        return HirzebruchClass(self.n, self.a * scale, self.b * scale)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{format_scalar(self.a)}*E + {format_scalar(self.b)}*F on F[{self.n}]"


def intersect(x: HirzebruchClass, y: HirzebruchClass) -> Fraction:
    """E^2 = -n, E.F = 1, F^2 = 0."""
    x._check(y)
    return -x.n * x.a * y.a + x.a * y.b + x.b * y.a


def genus_of_class(c: HirzebruchClass) -> Fraction:
    """Arithmetic genus by adjunction: 2g - 2 = C.(C + K)."""
    return 1 + intersect(c, c + HirzebruchClass.canonical(c.n)) / 2


def h0_hirzebruch(c: HirzebruchClass) -> int:
    """h^0(O(aE + bF)) = sum_{j=0}^{a} max(0, b - jn + 1) for a >= 0."""
    if c.a < 0:
        raise GuardError(f"h0 is only computed for classes with a >= 0, got {c}.")

    a, b = as_integer(c.a), as_integer(c.b)
    return sum(max(0, b - j * c.n + 1) for j in range(a + 1))


def aut_dim(n: int) -> int:
    """dim Aut(F_n): PGL2 x PGL2 for n = 0, n + 5 otherwise."""
    return 6 if n == 0 else n + 5


def maroni_k(g: int, n: int) -> Fraction:
    """The k with genus_of_class(3S + kF) = g on F_n; non-integral exactly when n and g have different parity."""
    at_zero = genus_of_class(HirzebruchClass.trigonal_curve(n, 0))
    slope = genus_of_class(HirzebruchClass.trigonal_curve(n, 1)) - at_zero
    return (g - at_zero) / slope


def admissible_maroni(g: int) -> List[int]:
    """Maroni invariants n with n = g mod 2 and n <= (g + 2) / 3."""
    return [n for n in range(0, (g + 2) // 3 + 1) if (g - n) % 2 == 0]
