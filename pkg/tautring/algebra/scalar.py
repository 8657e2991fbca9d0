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
Exact rational scalars. Values are handed out as `fractions.Fraction`; the
polynomial and matrix kernels store them as elements of sympy's field QQ.
"""

from fractions import Fraction
from numbers import Rational
from typing import Any, Union

from sympy import QQ
from sympy import Rational as SympyRational


RationalScalar = Fraction

ScalarLike = Union[int, Fraction, str]


def to_scalar(value: ScalarLike) -> Fraction:
    """Convert an int, a Fraction, a sympy rational or a string like `"36864/113"` to a reduced Fraction."""
    if isinstance(value, bool):
        raise TypeError("Booleans are not scalars.")

    if isinstance(value, Fraction):
        return value

    if isinstance(value, int):
        return Fraction(value)

    if isinstance(value, SympyRational):
        return Fraction(int(value.p), int(value.q))

    if QQ.of_type(value) or isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))

    if isinstance(value, str):
        return Fraction(value.replace(" ", ""))

    raise TypeError(f"Cannot convert {type(value).__name__} to an exact rational.")


def to_qq(value: ScalarLike) -> Any:
    value = to_scalar(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def format_scalar(value: Fraction) -> str:
    """Print as `p` or `p/q`, never as a float."""
    value = to_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator}"


def as_integer(value: Fraction) -> int:
    value = to_scalar(value)
    if value.denominator != 1:
        raise ValueError(f"{format_scalar(value)} is not an integer.")

    return value.numerator
