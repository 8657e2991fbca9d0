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
Weighted multivariate polynomials with exact rational coefficients.

Arithmetic is done by sympy's sparse polynomial rings over QQ: a
`VariableTable` names the generators of `QQ[names]` and gives every one a
positive integer weight; the degree of a monomial is the weighted sum of its
exponents.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from .errors import TableMismatchError
from .scalar import ScalarLike, format_scalar, from_qq, is_scalar, to_qq, to_scalar


Exponents = Tuple[int, ...]


@dataclass(frozen=True)
class VariableTable:
    names: Tuple[str, ...]
    """ordered variable identifiers"""
    weights: Tuple[int, ...]
    """positive integer degree per variable"""

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.names) != len(self.weights):
            raise ValueError(f"Got {len(self.names)} names but {len(self.weights)} weights.")

        if len(set(self.names)) != len(self.names):
            raise ValueError(f"Variable names must be unique, got {self.names}.")

        for name, weight in zip(self.names, self.weights):
            if weight < 1:
                raise ValueError(f"Variable {name} has weight {weight}, weights must be >= 1.")

    @cached_property
    def ring(self) -> PolyRing:
        """QQ[names] in lex order."""
        return PolyRing(self.names, QQ, lex)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[str, int]]) -> "VariableTable":
        pairs = list(pairs)
        return cls(tuple(name for name, _ in pairs), tuple(weight for _, weight in pairs))

    @classmethod
    def graded_family(cls, prefix: str, count: int, start: int = 1) -> "VariableTable":
        """Variables `prefix{i}` of weight i, e.g. k1..k4 or v1..v5."""
        return cls.from_pairs((f"{prefix}{i}", i) for i in range(start, start + count))

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self.names

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"Variable {name} is not in {self.names}.") from None

    def weight_of(self, name: str) -> int:
        return self.weights[self.index(name)]

    def degree(self, exponents: Exponents) -> int:
        return sum(e * w for e, w in zip(exponents, self.weights))

    def merge(self, other: "VariableTable") -> "VariableTable":
        """Union of two tables, keeping the order of `self` and appending new names of `other`."""
        if other == self:
            return self

        pairs = list(zip(self.names, self.weights))
        for name, weight in zip(other.names, other.weights):
            if name in self:
                if self.weight_of(name) != weight:
                    raise TableMismatchError(
                        f"Variable {name} has weight {self.weight_of(name)} and {weight} in the two tables."
                    )
            else:
                pairs.append((name, weight))

        return VariableTable.from_pairs(pairs)

    def describe(self) -> str:
        return ", ".join(f"{name}:{weight}" for name, weight in zip(self.names, self.weights))


@lru_cache(maxsize=None)
def monomial_basis(table: VariableTable, d: int) -> Tuple[Exponents, ...]:
    """All monomials of weighted degree exactly `d`, lexicographically descending.

    For {k1:1, k2:2} and d=4 this is (k1^4, k1^2*k2, k2^2).
    """
    if d < 0:
        raise ValueError(f"Degree must be nonnegative, got {d}.")

    def fill(position: int, remaining: int) -> Iterator[Exponents]:
        if position == len(table):
            if remaining == 0:
                yield ()
            return

        weight = table.weights[position]
        for exponent in range(remaining // weight, -1, -1):
            for tail in fill(position + 1, remaining - exponent * weight):
                yield (exponent,) + tail

    return tuple(fill(0, d))


def _sort_key(table: VariableTable, exponents: Exponents) -> Tuple[int, Exponents]:
    return (table.degree(exponents), exponents)


class GradedPoly:
    """Immutable polynomial over a `VariableTable`, stored as an element of `table.ring`."""

    __slots__ = ("_table", "_element", "_hash")

    def __init__(self, table: VariableTable, terms: Optional[Mapping[Exponents, ScalarLike]] = None):
        collected: Dict[Exponents, Fraction] = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != len(table):
                raise ValueError(f"Exponent vector {exponents} does not match table of size {len(table)}.")

            if any(e < 0 for e in exponents):
                raise ValueError(f"Negative exponent in {exponents}.")

            collected[exponents] = collected.get(exponents, Fraction(0)) + to_scalar(coefficient)

        self._table = table
        self._element = table.ring.from_dict({e: to_qq(c) for e, c in collected.items() if c})
        self._hash = None

    @classmethod
    def from_element(cls, table: VariableTable, element: PolyElement) -> "GradedPoly":
        """Wrap an element of `table.ring` without copying."""
        if element.ring != table.ring:
            raise TableMismatchError(f"Element of {element.ring} does not belong to [{table.describe()}].")

        poly = cls.__new__(cls)
        poly._table = table
        poly._element = element
        poly._hash = None
        return poly

    # constructors

    @classmethod
    def zero(cls, table: VariableTable) -> "GradedPoly":
        return cls.from_element(table, table.ring.zero)

    @classmethod
    def constant(cls, table: VariableTable, value: ScalarLike) -> "GradedPoly":
        return cls.from_element(table, table.ring.ground_new(to_qq(value)))

    @classmethod
    def variable(cls, table: VariableTable, name: str) -> "GradedPoly":
        return cls.from_element(table, table.ring.gens[table.index(name)])

    @classmethod
    def monomial(cls, table: VariableTable, exponents: Exponents, coefficient: ScalarLike = 1) -> "GradedPoly":
        return cls(table, {tuple(exponents): coefficient})

    @classmethod
    def from_vector(
        cls, table: VariableTable, basis: Sequence[Exponents], vector: Sequence[ScalarLike]
    ) -> "GradedPoly":
        return cls(table, dict(zip(basis, vector)))

    # accessors

    @property
    def table(self) -> VariableTable:
        return self._table

    @property
    def element(self) -> PolyElement:
        return self._element

    @property
    def terms(self) -> Dict[Exponents, Fraction]:
        return {exponents: from_qq(coefficient) for exponents, coefficient in self._element.iterterms()}

    def items(self) -> List[Tuple[Exponents, Fraction]]:
        """Terms in graded-lex descending order."""
        return sorted(self.terms.items(), key=lambda item: _sort_key(self._table, item[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._element

    def __bool__(self) -> bool:
        return bool(self._element)

    def __len__(self) -> int:
        return len(self._element)

    def degrees(self) -> List[int]:
        return sorted({self._table.degree(e) for e in self._element.itermonoms()})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> Optional[int]:
        """Degree of a homogeneous polynomial, None for zero."""
        degrees = self.degrees()
        if not degrees:
            return None

        if len(degrees) > 1:
            raise ValueError(f"{self} is not homogeneous, it has degrees {degrees}.")

        return degrees[0]

    def homogeneous_component(self, d: int) -> "GradedPoly":
        ring = self._table.ring
        kept = ring.from_dict({e: c for e, c in self._element.iterterms() if self._table.degree(e) == d})
        return GradedPoly.from_element(self._table, kept)

    def coefficient(self, exponents: Union[Exponents, Mapping[str, int]]) -> Fraction:
        if isinstance(exponents, Mapping):
            vector = [0] * len(self._table)
            for name, power in exponents.items():
                vector[self._table.index(name)] = power

            exponents = tuple(vector)

        coefficient = self._element.get(tuple(exponents))
        return Fraction(0) if coefficient is None else from_qq(coefficient)

    def constant_term(self) -> Fraction:
        return from_qq(self._element.coeff(1))

    def is_constant(self) -> bool:
        return self._element.is_ground

    def to_vector(self, basis: Sequence[Exponents]) -> List[Fraction]:
        index = {exponents: i for i, exponents in enumerate(basis)}
        vector = [Fraction(0)] * len(basis)
        for exponents, coefficient in self._element.iterterms():
            if exponents not in index:
                raise ValueError(f"Monomial {exponents} is not in the supplied basis.")

            vector[index[exponents]] = from_qq(coefficient)

        return vector

    def variables_used(self) -> List[str]:
        used = set()
        for exponents in self._element.itermonoms():
            used.update(i for i, e in enumerate(exponents) if e)

        return [self._table.names[i] for i in sorted(used)]

    # arithmetic

    def _coerce(self, other) -> "GradedPoly":
        if isinstance(other, GradedPoly):
            if other._table != self._table:
                raise TableMismatchError(
                    f"Cannot combine polynomials over [{self._table.describe()}] and [{other._table.describe()}]."
                )

            return other

        if is_scalar(other):
            return GradedPoly.constant(self._table, other)

        return NotImplemented

    def _wrap(self, element: PolyElement) -> "GradedPoly":
        return GradedPoly.from_element(self._table, element)

    def __add__(self, other) -> "GradedPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented

        return self._wrap(self._element + other._element)

    __radd__ = __add__

    def __neg__(self) -> "GradedPoly":
        return self._wrap(-self._element)

    def __sub__(self, other) -> "GradedPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented

        return self._wrap(self._element - other._element)

    def __rsub__(self, other) -> "GradedPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented

        return other - self

    def __mul__(self, other) -> "GradedPoly":
        if is_scalar(other):
            return self._wrap(self._element.mul_ground(to_qq(other)))

        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented

        return self._wrap(self._element * other._element)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GradedPoly":
        if not is_scalar(other):
            return NotImplemented

        if other == 0:
            raise ZeroDivisionError("Polynomial division by zero.")

        return self._wrap(self._element.quo_ground(to_qq(other)))

    def __pow__(self, exponent: int) -> "GradedPoly":
        if not isinstance(exponent, int) or isinstance(exponent, bool) or exponent < 0:
            raise ValueError(f"Only nonnegative integer powers are supported, got {exponent}.")

        return self._wrap(self._element**exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedPoly):
            return self._table == other._table and dict.__eq__(self._element, other._element)

        if is_scalar(other):
            return self == GradedPoly.constant(self._table, other)

        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._table, frozenset(self.terms.items())))

        return self._hash

    # transformations

    def embed(self, table: VariableTable) -> "GradedPoly":
        """Re-express over a table that contains every variable of this one (matched by name)."""
        if table == self._table:
            return self

        for name, weight in zip(self._table.names, self._table.weights):
            if name not in table:
                raise TableMismatchError(f"Variable {name} is missing from [{table.describe()}].")

            if table.weight_of(name) != weight:
                raise TableMismatchError(f"Variable {name} changes weight from {weight} to {table.weight_of(name)}.")

        return GradedPoly.from_element(table, self._element.set_ring(table.ring))

    def substitute(self, values: Mapping[str, Union["GradedPoly", ScalarLike]]) -> "GradedPoly":
        """Replace variables by polynomials (or scalars) at once; the result lives over the merged table."""
        table = self._table
        for value in values.values():
            if isinstance(value, GradedPoly):
                table = table.merge(value.table)

        ring = table.ring
        replacements = []
        for name, value in values.items():
            self._table.index(name)
            generator = ring.gens[table.index(name)]
            if isinstance(value, GradedPoly):
                replacements.append((generator, value.embed(table).element))
            else:
                replacements.append((generator, ring.ground_new(to_qq(value))))

        element = self.embed(table).element
        if replacements:
            element = element.compose(replacements)

        return GradedPoly.from_element(table, element)

    # printing

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"GradedPoly({format_poly(self)!r})"


def format_monomial(table: VariableTable, exponents: Exponents) -> str:
    factors = []
    for name, exponent in zip(table.names, exponents):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append(f"{name}^{exponent}")

    return "*".join(factors)


def format_poly(poly: GradedPoly) -> str:
    """Print as e.g. `127 * k1^3 - 2304 * k1*k2`, rationals as p/q. The output re-parses to the same value."""
    if poly.is_zero():
        return "0"

    pieces = []
    for exponents, coefficient in poly.items():
        monomial = format_monomial(poly.table, exponents)
        if not monomial:
            text = format_scalar(coefficient)
        elif coefficient == 1:
            text = monomial
        elif coefficient == -1:
            text = f"-{monomial}"
        else:
            text = f"{format_scalar(coefficient)} * {monomial}"

        if not pieces:
            pieces.append(text)
        elif text.startswith("-"):
            pieces.append(f"- {text[1:]}")
        else:
            pieces.append(f"+ {text}")

    return " ".join(pieces)


def poly_arith(a: GradedPoly, b: GradedPoly, op: str) -> GradedPoly:
    """Exact `add` or `mul` of two polynomials over the same table."""
    if a.table != b.table:
        raise TableMismatchError(f"Cannot {op} polynomials over [{a.table.describe()}] and [{b.table.describe()}].")

    if op == "add":
        return a + b
    elif op == "mul":
        return a * b
    else:
        raise ValueError(f"Unknown polynomial operation: {op}.")


def unify(*polys: GradedPoly) -> Tuple[GradedPoly, ...]:
    """Embed all polynomials into the union of their tables."""
    table = polys[0].table
    for poly in polys[1:]:
        table = table.merge(poly.table)

    return tuple(poly.embed(table) for poly in polys)
