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

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from sympy import QQ

from tautring.algebra import (
    ExactMatrix,
    GradedPoly,
    TableMismatchError,
    VariableTable,
    format_scalar,
    from_qq,
    monomial_basis,
    rank,
    row_reduce,
    solve_linear,
    to_qq,
    to_scalar,
    unify,
)


TABLE = VariableTable(("x", "y"), (1, 2))

small_terms = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 2)),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    max_size=4,
)
polys = small_terms.map(lambda terms: GradedPoly(TABLE, terms))


def test_to_scalar_and_format():
    assert to_scalar("36864/113") == Fraction(36864, 113)
    assert to_scalar(3) == Fraction(3)
    assert format_scalar(Fraction(4, 2)) == "2"
    assert format_scalar(Fraction(-7, 3)) == "-7/3"
    with pytest.raises(TypeError):
        to_scalar(True)


def test_monomial_basis_is_lex_descending():
    assert monomial_basis(TABLE, 4) == ((4, 0), (2, 1), (0, 2))
    assert monomial_basis(TABLE, 0) == ((0, 0),)
    assert monomial_basis(TABLE, 1) == ((1, 0),)


def test_degree_and_components():
    x, y = GradedPoly.variable(TABLE, "x"), GradedPoly.variable(TABLE, "y")
    p = x**2 * y + 3 * y + 1
    assert p.degrees() == [0, 2, 4]
    assert not p.is_homogeneous()
    assert p.homogeneous_component(2) == 3 * y
    assert (x * y).degree() == 3
    assert GradedPoly.zero(TABLE).degree() is None
    with pytest.raises(ValueError):
        p.degree()


def test_printing():
    k = VariableTable(("k1", "k2"), (1, 2))
    k1, k2 = GradedPoly.variable(k, "k1"), GradedPoly.variable(k, "k2")
    assert str(127 * k1**3 - 2304 * k1 * k2) == "127 * k1^3 - 2304 * k1*k2"
    assert str(k2**2 * Fraction(36864, 113)) == "36864/113 * k2^2"
    assert str(GradedPoly.zero(k)) == "0"
    assert str(-k1 + 2) == "-k1 + 2"


def test_table_mismatch_and_unify():
    a = GradedPoly.variable(VariableTable(("a",), (1,)), "a")
    b = GradedPoly.variable(VariableTable(("b",), (2,)), "b")
    with pytest.raises(TableMismatchError):
        a + b

    left, right = unify(a, b)
    assert (left * right).degree() == 3
    with pytest.raises(TableMismatchError):
        VariableTable(("a",), (1,)).merge(VariableTable(("a",), (2,)))


def test_substitute():
    x, y = GradedPoly.variable(TABLE, "x"), GradedPoly.variable(TABLE, "y")
    p = x**2 + y
    assert p.substitute({"y": x**2}) == 2 * x**2
    assert p.substitute({"x": 2}) == y + 4


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(polys, st.integers(0, 3), st.integers(0, 3))
def test_power_laws(a, m, n):
    assert a**m * a**n == a ** (m + n)


@given(polys, polys)
def test_degrees_of_products(a, b):
    if a.is_zero() or b.is_zero():
        assert (a * b).is_zero()
    else:
        assert max((a * b).degrees()) == max(a.degrees()) + max(b.degrees())


def test_row_reduce_and_rank():
    m = ExactMatrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    reduction = row_reduce(m)
    assert reduction.rank == 2
    assert reduction.pivot_columns == (0, 1)
    assert rank(ExactMatrix.identity(3)) == 3
    assert rank(ExactMatrix.zeros(2, 2)) == 0


def test_determinant():
    assert ExactMatrix([[2, 1], [1, 1]]).determinant() == 1
    assert ExactMatrix([[0, 1], [1, 0]]).determinant() == -1
    pairing = ExactMatrix([[Fraction(36864, 113), Fraction(2032, 113)], [Fraction(2032, 113), 1]])
    assert pairing.determinant() == Fraction(36608, 12769)


def test_solve_linear():
    m = ExactMatrix([[1, 1], [1, -1]])
    assert solve_linear(m, [3, 1]) == [2, 1]
    assert solve_linear(ExactMatrix([[1, 1], [1, 1]]), [1, 2]) is None


@given(
    st.lists(
        st.lists(st.integers(-4, 4), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
def test_determinant_is_multiplicative(rows):
    m = ExactMatrix(rows)
    assert (m @ m).determinant() == m.determinant() ** 2
    assert m.transpose().determinant() == m.determinant()
    assert (m.determinant() != 0) == (rank(m) == 3)


matrices = st.integers(1, 4).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols), min_size=1, max_size=4)
)


@given(matrices)
def test_row_reduce_is_idempotent(rows):
    reduction = row_reduce(ExactMatrix(rows))
    again = row_reduce(reduction.echelon)
    assert again.echelon == reduction.echelon
    assert (again.rank, again.pivot_columns) == (reduction.rank, reduction.pivot_columns)


@given(matrices.flatmap(lambda rows: st.tuples(st.just(rows), st.permutations(range(len(rows))))))
def test_row_reduce_ignores_row_order(case):
    rows, order = case
    m = ExactMatrix(rows)
    assert row_reduce(m.permute_rows(order)).echelon == row_reduce(m).echelon


def test_qq_conversions():
    assert to_qq(Fraction(-7, 3)) == QQ(-7, 3)
    assert from_qq(QQ(36864, 113)) == Fraction(36864, 113)
    assert to_scalar(sympy.Rational(2, 6)) == Fraction(1, 3)
    assert to_scalar(QQ(5, 10)) == Fraction(1, 2)
