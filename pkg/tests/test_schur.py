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

from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tautring.algebra import GuardError
from tautring.schur import (
    Partition,
    centralizer_size,
    decompose_sym2_wedge2,
    dim_schur,
    kostka,
    lr_coefficient,
    lr_product,
    partitions,
    partitions_in_box,
    sign,
    standard_tableaux,
    syt_count,
)


small_partitions = st.lists(st.integers(1, 3), max_size=2).map(lambda parts: Partition.of(*parts))


def test_partition_basics():
    assert Partition.of(1, 3, 0, 2) == Partition((3, 2, 1))
    assert Partition.of(3, 1).conjugate() == Partition((2, 1, 1))
    assert Partition.of(3, 1).size == 4
    assert str(Partition.of(2, 2)) == "(2,2)"
    assert Partition.of(3, 2).contains(Partition.of(2, 2))
    with pytest.raises(ValueError):
        Partition((1, 2))

    with pytest.raises(ValueError):
        Partition((2, 0))


def test_partitions_are_lex_descending():
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [p.parts for p in partitions(5, max_part=2, max_length=3)] == [(2, 2, 1)]
    assert len(partitions_in_box(2, 2)) == 6
    assert len(partitions_in_box(2, 3)) == comb(5, 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_sum_to_group_order(n):
    assert sum(factorial(n) // centralizer_size(mu) for mu in partitions(n)) == factorial(n)
    assert sum(sign(mu) * factorial(n) // centralizer_size(mu) for mu in partitions(n)) == (1 if n == 1 else 0)


def test_schur_dimensions():
    assert dim_schur(Partition.of(2, 2), 5) == 50
    assert dim_schur(Partition.of(1, 1, 1, 1), 5) == 5
    assert dim_schur(Partition.of(3), 4) == comb(6, 3)
    assert dim_schur(Partition.of(1, 1, 1), 2) == 0
    with pytest.raises(ValueError):
        dim_schur(Partition.of(1), 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_hook_length_counts_match_enumeration(n):
    for shape in partitions(n):
        assert syt_count(shape) == len(list(standard_tableaux(shape)))

    assert sum(syt_count(shape) ** 2 for shape in partitions(n)) == factorial(n)


def test_standard_tableaux_are_standard():
    for tableau in standard_tableaux(Partition.of(3, 2)):
        for row in tableau:
            assert list(row) == sorted(row)

        for upper, lower in zip(tableau, tableau[1:]):
            assert all(a < b for a, b in zip(upper, lower))


def test_kostka_numbers():
    assert kostka(Partition.of(2, 1), (1, 1, 1)) == 2
    assert kostka(Partition.of(3, 2), (2, 2, 1)) == 2
    assert kostka(Partition.of(3, 2), (3, 2)) == 1
    assert kostka(Partition.of(2, 2), (3, 1)) == 0
    assert kostka(Partition.of(2, 1), (2, 2)) == 0


def test_lr_products():
    assert str(lr_product(Partition.of(1, 1), Partition.of(1, 1))) == "s(2,2) + s(2,1,1) + s(1,1,1,1)"
    assert lr_coefficient(Partition.of(2, 1), Partition.of(2, 1), Partition.of(3, 2, 1)) == 2
    assert lr_product(Partition.of(1), Partition.of(1)) == {(2,): 1, (1, 1): 1}
    assert lr_product(Partition.of(), Partition.of(2, 1)) == {(2, 1): 1}
    with pytest.raises(GuardError):
        lr_product(Partition.of(7), Partition.of(6))


@pytest.mark.parametrize("left", [Partition.of(*p) for p in [(), (1,), (2,), (1, 1), (2, 1), (3, 1)]])
@pytest.mark.parametrize("right", [Partition.of(*p) for p in [(1,), (1, 1), (2, 1), (2, 2)]])
def test_lr_coefficients_match_products(left, right):
    product = lr_product(left, right)
    for shape in partitions(left.size + right.size):
        assert lr_coefficient(left, right, shape) == product.multiplicity(shape)

    assert lr_coefficient(left, right, Partition.of(left.size + right.size + 1)) == 0


@given(small_partitions, small_partitions, st.integers(1, 4))
def test_lr_dimensions_multiply(left, right, n):
    product = lr_product(left, right)
    assert product == lr_product(right, left)
    assert product.dimension(n) == dim_schur(left, n) * dim_schur(right, n)
    assert all(p.size == left.size + right.size for p in product.partitions())


def test_sym2_wedge2_decomposition():
    assert decompose_sym2_wedge2(5) == {(2, 2): 1, (1, 1, 1, 1): 1}
    assert decompose_sym2_wedge2(3) == {(2, 2): 1}
    assert decompose_sym2_wedge2(5).dimension(5) == comb(11, 2)
