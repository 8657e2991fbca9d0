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
from hypothesis import given, settings
from hypothesis import strategies as st

from tautring.algebra import GradedPoly, VariableTable
from tautring.lang import dump_presentation, load_presentation
from tautring.rings import (
    KAPPA_TABLE,
    RingPresentation,
    SocleError,
    m6_presentation,
    tautological_presentation,
)


K1 = GradedPoly.variable(KAPPA_TABLE, "k1")
K2 = GradedPoly.variable(KAPPA_TABLE, "k2")


@pytest.fixture(scope="module")
def m6():
    return m6_presentation()


def test_m6_hilbert_function(m6):
    assert m6.hilbert_function(6) == (1, 1, 2, 1, 1, 0, 0)
    assert m6.socle_degree(8) == 4
    assert m6.total_dimension(8) == 6
    assert m6.vanishes_above(4, 8)


def test_m6_normal_forms(m6):
    assert m6.normal_form(K1**3) == K1 * K2 * Fraction(2304, 127)
    assert m6.normal_form(K1**4) == K2**2 * Fraction(36864, 113)
    assert m6.normal_form(K1**2 * K2) == K2**2 * Fraction(2032, 113)
    assert m6.is_zero(K1**5)
    assert m6.is_zero(127 * K1**3 - 2304 * K1 * K2)


kappa_polys = st.dictionaries(
    st.tuples(st.integers(0, 5), st.integers(0, 2)),
    st.fractions(min_value=-3, max_value=3, max_denominator=3),
    max_size=4,
).map(lambda terms: GradedPoly(KAPPA_TABLE, terms))


@settings(max_examples=30, deadline=None)
@given(kappa_polys, kappa_polys, st.fractions(min_value=-2, max_value=2, max_denominator=5))
def test_normal_form_is_idempotent_and_linear(m6, a, b, scale):
    nf = m6.normal_form(a)
    assert m6.normal_form(nf) == nf
    assert m6.normal_form(a + b) == nf + m6.normal_form(b)
    assert m6.normal_form(a * scale) == nf * scale
    assert m6.is_zero(a - nf)


def test_m6_quotient_bases(m6):
    assert m6.describe_basis(2) == ["k1^2", "k2"]
    assert m6.describe_basis(3) == ["k1*k2"]
    assert m6.describe_basis(4) == ["k2^2"]


def test_m6_pairing(m6):
    pairing = m6.pairing_matrix(2, 4)
    assert pairing.to_lists() == [[Fraction(36864, 113), Fraction(2032, 113)], [Fraction(2032, 113), 1]]
    assert pairing.determinant() == Fraction(36608, 12769)
    assert m6.pairing_matrix(1, 4).to_lists() == [[Fraction(2032, 113)]]


def test_m6_is_poincare_duality(m6):
    report = m6.is_poincare_duality(4)
    assert report.holds
    assert report.pairing_ranks == {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}
    assert report.pairing_determinants[2] == Fraction(36608, 12769)


def test_perturbed_presentation_changes_pairing():
    perturbed = m6_presentation((128, 2304, 113, 36864))
    assert perturbed.label == "M6[128,2304,113,36864]"
    assert perturbed.hilbert_function(6) == (1, 1, 2, 1, 1, 0, 0)
    assert perturbed.pairing_matrix(2, 4).determinant() == Fraction(-28672, 12769)


def test_complete_intersection_is_gorenstein():
    ring = RingPresentation(KAPPA_TABLE, [K1**3, K2**2])
    assert ring.hilbert_function(5) == (1, 1, 2, 1, 1, 0)
    assert ring.pairing_matrix(2, 4).to_lists() == [[0, 1], [1, 0]]
    assert ring.is_poincare_duality(4)


def test_non_gorenstein_example():
    ring = RingPresentation(KAPPA_TABLE, [K1**3, K1 * K2, K2**2])
    assert ring.hilbert_function(4) == (1, 1, 2, 0, 0)
    report = ring.is_poincare_duality(2)
    assert not report.holds
    assert report.failures


def test_socle_error():
    ring = RingPresentation(KAPPA_TABLE, [K1**3, K1 * K2, K2**2])
    with pytest.raises(SocleError):
        ring.socle_coordinate(K2, 2)


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_low_genus_rings(g):
    ring = tautological_presentation(g)
    assert ring.hilbert_function(g) == (1,) * (g - 1) + (0, 0)
    assert ring.is_poincare_duality(g - 2)


def test_relations_are_validated():
    with pytest.raises(ValueError):
        RingPresentation(KAPPA_TABLE, [K1 + K2])

    with pytest.raises(ValueError):
        RingPresentation(KAPPA_TABLE, [K1 - K1])


def test_presentation_text_round_trip(m6):
    text = dump_presentation(m6)
    assert text.splitlines()[1] == "ring[k1, k2; 1, 2]"
    loaded = load_presentation(text)
    assert loaded.table == m6.table
    assert loaded.relations == m6.relations
    assert loaded.hilbert_function(6) == m6.hilbert_function(6)


def test_weighted_free_ring():
    table = VariableTable(("a", "b"), (2, 3))
    ring = RingPresentation(table, [])
    assert ring.hilbert_function(6) == (1, 0, 1, 1, 1, 1, 2)
