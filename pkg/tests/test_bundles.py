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
from itertools import combinations, product

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from tautring.algebra import GradedPoly, GuardError, InconsistencyError, VariableTable, unify
from tautring.bundles import (
    FormalBundle,
    chern_character,
    chern_from_character,
    determinant,
    direct_sum,
    dual,
    line_bundle,
    maroni_twist_degree,
    residual_classes,
    sequence_quotient,
    solve_degreewise,
    solve_hyperelliptic_twist,
    solve_plane_quintic_twist,
    solve_sl_twist,
    solve_trigonal_twist,
    sym_power,
    tensor,
    todd_class,
    twist,
    wedge_power,
)


XY = VariableTable(("x", "y"), (1, 1))
X, Y = GradedPoly.variable(XY, "x"), GradedPoly.variable(XY, "y")

coefficients = st.fractions(min_value=-3, max_value=3, max_denominator=3)
line_classes = st.tuples(coefficients, coefficients).map(lambda ab: X * ab[0] + Y * ab[1])
split_bundles = st.lists(line_classes, min_size=1, max_size=3).map(
    lambda classes: direct_sum(*[line_bundle(c) for c in classes])
)


def same(a: GradedPoly, b: GradedPoly) -> bool:
    a, b = unify(a, b)
    return a == b


def variable(name: str, weight: int = 1) -> GradedPoly:
    return GradedPoly.variable(VariableTable((name,), (weight,)), name)


def elementary(values):
    """e_0, e_1, ... of the given sympy numbers, read off prod (1 + v T)."""
    T = sympy.Symbol("T")
    poly = sympy.Poly(sympy.expand(sympy.prod([1 + v * T for v in values])), T)
    return [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]


def at_roots(bundle: FormalBundle, assignment):
    values = []
    for i in range(1, bundle.trunc + 1):
        c = bundle.c(i)
        c = c.substitute({name: value for name, value in assignment.items() if name in c.table})
        values.append(c.constant_term())

    return values


def chern_assignment(prefix: str, roots):
    return {f"{prefix}{i}": e for i, e in enumerate(elementary(roots)) if i}


def expected_classes(roots, trunc: int):
    classes = elementary(roots)[1:]
    return (classes + [Fraction(0)] * trunc)[:trunc]


def test_sym_square_of_rank_two():
    w = FormalBundle.free(2, "w", 3)
    w1, w2 = w.c(1), w.c(2)
    sym2 = sym_power(w, 2)
    assert sym2.rank == 3
    assert sym2.c(1) == 3 * w1
    assert sym2.c(2) == 2 * w1**2 + 4 * w2
    assert sym2.c(3) == 4 * w1 * w2


def test_wedge_four_of_rank_five_is_twisted_dual():
    v = FormalBundle.free(5, "v", 5)
    v1, v2, v3, v4, v5 = (v.c(i) for i in range(1, 6))
    wedge4 = wedge_power(v, 4)
    assert wedge4 == twist(dual(v), v1)
    assert wedge4.c(5) == v1**3 * v2 - v1**2 * v3 + v1 * v4 - v5
    assert wedge_power(v, 5) == determinant(v)


ROOT_CASES = {
    "wedge2": (4, lambda v: wedge_power(v, 2), lambda r: [a + b for a, b in combinations(r, 2)]),
    "wedge4": (5, lambda v: wedge_power(v, 4), lambda r: [sum(r) - a for a in r]),
    "sym3": (2, lambda v: sym_power(v, 3), lambda r: [3 * r[0], 2 * r[0] + r[1], r[0] + 2 * r[1], 3 * r[1]]),
    "dual": (3, dual, lambda r: [-a for a in r]),
}


@pytest.mark.parametrize("case", sorted(ROOT_CASES))
def test_constructions_against_explicit_roots(case):
    rank, build, image_roots = ROOT_CASES[case]
    roots = [sympy.Rational(1, 2), sympy.Integer(-3), sympy.Integer(5), sympy.Rational(2, 3), sympy.Integer(-1)][:rank]
    image = build(FormalBundle.free(rank, "v", 6))
    assert image.rank == len(image_roots(roots))
    assert at_roots(image, chern_assignment("v", roots)) == expected_classes(image_roots(roots), 6)


def test_tensor_and_twist_against_explicit_roots():
    left = [sympy.Rational(1, 3), sympy.Integer(2)]
    right = [sympy.Integer(-1), sympy.Rational(5, 2)]
    image = tensor(FormalBundle.free(2, "v"), FormalBundle.free(2, "w"))
    assignment = {**chern_assignment("v", left), **chern_assignment("w", right)}
    assert at_roots(image, assignment) == expected_classes([a + b for a, b in product(left, right)], 4)

    t = sympy.Rational(-7, 4)
    twisted = twist(FormalBundle.free(3, "v"), variable("t"))
    roots = [sympy.Integer(1), sympy.Integer(-2), sympy.Rational(1, 5)]
    assignment = {**chern_assignment("v", roots), "t": Fraction(-7, 4)}
    assert at_roots(twisted, assignment) == expected_classes([a + t for a in roots], 4)


@given(split_bundles, split_bundles)
def test_whitney_sum(a, b):
    total = a.total_chern() * b.total_chern()
    truncated = sum((total.homogeneous_component(d) for d in range(a.trunc + 1)), GradedPoly.zero(XY))
    assert direct_sum(a, b).total_chern() == truncated


@given(split_bundles, split_bundles)
def test_character_is_additive_and_multiplicative(a, b):
    ch_a, ch_b = chern_character(a), chern_character(b)
    ch_sum, ch_product = chern_character(direct_sum(a, b)), chern_character(tensor(a, b))
    for d in range(a.trunc + 1):
        assert ch_sum[d] == ch_a[d] + ch_b[d]
        assert ch_product[d] == sum((ch_a[i] * ch_b[d - i] for i in range(d + 1)), GradedPoly.zero(XY))


@given(split_bundles, line_classes, line_classes)
def test_twist_dual_and_character_round_trip(a, s, t):
    assert dual(dual(a)) == a
    assert twist(twist(a, s), t) == twist(a, s + t)
    assert tensor(a, line_bundle(t)) == twist(a, t)
    assert chern_from_character(chern_character(a), a.rank, a.trunc) == a
    assert wedge_power(a, a.rank) == determinant(a)


@given(line_classes, line_classes)
def test_sym_square_of_split_bundle(s, t):
    lines = [line_bundle(2 * s), line_bundle(s + t), line_bundle(2 * t)]
    assert sym_power(direct_sum(line_bundle(s), line_bundle(t)), 2) == direct_sum(*lines)


@given(split_bundles, split_bundles)
def test_sequence_quotient_recovers_summand(a, b):
    assert sequence_quotient(direct_sum(a, b), a) == b


def test_sequence_quotient_rejects_excess_classes():
    total = FormalBundle.free(2, "a")
    with pytest.raises(InconsistencyError):
        sequence_quotient(total, FormalBundle.trivial(1))

    quotient = sequence_quotient(total, FormalBundle.trivial(1), exact=False)
    assert quotient.rank == 1
    assert not quotient.exact
    assert residual_classes(total, FormalBundle.trivial(1)) == [total.c(2), 0, 0]


def test_todd_class_of_line_bundle():
    assert todd_class(line_bundle(X)) == [1, X / 2, X**2 / 12, 0, -(X**4) / 720]


def test_bundle_guards():
    v = FormalBundle.free(5, "v")
    with pytest.raises(GuardError):
        tensor(v, v, max_roots=10)

    with pytest.raises(GuardError):
        sym_power(v, 3, max_roots=20)

    with pytest.raises(ValueError):
        wedge_power(v, 6)

    with pytest.raises(ValueError):
        sym_power(v, -1)

    with pytest.raises(ValueError):
        twist(v, 1)

    with pytest.raises(ValueError):
        FormalBundle(2, [X**2])

    with pytest.raises(InconsistencyError):
        FormalBundle(1, [X, X * Y])

    with pytest.raises(ValueError):
        v.c(5)


def test_hyperelliptic_twist():
    solution = solve_hyperelliptic_twist(6)
    assert same(solution["w1"], variable("l1") / 15)
    assert {3, 4} <= set(solution.residuals)
    with pytest.raises(ValueError):
        solve_hyperelliptic_twist(1)


def test_sl_twist():
    solution = solve_sl_twist(5)
    l1, l2 = variable("l1"), variable("l2", 2)
    assert same(solution["t"], l1 / 5)
    l1, l2 = unify(l1, l2)
    assert same(solution["v2"], l2 - l1**2 * Fraction(2, 5))


def test_plane_quintic_twist():
    assert same(solve_plane_quintic_twist()["v1"], variable("l1") / 4)


def test_trigonal_twist():
    solution = solve_trigonal_twist(6, 0)
    assert solution.k == 4
    assert (solution.q, solution.r, solution.s) == (Fraction(1, 3), Fraction(-1, 24), Fraction(1, 8))


def test_maroni_twist_degree():
    assert maroni_twist_degree(6, 0) == 4
    assert maroni_twist_degree(6, 2) == 1
    with pytest.raises(ValueError):
        maroni_twist_degree(6, 1)

    with pytest.raises(ValueError):
        maroni_twist_degree(6, 4)


def test_solve_degreewise_requires_matching_ranks():
    with pytest.raises(InconsistencyError):
        solve_degreewise(FormalBundle.free(2, "a"), FormalBundle.free(3, "b"), {1: "a1"}, 4)
