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
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tautring.lang import (
    Assign,
    BinOp,
    Call,
    EvalError,
    Evaluator,
    Neg,
    Num,
    ParseError,
    Var,
    display_error,
    dump_presentation,
    format_value,
    load_definitions,
    load_presentation,
    parse,
    parse_expression,
    read_definitions,
    read_presentation,
    to_source,
    tokenize,
)
from tautring.rings import m6_presentation


DATA = Path(__file__).resolve().parents[1] / "data"

leaves = st.one_of(st.integers(0, 50).map(Num), st.sampled_from(["k1", "k2", "x", "V"]).map(Var))
trees = st.recursive(
    leaves,
    lambda children: st.one_of(
        children.map(Neg),
        st.tuples(st.sampled_from("+-*/^"), children, children).map(lambda t: BinOp(*t)),
        st.lists(children, min_size=1, max_size=3).map(lambda items: Call("f", args=(tuple(items),))),
    ),
    max_leaves=12,
)


@pytest.fixture
def evaluator():
    return Evaluator()


def test_tokenize():
    tokens = list(tokenize("wedge(4, V) # comment"))
    assert [t.type for t in tokens] == ["name", "punct", "number", "punct", "name", "punct"]
    assert tokens[2].where == (6, 7)


def test_parse_precedence():
    assert parse("1 + 2 * 3") == BinOp("+", Num(1), BinOp("*", Num(2), Num(3)))
    assert parse("1 - 2 - 3") == BinOp("-", BinOp("-", Num(1), Num(2)), Num(3))
    assert parse("2^3^2") == BinOp("^", Num(2), BinOp("^", Num(3), Num(2)))
    assert parse("-k1^2") == Neg(BinOp("^", Var("k1"), Num(2)))
    assert parse("-k1*k2") == BinOp("*", Neg(Var("k1")), Var("k2"))
    assert parse("2*-3") == BinOp("*", Num(2), Neg(Num(3)))


def test_parse_calls_and_assignment():
    assert parse("ring[a, b; 1, 2](a^2)") == Call(
        "ring",
        args=((BinOp("^", Var("a"), Num(2)),),),
        index=((Var("a"), Var("b")), (Num(1), Num(2))),
    )
    assert parse("mukai()") == Call("mukai", args=())
    assert parse("F[2]") == Call("F", index=((Num(2),),))
    assert parse("x = 3") == Assign("x", Num(3))
    with pytest.raises(ParseError):
        parse_expression("x = 3")


@pytest.mark.parametrize(
    "source, column, expected",
    [
        ("1 +", 4, {"number", "name", "(", "-"}),
        ("1 2", 3, {"+", "-", "*", "/", "^", "end of input"}),
        ("f(1, 2", 7, {",", ";", ")", "+", "-", "*", "/", "^"}),
        ("(1 + 2", 7, {")"}),
    ],
)
def test_parse_errors_report_position_and_expected_tokens(source, column, expected):
    with pytest.raises(ParseError) as info:
        parse(source)

    assert info.value.position[0] + 1 == column
    assert info.value.expected == expected


def test_unknown_symbol_and_bad_assignment():
    with pytest.raises(ParseError, match="unknown symbol '\\$'"):
        parse("1 $ 2")

    with pytest.raises(ParseError, match="only a plain name"):
        parse("f(1) = 2")


def test_display_error_draws_caret():
    with pytest.raises(ParseError) as info:
        parse("1 +")

    lines = display_error(info.value).splitlines()
    assert lines[0] == "unexpected 'end of input' at column 4 (expected one of: (, -, name, number):"
    assert lines[1] == "  1 +"
    assert lines[2] == "     ^"


def test_to_source_uses_minimal_parentheses():
    assert to_source(parse("(1 + 2) * 3")) == "(1 + 2)*3"
    assert to_source(parse("a - (b - c)")) == "a - (b - c)"
    assert to_source(parse("(a - b) - c")) == "a - b - c"
    assert to_source(parse("(2^3)^2")) == "(2^3)^2"
    assert to_source(parse("2^(3^2)")) == "2^3^2"
    assert to_source(parse("(-k1)^2")) == "(-k1)^2"
    assert to_source(parse("-(k1 + 1)")) == "-(k1 + 1)"
    assert to_source(parse("lr(1,1;1 ,1)")) == "lr(1, 1; 1, 1)"


@given(trees)
def test_printer_parser_fixpoint(tree):
    assert parse(to_source(tree)) == tree


def test_documented_examples(evaluator):
    assert evaluator.run("dim(G(4,10)) + 16") == 40
    assert format_value(evaluator.run("nf(k1^4, M6)")) == "36864/113 * k2^2"
    assert evaluator.run("genus(F[2], 3*S + 1*F)") == 6


def test_ring_queries(evaluator):
    assert evaluator.run("hilbert(M6, 5)") == (1, 1, 2, 1, 1, 0)
    assert evaluator.run("hilbert(ring[a, b; 1, 2](a^3, b^2), 5)") == (1, 1, 2, 1, 1, 0)
    assert evaluator.run("gorenstein(M6, 4)") is True
    assert evaluator.run("socle(M6, 8)") == 4
    assert evaluator.run("det(pairing(M6, 2, 4))") == Fraction(36608, 12769)
    assert evaluator.run("dim(M6, 2)") == 2
    assert evaluator.run("hilbert(taut(4), 3)") == (1, 1, 1, 0)


def test_geometry_and_schur_queries(evaluator):
    assert evaluator.run("plucker(2, 5)") == 5
    assert evaluator.run("integrate(G(2,4), schubert(G(2,4), 1, 1)^2)") == 1
    assert evaluator.run("h0(F[0], 3*S + 4*F)") == 20
    assert evaluator.run("intersect(F[2], E, E)") == -2
    assert evaluator.run("maroni(6, 1)") == Fraction(5, 2)
    assert evaluator.run("quadrics(6)") == 6
    assert evaluator.run("strata(6)") == (15, 13, 12, 11, 10)
    assert evaluator.run("schur_dim(5; 2, 2)") == 50
    assert evaluator.run("kostka(2, 1; 1, 1, 1)") == 2
    assert evaluator.run("syt(3, 2)") == 5
    assert format_value(evaluator.run("lr(1, 1; 1, 1)")) == "s(2,2) + s(2,1,1) + s(1,1,1,1)"
    assert evaluator.run("dim(plethysm(5), 5)") == 55


def test_bundle_queries(evaluator):
    w = evaluator.env.lookup("W")
    assert evaluator.run("rank(wedge(2, V))") == 10
    assert evaluator.run("rank(V * W)") == 10
    assert evaluator.run("rank(V + W)") == 7
    assert evaluator.run("c(sym(2, W), 1)") == 3 * w.c(1)
    assert evaluator.run("wedge(4, V)") == evaluator.run("twist(dual(V), c(V, 1))")
    assert evaluator.run("rank(bundle(2; x, y2))") == 2
    assert format_value(evaluator.run("c(hodge(6), 1)")) == "1/12 * k1"
    assert format_value(evaluator.run("hyperelliptic(6)")) == "1/15 * l1"
    assert format_value(evaluator.run("sltwist(5)")) == "1/5 * l1"
    assert evaluator.run("trigonal(6, 0)") == (Fraction(1, 3), Fraction(-1, 24), Fraction(1, 8))


def test_arithmetic_and_assignment(evaluator):
    assert evaluator.run("2^-1") == Fraction(1, 2)
    assert evaluator.run("x = 2 + 3") == 5
    assert format_value(evaluator.run("x * k1")) == "5 * k1"
    assert format_value(evaluator.run("(k1 + k2)^2 - k2^2")) == format_value(evaluator.run("k1^2 + 2*k1*k2"))


@pytest.mark.parametrize(
    "source, message",
    [
        ("wedge(6, V)", "out of range"),
        ("Foo + 1", "unknown identifier"),
        ("frobnicate(1)", "unknown function"),
        ("1/0", "division by zero"),
        ("k1^-1", "nonnegative powers"),
        ("k1^(1/2)", "not an integer"),
        ("V + 1", "unsupported operand"),
        ("G(3, 2)", "1 <= k < n"),
        ("hilbert(M6)", "takes 2 argument"),
        ("F(2)", "F\\[n\\]"),
    ],
)
def test_evaluation_errors(evaluator, source, message):
    with pytest.raises(EvalError, match=message):
        evaluator.run(source)


def test_format_value():
    assert format_value(None) == "none"
    assert format_value(False) == "false"
    assert format_value(Fraction(-7, 3)) == "-7/3"
    assert format_value((1, Fraction(1, 2))) == "(1, 1/2)"
    assert format_value({"a": 1}) == "{a: 1}"
    assert format_value(m6_presentation()).startswith("ring[k1, k2; 1, 2](")


def test_presentation_io():
    ring = read_presentation(str(DATA / "m6.ring"))
    m6 = m6_presentation()
    assert ring.relations == m6.relations
    assert load_presentation(dump_presentation(ring)).relations == m6.relations
    with pytest.raises(EvalError):
        load_presentation("# nothing here\n")

    with pytest.raises(EvalError):
        load_presentation("hilbert(M6, 3)\n")

    with pytest.raises(ParseError, match="line 3"):
        load_presentation("ring[a; 1]\na^2\na^ +\n")


def test_definition_files(evaluator):
    assert load_definitions("a = 2\n# comment\nb = a * 3\n", evaluator) == ["a", "b"]
    assert evaluator.run("b") == 6

    names = read_definitions(str(DATA / "mukai.defs"), evaluator)
    assert names == ["W2", "Eprime", "Fmukai", "plucker", "ydim"]
    assert evaluator.run("ydim") == 40
    assert evaluator.run("rank(Fmukai)") == 4
    assert evaluator.run("wedge(4, V)") == evaluator.run("plucker")
