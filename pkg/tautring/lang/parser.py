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
Tokenizer and top-down operator precedence parser for the expression language.

    statement := name "=" expr | expr
    expr      := expr ("+" | "-" | "*" | "/") expr | expr "^" expr | "-" expr
               | number | name | call | "(" expr ")"
    call      := name "[" groups "]" ["(" groups ")"] | name "(" [groups] ")"
    groups    := items (";" items)*
    items     := expr ("," expr)*

``^`` is right-associative and binds tighter than unary minus, which binds
tighter than ``*`` and ``/``.
"""

import re
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple, Type

from .ast import BINARY_PRECEDENCE, PREFIX_PRECEDENCE, RIGHT_ASSOCIATIVE, Assign, BinOp, Call, Expr, Neg, Node, Num, Var


END = "end of input"
OPERAND_START = frozenset({"number", "name", "(", "-"})
OPERATORS = frozenset(BINARY_PRECEDENCE)


class ParseError(ValueError):
    """A syntax error with the offending span of the source and the tokens that would have been accepted."""

    def __init__(
        self,
        source: str,
        position: Tuple[int, int],
        message: str,
        expected: Iterable[str] = (),
    ):
        self.source = source
        self.position = position
        self.message = message
        self.expected = frozenset(expected)
        super().__init__(str(self))

    def __str__(self) -> str:
        text = f"{self.message} at column {self.position[0] + 1}"
        if self.expected:
            text += f" (expected one of: {', '.join(sorted(self.expected))})"

        return text


def display_error(error: ParseError) -> str:
    """The message, the source line and a caret run under the offending span."""
    start, end = error.position
    highlight = " " * start + "^" * max(1, end - start)
    return f"{error}:\n  {error.source}\n  {highlight}"


class Token(NamedTuple):
    type: str
    value: str
    where: Tuple[int, int]


TOKEN_PATTERNS = {
    "number": r"\d+",
    "name": r"[A-Za-z_][A-Za-z0-9_]*",
    "op": r"[-+*/^]",
    "punct": r"[()\[\],;=]",
    "skip": r"[ \t\r\n]+",
    "comment": r"#.*",
    "error": r".",
}
TOKEN_REGEX = re.compile("|".join(f"(?P<{name}>{text})" for name, text in TOKEN_PATTERNS.items()))


def tokenize(source: str) -> Iterator[Token]:
    for match in TOKEN_REGEX.finditer(source):
        kind, value, where = str(match.lastgroup), match.group(), (match.start(), match.end())
        if kind in ("skip", "comment"):
            continue
        elif kind == "error":
            raise ParseError(source, where, f"unknown symbol '{value}'")

        yield Token(kind, value, where)


class Symbol:
    id = ""
    lbp = 0

    def __init__(self, parser: "Parser", token: Token):
        self.parser = parser
        self.token = token

    def nud(self) -> Expr:
        raise self.parser.error(self.token, f"unexpected '{self.token.value or END}'", OPERAND_START)

    def led(self, left: Expr) -> Expr:
        raise self.parser.error(self.token, f"unexpected '{self.token.value}'", OPERATORS)


class Literal(Symbol):
    def nud(self) -> Expr:
        return Num(int(self.token.value))


class Name(Symbol):
    def nud(self) -> Expr:
        parser = self.parser
        index = args = None
        if parser.token.id == "[":
            parser.advance("[")
            index = parser.groups("]")
            parser.advance("]")

        if parser.token.id == "(":
            parser.advance("(")
            args = () if parser.token.id == ")" else parser.groups(")")
            parser.advance(")")

        if index is None and args is None:
            return Var(self.token.value)

        return Call(self.token.value, args=args, index=index)


class Infix(Symbol):
    def led(self, left: Expr) -> Expr:
        rbp = self.lbp - 1 if self.id in RIGHT_ASSOCIATIVE else self.lbp
        return BinOp(self.id, left, self.parser.expression(rbp))


class Minus(Infix):
    def nud(self) -> Expr:
        return Neg(self.parser.expression(PREFIX_PRECEDENCE))


class Group(Symbol):
    def nud(self) -> Expr:
        inner = self.parser.expression(0)
        self.parser.advance(")")
        return inner


class Parser:
    def __init__(self):
        self.symbol_table: Dict[str, Type[Symbol]] = {}
        self.source = ""
        self.tokens: Iterator[Token] = iter(())
        self.token: Optional[Symbol] = None

    def define(self, sid: str, lbp: int = 0, symbol_class: Type[Symbol] = Symbol) -> Type[Symbol]:
        symbol = self.symbol_table[sid] = type(symbol_class.__name__, (symbol_class,), {"id": sid, "lbp": lbp})
        return symbol

    def error(self, token: Token, message: str, expected: Iterable[str] = ()) -> ParseError:
        return ParseError(self.source, token.where, message, expected)

    def advance(self, sid: Optional[str] = None) -> Symbol:
        if sid is not None and self.token.id != sid:
            found = self.token.token.value or END
            raise self.error(self.token.token, f"expected '{sid}' but found '{found}'", {sid})

        try:
            token = next(self.tokens)
        except StopIteration:
            end = len(self.source)
            self.token = self.symbol_table[END](self, Token(END, "", (end, end + 1)))
            return self.token

        key = token.type if token.type in ("number", "name") else token.value
        self.token = self.symbol_table[key](self, token)
        return self.token

    def expression(self, rbp: int) -> Expr:
        symbol = self.token
        self.advance()
        left = symbol.nud()
        while rbp < self.token.lbp:
            symbol = self.token
            self.advance()
            left = symbol.led(left)

        return left

    def items(self) -> Tuple[Expr, ...]:
        found: List[Expr] = [self.expression(0)]
        while self.token.id == ",":
            self.advance(",")
            found.append(self.expression(0))

        return tuple(found)

    def groups(self, closing: str) -> Tuple[Tuple[Expr, ...], ...]:
        found = [self.items()]
        while self.token.id == ";":
            self.advance(";")
            found.append(self.items())

        if self.token.id != closing:
            found_text = self.token.token.value or END
            raise self.error(self.token.token, f"unexpected '{found_text}'", {",", ";", closing} | OPERATORS)

        return tuple(found)

    def parse(self, source: str) -> Node:
        self.source = source
        self.tokens = iter(list(tokenize(source)))
        try:
            self.advance()
            statement = self._statement()
            if self.token.id != END:
                raise self.error(self.token.token, f"unexpected '{self.token.token.value}'", OPERATORS | {END})

            return statement
        finally:
            self.tokens = iter(())
            self.token = None

    def _statement(self) -> Node:
        if self.token.id == "name":
            expr = self.expression(0)
            if self.token.id == "=":
                if not isinstance(expr, Var):
                    raise self.error(self.token.token, "only a plain name can be assigned to")

                self.advance("=")
                return Assign(expr.name, self.expression(0))

            return expr

        return self.expression(0)


def _build_parser() -> Parser:
    parser = Parser()
    parser.define(END)
    parser.define("number", symbol_class=Literal)
    parser.define("name", symbol_class=Name)
    for sid in (")", "]", ",", ";", "=", "["):
        parser.define(sid)

    parser.define("(", symbol_class=Group)
    for op, lbp in BINARY_PRECEDENCE.items():
        parser.define(op, lbp, Minus if op == "-" else Infix)

    return parser


EXPRESSION_PARSER = _build_parser()


def parse(source: str) -> Node:
    """Parse one statement: an expression or ``name = expression``."""
    return EXPRESSION_PARSER.parse(source)


def parse_expression(source: str) -> Expr:
    node = parse(source)
    if isinstance(node, Assign):
        raise ParseError(source, (0, len(source)), "expected an expression, found an assignment")

    return node
