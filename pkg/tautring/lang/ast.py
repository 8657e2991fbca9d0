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
Syntax tree of the expression language and its printer.

The printer emits the fewest parentheses that keep the tree intact, so
``parse(to_source(parse(s))) == parse(s)`` for every parseable ``s``.
"""

from dataclasses import dataclass
from typing import Optional, Tuple, Union


@dataclass(frozen=True)
class Num:
    value: int

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, int) or self.value < 0:
            raise ValueError(f"Num holds a non-negative integer literal, got {self.value!r}.")


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    """``name[index groups](argument groups)``; groups are separated by ``;``, items by ``,``."""

    name: str
    args: Optional[Tuple[Tuple["Expr", ...], ...]] = None
    index: Optional[Tuple[Tuple["Expr", ...], ...]] = None

    def flat_args(self) -> Tuple["Expr", ...]:
        return tuple(item for group in self.args or () for item in group)


@dataclass(frozen=True)
class Assign:
    name: str
    value: "Expr"


Expr = Union[Num, Var, Neg, BinOp, Call]
Node = Union[Expr, Assign]

BINARY_PRECEDENCE = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}
PREFIX_PRECEDENCE = 25
RIGHT_ASSOCIATIVE = frozenset({"^"})
ATOM_PRECEDENCE = 100


def precedence(node: Expr) -> int:
    if isinstance(node, BinOp):
        return BINARY_PRECEDENCE[node.op]
    elif isinstance(node, Neg):
        return PREFIX_PRECEDENCE
    else:
        return ATOM_PRECEDENCE


def _wrap(node: Expr, parenthesize: bool) -> str:
    text = to_source(node)
    return f"({text})" if parenthesize else text


def _groups(groups: Tuple[Tuple[Expr, ...], ...]) -> str:
    return "; ".join(", ".join(to_source(item) for item in group) for group in groups)


def to_source(node: Node) -> str:
    if isinstance(node, Num):
        return str(node.value)
    elif isinstance(node, Var):
        return node.name
    elif isinstance(node, Assign):
        return f"{node.name} = {to_source(node.value)}"
    elif isinstance(node, Neg):
        return "-" + _wrap(node.operand, precedence(node.operand) < PREFIX_PRECEDENCE)
    elif isinstance(node, BinOp):
        level = BINARY_PRECEDENCE[node.op]
        if node.op in RIGHT_ASSOCIATIVE:
            left = _wrap(node.left, precedence(node.left) <= level)
            right = _wrap(node.right, precedence(node.right) < level)
            return f"{left}{node.op}{right}"

        left = _wrap(node.left, precedence(node.left) < level)
        right = _wrap(node.right, precedence(node.right) <= level)
        separator = f" {node.op} " if level == BINARY_PRECEDENCE["+"] else node.op
        return f"{left}{separator}{right}"
    elif isinstance(node, Call):
        text = node.name
        if node.index is not None:
            text += f"[{_groups(node.index)}]"

        if node.args is not None:
            text += f"({_groups(node.args)})"

        return text
    else:
        raise TypeError(f"Not a syntax tree node: {node!r}.")
