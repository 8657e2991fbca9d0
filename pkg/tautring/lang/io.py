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
Plain-text files in the expression grammar.

A presentation file holds a ``ring[vars; weights]`` header followed by one
relation per line; a definition file holds one statement per line. ``#``
starts a comment in both.
"""

from typing import Iterator, List, Optional, Tuple

from ..rings import RingPresentation
from .ast import Assign, Call
from .evaluator import EvalError, Evaluator
from .parser import ParseError, parse, parse_expression


def _lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            yield number, stripped


def _at_line(error: ParseError, number: int) -> ParseError:
    return ParseError(error.source, error.position, f"line {number}: {error.message}", error.expected)


def dump_presentation(ring: RingPresentation) -> str:
    names = ", ".join(ring.table.names)
    weights = ", ".join(str(w) for w in ring.table.weights)
    lines = [f"# {ring.label}"] if ring.label else []
    lines.append(f"ring[{names}; {weights}]")
    lines += [str(relation) for relation in ring.relations]
    return "\n".join(lines) + "\n"


def load_presentation(text: str, label: str = "") -> RingPresentation:
    lines = list(_lines(text))
    if not lines:
        raise EvalError("presentation file is empty")

    number, source = lines[0]
    try:
        header = parse_expression(source)
    except ParseError as error:
        raise _at_line(error, number) from error

    if not isinstance(header, Call) or header.name != "ring" or header.index is None or header.args is not None:
        raise EvalError(f"line {number}: expected a ring[variables; weights] header")

    relations = []
    for number, source in lines[1:]:
        try:
            relations.append(parse_expression(source))
        except ParseError as error:
            raise _at_line(error, number) from error

    ring = Evaluator().evaluate(Call("ring", args=(tuple(relations),), index=header.index))
    ring.label = label
    return ring


def load_definitions(text: str, evaluator: Optional[Evaluator] = None) -> List[str]:
    """Run every statement against the evaluator's environment; returns the names assigned, in order."""
    evaluator = Evaluator() if evaluator is None else evaluator
    assigned = []
    for number, source in _lines(text):
        try:
            node = parse(source)
        except ParseError as error:
            raise _at_line(error, number) from error

        evaluator.evaluate(node)
        if isinstance(node, Assign):
            assigned.append(node.name)

    return assigned


def read_presentation(path: str) -> RingPresentation:
    with open(path, encoding="utf-8") as f:
        return load_presentation(f.read(), label=path)


def read_definitions(path: str, evaluator: Optional[Evaluator] = None) -> List[str]:
    with open(path, encoding="utf-8") as f:
        return load_definitions(f.read(), evaluator)
