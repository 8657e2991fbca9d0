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

from .ast import Assign, BinOp, Call, Expr, Neg, Node, Num, Var, to_source
from .evaluator import (
    BUILTINS,
    Environment,
    EvalError,
    Evaluator,
    HirzebruchSurface,
    default_environment,
    evaluate,
    evaluate_expr,
    format_value,
    ring_source,
)
from .io import dump_presentation, load_definitions, load_presentation, read_definitions, read_presentation
from .parser import ParseError, Token, display_error, parse, parse_expression, tokenize


__all__ = [
    "BUILTINS",
    "Assign",
    "BinOp",
    "Call",
    "Environment",
    "EvalError",
    "Evaluator",
    "Expr",
    "HirzebruchSurface",
    "Neg",
    "Node",
    "Num",
    "ParseError",
    "Token",
    "Var",
    "default_environment",
    "display_error",
    "dump_presentation",
    "evaluate",
    "evaluate_expr",
    "format_value",
    "load_definitions",
    "load_presentation",
    "parse",
    "parse_expression",
    "read_definitions",
    "read_presentation",
    "ring_source",
    "to_source",
    "tokenize",
]
