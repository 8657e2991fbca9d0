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
Command-line entry point: verify, eval and repl.

    tautring verify [--only id,...] [--format text|json] [--trunc D] [--config FILE] [key=value ...]
    tautring eval "nf(k1^4, M6)" [--load FILE]
    tautring repl [--load FILE] < definitions.txt

Exit codes: 0 success, 1 a check failed, 2 usage, parse or evaluation error.
"""

import argparse
import sys
from typing import List, Optional, TextIO

from omegaconf.errors import OmegaConfBaseException

from ..bundles import DEFAULT_TRUNC
from ..lang import Evaluator, ParseError, display_error, format_value, read_definitions
from ..utils.logger import Tracker
from .config import load_config
from .suite import exit_code, run_suite


EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tautring", description="Exact computations in the Chow ring of M6.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    verify = subparsers.add_parser("verify", help="run the verification suite")
    verify.add_argument("--only", help="comma-separated check ids")
    verify.add_argument("--format", choices=("text", "json"), help="report format")
    verify.add_argument("--trunc", type=int, help="truncation order D")
    verify.add_argument("--config", help="file of key=value lines")
    verify.add_argument("overrides", nargs="*", help="key=value overrides, e.g. suite.use_ray=true")

    for name, help_text in (("eval", "evaluate one expression"), ("repl", "evaluate statements read from stdin")):
        sub = subparsers.add_parser(name, help=help_text)
        if name == "eval":
            sub.add_argument("expression")

        sub.add_argument("--load", action="append", default=[], help="definition file to run first")
        sub.add_argument("--trunc", type=int, default=DEFAULT_TRUNC, help="truncation order D")

    return parser


def _report_error(error: Exception, stream: TextIO) -> None:
    if isinstance(error, ParseError):
        print(display_error(error), file=stream)
    else:
        print(f"error: {error}", file=stream)


def _evaluator(args: argparse.Namespace) -> Evaluator:
    if args.trunc < 1:
        raise ValueError(f"--trunc must be at least 1, got {args.trunc}.")

    evaluator = Evaluator(trunc=args.trunc)
    for path in args.load:
        read_definitions(path, evaluator)

    return evaluator


def command_verify(args: argparse.Namespace) -> int:
    flags = {}
    if args.only is not None:
        flags["suite"] = {"only": args.only.split(",")}

    if args.format is not None:
        flags.setdefault("suite", {})["format"] = args.format

    if args.trunc is not None:
        flags["engine"] = {"trunc": args.trunc}

    malformed = [item for item in args.overrides if "=" not in item]
    if malformed:
        print(f"error: overrides must be key=value, got {', '.join(malformed)}", file=sys.stderr)
        return EXIT_USAGE

    try:
        config = load_config(args.config, args.overrides, flags)
        reports = run_suite(config)
    except (ValueError, KeyError, OSError, OmegaConfBaseException) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE

    tracker = Tracker(config.suite.format, config.to_dict())
    for report in reports:
        tracker.log(report.to_dict())

    tracker.finish()
    return exit_code(reports)


def command_eval(args: argparse.Namespace) -> int:
    try:
        value = _evaluator(args).run(args.expression)
    except (ValueError, ArithmeticError, OSError) as error:
        _report_error(error, sys.stderr)
        return EXIT_USAGE

    print(format_value(value))
    return EXIT_OK


def command_repl(args: argparse.Namespace, stdin: Optional[TextIO] = None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    try:
        evaluator = _evaluator(args)
    except (ValueError, ArithmeticError, OSError) as error:
        _report_error(error, sys.stderr)
        return EXIT_USAGE

    status = EXIT_OK
    for line in stdin:
        line = line.strip()
        if not line or line.startswith("#"):
            continue

        try:
            print(format_value(evaluator.run(line)))
        except (ValueError, ArithmeticError) as error:
            _report_error(error, sys.stdout)
            status = EXIT_USAGE

    return status


COMMANDS = {"verify": command_verify, "eval": command_eval, "repl": command_repl}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
