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
A unified reporting interface that writes verification results to different formats
"""

import json
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Union

from ..py_functional import convert_dict_to_str, flatten_dict


class Logger(ABC):
    @abstractmethod
    def __init__(self, config: Dict[str, Any]) -> None: ...

    @abstractmethod
    def log(self, report: Dict[str, Any]) -> None: ...

    def finish(self) -> None:
        pass


def _summary(reports: List[Dict[str, Any]]) -> Dict[str, int]:
    passed = sum(1 for report in reports if report["status"] == "pass")
    return {"total": len(reports), "passed": passed, "failed": len(reports) - passed}


class ConsoleLogger(Logger):
    def __init__(self, config: Dict[str, Any]) -> None:
        self.reports: List[Dict[str, Any]] = []
        print("Config\n" + convert_dict_to_str(config))

    def log(self, report: Dict[str, Any]) -> None:
        self.reports.append(report)
        body = {key: value for key, value in report.items() if key not in ("check_id", "status")}
        print(f"[{report['status'].upper()}] {report['check_id']}\n" + convert_dict_to_str(body))

    def finish(self) -> None:
        summary = _summary(self.reports)
        print(f"{summary['passed']} passed, {summary['failed']} failed, {summary['total']} checks")


class JsonLogger(Logger):
    """Collects every report and prints one document when finished."""

    def __init__(self, config: Dict[str, Any]) -> None:
        self.config = flatten_dict(config)
        self.reports: List[Dict[str, Any]] = []

    def log(self, report: Dict[str, Any]) -> None:
        self.reports.append(report)

    def finish(self) -> None:
        document = {"summary": _summary(self.reports), "config": self.config, "checks": self.reports}
        print(json.dumps(document, indent=2))


LOGGERS = {
    "text": ConsoleLogger,
    "json": JsonLogger,
}


class Tracker:
    def __init__(self, loggers: Union[str, List[str]] = "text", config: Optional[Dict[str, Any]] = None):
        if isinstance(loggers, str):
            loggers = [loggers]

        self.finished = False
        self.loggers: List[Logger] = []
        for logger in loggers:
            if logger not in LOGGERS:
                raise ValueError(f"{logger} is not supported.")

        self.loggers = [LOGGERS[logger](config or {}) for logger in loggers]

    def log(self, report: Dict[str, Any]) -> None:
        for logger in self.loggers:
            logger.log(report)

    def finish(self) -> None:
        if not self.finished:
            self.finished = True
            for logger in self.loggers:
                logger.finish()

    def __del__(self):
        self.finish()
