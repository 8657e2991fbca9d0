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
Run a selection of checks, sequentially or as ray tasks, and collect the reports in check-id order.
"""

import sys
from typing import List

from ..utils.py_functional import is_package_available
from .checks import CHECKS, PASS, Check, VerificationReport, run_check, select_checks
from .config import EngineConfig, VerifyConfig


def _run_by_id(check_id: str, engine: EngineConfig) -> VerificationReport:
    return run_check(CHECKS[check_id], engine)


def _run_with_ray(checks: List[Check], config: VerifyConfig) -> List[VerificationReport]:
    import ray

    if not ray.is_initialized():
        ray.init(num_cpus=config.suite.num_workers, include_dashboard=False)

    remote_check = ray.remote(num_cpus=1)(_run_by_id)
    futures = [remote_check.remote(check.check_id, config.engine) for check in checks]
    return ray.get(futures)


def run_suite(config: VerifyConfig) -> List[VerificationReport]:
    checks = select_checks(config.suite.only)
    if config.suite.use_ray and config.suite.num_workers > 1:
        if is_package_available("ray"):
            reports = _run_with_ray(checks, config)
        else:
            print("ray is not installed, running checks sequentially.", file=sys.stderr)
            reports = [run_check(check, config.engine) for check in checks]
    else:
        reports = [run_check(check, config.engine) for check in checks]

    return sorted(reports, key=lambda report: report.check_id)


def exit_code(reports: List[VerificationReport]) -> int:
    return 0 if all(report.status == PASS for report in reports) else 1
