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

from .checks import CHECKS, Check, Outcome, VerificationReport, run_check, select_checks, values_equal
from .config import EngineConfig, SuiteConfig, VerifyConfig, load_config, read_config_lines
from .suite import exit_code, run_suite


__all__ = [
    "CHECKS",
    "Check",
    "EngineConfig",
    "Outcome",
    "SuiteConfig",
    "VerificationReport",
    "VerifyConfig",
    "exit_code",
    "load_config",
    "read_config_lines",
    "run_check",
    "run_suite",
    "select_checks",
    "values_equal",
]
