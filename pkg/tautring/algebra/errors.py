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
Errors shared by the algebra, bundle, representation and geometry packages.
"""


class TableMismatchError(ValueError):
    """Raised when two polynomials over different variable tables are combined."""


class GuardError(ValueError):
    """Raised when a computation would exceed a configured size guard."""


class InconsistencyError(ValueError):
    """Raised when an asserted exact identity fails, e.g. a nonzero Chern class above the rank."""
