# Copyright 2026 The orlicz Authors
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
"""Orlicz and fractional Orlicz-Sobolev norms on grids."""

from ._core import (
    GridError,
    GridFunction,
    SpecError,
    YoungError,
    YoungFunction,
    admissible,
    blocks,
    luxemburg_norm,
    norm,
    run_suite,
    suite_names,
    t_infinity,
    target,
)

__all__ = [
    "GridError",
    "GridFunction",
    "SpecError",
    "YoungError",
    "YoungFunction",
    "admissible",
    "blocks",
    "luxemburg_norm",
    "norm",
    "run_suite",
    "suite_names",
    "t_infinity",
    "target",
]
__version__ = "0.1.0"
