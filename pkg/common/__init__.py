#!/usr/bin/env python
#
# Sharp gradient estimates for bounded harmonic functions in the unit ball
#
# Copyright 2026 sharpgrad contributors
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
"""Common and helper routines"""
from .grid_utils import EInvalidGridSpec, GridSpec, parse_grid, parse_int_grid
from .logging import RelativePathsFormatter, attach_file_handler, attach_stream_handler

__all__ = [
    "EInvalidGridSpec",
    "GridSpec",
    "parse_grid",
    "parse_int_grid",
    "RelativePathsFormatter",
    "attach_file_handler",
    "attach_stream_handler",
]
