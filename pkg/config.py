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
"""Default configuration for the sharpgrad command-line tool"""
import os

from dotenv import load_dotenv

basedir = os.path.abspath(os.path.dirname(__file__))

# Load environment from .env
dotenv_path = os.path.join(basedir, ".env")
load_dotenv(dotenv_path)

DEFAULT_LOG_FORMAT = "%(asctime)-15s [%(levelname)-8s] %(message)s (%(relpath)s:%(lineno)d)"


class Config:  # pylint: disable=too-few-public-methods
    """Default run config. Command-line flags take precedence over these values"""

    LOG_LEVEL = os.environ.get("SHARPGRAD_LOG_LEVEL") or "WARNING"
    LOG_FILE_DIR = os.environ.get("SHARPGRAD_LOG_FILE_DIR")

    # Default absolute tolerance for constants and identity checks
    TOL = float(os.environ.get("SHARPGRAD_TOL") or 1e-9)

    # Worker pool size for grid evaluation
    JOBS = int(os.environ.get("SHARPGRAD_JOBS") or os.cpu_count() or 1)
