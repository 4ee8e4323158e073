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
"""Sharp constants in the gradient estimate for bounded harmonic functions in the unit ball"""
import logging
from logging import Handler, Logger
from typing import List, Optional, Type, Union

from common.logging import attach_file_handler, attach_stream_handler
from config import DEFAULT_LOG_FORMAT, Config, basedir

__version__ = "1.0.0"

_handlers: List[Handler] = []


def setup_logging(
    config_class: Type = Config, log_level: Optional[Union[int, str]] = None
) -> Logger:
    """Attaches the stderr handler, and the file handler if a log directory is configured, to
    the package logger. Handlers from a previous call are replaced."""
    logger = logging.getLogger(__name__)
    for handler in _handlers:
        logger.removeHandler(handler)
        handler.close()
    _handlers.clear()
    level = log_level or config_class.LOG_LEVEL
    if isinstance(level, str):
        level = level.upper()
    _handlers.append(attach_stream_handler(logger, DEFAULT_LOG_FORMAT, basedir, level))
    if config_class.LOG_FILE_DIR:
        _handlers.append(
            attach_file_handler(
                logger, DEFAULT_LOG_FORMAT, basedir, level, config_class.LOG_FILE_DIR
            )
        )
    logger.setLevel(level)
    return logger
