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
"""Logging formatter and handler helpers shared by the library and the command-line tool"""
import os
import sys
from logging import Formatter, Handler, Logger, LogRecord, StreamHandler
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional, TextIO, Union


class RelativePathsFormatter(Formatter):
    """Log record formatter with relative source code file path support

    Introduces an additional 'relpath' format token holding the path of the source file in
    which the logging event occurred, relative to ``paths_relative_to``. Files outside of that
    directory (numpy, scipy, click internals) render as absolute paths.
    """

    def __init__(
        self,
        fmt: Optional[str] = None,
        datefmt: Optional[str] = None,
        paths_relative_to: Optional[str] = None,
    ):
        self.paths_relative_to = os.path.abspath(paths_relative_to or os.sep)
        super().__init__(fmt, datefmt)

    def formatMessage(self, record: LogRecord) -> str:
        pathname = os.path.abspath(record.pathname)
        try:
            common = os.path.commonpath((pathname, self.paths_relative_to))
            inside = common == self.paths_relative_to
        except ValueError:
            # Different drives on Windows
            inside = False
        if inside and self.paths_relative_to != os.path.abspath(os.sep):
            record.__dict__["relpath"] = os.path.relpath(pathname, self.paths_relative_to)
        else:
            record.__dict__["relpath"] = pathname
        return super().formatMessage(record)


def attach_stream_handler(
    logger: Logger,
    fmt: str,
    basedir: str,
    level: Union[int, str],
    stream: Optional[TextIO] = None,
) -> Handler:
    """Attaches a stream handler (stderr by default) to the logger"""
    handler = StreamHandler(stream=stream or sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(RelativePathsFormatter(fmt, paths_relative_to=basedir))
    logger.addHandler(handler)
    return handler


def attach_file_handler(
    logger: Logger, fmt: str, basedir: str, level: Union[int, str], log_dir: str
) -> Handler:
    """Attaches a rotating file handler writing ``sharpgrad.log`` inside ``log_dir``"""
    Path(log_dir).mkdir(parents=True, exist_ok=True)
    handler = RotatingFileHandler(
        os.path.join(log_dir, "sharpgrad.log"), maxBytes=10485760, backupCount=10
    )
    handler.setLevel(level)
    handler.setFormatter(RelativePathsFormatter(fmt, paths_relative_to=basedir))
    logger.addHandler(handler)
    return handler
