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
"""Common sharpgrad exceptions"""
from functools import partial
from typing import Optional


class ESharpGradError(Exception):
    """An arbitrary sharpgrad error"""

    def __init__(self, message: Optional[str] = None, **kwargs):
        self.message = message if isinstance(message, str) else self.__doc__
        self.kwargs = kwargs
        for key, value in kwargs.items():
            setattr(self, key, value)
        super().__init__(dict(**kwargs, **{"message": self.message}))

    def __str__(self):
        return self.message

    def __reduce__(self):
        """Helper method for pickle, errors raised in pool workers keep message and fields"""
        return partial(self.__class__, **self.kwargs), (self.message,)


class EDomainError(ESharpGradError, ValueError):
    """Argument outside of the domain of a function"""


class EAccuracyError(ESharpGradError):
    """Requested accuracy not reached within the term cap"""

    def __init__(
        self,
        message: Optional[str] = None,
        partial_value=None,
        terms: Optional[int] = None,
        **kwargs,
    ):
        self.partial_value = partial_value
        self.terms = terms
        super().__init__(message, partial_value=partial_value, terms=terms, **kwargs)


class EConvergenceError(ESharpGradError):
    """Quadrature did not converge where a value is mandatory"""
