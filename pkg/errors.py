# Copyright (c) 2026 primegraph-spectra contributors
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
Exception hierarchy for primegraph-spectra.

Every exception derives from ValueError so callers that already catch
ValueError (including pydantic's ValidationError) keep working.
"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type  # pylint: disable=invalid-name

from typing import Any, Optional


class PrimeGraphError(ValueError):
    """Base class for all package errors."""


class SingularMatrixError(PrimeGraphError):
    """Raised when inverting a matrix whose determinant is zero."""


class FormulaDomainError(PrimeGraphError):
    """Raised when a closed form is evaluated outside its valid regime."""


class GraphFormatError(PrimeGraphError):
    """Raised when a graph file cannot be read or does not describe a simple graph."""


class OrderingViolationError(PrimeGraphError):
    """
    # Summary

    Certified interval comparisons contradict a stated eigenvalue ordering.

    ## Description

    Raised by the spectrum builders instead of silently reordering the
    descriptors. ``left`` and ``right`` name the offending adjacent pair and
    ``detail`` carries whatever the caller wants to attach for reproduction.
    """

    def __init__(self, message: str, left: str = "", right: str = "", detail: Optional[dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.left = left
        self.right = right
        self.detail = detail or {}
