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
Reusable mixin classes for graph source models.

This module provides mixin classes that can be composed to add common
parameter fields to graph source models without duplication.
"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type  # pylint: disable=invalid-name

from typing import Optional

from pydantic import BaseModel, Field


class FirstCliqueMixin(BaseModel):
    """Mixin for sources that require the first clique size m."""

    m: Optional[int] = Field(default=None, ge=1, description="Size of the first clique")


class SecondCliqueMixin(BaseModel):
    """Mixin for sources that require the second clique size n."""

    n: Optional[int] = Field(default=None, ge=1, description="Size of the second clique")


class DuplicationCountMixin(BaseModel):
    """Mixin for sources that require a duplication count n."""

    n: Optional[int] = Field(default=None, ge=0, description="Number of times the cycle vertex is duplicated")


class CliqueOrderMixin(BaseModel):
    """Mixin for sources that require a clique order k."""

    k: Optional[int] = Field(default=None, ge=1, description="Order of the complete graph")


class GraphPathMixin(BaseModel):
    """Mixin for sources that read a graph file."""

    path: Optional[str] = Field(default=None, min_length=1, description="Path to a graph JSON file")
