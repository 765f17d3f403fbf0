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
Centralized size limits and numeric defaults.

Every module reads its desk-scale limits and default interval width from
this single location.
"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type  # pylint: disable=invalid-name

import logging
from fractions import Fraction
from typing import Final

log = logging.getLogger(__name__)


class Limits:
    """
    # Summary

    Centralized Limits and Defaults

    ## Description

    Provides the documented desk-scale limits of the exact algorithms and the
    default root-isolation width. Exact algorithms are exponential (coloring,
    isomorphism, K- search) or cubic-to-quartic in big integers (elimination,
    characteristic polynomials), so sweep configurations are validated
    against these values.

    ## Usage

    ```python
    width = Limits.default_width()
    # Returns: Fraction(1, 1073741824)

    Limits.require_order(31, Limits.MAX_MATRIX_ORDER, "matrix")
    # Raises: ValueError
    ```

    ## Design Notes

    - All limits are class constants
    - MAX_GRAPH_ORDER bounds every graph, including graphs read from files
    - Search routines only warn above their limit; sweep configuration rejects
    """

    MAX_GRAPH_ORDER: Final = 1024
    MAX_MATRIX_ORDER: Final = 30
    MAX_ISOMORPHISM_ORDER: Final = 25
    MAX_COLORING_ORDER: Final = 30
    MAX_KMINUS_ORDER: Final = 20
    DEFAULT_WIDTH_EXPONENT: Final = 30
    DEFAULT_FLOAT_TOLERANCE: Final = 1e-9

    @classmethod
    def width_from_exponent(cls, exponent: int) -> Fraction:
        """
        # Summary

        Return the interval width 2^-exponent.

        ## Raises

        - ValueError: if exponent is negative
        """
        if exponent < 0:
            raise ValueError(f"width exponent must be >= 0, got {exponent}")
        return Fraction(1, 2**exponent)

    @classmethod
    def default_width(cls) -> Fraction:
        """Return the default root isolation width, 2^-30."""
        return cls.width_from_exponent(cls.DEFAULT_WIDTH_EXPONENT)

    @classmethod
    def require_order(cls, order: int, limit: int, what: str) -> int:
        """
        # Summary

        Validate that ``order`` does not exceed ``limit``.

        ## Returns

        - order, unchanged

        ## Raises

        - ValueError: if order > limit
        """
        if order > limit:
            raise ValueError(f"{what} order {order} exceeds the limit of {limit}")
        return order

    @classmethod
    def warn_if_above(cls, order: int, limit: int, what: str) -> bool:
        """
        # Summary

        Log a warning when a search is asked to run above its intended size.

        ## Returns

        - True if a warning was logged
        """
        if order > limit:
            log.warning("%s on %d vertices exceeds the intended limit of %d; this may be slow", what, order, limit)
            return True
        return False
