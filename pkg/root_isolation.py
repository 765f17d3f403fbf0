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
Certified real root isolation for integer polynomials.

Roots are isolated with Sturm sequences on the square-free factors of the
input and refined by sign bisection. A non-exact interval (lo, hi) has the
root strictly inside and neither endpoint is a root of its factor; an exact
interval has lo == hi equal to the root.
"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type  # pylint: disable=invalid-name

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

from enums import OrderingEnum
from limits import Limits
from polynomials import IntPolynomial, polynomial_gcd, rational_derivative, rational_divmod, square_free_decomposition
from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

log = logging.getLogger(__name__)

ROOT_CONFIG = ConfigDict(frozen=True, arbitrary_types_allowed=True)

Rational = Union[int, Fraction]


@lru_cache(maxsize=1024)
def _sturm_chain(coefficients: tuple[int, ...]) -> tuple[tuple[Fraction, ...], ...]:
    """Sturm sequence p, p', -rem(...) ... of a square-free polynomial."""
    p0 = [Fraction(c) for c in coefficients]
    chain = [p0, rational_derivative(p0)]
    while len(chain[-1]) > 1:
        _, remainder = rational_divmod(chain[-2], chain[-1])
        if not remainder:
            break
        chain.append([-c for c in remainder])
    return tuple(tuple(p) for p in chain)


def _evaluate(coefficients: Sequence[Fraction], value: Fraction) -> Fraction:
    result = Fraction(0)
    for c in reversed(coefficients):
        result = result * value + c
    return result


def _sign_variations(chain: Sequence[Sequence[Fraction]], value: Fraction) -> int:
    signs = []
    for poly in chain:
        evaluated = _evaluate(poly, value)
        if evaluated:
            signs.append(evaluated > 0)
    return sum(1 for left, right in zip(signs, signs[1:]) if left != right)


def count_roots(factor: IntPolynomial, lo: Rational, hi: Rational) -> int:
    """
    # Summary

    Number of distinct real roots of a square-free polynomial in (lo, hi].

    ## Raises

    - ValueError: if factor has degree < 1 or lo > hi
    """
    if factor.degree < 1:
        raise ValueError("count_roots needs a polynomial of degree >= 1")
    if lo > hi:
        raise ValueError(f"empty interval ({lo}, {hi}]")
    chain = _sturm_chain(factor.coefficients)
    return _sign_variations(chain, Fraction(lo)) - _sign_variations(chain, Fraction(hi))


def _sign(value: Rational) -> int:
    return (value > 0) - (value < 0)


def cauchy_bound(polynomial: IntPolynomial) -> Fraction:
    """Every real root r satisfies |r| < bound."""
    if polynomial.degree < 1:
        raise ValueError("cauchy_bound needs a polynomial of degree >= 1")
    lead = abs(polynomial.leading)
    return 1 + max(Fraction(abs(c), lead) for c in polynomial.coefficients[:-1])


def _isolate_square_free(factor: IntPolynomial) -> list[tuple[Fraction, Fraction]]:
    if factor.degree == 1:
        root = Fraction(-factor.coefficients[0], factor.coefficients[1])
        return [(root, root)]
    bound = cauchy_bound(factor)
    pending = [(-bound, bound)]
    isolated: list[tuple[Fraction, Fraction]] = []
    while pending:
        lo, hi = pending.pop()
        found = count_roots(factor, lo, hi)
        if found == 0:
            continue
        if found == 1:
            isolated.append(_settle(factor, lo, hi))
            continue
        mid = (lo + hi) / 2
        pending.append((lo, mid))
        pending.append((mid, hi))
    return isolated


def _settle(factor: IntPolynomial, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Turn a (lo, hi] interval holding one root into the strict-interior form."""
    if factor.evaluate(hi) == 0:
        return hi, hi
    while factor.evaluate(lo) == 0:
        candidate = (lo + hi) / 2
        if count_roots(factor, candidate, hi) == 1:
            lo = candidate
        else:
            hi = candidate
            if factor.evaluate(hi) == 0:
                return hi, hi
    return lo, hi


def _bisect(factor: IntPolynomial, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink a strict-interior interval by sign bisection until hi - lo <= width."""
    steps = 0
    low_sign = _sign(factor.evaluate(lo))
    while hi - lo > width:
        mid = (lo + hi) / 2
        value = factor.evaluate(mid)
        steps += 1
        if value == 0:
            return mid, mid
        if _sign(value) != low_sign:
            hi = mid
        else:
            lo = mid
    log.debug("bisected root of %s in %d steps", factor, steps)
    return lo, hi


class RootInterval(BaseModel):
    """
    # Summary

    Certified isolating interval for one real root.

    ## Description

    ``polynomial`` is the polynomial whose root is described, and it has
    exactly ``multiplicity`` roots (counted with multiplicity) in the
    interval. ``factor`` is the square-free factor of ``polynomial`` that
    vanishes at the root; it has exactly one root in the interval, which is
    what refinement and comparisons use.

    When ``lo == hi`` the root is exactly that rational number. Otherwise
    the root lies strictly between ``lo`` and ``hi`` and neither endpoint is
    a root of ``factor``.

    ## Usage

    ```python
    roots = isolate_real_roots(IntPolynomial.from_coefficients([-1, 1, 1]), Fraction(1, 1000))
    roots[0].lo, roots[0].hi
    # An interval of width <= 1/1000 around 0.618...
    ```

    ## Raises

    - ValidationError: if lo > hi, multiplicity < 1 or factor is constant
    """

    model_config = ROOT_CONFIG

    polynomial: IntPolynomial = Field(description="Polynomial whose root is isolated")
    factor: IntPolynomial = Field(description="Square-free factor with exactly one root in the interval")
    lo: Fraction = Field(description="Lower bound")
    hi: Fraction = Field(description="Upper bound")
    multiplicity: int = Field(default=1, ge=1, description="Multiplicity of the root in polynomial")

    @model_validator(mode="after")
    def validate_interval(self) -> "RootInterval":
        """Check lo <= hi and that the factor is non-constant."""
        if self.lo > self.hi:
            raise ValueError(f"lo ({self.lo}) must be <= hi ({self.hi})")
        if self.factor.degree < 1:
            raise ValueError("factor must have degree >= 1")
        return self

    @field_serializer("lo", "hi")
    def serialize_bound(self, value: Fraction) -> str:
        """Exact fraction string."""
        return str(value)

    @property
    def is_exact(self) -> bool:
        """True when the root is the rational number lo == hi."""
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        """hi - lo."""
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        """(lo + hi) / 2."""
        return (self.lo + self.hi) / 2

    def refine(self, width: Rational) -> "RootInterval":
        """
        # Summary

        Return an equivalent interval of width <= ``width``.

        ## Raises

        - ValueError: if width is negative
        """
        target = Fraction(width)
        if target < 0:
            raise ValueError("width must be >= 0")
        if self.is_exact or self.width <= target:
            return self
        if target == 0:
            raise ValueError("an irrational root cannot be refined to width 0")
        lo, hi = _bisect(self.factor, self.lo, self.hi, target)
        return self.model_copy(update={"lo": lo, "hi": hi})

    def negated(self) -> "RootInterval":
        """Interval for minus the root, as a root of p(-x)."""
        polynomial = self.polynomial.compose_negated()
        factor = self.factor.compose_negated().primitive_part()
        if polynomial.leading < 0:
            polynomial = -polynomial
        return RootInterval(polynomial=polynomial, factor=factor, lo=-self.hi, hi=-self.lo, multiplicity=self.multiplicity)

    def display(self, decimals: Optional[int] = None) -> str:
        """``[lo, hi]`` with exact endpoints, or a marked decimal approximation."""
        if decimals is not None:
            return f"~{decimal_string(self.midpoint, decimals)} (approx)"
        if self.is_exact:
            return str(self.lo)
        return f"[{self.lo}, {self.hi}]"


def decimal_string(value: Fraction, decimals: int) -> str:
    """
    # Summary

    Round an exact fraction to ``decimals`` places without going through floats.

    ## Usage

    ```python
    decimal_string(Fraction(2, 3), 4)
    # Returns: "0.6667"
    ```
    """
    if decimals < 0:
        raise ValueError("decimals must be >= 0")
    scale = 10**decimals
    scaled = value * scale
    rounded = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    sign = "-" if rounded < 0 else ""
    rounded = abs(rounded)
    whole, fractional = divmod(rounded, scale)
    if decimals == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{fractional:0{decimals}d}"


def exact_root(value: Rational, polynomial: Optional[IntPolynomial] = None, multiplicity: int = 1) -> RootInterval:
    """Exact interval for a known rational root."""
    factor = IntPolynomial.linear(value)
    return RootInterval(polynomial=polynomial or factor, factor=factor, lo=Fraction(value), hi=Fraction(value), multiplicity=multiplicity)


def _open_overlap(left: RootInterval, right: RootInterval) -> bool:
    if left.is_exact and right.is_exact:
        return left.lo == right.lo
    if left.is_exact:
        return right.lo < left.lo < right.hi
    if right.is_exact:
        return left.lo < right.lo < left.hi
    return max(left.lo, right.lo) < min(left.hi, right.hi)


def _separate(roots: list[RootInterval]) -> list[RootInterval]:
    """Refine roots of different factors until no two intervals overlap."""
    ordered = sorted(roots, key=lambda r: (r.lo, r.hi))
    changed = True
    while changed:
        changed = False
        for index in range(len(ordered) - 1):
            left, right = ordered[index], ordered[index + 1]
            if _open_overlap(left, right):
                if left.is_exact and right.is_exact:
                    raise ValueError(f"distinct factors share the root {left.lo}")
                ordered[index] = left.refine(left.width / 2)
                ordered[index + 1] = right.refine(right.width / 2)
                changed = True
        ordered.sort(key=lambda r: (r.lo, r.hi))
    return ordered


def isolate_real_roots(polynomial: IntPolynomial, width: Optional[Rational] = None) -> list[RootInterval]:
    """
    # Summary

    Disjoint isolating intervals for all distinct real roots.

    ## Description

    The polynomial is split into square-free factors (Yun), each factor's
    roots are isolated with its Sturm sequence and bisected to ``width``
    (default 2^-30), intervals of different factors are refined until
    disjoint, and the result is sorted by descending root.

    ## Raises

    - ValueError: if polynomial is zero
    """
    if polynomial.is_zero:
        raise ValueError("cannot isolate the roots of the zero polynomial")
    target = Limits.default_width() if width is None else Fraction(width)
    if target <= 0:
        raise ValueError("width must be > 0")
    roots: list[RootInterval] = []
    for factor, multiplicity in square_free_decomposition(polynomial):
        for lo, hi in _isolate_square_free(factor):
            interval = RootInterval(polynomial=polynomial, factor=factor, lo=lo, hi=hi, multiplicity=multiplicity)
            roots.append(interval.refine(target))
    separated = _separate(roots)
    log.debug("isolated %d distinct real roots of a degree-%d polynomial", len(separated), polynomial.degree)
    return list(reversed(separated))


def _flip(ordering: OrderingEnum) -> OrderingEnum:
    if ordering == OrderingEnum.LESS:
        return OrderingEnum.GREATER
    if ordering == OrderingEnum.GREATER:
        return OrderingEnum.LESS
    return ordering


def _compare_rationals(left: Fraction, right: Fraction) -> OrderingEnum:
    if left < right:
        return OrderingEnum.LESS
    if left > right:
        return OrderingEnum.GREATER
    return OrderingEnum.EQUAL


def compare_root_to_rational(root: RootInterval, value: Rational) -> OrderingEnum:
    """
    # Summary

    Exact comparison of the isolated root with a rational number.

    ## Description

    Outside the interval the answer is immediate. Inside, the factor is
    evaluated at ``value``: a zero means equality, otherwise the sign
    against the lower endpoint tells which side the root is on.

    ## Returns

    - OrderingEnum for (root compared to value)
    """
    q = Fraction(value)
    if root.is_exact:
        return _compare_rationals(root.lo, q)
    if q <= root.lo:
        return OrderingEnum.GREATER
    if q >= root.hi:
        return OrderingEnum.LESS
    at_value = root.factor.evaluate(q)
    if at_value == 0:
        return OrderingEnum.EQUAL
    if _sign(at_value) != _sign(root.factor.evaluate(root.lo)):
        return OrderingEnum.LESS
    return OrderingEnum.GREATER


def _has_root_strictly_inside(polynomial: IntPolynomial, lo: Fraction, hi: Fraction) -> bool:
    inside = count_roots(polynomial, lo, hi)
    if polynomial.evaluate(hi) == 0:
        inside -= 1
    return inside > 0


def compare_roots(left: RootInterval, right: RootInterval) -> OrderingEnum:
    """
    # Summary

    Exact comparison of two isolated roots.

    ## Description

    Equal roots are detected through the gcd of the two factors; distinct
    roots are separated by refining both intervals, which terminates.

    ## Returns

    - OrderingEnum for (left compared to right)
    """
    common = polynomial_gcd(left.factor, right.factor)
    while True:
        if left.is_exact:
            return _flip(compare_root_to_rational(right, left.lo))
        if right.is_exact:
            return compare_root_to_rational(left, right.lo)
        if left.hi <= right.lo:
            return OrderingEnum.LESS
        if right.hi <= left.lo:
            return OrderingEnum.GREATER
        if common.degree >= 1 and _has_root_strictly_inside(common, max(left.lo, right.lo), min(left.hi, right.hi)):
            return OrderingEnum.EQUAL
        left = left.refine(left.width / 2)
        right = right.refine(right.width / 2)
