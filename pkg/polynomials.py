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
Dense integer polynomials.

Coefficients are stored lowest degree first with no trailing zero, so the
zero polynomial is the empty tuple. Division, gcd and square-free work is
done over the rationals and normalised back to primitive integer
polynomials.
"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type  # pylint: disable=invalid-name

import logging
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

import sympy
from pydantic import BaseModel, ConfigDict, Field, field_validator

log = logging.getLogger(__name__)

POLYNOMIAL_CONFIG = ConfigDict(frozen=True)

Scalar = Union[int, Fraction]


def _trim(coefficients: list) -> list:
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return coefficients


def rational_divmod(numerator: Sequence[Fraction], denominator: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Long division over Q; both arguments trimmed, denominator nonzero."""
    remainder = list(numerator)
    divisor = list(denominator)
    if not divisor:
        raise ZeroDivisionError("polynomial division by zero")
    if len(remainder) < len(divisor):
        return [], remainder
    quotient = [Fraction(0)] * (len(remainder) - len(divisor) + 1)
    lead = divisor[-1]
    while len(remainder) >= len(divisor) and remainder:
        shift = len(remainder) - len(divisor)
        factor = remainder[-1] / lead
        quotient[shift] = factor
        for index, coefficient in enumerate(divisor):
            remainder[shift + index] -= factor * coefficient
        _trim(remainder)
    return _trim(quotient), remainder


def rational_gcd(left: Sequence[Fraction], right: Sequence[Fraction]) -> list[Fraction]:
    """Monic gcd over Q."""
    a = _trim(list(left))
    b = _trim(list(right))
    while b:
        _, remainder = rational_divmod(a, b)
        a, b = b, remainder
    if not a:
        return []
    lead = a[-1]
    return [coefficient / lead for coefficient in a]


def rational_derivative(coefficients: Sequence[Fraction]) -> list[Fraction]:
    return _trim([coefficient * power for power, coefficient in enumerate(coefficients)][1:])


class IntPolynomial(BaseModel):
    """
    # Summary

    Dense univariate polynomial with integer coefficients.

    ## Description

    ``coefficients[k]`` is the coefficient of x^k. The tuple never ends in a
    zero; the zero polynomial is the empty tuple and has degree -1.

    ## Usage

    ```python
    cubic = IntPolynomial.from_coefficients([-2, -4, 0, 1])
    str(cubic)
    # Returns: "x^3 - 4x - 2"
    cubic.evaluate(2)
    # Returns: -2
    ```

    ## Raises

    - ValidationError: if the coefficient tuple ends in a zero
    """

    model_config = POLYNOMIAL_CONFIG

    coefficients: tuple[int, ...] = Field(default=(), description="Integer coefficients, lowest degree first, no trailing zero")

    @field_validator("coefficients")
    @classmethod
    def validate_canonical(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        """Reject a trailing zero coefficient."""
        if value and value[-1] == 0:
            raise ValueError("coefficients must not end in a zero; use IntPolynomial.from_coefficients to normalise")
        return value

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int]) -> "IntPolynomial":
        """Build a polynomial, dropping trailing zeros."""
        return cls(coefficients=tuple(_trim([int(c) for c in coefficients])))

    @classmethod
    def from_rationals(cls, coefficients: Iterable[Fraction]) -> "IntPolynomial":
        """
        # Summary

        Clear denominators of a rational polynomial.

        ## Returns

        - The primitive integer polynomial with positive leading coefficient
          that is a rational multiple of the input (zero maps to zero).
        """
        values = _trim([Fraction(c) for c in coefficients])
        if not values:
            return cls()
        common = math.lcm(*(value.denominator for value in values))
        integers = [int(value * common) for value in values]
        return cls.from_coefficients(integers).primitive_part()

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        """Return the constant polynomial ``value``."""
        return cls.from_coefficients([value])

    @classmethod
    def x(cls) -> "IntPolynomial":
        """Return the polynomial x."""
        return cls(coefficients=(0, 1))

    @classmethod
    def linear(cls, root: Scalar) -> "IntPolynomial":
        """
        # Summary

        Return the primitive linear polynomial vanishing at ``root``.

        ## Usage

        ```python
        IntPolynomial.linear(Fraction(3, 2))
        # Returns: 2x - 3
        ```
        """
        value = Fraction(root)
        return cls(coefficients=(-value.numerator, value.denominator))

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coefficients[-1] if self.coefficients else 0

    @property
    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self.coefficients

    def coefficient(self, power: int) -> int:
        """Coefficient of x^power (0 beyond the degree)."""
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return 0

    def as_fractions(self) -> list[Fraction]:
        """Coefficients as Fractions, lowest first."""
        return [Fraction(c) for c in self.coefficients]

    def content(self) -> int:
        """Gcd of the coefficients, signed like the leading coefficient."""
        if self.is_zero:
            return 0
        result = math.gcd(*self.coefficients)
        return result if self.leading > 0 else -result

    def primitive_part(self) -> "IntPolynomial":
        """Divide out the content; the result has positive leading coefficient."""
        if self.is_zero:
            return self
        content = self.content()
        return IntPolynomial(coefficients=tuple(c // content for c in self.coefficients))

    def derivative(self) -> "IntPolynomial":
        """Formal derivative."""
        return IntPolynomial.from_coefficients(c * power for power, c in enumerate(self.coefficients) if power > 0)

    def evaluate(self, value: Scalar) -> Scalar:
        """Exact Horner evaluation; integer in, integer out."""
        result: Scalar = 0
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def compose_negated(self) -> "IntPolynomial":
        """Return p(-x)."""
        return IntPolynomial(coefficients=tuple(c if power % 2 == 0 else -c for power, c in enumerate(self.coefficients)))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial.from_coefficients(self.coefficient(k) + other.coefficient(k) for k in range(size))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(coefficients=tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial.from_coefficients(c * other for c in self.coefficients)
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return IntPolynomial.from_coefficients(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("polynomial exponent must be >= 0")
        result = IntPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def to_string(self, variable: str = "x") -> str:
        """
        # Summary

        Human-readable form, highest degree first.

        ## Usage

        ```python
        IntPolynomial.from_coefficients([-1, 1, 1]).to_string()
        # Returns: "x^2 + x - 1"
        ```
        """
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                term = variable if power == 1 else f"{variable}^{power}"
                body = term if magnitude == 1 else f"{magnitude}{term}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_string()


def poly_divmod(numerator: IntPolynomial, denominator: IntPolynomial) -> tuple[list[Fraction], list[Fraction]]:
    """
    # Summary

    Rational long division.

    ## Returns

    - (quotient, remainder) as trimmed Fraction coefficient lists

    ## Raises

    - ValueError: if denominator is the zero polynomial
    """
    if denominator.is_zero:
        raise ValueError("denominator must be a nonzero polynomial")
    return rational_divmod(numerator.as_fractions(), denominator.as_fractions())


def poly_divides(divisor: IntPolynomial, dividend: IntPolynomial) -> bool:
    """True iff ``divisor`` divides ``dividend`` over Q (zero remainder)."""
    _, remainder = poly_divmod(dividend, divisor)
    return not remainder


def exact_quotient(dividend: IntPolynomial, divisor: IntPolynomial) -> IntPolynomial:
    """
    # Summary

    Return dividend / divisor, which must be exact with integer coefficients.

    ## Raises

    - ValueError: if the division leaves a remainder or the quotient is not integral
    """
    quotient, remainder = poly_divmod(dividend, divisor)
    if remainder:
        raise ValueError(f"({divisor}) does not divide ({dividend})")
    if any(c.denominator != 1 for c in quotient):
        raise ValueError(f"quotient of ({dividend}) by ({divisor}) is not integral")
    return IntPolynomial.from_coefficients(int(c) for c in quotient)


def factor_multiplicity(factor: IntPolynomial, polynomial: IntPolynomial) -> int:
    """
    # Summary

    Largest k such that factor^k divides polynomial.

    ## Raises

    - ValueError: if factor is constant or polynomial is zero
    """
    if factor.degree < 1:
        raise ValueError("factor must have degree >= 1")
    if polynomial.is_zero:
        raise ValueError("multiplicity in the zero polynomial is unbounded")
    count = 0
    current = polynomial.as_fractions()
    divisor = factor.as_fractions()
    while True:
        quotient, remainder = rational_divmod(current, divisor)
        if remainder:
            return count
        count += 1
        current = quotient


def polynomial_gcd(left: IntPolynomial, right: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (constant 1 when coprime)."""
    return IntPolynomial.from_rationals(rational_gcd(left.as_fractions(), right.as_fractions()))


def square_free_decomposition(polynomial: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """
    # Summary

    Yun's square-free decomposition over Q.

    ## Description

    Returns ``[(f_i, i), ...]`` with each f_i primitive, square-free,
    pairwise coprime and of degree >= 1, such that polynomial equals a
    constant times the product of f_i^i. Roots of f_i are exactly the roots
    of the input with multiplicity i.

    ## Raises

    - ValueError: if polynomial is zero
    """
    if polynomial.is_zero:
        raise ValueError("square-free decomposition of the zero polynomial is undefined")
    result: list[tuple[IntPolynomial, int]] = []
    f = polynomial.as_fractions()
    if len(f) <= 1:
        return result
    derivative = rational_derivative(f)
    a = rational_gcd(f, derivative)
    b, _ = rational_divmod(f, a)
    c, _ = rational_divmod(derivative, a)
    d = _trim([x - y for x, y in _zip_longest(c, rational_derivative(b))])
    multiplicity = 1
    while len(b) > 1:
        a = rational_gcd(b, d)
        if len(a) > 1:
            result.append((IntPolynomial.from_rationals(a), multiplicity))
        b, _ = rational_divmod(b, a)
        c, _ = rational_divmod(d, a)
        d = _trim([x - y for x, y in _zip_longest(c, rational_derivative(b))])
        multiplicity += 1
    log.debug("square-free decomposition of degree %d: %s", polynomial.degree, [(str(p), k) for p, k in result])
    return result


def _zip_longest(left: Sequence[Fraction], right: Sequence[Fraction]) -> list[tuple[Fraction, Fraction]]:
    size = max(len(left), len(right))
    return [(left[k] if k < len(left) else Fraction(0), right[k] if k < len(right) else Fraction(0)) for k in range(size)]


class PolynomialFactor(BaseModel):
    """One factor of a factored polynomial with its exponent."""

    model_config = POLYNOMIAL_CONFIG

    polynomial: IntPolynomial = Field(description="The factor")
    exponent: int = Field(default=1, ge=1, description="Power to which the factor is raised")


class FactoredPolynomial(BaseModel):
    """
    # Summary

    A polynomial kept as unit times a product of factor powers.

    ## Description

    Used for the closed-form characteristic polynomials, whose factor order
    is part of their stated form, and for display of factored oracle
    polynomials.

    ## Usage

    ```python
    factored = FactoredPolynomial(factors=(PolynomialFactor(polynomial=IntPolynomial.linear(1), exponent=2),))
    factored.to_string()
    # Returns: "(x - 1)^2"
    factored.expand()
    # Returns: x^2 - 2x + 1
    ```
    """

    model_config = POLYNOMIAL_CONFIG

    unit: int = Field(default=1, description="Integer unit in front of the product")
    factors: tuple[PolynomialFactor, ...] = Field(default=(), description="Factors in display order")

    def expand(self) -> IntPolynomial:
        """Multiply the factors out."""
        result = IntPolynomial.constant(self.unit)
        for factor in self.factors:
            result = result * factor.polynomial**factor.exponent
        return result

    def to_string(self, variable: str = "x") -> str:
        """Render as ``(x^3 - 4x - 2)(x - 1)(x + 1)^2``."""
        pieces: list[str] = []
        for factor in self.factors:
            power = f"^{factor.exponent}" if factor.exponent > 1 else ""
            if factor.polynomial.coefficients == (0, 1):
                pieces.append(f"{variable}{power}")
            else:
                pieces.append(f"({factor.polynomial.to_string(variable)}){power}")
        body = "".join(pieces)
        if not body:
            return str(self.unit)
        if self.unit == 1:
            return body
        if self.unit == -1:
            return f"-{body}"
        return f"{self.unit}{body}"

    def __str__(self) -> str:
        return self.to_string()


def factor_over_integers(polynomial: IntPolynomial) -> FactoredPolynomial:
    """
    # Summary

    Factor an integer polynomial into irreducibles over Z using sympy.

    ## Description

    Factors are normalised to positive leading coefficients and sorted by
    descending degree, then by coefficient tuple, so the output is stable.

    ## Raises

    - ValueError: if polynomial is zero
    """
    if polynomial.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    symbol = sympy.Symbol("x")
    content, pairs = sympy.Poly(list(reversed(polynomial.coefficients)), symbol, domain="ZZ").factor_list()
    unit = int(content)
    factors: list[PolynomialFactor] = []
    for factor, exponent in pairs:
        coefficients = [int(c) for c in reversed(factor.all_coeffs())]
        part = IntPolynomial.from_coefficients(coefficients)
        if part.leading < 0:
            part = -part
            unit *= (-1) ** int(exponent)
        factors.append(PolynomialFactor(polynomial=part, exponent=int(exponent)))
    factors.sort(key=lambda item: (-item.polynomial.degree, item.polynomial.coefficients))
    return FactoredPolynomial(unit=unit, factors=tuple(factors))
