#!/usr/bin/env python3
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
Unit tests for polynomials module.

Tests IntPolynomial arithmetic and rendering, exact division helpers,
square-free decomposition and integer factorization.
"""

from fractions import Fraction

import pytest
import sympy
from polynomials import (
    FactoredPolynomial,
    IntPolynomial,
    PolynomialFactor,
    exact_quotient,
    factor_multiplicity,
    factor_over_integers,
    poly_divides,
    poly_divmod,
    polynomial_gcd,
    square_free_decomposition,
)

CUBIC = IntPolynomial.from_coefficients([-2, -4, 0, 1])
GOLDEN = IntPolynomial.from_coefficients([-1, 1, 1])
PLUS_ONE = IntPolynomial.from_coefficients([1, 1])

# ============================================================================
# IntPolynomial Construction Tests (100-199)
# ============================================================================


def test_int_polynomial_00100():
    """
    # Summary

    from_coefficients drops trailing zeros

    ### Pass/Fail Criteria

    - PASS: [1, 2, 0, 0] becomes (1, 2) with degree 1
    - FAIL: Trailing zeros are kept
    """
    polynomial = IntPolynomial.from_coefficients([1, 2, 0, 0])
    assert polynomial.coefficients == (1, 2)
    assert polynomial.degree == 1


def test_int_polynomial_00110():
    """
    # Summary

    Direct construction with a trailing zero is rejected

    ### Pass/Fail Criteria

    - PASS: ValueError (pydantic ValidationError) is raised
    - FAIL: The non-canonical tuple is accepted
    """
    with pytest.raises(ValueError, match="must not end in a zero"):
        IntPolynomial(coefficients=(1, 0))


def test_int_polynomial_00120():
    """
    # Summary

    Zero polynomial has degree -1 and renders as "0"

    ### Pass/Fail Criteria

    - PASS: is_zero, degree -1, "0"
    - FAIL: Otherwise
    """
    zero = IntPolynomial.from_coefficients([0, 0])
    assert zero.is_zero
    assert zero.degree == -1
    assert str(zero) == "0"


def test_int_polynomial_00130():
    """
    # Summary

    linear() gives the primitive polynomial of a rational root

    ### Pass/Fail Criteria

    - PASS: linear(3/2) is 2x - 3 and linear(-1) is x + 1
    - FAIL: Otherwise
    """
    assert IntPolynomial.linear(Fraction(3, 2)).coefficients == (-3, 2)
    assert IntPolynomial.linear(-1) == PLUS_ONE


def test_int_polynomial_00140():
    """
    # Summary

    from_rationals clears denominators and normalises the sign

    ### Pass/Fail Criteria

    - PASS: -x/2 + 1/3 becomes 3x - 2
    - FAIL: Otherwise
    """
    polynomial = IntPolynomial.from_rationals([Fraction(1, 3), Fraction(-1, 2)])
    assert polynomial.coefficients == (-2, 3)


# ============================================================================
# IntPolynomial Arithmetic and Rendering Tests (200-299)
# ============================================================================


def test_int_polynomial_00200():
    """
    # Summary

    to_string renders highest degree first with unit coefficients elided

    ### Pass/Fail Criteria

    - PASS: "x^3 - 4x - 2" and "x^2 + x - 1"
    - FAIL: Any other rendering
    """
    assert CUBIC.to_string() == "x^3 - 4x - 2"
    assert GOLDEN.to_string() == "x^2 + x - 1"
    assert IntPolynomial.from_coefficients([0, -3, 0, -1]).to_string() == "-x^3 - 3x"


def test_int_polynomial_00210():
    """
    # Summary

    Evaluation, derivative and composition with -x

    ### Pass/Fail Criteria

    - PASS: Values match hand computation
    - FAIL: Otherwise
    """
    assert CUBIC.evaluate(2) == -2
    assert CUBIC.evaluate(Fraction(1, 2)) == Fraction(-31, 8)
    assert CUBIC.derivative().coefficients == (-4, 0, 3)
    assert CUBIC.compose_negated().coefficients == (-2, 4, 0, -1)


def test_int_polynomial_00220():
    """
    # Summary

    Addition, subtraction, multiplication and powers

    ### Pass/Fail Criteria

    - PASS: (x+1)^3 = x^3 + 3x^2 + 3x + 1 and p - p = 0
    - FAIL: Otherwise
    """
    assert (PLUS_ONE**3).coefficients == (1, 3, 3, 1)
    assert (PLUS_ONE * GOLDEN).coefficients == (-1, 0, 2, 1)
    assert (CUBIC - CUBIC).is_zero
    assert (CUBIC + GOLDEN).coefficients == (-3, -3, 1, 1)
    assert (CUBIC * 2).coefficients == (-4, -8, 0, 2)


def test_int_polynomial_00230():
    """
    # Summary

    content and primitive_part

    ### Pass/Fail Criteria

    - PASS: 6x^2 - 4 has content 2 and primitive part 3x^2 - 2
    - FAIL: Otherwise
    """
    polynomial = IntPolynomial.from_coefficients([-4, 0, 6])
    assert polynomial.content() == 2
    assert polynomial.primitive_part().coefficients == (-2, 0, 3)


@pytest.mark.parametrize(
    "coefficients",
    [[9, 0, 0, -6], [0, 0, 35, -21, 14], [-7], [12, 18, 30, 42]],
    ids=["negative-leading", "zero-low", "constant", "four-terms"],
)
def test_int_polynomial_00240(coefficients):
    """
    # Summary

    content agrees with sympy and carries the sign of the leading coefficient

    ### Pass/Fail Criteria

    - PASS: |content| equals sympy's content; content * primitive_part is the input
    - FAIL: Otherwise
    """
    polynomial = IntPolynomial.from_coefficients(coefficients)
    x = sympy.Symbol("x")
    expected = sympy.Poly(list(reversed(coefficients)), x, domain="ZZ").content()
    assert abs(polynomial.content()) == abs(expected)
    assert polynomial.content() * polynomial.leading > 0
    assert [polynomial.content() * c for c in polynomial.primitive_part().coefficients] == coefficients


def test_int_polynomial_00250():
    """
    # Summary

    from_rationals clears mixed denominators with their least common multiple

    ## Description

    x^2/4 - x/6 + 3/10 scaled by 60 is 15x^2 - 10x + 18, already primitive.

    ### Pass/Fail Criteria

    - PASS: Coefficients (18, -10, 15)
    - FAIL: Otherwise
    """
    polynomial = IntPolynomial.from_rationals([Fraction(3, 10), Fraction(-1, 6), Fraction(1, 4)])
    assert polynomial.coefficients == (18, -10, 15)


# ============================================================================
# Division Helper Tests (300-399)
# ============================================================================


def test_poly_divides_00300():
    """
    # Summary

    poly_divides detects exact division over Q

    ## Description

    (x^2 + x - 1)(x - 2) = x^3 - x^2 - 3x + 2 is divisible by the golden
    quadratic; the cubic x^3 - 4x - 2 is not.

    ### Pass/Fail Criteria

    - PASS: True then False
    - FAIL: Otherwise
    """
    product = IntPolynomial.from_coefficients([2, -3, -1, 1])
    assert poly_divides(GOLDEN, product) is True
    assert poly_divides(GOLDEN, CUBIC) is False


def test_exact_quotient_00310():
    """
    # Summary

    exact_quotient returns the integer quotient

    ### Pass/Fail Criteria

    - PASS: (x^3 - x^2 - 3x + 2) / (x^2 + x - 1) = x - 2
    - FAIL: Otherwise
    """
    product = IntPolynomial.from_coefficients([2, -3, -1, 1])
    assert exact_quotient(product, GOLDEN) == IntPolynomial.linear(2)


def test_exact_quotient_00320():
    """
    # Summary

    exact_quotient raises on a remainder

    ### Pass/Fail Criteria

    - PASS: ValueError mentioning "does not divide"
    - FAIL: No exception
    """
    with pytest.raises(ValueError, match="does not divide"):
        exact_quotient(CUBIC, GOLDEN)


def test_poly_divmod_00330():
    """
    # Summary

    poly_divmod rejects a zero divisor

    ### Pass/Fail Criteria

    - PASS: ValueError
    - FAIL: No exception
    """
    with pytest.raises(ValueError, match="nonzero polynomial"):
        poly_divmod(CUBIC, IntPolynomial())


def test_factor_multiplicity_00340():
    """
    # Summary

    factor_multiplicity counts repeated factors

    ### Pass/Fail Criteria

    - PASS: (x+1)^3 (x-2) has x+1 with multiplicity 3 and the golden quadratic with 0
    - FAIL: Otherwise
    """
    polynomial = PLUS_ONE**3 * IntPolynomial.linear(2)
    assert factor_multiplicity(PLUS_ONE, polynomial) == 3
    assert factor_multiplicity(GOLDEN, polynomial) == 0


def test_factor_multiplicity_00350():
    """
    # Summary

    factor_multiplicity argument validation

    ### Pass/Fail Criteria

    - PASS: ValueError for a constant factor and for the zero polynomial
    - FAIL: No exception
    """
    with pytest.raises(ValueError, match="degree >= 1"):
        factor_multiplicity(IntPolynomial.constant(2), CUBIC)
    with pytest.raises(ValueError, match="unbounded"):
        factor_multiplicity(PLUS_ONE, IntPolynomial())


def test_polynomial_gcd_00360():
    """
    # Summary

    polynomial_gcd is primitive with positive leading coefficient

    ### Pass/Fail Criteria

    - PASS: gcd((x+1)^2, 2(x+1)(x-2)) = x + 1; coprime inputs give 1
    - FAIL: Otherwise
    """
    left = PLUS_ONE**2
    right = PLUS_ONE * IntPolynomial.linear(2) * 2
    assert polynomial_gcd(left, right) == PLUS_ONE
    assert polynomial_gcd(CUBIC, GOLDEN) == IntPolynomial.constant(1)


# ============================================================================
# Square-free Decomposition Tests (400-499)
# ============================================================================


def test_square_free_decomposition_00400():
    """
    # Summary

    Yun decomposition separates multiplicities

    ### Pass/Fail Criteria

    - PASS: (x+1)^2 (x-2) gives [(x - 2, 1), (x + 1, 2)]
    - FAIL: Otherwise
    """
    polynomial = PLUS_ONE**2 * IntPolynomial.linear(2)
    assert square_free_decomposition(polynomial) == [(IntPolynomial.linear(2), 1), (PLUS_ONE, 2)]


def test_square_free_decomposition_00410():
    """
    # Summary

    Decomposition of a characteristic-polynomial-shaped product

    ## Description

    (x^3 - 4x - 2)(x - 1)(x + 1)^5 multiplies back from the decomposition.

    ### Pass/Fail Criteria

    - PASS: Product of f_i^i equals the input and exponents are 1 and 5
    - FAIL: Otherwise
    """
    polynomial = CUBIC * IntPolynomial.linear(1) * PLUS_ONE**5
    parts = square_free_decomposition(polynomial)
    product = IntPolynomial.constant(1)
    for factor, exponent in parts:
        product = product * factor**exponent
    assert product == polynomial
    assert [exponent for _, exponent in parts] == [1, 5]


def test_square_free_decomposition_00420():
    """
    # Summary

    Constants decompose to nothing; zero is rejected

    ### Pass/Fail Criteria

    - PASS: [] for 7, ValueError for 0
    - FAIL: Otherwise
    """
    assert square_free_decomposition(IntPolynomial.constant(7)) == []
    with pytest.raises(ValueError):
        square_free_decomposition(IntPolynomial())


# ============================================================================
# Factorization Tests (500-599)
# ============================================================================


def test_factor_over_integers_00500():
    """
    # Summary

    Factored display of the B(3,2) characteristic polynomial

    ### Pass/Fail Criteria

    - PASS: "(x^3 - 4x - 2)(x - 1)(x + 1)"
    - FAIL: Any other rendering
    """
    polynomial = CUBIC * IntPolynomial.linear(1) * PLUS_ONE
    assert factor_over_integers(polynomial).to_string() == "(x^3 - 4x - 2)(x - 1)(x + 1)"


def test_factor_over_integers_00510():
    """
    # Summary

    Integer content is kept as the unit and expand() round-trips

    ### Pass/Fail Criteria

    - PASS: 2x^2 - 2 renders "2(x - 1)(x + 1)" and expands back
    - FAIL: Otherwise
    """
    polynomial = IntPolynomial.from_coefficients([-2, 0, 2])
    factored = factor_over_integers(polynomial)
    assert factored.to_string() == "2(x - 1)(x + 1)"
    assert factored.expand() == polynomial


def test_factor_over_integers_00520():
    """
    # Summary

    Factorization agrees with sympy on an irreducible quartic times a square

    ### Pass/Fail Criteria

    - PASS: Expanded result equals input and the factor count matches sympy
    - FAIL: Otherwise
    """
    quartic = IntPolynomial.from_coefficients([1, 0, 0, 1, 1])
    polynomial = quartic * GOLDEN**2
    factored = factor_over_integers(polynomial)
    x = sympy.Symbol("x")
    _, pairs = sympy.factor_list(sympy.Poly(list(reversed(polynomial.coefficients)), x))
    assert factored.expand() == polynomial
    assert len(factored.factors) == len(pairs)


def test_factored_polynomial_00530():
    """
    # Summary

    FactoredPolynomial renders x as a bare variable and shows exponents

    ### Pass/Fail Criteria

    - PASS: "x^2(x + 1)^3" and "-x" renderings
    - FAIL: Otherwise
    """
    factored = FactoredPolynomial(factors=(PolynomialFactor(polynomial=IntPolynomial.x(), exponent=2), PolynomialFactor(polynomial=PLUS_ONE, exponent=3)))
    assert factored.to_string() == "x^2(x + 1)^3"
    assert FactoredPolynomial(unit=-1, factors=(PolynomialFactor(polynomial=IntPolynomial.x()),)).to_string() == "-x"
    assert FactoredPolynomial(unit=5).to_string() == "5"


def test_factor_over_integers_00540():
    """
    # Summary

    Zero cannot be factored

    ### Pass/Fail Criteria

    - PASS: ValueError
    - FAIL: No exception
    """
    with pytest.raises(ValueError, match="zero polynomial"):
        factor_over_integers(IntPolynomial())
