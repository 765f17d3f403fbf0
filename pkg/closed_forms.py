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
Closed-form evaluators for the bridge, suspension, complete and reseminant families.

Each function evaluates a stated formula directly, without building a
matrix, and refuses parameters outside the formula's valid regime. The
verification suite compares these values against the exact oracles.

Inverse-matrix indices are 1-based, as in the block layout of A(B(m,n)):
rows 1..m-1 and m+2..m+n are the non-bridge vertices, m and m+1 the
bridge vertices.
"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type  # pylint: disable=invalid-name

import logging
from fractions import Fraction
from typing import Optional, Union

from enums import InverseCaseEnum, SurdBranchEnum
from errors import FormulaDomainError
from exact_linalg import RatMatrix
from graph_core import BridgeParams, adjacency_matrix, reseminant_tilde
from polynomials import FactoredPolynomial, IntPolynomial, PolynomialFactor
from pydantic import BaseModel, ConfigDict, Field, field_serializer

log = logging.getLogger(__name__)

GOLDEN_QUADRATIC = IntPolynomial.from_coefficients([-1, 1, 1])
PLUS_ONE = IntPolynomial.from_coefficients([1, 1])


def _params(m: int, n: int) -> BridgeParams:
    return BridgeParams(m=m, n=n)


def det_complete_formula(k: int) -> int:
    """det A(K_k) = (-1)^(k-1) (k-1)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return (-1) ** (k - 1) * (k - 1)


def complete_inverse(k: int) -> RatMatrix:
    """
    # Summary

    A(K_k)^-1 = (1/(k-1)) J - I.

    ## Raises

    - FormulaDomainError: if k < 2 (A(K_1) is the singular 1x1 zero matrix)
    """
    if k < 2:
        raise FormulaDomainError(f"A(K_k) is invertible only for k >= 2, got k={k}")
    share = Fraction(1, k - 1)
    return RatMatrix.from_rows([[share - (1 if i == j else 0) for j in range(k)] for i in range(k)])


def det_bridge_formula(m: int, n: int) -> int:
    """
    # Summary

    det A(B(m,n)) = (-1)^(m+n-1) (3 - (m+n)).

    ## Raises

    - ValueError: if m < n or n < 1
    """
    p = _params(m, n)
    return (-1) ** (p.order - 1) * (3 - p.order)


def det_bridge_complement_formula(m: int, n: int) -> int:
    """
    # Summary

    Determinant of the complement of B(m,n).

    ## Description

    Zero when m+n != 4 and 1 for (2,2). The remaining m+n = 4 case, (3,1),
    has no stated value.

    ## Raises

    - ValueError: if m < n or n < 1
    - FormulaDomainError: for (3,1)
    """
    p = _params(m, n)
    if p.order != 4:
        return 0
    if (p.m, p.n) == (2, 2):
        return 1
    raise FormulaDomainError(f"no closed form for the complement determinant of B({m},{n})")


def det_suspension_formula(m: int, n: int) -> int:
    """
    # Summary

    det A(S(m,n)) = (-1)^(m+n) (4mn - 5(m+n) + 6).

    ## Raises

    - ValueError: if m < n or n < 1
    - FormulaDomainError: if m+n <= 3 (the apex is isolated, or A(B(m,n)) is singular)
    """
    p = _params(m, n)
    if p.order <= 3:
        raise FormulaDomainError(f"suspension determinant formula needs m+n > 3, got m={m}, n={n}")
    return (-1) ** p.order * (4 * m * n - 5 * p.order + 6)


def bridge_inverse_case(m: int, n: int, i: int, j: int) -> Optional[InverseCaseEnum]:
    """
    # Summary

    Which closed-form case covers entry (i, j) of A(B(m,n))^-1, 1-based.

    ## Returns

    - None for entries in a bridge row or column, which no case covers

    ## Raises

    - FormulaDomainError: if m+n == 3 (A(B(2,1)) is singular)
    - ValueError: if i or j is outside 1..m+n
    """
    p = _params(m, n)
    if p.order == 3:
        raise FormulaDomainError("A(B(2,1)) is singular")
    for index in (i, j):
        if not 1 <= index <= p.order:
            raise ValueError(f"index {index} is outside 1..{p.order}")
    if {i, j} & {m, m + 1}:
        return None
    if i == j:
        return InverseCaseEnum.DIAGONAL
    if (i < m) == (j < m):
        return InverseCaseEnum.SAME_CLIQUE
    return InverseCaseEnum.CROSS_CLIQUE


def bridge_inverse_entry(m: int, n: int, i: int, j: int) -> Optional[Fraction]:
    """
    # Summary

    Closed-form entry (i, j) of A(B(m,n))^-1, 1-based; None when uncovered.

    ## Description

    - diagonal: -(m+n-4)/(m+n-3)
    - same clique, off-diagonal: 1/(m+n-3)
    - different cliques: -1/(m+n-3)

    ## Usage

    ```python
    bridge_inverse_entry(4, 3, 1, 1)
    # Returns: Fraction(-3, 4)
    bridge_inverse_entry(4, 3, 4, 1)
    # Returns: None
    ```
    """
    case = bridge_inverse_case(m, n, i, j)
    if case is None:
        return None
    order = m + n
    if case == InverseCaseEnum.DIAGONAL:
        return Fraction(-(order - 4), order - 3)
    if case == InverseCaseEnum.SAME_CLIQUE:
        return Fraction(1, order - 3)
    return Fraction(-1, order - 3)


def bridge_cubic(m: int) -> IntPolynomial:
    """x^3 + (3-m)x^2 + (2-2m)x - 2."""
    return IntPolynomial.from_coefficients([-2, 2 - 2 * m, 3 - m, 1])


def reseminant_cubic(n: int) -> IntPolynomial:
    """x^3 - (n+1)x^2 - (n+3)x + (3n+2)."""
    return IntPolynomial.from_coefficients([3 * n + 2, -(n + 3), -(n + 1), 1])


def charpoly_bridge_formula(m: int) -> FactoredPolynomial:
    """
    # Summary

    Characteristic polynomial of A(B(m,m-1)) in factored form.

    ## Description

    (x^3 + (3-m)x^2 + (2-2m)x - 2)(x - (m-2))(x + 1)^(2m-5), degree 2m-1.

    ## Usage

    ```python
    charpoly_bridge_formula(3).to_string()
    # Returns: "(x^3 - 4x - 2)(x - 1)(x + 1)"
    ```

    ## Raises

    - FormulaDomainError: if m <= 2
    """
    if m <= 2:
        raise FormulaDomainError(f"bridge characteristic polynomial formula needs m > 2, got {m}")
    return FactoredPolynomial(
        factors=(
            PolynomialFactor(polynomial=bridge_cubic(m)),
            PolynomialFactor(polynomial=IntPolynomial.linear(m - 2)),
            PolynomialFactor(polynomial=PLUS_ONE, exponent=2 * m - 5),
        )
    )


def charpoly_reseminant_formula(n: int) -> FactoredPolynomial:
    """
    # Summary

    Characteristic polynomial of A(R~n) in factored form.

    ## Description

    (x^3 - (n+1)x^2 - (n+3)x + (3n+2))(x + 1)^n(x^2 + x - 1), degree n+5.
    The (x + 1) factor is omitted when n = 0.

    ## Raises

    - FormulaDomainError: if n < 0
    """
    if n < 0:
        raise FormulaDomainError(f"n must be >= 0, got {n}")
    factors = [PolynomialFactor(polynomial=reseminant_cubic(n))]
    if n > 0:
        factors.append(PolynomialFactor(polynomial=PLUS_ONE, exponent=n))
    factors.append(PolynomialFactor(polynomial=GOLDEN_QUADRATIC))
    return FactoredPolynomial(factors=tuple(factors))


def minus_one_multiplicity_bridge_formula(m: int, n: int) -> int:
    """
    # Summary

    Multiplicity of -1 in the spectrum of B(m,n): m+n-4.

    ## Raises

    - FormulaDomainError: unless n >= 2 and m+n > 4
    """
    p = _params(m, n)
    if p.n < 2 or p.order <= 4:
        raise FormulaDomainError(f"-1 multiplicity formula needs n >= 2 and m+n > 4, got m={m}, n={n}")
    return p.order - 4


def minus_one_multiplicity_reseminant_formula(n: int) -> int:
    """Multiplicity of -1 in the spectrum of R~n: n (its order minus 5)."""
    if n < 0:
        raise FormulaDomainError(f"n must be >= 0, got {n}")
    return n


def edge_count_complete_formula(k: int) -> int:
    """e(K_k) = k(k-1)/2."""
    return k * (k - 1) // 2


def edge_count_bridge_formula(m: int, n: int) -> int:
    """e(B(m,n)) = m(m-1)/2 + n(n-1)/2 + 1."""
    _params(m, n)
    return edge_count_complete_formula(m) + edge_count_complete_formula(n) + 1


def edge_count_bridge_mm1_formula(m: int) -> int:
    """e(B(m,m-1)) = m^2 - 2m + 2."""
    if m < 2:
        raise FormulaDomainError(f"B(m,m-1) needs m >= 2, got {m}")
    return m * m - 2 * m + 2


def edge_count_reseminant_formula(n: int) -> int:
    """e(R~n) = 2 + (n+2)(n+3)/2."""
    if n < 0:
        raise FormulaDomainError(f"n must be >= 0, got {n}")
    return 2 + (n + 2) * (n + 3) // 2


def bridge_lambda1_bounds(m: int, n: int) -> tuple[Fraction, Fraction]:
    """
    # Summary

    Bounds on the largest eigenvalue of B(m,n).

    ## Description

    m-1 <= lambda1 <= m (clique average degree and maximum degree). When
    m = n the lower bound tightens to the whole-graph average degree
    m - 1 + 1/m.
    """
    p = _params(m, n)
    lower = Fraction(m - 1) + (Fraction(1, m) if p.m == p.n else 0)
    return lower, Fraction(m)


def reseminant_lambda1_bounds(n: int) -> tuple[Fraction, Fraction]:
    """(n+1)(n+4)/(n+3) <= lambda1(R~n) <= n+2."""
    if n < 0:
        raise FormulaDomainError(f"n must be >= 0, got {n}")
    return Fraction((n + 1) * (n + 4), n + 3), Fraction(n + 2)


Scalar = Union[int, Fraction]


class QuadraticSurd(BaseModel):
    """
    # Summary

    Exact number a + b*sqrt(5) with rational a and b.

    ## Usage

    ```python
    phi = QuadraticSurd(a=Fraction(1, 2), b=Fraction(1, 2))
    (phi * phi - phi).is_rational_value(1)
    # Returns: True
    ```
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: Fraction = Field(default=Fraction(0), description="Rational part")
    b: Fraction = Field(default=Fraction(0), description="Coefficient of sqrt(5)")

    @field_serializer("a", "b")
    def serialize_part(self, value: Fraction) -> str:
        return str(value)

    @classmethod
    def of(cls, value: Union["QuadraticSurd", Scalar]) -> "QuadraticSurd":
        """Lift a rational into Q(sqrt 5)."""
        if isinstance(value, QuadraticSurd):
            return value
        return cls(a=Fraction(value))

    @classmethod
    def golden(cls, branch: SurdBranchEnum) -> "QuadraticSurd":
        """phi^-1 = (-1 + sqrt 5)/2 or -phi = (-1 - sqrt 5)/2."""
        sign = 1 if branch == SurdBranchEnum.CONJUGATE else -1
        return cls(a=Fraction(-1, 2), b=Fraction(sign, 2))

    def __add__(self, other: Union["QuadraticSurd", Scalar]) -> "QuadraticSurd":
        other = QuadraticSurd.of(other)
        return QuadraticSurd(a=self.a + other.a, b=self.b + other.b)

    def __neg__(self) -> "QuadraticSurd":
        return QuadraticSurd(a=-self.a, b=-self.b)

    def __sub__(self, other: Union["QuadraticSurd", Scalar]) -> "QuadraticSurd":
        return self + (-QuadraticSurd.of(other))

    def __mul__(self, other: Union["QuadraticSurd", Scalar]) -> "QuadraticSurd":
        other = QuadraticSurd.of(other)
        return QuadraticSurd(a=self.a * other.a + 5 * self.b * other.b, b=self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational_value(self, value: Scalar) -> bool:
        """True if the surd equals the rational ``value``."""
        return self.b == 0 and self.a == value

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(5)."""
        if self.a >= 0 and self.b >= 0:
            return 0 if self.is_zero else 1
        if self.a <= 0 and self.b <= 0:
            return -1
        rational_wins = self.a * self.a > 5 * self.b * self.b
        if self.a > 0:
            return 1 if rational_wins else -1
        return -1 if rational_wins else 1

    def to_string(self) -> str:
        """``a + b*sqrt(5)`` with exact fractions."""
        if self.b == 0:
            return str(self.a)
        surd = "sqrt(5)" if abs(self.b) == 1 else f"{abs(self.b)}*sqrt(5)"
        if self.a == 0:
            return f"-{surd}" if self.b < 0 else surd
        return f"{self.a} {'-' if self.b < 0 else '+'} {surd}"

    def __str__(self) -> str:
        return self.to_string()


def golden_row_dependency(n: int, branch: SurdBranchEnum) -> bool:
    """
    # Summary

    Verify a linear row dependency of xI - A(R~n) at a root of x^2 + x - 1.

    ## Description

    With the duplicated cycle vertex i = 0 and cycle indices mod 5:

    - at x = -phi: row(i-1) = row(i+1) + phi*row(i-2) - phi*row(i+2)
    - at x = phi^-1: row(i-1) = row(i+1) + phi^-1*row(i+2) - phi^-1*row(i-2)

    The identity is checked entrywise in exact Q(sqrt 5) arithmetic. A true
    result proves xI - A(R~n) singular, so x is an eigenvalue.

    ## Raises

    - FormulaDomainError: if n < 0
    """
    if n < 0:
        raise FormulaDomainError(f"n must be >= 0, got {n}")
    x = QuadraticSurd.golden(branch)
    adjacency = adjacency_matrix(reseminant_tilde(n))
    size = adjacency.nrows

    def row(index: int) -> list[QuadraticSurd]:
        return [(x if index == col else QuadraticSurd()) - adjacency[index, col] for col in range(size)]

    previous, following, second_previous, second_following = row(4), row(1), row(3), row(2)
    if branch == SurdBranchEnum.NEGATIVE:
        weight = QuadraticSurd(a=Fraction(1, 2), b=Fraction(1, 2))
        combined = [f + weight * (sp - sf) for f, sp, sf in zip(following, second_previous, second_following)]
    else:
        weight = QuadraticSurd.golden(SurdBranchEnum.CONJUGATE)
        combined = [f + weight * (sf - sp) for f, sp, sf in zip(following, second_previous, second_following)]
    holds = all((left - right).is_zero for left, right in zip(previous, combined))
    log.debug("golden row dependency for R~%d at %s: %s", n, branch.value, holds)
    return holds
