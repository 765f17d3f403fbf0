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
Exact dense linear algebra over the integers and rationals.

This is the oracle layer that every closed form is checked against, so it
never touches floating point: determinants use fraction-free (Bareiss)
elimination, characteristic polynomials use an all-integer
Faddeev-LeVerrier recurrence, and rank and inverse use Fraction elimination.
"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type  # pylint: disable=invalid-name

import logging
from fractions import Fraction
from typing import Iterable, Sequence

from errors import SingularMatrixError
from polynomials import IntPolynomial
from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

log = logging.getLogger(__name__)

MATRIX_CONFIG = ConfigDict(frozen=True)
RATIONAL_MATRIX_CONFIG = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class MatrixShapeMixin(BaseModel):
    """Row and column counts shared by the dense matrix models."""

    nrows: int = Field(default=0, ge=0, description="Number of rows")
    ncols: int = Field(default=0, ge=0, description="Number of columns")

    @property
    def is_square(self) -> bool:
        """True when nrows == ncols."""
        return self.nrows == self.ncols

    def _check_entries(self, entries: Sequence[Sequence[object]]) -> None:
        if len(entries) != self.nrows:
            raise ValueError(f"expected {self.nrows} rows, got {len(entries)}")
        for index, row in enumerate(entries):
            if len(row) != self.ncols:
                raise ValueError(f"row {index} has {len(row)} entries, expected {self.ncols}")


class IntMatrix(MatrixShapeMixin):
    """
    # Summary

    Dense integer matrix.

    ## Description

    ``symmetric`` is set by the adjacency constructors; when it is True the
    validator confirms the matrix really is symmetric.

    ## Usage

    ```python
    matrix = IntMatrix.from_rows([[0, 1], [1, 0]], symmetric=True)
    det_bareiss(matrix)
    # Returns: -1
    ```

    ## Raises

    - ValidationError: if the entries are not rectangular with the stated shape, or
      symmetric is True for a non-symmetric matrix
    """

    model_config = MATRIX_CONFIG

    entries: tuple[tuple[int, ...], ...] = Field(default=(), description="Row-major entries")
    symmetric: bool = Field(default=False, description="True when constructed from a symmetric source")

    @model_validator(mode="after")
    def validate_shape(self) -> "IntMatrix":
        """Check the entries against nrows/ncols and the symmetric flag."""
        self._check_entries(self.entries)
        if self.symmetric:
            if not self.is_square:
                raise ValueError("a symmetric matrix must be square")
            for i in range(self.nrows):
                for j in range(i):
                    if self.entries[i][j] != self.entries[j][i]:
                        raise ValueError(f"entry ({i},{j}) differs from ({j},{i}) in a matrix flagged symmetric")
        return self

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], symmetric: bool = False) -> "IntMatrix":
        """Build from nested iterables; the column count comes from the first row."""
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        ncols = len(entries[0]) if entries else 0
        return cls(nrows=len(entries), ncols=ncols, entries=entries, symmetric=symmetric)

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        """size x size identity."""
        return cls.from_rows(([int(i == j) for j in range(size)] for i in range(size)), symmetric=True)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(nrows=nrows, ncols=ncols, entries=tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def all_ones(cls, size: int) -> "IntMatrix":
        """The all-ones matrix J."""
        return cls.from_rows(([1] * size for _ in range(size)), symmetric=True)

    def __getitem__(self, index: tuple[int, int]) -> int:
        row, col = index
        return self.entries[row][col]

    def to_lists(self) -> list[list[int]]:
        """Mutable copy of the entries."""
        return [list(row) for row in self.entries]

    def trace(self) -> int:
        """Sum of the diagonal."""
        return sum(self.entries[i][i] for i in range(min(self.nrows, self.ncols)))

    def transpose(self) -> "IntMatrix":
        if self.nrows == 0 or self.ncols == 0:
            return IntMatrix.zeros(self.ncols, self.nrows)
        return IntMatrix.from_rows(zip(*self.entries))

    def scale(self, factor: int) -> "IntMatrix":
        """Multiply every entry by an integer."""
        return IntMatrix.from_rows(([factor * x for x in row] for row in self.entries), symmetric=self.symmetric)

    def _require_same_shape(self, other: "IntMatrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError(f"shape mismatch: {self.nrows}x{self.ncols} and {other.nrows}x{other.ncols}")

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._require_same_shape(other)
        rows = ([a + b for a, b in zip(left, right)] for left, right in zip(self.entries, other.entries))
        return IntMatrix(nrows=self.nrows, ncols=self.ncols, entries=tuple(tuple(r) for r in rows), symmetric=self.symmetric and other.symmetric)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + other.scale(-1)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        columns = list(zip(*other.entries))
        if not columns:
            return IntMatrix.zeros(self.nrows, other.ncols)
        entries = tuple(tuple(sum(a * b for a, b in zip(row, col) if a and b) for col in columns) for row in self.entries)
        return IntMatrix(nrows=self.nrows, ncols=other.ncols, entries=entries)


class RatMatrix(MatrixShapeMixin):
    """
    # Summary

    Dense matrix of Fractions.

    ## Description

    Entries serialize as exact ``"p/q"`` strings (``"3"`` for integers).
    """

    model_config = RATIONAL_MATRIX_CONFIG

    entries: tuple[tuple[Fraction, ...], ...] = Field(default=(), description="Row-major entries")

    @model_validator(mode="after")
    def validate_shape(self) -> "RatMatrix":
        """Check the entries against nrows/ncols."""
        self._check_entries(self.entries)
        return self

    @field_serializer("entries")
    def serialize_entries(self, value: tuple[tuple[Fraction, ...], ...]) -> list[list[str]]:
        """Exact fraction strings."""
        return [[str(x) for x in row] for row in value]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[object]]) -> "RatMatrix":
        """Build from nested iterables of ints, Fractions or fraction strings."""
        entries = tuple(tuple(Fraction(x) for x in row) for row in rows)
        ncols = len(entries[0]) if entries else 0
        return cls(nrows=len(entries), ncols=ncols, entries=entries)

    @classmethod
    def from_int(cls, matrix: IntMatrix) -> "RatMatrix":
        """Exact embedding of an integer matrix."""
        return cls(nrows=matrix.nrows, ncols=matrix.ncols, entries=tuple(tuple(Fraction(x) for x in row) for row in matrix.entries))

    @classmethod
    def identity(cls, size: int) -> "RatMatrix":
        return cls.from_rows(([int(i == j) for j in range(size)] for i in range(size)))

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        row, col = index
        return self.entries[row][col]

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        columns = list(zip(*other.entries))
        entries = tuple(tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in columns) for row in self.entries)
        return RatMatrix(nrows=self.nrows, ncols=other.ncols, entries=entries)

    def to_strings(self) -> list[list[str]]:
        """Entries as exact fraction strings."""
        return [[str(x) for x in row] for row in self.entries]


def _require_square(matrix: MatrixShapeMixin, operation: str) -> None:
    if not matrix.is_square:
        raise ValueError(f"{operation} needs a square matrix, got {matrix.nrows}x{matrix.ncols}")


def det_bareiss(matrix: IntMatrix) -> int:
    """
    # Summary

    Exact determinant by Bareiss fraction-free elimination.

    ## Description

    Every intermediate value is a minor of the input, so the division by
    the previous pivot is exact and all arithmetic stays in Python ints.
    The empty matrix has determinant 1.

    ## Raises

    - ValueError: if the matrix is not square
    """
    _require_square(matrix, "det_bareiss")
    size = matrix.nrows
    if size == 0:
        return 1
    work = matrix.to_lists()
    sign = 1
    previous = 1
    for k in range(size - 1):
        if work[k][k] == 0:
            for swap in range(k + 1, size):
                if work[swap][k] != 0:
                    work[k], work[swap] = work[swap], work[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = work[k][k]
        for i in range(k + 1, size):
            row_i = work[i]
            lead = row_i[k]
            row_k = work[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // previous
        previous = pivot
    return sign * work[size - 1][size - 1]


def _fraction_echelon(matrix: IntMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Row echelon form over Q and the pivot columns."""
    work = [[Fraction(x) for x in row] for row in matrix.entries]
    pivots: list[int] = []
    row = 0
    for col in range(matrix.ncols):
        pivot_row = next((r for r in range(row, matrix.nrows) if work[r][col] != 0), None)
        if pivot_row is None:
            continue
        work[row], work[pivot_row] = work[pivot_row], work[row]
        for r in range(row + 1, matrix.nrows):
            if work[r][col] != 0:
                factor = work[r][col] / work[row][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
        if row == matrix.nrows:
            break
    return work, pivots


def rank(matrix: IntMatrix) -> int:
    """Rank over the rationals."""
    _, pivots = _fraction_echelon(matrix)
    return len(pivots)


def inverse(matrix: IntMatrix) -> RatMatrix:
    """
    # Summary

    Exact rational inverse by Gauss-Jordan elimination.

    ## Raises

    - ValueError: if the matrix is not square
    - SingularMatrixError: if the determinant is zero
    """
    _require_square(matrix, "inverse")
    size = matrix.nrows
    left = [[Fraction(x) for x in row] for row in matrix.entries]
    right = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for i in range(size):
        pivot_row = next((r for r in range(i, size) if left[r][i] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is not invertible")
        if pivot_row != i:
            left[i], left[pivot_row] = left[pivot_row], left[i]
            right[i], right[pivot_row] = right[pivot_row], right[i]
        pivot = left[i][i]
        left[i] = [x / pivot for x in left[i]]
        right[i] = [x / pivot for x in right[i]]
        for r in range(size):
            if r != i and left[r][i] != 0:
                factor = left[r][i]
                left[r] = [a - factor * b for a, b in zip(left[r], left[i])]
                right[r] = [a - factor * b for a, b in zip(right[r], right[i])]
    return RatMatrix(nrows=size, ncols=size, entries=tuple(tuple(row) for row in right))


def char_poly(matrix: IntMatrix) -> IntPolynomial:
    """
    # Summary

    Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recurrence.

    ## Description

    With M_1 = I, c_{n-k} = -trace(M M_k) / k and M_{k+1} = M M_k + c_{n-k} I.
    For an integer matrix every M_k is an integer matrix and the division
    by k is exact, so the recurrence runs entirely in Python ints.

    ## Raises

    - ValueError: if the matrix is not square
    - ArithmeticError: if a division that must be exact is not
    """
    _require_square(matrix, "char_poly")
    size = matrix.nrows
    coefficients = [0] * (size + 1)
    coefficients[size] = 1
    a = matrix.to_lists()
    current = [[int(i == j) for j in range(size)] for i in range(size)]
    for k in range(1, size + 1):
        columns = list(zip(*current))
        product = [[sum(x * y for x, y in zip(row, col) if x) for col in columns] for row in a]
        trace = sum(product[i][i] for i in range(size))
        if trace % k:
            raise ArithmeticError(f"trace {trace} not divisible by {k}; input is not an integer matrix")
        coefficient = -trace // k
        coefficients[size - k] = coefficient
        for i in range(size):
            product[i][i] += coefficient
        current = product
    result = IntPolynomial.from_coefficients(coefficients)
    log.debug("characteristic polynomial of a %dx%d matrix: %s", size, size, result)
    return result


def complement_adjacency(matrix: IntMatrix) -> IntMatrix:
    """J - I - A for a square 0/1 matrix A."""
    _require_square(matrix, "complement_adjacency")
    size = matrix.nrows
    return IntMatrix.all_ones(size) - IntMatrix.identity(size) - matrix


def shifted(matrix: IntMatrix, shift: int) -> IntMatrix:
    """M + shift * I."""
    _require_square(matrix, "shifted")
    return matrix + IntMatrix.identity(matrix.nrows).scale(shift)
