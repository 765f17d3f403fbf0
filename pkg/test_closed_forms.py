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
Unit tests for closed_forms module.

Every closed form is compared against the exact linear algebra on the
graph it describes; numpy supplies the float eigenvalues for the bound
checks.
"""

from fractions import Fraction

import numpy as np
import pytest
from closed_forms import (
    QuadraticSurd,
    bridge_inverse_case,
    bridge_inverse_entry,
    bridge_lambda1_bounds,
    charpoly_bridge_formula,
    charpoly_reseminant_formula,
    complete_inverse,
    det_bridge_complement_formula,
    det_bridge_formula,
    det_complete_formula,
    det_suspension_formula,
    edge_count_bridge_formula,
    edge_count_bridge_mm1_formula,
    edge_count_complete_formula,
    edge_count_reseminant_formula,
    golden_row_dependency,
    minus_one_multiplicity_bridge_formula,
    minus_one_multiplicity_reseminant_formula,
    reseminant_lambda1_bounds,
)
from enums import InverseCaseEnum, SurdBranchEnum
from errors import FormulaDomainError
from exact_linalg import char_poly, complement_adjacency, det_bareiss, inverse
from graph_core import BridgeParams, adjacency_matrix, bridge_graph, complete_graph, reseminant_tilde, suspension_graph
from polynomials import IntPolynomial, factor_multiplicity

PLUS_ONE = IntPolynomial.from_coefficients([1, 1])


def _pairs(sum_min: int, sum_max: int, min_n: int = 1):
    return [(m, total - m) for total in range(sum_min, sum_max + 1) for m in range(total - 1, 0, -1) if m >= total - m >= min_n]


def _largest_eigenvalue(graph) -> float:
    return float(np.linalg.eigvalsh(np.array(adjacency_matrix(graph).to_lists(), dtype=float))[-1])


# ============================================================================
# Determinant Tests (100-199)
# ============================================================================


@pytest.mark.parametrize("k, expected", [(1, 0), (2, -1), (3, 2), (4, -3), (7, 6)])
def test_det_complete_formula_00100(k, expected):
    """
    # Summary

    det A(K_k) = (-1)^(k-1) (k-1), matching Bareiss

    ### Pass/Fail Criteria

    - PASS: Formula equals the expected value and the computed determinant
    - FAIL: Otherwise
    """
    assert det_complete_formula(k) == expected
    assert det_bareiss(adjacency_matrix(complete_graph(k))) == expected


@pytest.mark.parametrize("m, n", _pairs(3, 11))
def test_det_bridge_formula_00110(m, n):
    """
    # Summary

    Bridge determinant formula matches Bareiss on every B(m,n), m+n <= 11

    ### Pass/Fail Criteria

    - PASS: Equal
    - FAIL: Otherwise
    """
    assert det_bridge_formula(m, n) == det_bareiss(adjacency_matrix(bridge_graph(BridgeParams(m=m, n=n))))


def test_det_bridge_formula_00120():
    """
    # Summary

    Worked values and parameter validation

    ### Pass/Fail Criteria

    - PASS: B(4,3) gives -4, B(2,1) gives 0; m < n raises ValueError
    - FAIL: Otherwise
    """
    assert det_bridge_formula(4, 3) == -4
    assert det_bridge_formula(2, 1) == 0
    with pytest.raises(ValueError, match="m must be >= n"):
        det_bridge_formula(2, 3)


@pytest.mark.parametrize("m, n", _pairs(4, 10))
def test_det_bridge_complement_formula_00130(m, n):
    """
    # Summary

    Complement determinant matches Bareiss where the formula is defined

    ### Pass/Fail Criteria

    - PASS: Equal for m+n >= 5 and for (2,2); (3,1) raises FormulaDomainError
    - FAIL: Otherwise
    """
    computed = det_bareiss(complement_adjacency(adjacency_matrix(bridge_graph(BridgeParams(m=m, n=n)))))
    if (m, n) == (3, 1):
        with pytest.raises(FormulaDomainError):
            det_bridge_complement_formula(m, n)
        return
    assert det_bridge_complement_formula(m, n) == computed


@pytest.mark.parametrize("m, n", _pairs(4, 10))
def test_det_suspension_formula_00140(m, n):
    """
    # Summary

    Suspension determinant formula matches Bareiss for m+n > 3

    ### Pass/Fail Criteria

    - PASS: Equal
    - FAIL: Otherwise
    """
    assert det_suspension_formula(m, n) == det_bareiss(adjacency_matrix(suspension_graph(BridgeParams(m=m, n=n))))


def test_det_suspension_formula_00150():
    """
    # Summary

    Suspension worked values and the excluded regime

    ### Pass/Fail Criteria

    - PASS: S(4,3) gives -19, S(3,1) gives -2, S(2,2) gives 2; S(2,1) raises
    - FAIL: Otherwise
    """
    assert det_suspension_formula(4, 3) == -19
    assert det_suspension_formula(3, 1) == -2
    assert det_suspension_formula(2, 2) == 2
    with pytest.raises(FormulaDomainError, match="m\\+n > 3"):
        det_suspension_formula(2, 1)


# ============================================================================
# Inverse Tests (200-299)
# ============================================================================


@pytest.mark.parametrize("k", range(2, 8))
def test_complete_inverse_00200(k):
    """
    # Summary

    A(K_k)^-1 = J/(k-1) - I matches Gauss-Jordan

    ### Pass/Fail Criteria

    - PASS: Entries equal
    - FAIL: Otherwise
    """
    assert complete_inverse(k).entries == inverse(adjacency_matrix(complete_graph(k))).entries


def test_complete_inverse_00210():
    """
    # Summary

    K_1 has no inverse

    ### Pass/Fail Criteria

    - PASS: FormulaDomainError
    - FAIL: No exception
    """
    with pytest.raises(FormulaDomainError, match="k >= 2"):
        complete_inverse(1)


def test_bridge_inverse_case_00220():
    """
    # Summary

    Entry classification for B(4,3), 1-based

    ### Pass/Fail Criteria

    - PASS: Bridge rows and columns give None; others get the expected case
    - FAIL: Otherwise
    """
    assert bridge_inverse_case(4, 3, 4, 1) is None
    assert bridge_inverse_case(4, 3, 2, 5) is None
    assert bridge_inverse_case(4, 3, 1, 1) == InverseCaseEnum.DIAGONAL
    assert bridge_inverse_case(4, 3, 1, 3) == InverseCaseEnum.SAME_CLIQUE
    assert bridge_inverse_case(4, 3, 6, 7) == InverseCaseEnum.SAME_CLIQUE
    assert bridge_inverse_case(4, 3, 2, 6) == InverseCaseEnum.CROSS_CLIQUE
    with pytest.raises(ValueError, match="outside 1..7"):
        bridge_inverse_case(4, 3, 8, 1)
    with pytest.raises(FormulaDomainError, match="singular"):
        bridge_inverse_case(2, 1, 1, 1)


@pytest.mark.parametrize("m, n", _pairs(4, 9))
def test_bridge_inverse_entry_00230(m, n):
    """
    # Summary

    Every covered closed-form inverse entry matches Gauss-Jordan

    ### Pass/Fail Criteria

    - PASS: Covered entries equal; uncovered entries are exactly the bridge rows and columns
    - FAIL: Otherwise
    """
    computed = inverse(adjacency_matrix(bridge_graph(BridgeParams(m=m, n=n))))
    order = m + n
    for i in range(1, order + 1):
        for j in range(1, order + 1):
            entry = bridge_inverse_entry(m, n, i, j)
            if i in (m, m + 1) or j in (m, m + 1):
                assert entry is None
            else:
                assert entry == computed[i - 1, j - 1], (i, j)


def test_bridge_inverse_entry_00240():
    """
    # Summary

    Closed-form values on B(4,3)

    ### Pass/Fail Criteria

    - PASS: diagonal -3/4, same clique 1/4, cross clique -1/4
    - FAIL: Otherwise
    """
    assert bridge_inverse_entry(4, 3, 1, 1) == Fraction(-3, 4)
    assert bridge_inverse_entry(4, 3, 1, 2) == Fraction(1, 4)
    assert bridge_inverse_entry(4, 3, 1, 6) == Fraction(-1, 4)


# ============================================================================
# Characteristic Polynomial and Multiplicity Tests (300-399)
# ============================================================================


@pytest.mark.parametrize("m", range(3, 9))
def test_charpoly_bridge_formula_00300(m):
    """
    # Summary

    Factored B(m,m-1) characteristic polynomial expands to the computed one

    ### Pass/Fail Criteria

    - PASS: Expansion equals Faddeev-LeVerrier; degree 2m-1
    - FAIL: Otherwise
    """
    expected = char_poly(adjacency_matrix(bridge_graph(BridgeParams(m=m, n=m - 1))))
    assert charpoly_bridge_formula(m).expand() == expected
    assert expected.degree == 2 * m - 1


def test_charpoly_bridge_formula_00310():
    """
    # Summary

    Rendering and the excluded regime

    ### Pass/Fail Criteria

    - PASS: m=3 renders "(x^3 - 4x - 2)(x - 1)(x + 1)"; m=2 raises
    - FAIL: Otherwise
    """
    assert charpoly_bridge_formula(3).to_string() == "(x^3 - 4x - 2)(x - 1)(x + 1)"
    with pytest.raises(FormulaDomainError, match="m > 2"):
        charpoly_bridge_formula(2)


@pytest.mark.parametrize("n", range(0, 8))
def test_charpoly_reseminant_formula_00320(n):
    """
    # Summary

    Factored R~n characteristic polynomial expands to the computed one

    ### Pass/Fail Criteria

    - PASS: Expansion equals Faddeev-LeVerrier; degree n+5
    - FAIL: Otherwise
    """
    expected = char_poly(adjacency_matrix(reseminant_tilde(n)))
    assert charpoly_reseminant_formula(n).expand() == expected
    assert expected.degree == n + 5


def test_charpoly_reseminant_formula_00330():
    """
    # Summary

    R~0 is C5: the cubic contains the eigenvalue 2

    ### Pass/Fail Criteria

    - PASS: The cubic factor vanishes at 2; two factors only; n < 0 raises
    - FAIL: Otherwise
    """
    factored = charpoly_reseminant_formula(0)
    assert len(factored.factors) == 2
    assert factored.factors[0].polynomial.evaluate(2) == 0
    with pytest.raises(FormulaDomainError):
        charpoly_reseminant_formula(-1)


@pytest.mark.parametrize("m, n", _pairs(5, 11, min_n=2))
def test_minus_one_multiplicity_bridge_formula_00340(m, n):
    """
    # Summary

    -1 has multiplicity m+n-4 in B(m,n) for n >= 2

    ### Pass/Fail Criteria

    - PASS: Formula equals the multiplicity of (x + 1) in the computed polynomial
    - FAIL: Otherwise
    """
    polynomial = char_poly(adjacency_matrix(bridge_graph(BridgeParams(m=m, n=n))))
    assert minus_one_multiplicity_bridge_formula(m, n) == factor_multiplicity(PLUS_ONE, polynomial)


@pytest.mark.parametrize("m, n", [(4, 1), (2, 2), (3, 1)])
def test_minus_one_multiplicity_bridge_formula_00350(m, n):
    """
    # Summary

    Pendant and small bridges are outside the multiplicity formula

    ### Pass/Fail Criteria

    - PASS: FormulaDomainError
    - FAIL: No exception
    """
    with pytest.raises(FormulaDomainError):
        minus_one_multiplicity_bridge_formula(m, n)


@pytest.mark.parametrize("n", range(0, 8))
def test_minus_one_multiplicity_reseminant_formula_00360(n):
    """
    # Summary

    -1 has multiplicity n in R~n

    ### Pass/Fail Criteria

    - PASS: Formula equals the computed multiplicity
    - FAIL: Otherwise
    """
    polynomial = char_poly(adjacency_matrix(reseminant_tilde(n)))
    assert minus_one_multiplicity_reseminant_formula(n) == factor_multiplicity(PLUS_ONE, polynomial)


# ============================================================================
# Edge Count and Eigenvalue Bound Tests (400-499)
# ============================================================================


def test_edge_count_formulas_00400():
    """
    # Summary

    Edge-count formulas match the constructed graphs

    ### Pass/Fail Criteria

    - PASS: All equal on a range of parameters
    - FAIL: Otherwise
    """
    for k in range(1, 9):
        assert edge_count_complete_formula(k) == complete_graph(k).edge_count
    for m, n in _pairs(2, 10):
        assert edge_count_bridge_formula(m, n) == bridge_graph(BridgeParams(m=m, n=n)).edge_count
    for m in range(2, 9):
        assert edge_count_bridge_mm1_formula(m) == bridge_graph(BridgeParams(m=m, n=m - 1)).edge_count
    for n in range(0, 9):
        assert edge_count_reseminant_formula(n) == reseminant_tilde(n).edge_count
    with pytest.raises(FormulaDomainError):
        edge_count_bridge_mm1_formula(1)


@pytest.mark.parametrize("m, n", _pairs(3, 10))
def test_bridge_lambda1_bounds_00410(m, n):
    """
    # Summary

    The largest eigenvalue of B(m,n) lies within its bounds

    ### Pass/Fail Criteria

    - PASS: lower <= lambda1 <= upper within 1e-9
    - FAIL: Otherwise
    """
    lower, upper = bridge_lambda1_bounds(m, n)
    value = _largest_eigenvalue(bridge_graph(BridgeParams(m=m, n=n)))
    assert float(lower) - 1e-9 <= value <= float(upper) + 1e-9


def test_bridge_lambda1_bounds_00420():
    """
    # Summary

    Equal cliques tighten the lower bound

    ### Pass/Fail Criteria

    - PASS: (3,3) gives (7/3, 3); (4,3) gives (3, 4)
    - FAIL: Otherwise
    """
    assert bridge_lambda1_bounds(3, 3) == (Fraction(7, 3), Fraction(3))
    assert bridge_lambda1_bounds(4, 3) == (Fraction(3), Fraction(4))


@pytest.mark.parametrize("n", range(0, 9))
def test_reseminant_lambda1_bounds_00430(n):
    """
    # Summary

    The largest eigenvalue of R~n lies within its bounds

    ### Pass/Fail Criteria

    - PASS: lower <= lambda1 <= upper within 1e-9
    - FAIL: Otherwise
    """
    lower, upper = reseminant_lambda1_bounds(n)
    value = _largest_eigenvalue(reseminant_tilde(n))
    assert float(lower) - 1e-9 <= value <= float(upper) + 1e-9


# ============================================================================
# QuadraticSurd and Golden Row Dependency Tests (500-599)
# ============================================================================


def test_quadratic_surd_00500():
    """
    # Summary

    Exact arithmetic in Q(sqrt 5)

    ### Pass/Fail Criteria

    - PASS: phi^2 - phi = 1; both golden roots satisfy x^2 + x - 1 = 0
    - FAIL: Otherwise
    """
    phi = QuadraticSurd(a=Fraction(1, 2), b=Fraction(1, 2))
    assert (phi * phi - phi).is_rational_value(1)
    for branch in SurdBranchEnum:
        x = QuadraticSurd.golden(branch)
        assert (x * x + x - 1).is_zero
    assert QuadraticSurd.of(3).is_rational_value(3)
    assert (2 * phi).b == 1


@pytest.mark.parametrize(
    "a, b, expected",
    [("0", "0", 0), ("2", "-1", -1), ("-2", "1", 1), ("3", "-1", 1), ("-3", "1", -1), ("1", "1", 1), ("-1", "0", -1)],
)
def test_quadratic_surd_00510(a, b, expected):
    """
    # Summary

    Exact sign of a + b*sqrt(5)

    ### Pass/Fail Criteria

    - PASS: sign matches the float sign
    - FAIL: Otherwise
    """
    surd = QuadraticSurd(a=Fraction(a), b=Fraction(b))
    assert surd.sign() == expected
    assert np.sign(float(Fraction(a)) + float(Fraction(b)) * 5**0.5) == expected


def test_quadratic_surd_00520():
    """
    # Summary

    String rendering

    ### Pass/Fail Criteria

    - PASS: golden conjugate renders "-1/2 + 1/2*sqrt(5)"; pure surds render without a rational part
    - FAIL: Otherwise
    """
    assert QuadraticSurd.golden(SurdBranchEnum.CONJUGATE).to_string() == "-1/2 + 1/2*sqrt(5)"
    assert QuadraticSurd.golden(SurdBranchEnum.NEGATIVE).to_string() == "-1/2 - 1/2*sqrt(5)"
    assert str(QuadraticSurd(b=Fraction(-1))) == "-sqrt(5)"
    assert str(QuadraticSurd(a=Fraction(3, 2))) == "3/2"


@pytest.mark.parametrize("branch", list(SurdBranchEnum))
@pytest.mark.parametrize("n", range(0, 7))
def test_golden_row_dependency_00530(n, branch):
    """
    # Summary

    The row dependency of xI - A(R~n) holds at both golden roots

    ### Pass/Fail Criteria

    - PASS: True
    - FAIL: False
    """
    assert golden_row_dependency(n, branch)


def test_golden_row_dependency_00540():
    """
    # Summary

    Negative n is rejected

    ### Pass/Fail Criteria

    - PASS: FormulaDomainError
    - FAIL: No exception
    """
    with pytest.raises(FormulaDomainError):
        golden_row_dependency(-1, SurdBranchEnum.CONJUGATE)
