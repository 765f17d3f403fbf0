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
Unit tests for spectra module.

Tests the closed-form spectra of B(m,m-1) and R~n against the exact oracle
spectrum and numpy, the descriptor helpers and the eigenvalue bound checks.
"""

from fractions import Fraction

import numpy as np
import pytest
from enums import DescriptorKindEnum, FamilyEnum, SurdBranchEnum
from errors import FormulaDomainError, OrderingViolationError
from graph_core import BridgeParams, adjacency_matrix, bridge_graph, complete_graph, cycle5, reseminant_tilde
from polynomials import IntPolynomial
from root_isolation import exact_root, isolate_real_roots
from spectra import (
    SpectrumReport,
    eigenvalue_bound_checks,
    golden_descriptor,
    golden_ratio_membership,
    has_golden_ratio_eigenvalues,
    minus_one_factor,
    oracle_spectrum,
    rational_descriptor,
    snap_integer_root,
    spectrum_bridge,
    spectrum_reseminant,
    verify_descending,
)


def _float_eigenvalues(graph) -> np.ndarray:
    return np.linalg.eigvalsh(np.array(adjacency_matrix(graph).to_lists(), dtype=float))


def _assert_matches_numpy(report: SpectrumReport, graph) -> None:
    """Each descriptor interval holds exactly ``multiplicity`` float eigenvalues."""
    values = _float_eigenvalues(graph)
    for entry in report.entries:
        inside = np.sum((values >= float(entry.root.lo) - 1e-9) & (values <= float(entry.root.hi) + 1e-9))
        assert inside == entry.multiplicity, entry.label


def _multiset(report: SpectrumReport) -> list[tuple[Fraction, Fraction, int]]:
    return [(entry.root.lo, entry.root.hi, entry.multiplicity) for entry in report.entries]


# ============================================================================
# Bridge Spectrum Tests (100-199)
# ============================================================================


@pytest.mark.parametrize("m", range(3, 9))
def test_spectrum_bridge_00100(m):
    """
    # Summary

    Closed-form B(m,m-1) spectrum agrees with numpy

    ### Pass/Fail Criteria

    - PASS: Five descriptors; multiplicities add to 2m-1; intervals hold the float eigenvalues
    - FAIL: Otherwise
    """
    report = spectrum_bridge(m, Fraction(1, 10**6))
    assert [entry.label for entry in report.entries] == ["theta1", "m-2", "theta2", "-1", "theta3"]
    assert report.total == 2 * m - 1
    assert report.multiplicity_of(-1) == 2 * m - 5
    assert report.multiplicity_of(m - 2) == 1
    _assert_matches_numpy(report, bridge_graph(BridgeParams(m=m, n=m - 1)))


def test_spectrum_bridge_00110():
    """
    # Summary

    Closed-form and oracle spectra of B(4,3) describe the same eigenvalues

    ### Pass/Fail Criteria

    - PASS: Same exact values for 2 and -1; every oracle interval overlaps its closed-form partner
    - FAIL: Otherwise
    """
    closed = spectrum_bridge(4)
    oracle = oracle_spectrum(bridge_graph(BridgeParams(m=4, n=3)), name="B(4,3)")
    assert len(closed.entries) == len(oracle.entries)
    for left, right in zip(closed.entries, oracle.entries):
        assert left.multiplicity == right.multiplicity
        assert left.root.lo <= right.root.hi and right.root.lo <= left.root.hi
    assert oracle.multiplicity_of(2) == 1
    assert oracle.multiplicity_of(-1) == 3


def test_spectrum_bridge_00120():
    """
    # Summary

    B(m,m-1) spectrum needs m > 2

    ### Pass/Fail Criteria

    - PASS: FormulaDomainError for m = 2
    - FAIL: No exception
    """
    with pytest.raises(FormulaDomainError, match="m > 2"):
        spectrum_bridge(2)


def test_spectrum_bridge_00130():
    """
    # Summary

    Requested width is honoured and the certified trace contains zero

    ### Pass/Fail Criteria

    - PASS: Every interval width <= 2^-20; trace interval contains 0
    - FAIL: Otherwise
    """
    width = Fraction(1, 2**20)
    report = spectrum_bridge(5, width)
    assert report.width == width
    assert all(entry.root.width <= width for entry in report.entries)
    assert report.trace_is_zero_within_width()


# ============================================================================
# Reseminant Spectrum Tests (200-299)
# ============================================================================


@pytest.mark.parametrize("n", range(1, 9))
def test_spectrum_reseminant_00200(n):
    """
    # Summary

    Closed-form R~n spectrum agrees with numpy

    ### Pass/Fail Criteria

    - PASS: Six descriptors in the certified order; -1 has multiplicity n; intervals hold the float eigenvalues
    - FAIL: Otherwise
    """
    report = spectrum_reseminant(n, Fraction(1, 10**6))
    assert [entry.label for entry in report.entries] == ["theta1", "theta2", "phi^-1", "-1", "-phi", "theta3"]
    assert report.order == n + 5
    assert report.multiplicity_of(-1) == n
    _assert_matches_numpy(report, reseminant_tilde(n))


def test_spectrum_reseminant_00210():
    """
    # Summary

    R~0 is the 5-cycle

    ### Pass/Fail Criteria

    - PASS: 2 once, phi^-1 and -phi twice each
    - FAIL: Otherwise
    """
    report = spectrum_reseminant(0)
    assert [(entry.label, entry.multiplicity) for entry in report.entries] == [("theta1", 1), ("phi^-1", 2), ("-phi", 2)]
    assert report.entries[0].value == 2
    _assert_matches_numpy(report, cycle5())


def test_spectrum_reseminant_00220():
    """
    # Summary

    Rational cubic roots carry exact values

    ### Pass/Fail Criteria

    - PASS: theta2 of R~1 is 1; theta3 of R~4 is -2; both are exact intervals
    - FAIL: Otherwise
    """
    first = spectrum_reseminant(1).entries[1]
    assert first.value == 1
    assert first.root.is_exact
    fourth = spectrum_reseminant(4).entries[-1]
    assert fourth.value == -2
    assert fourth.kind == DescriptorKindEnum.CUBIC_ROOT


def test_spectrum_reseminant_00230():
    """
    # Summary

    Negative n is rejected

    ### Pass/Fail Criteria

    - PASS: FormulaDomainError
    - FAIL: No exception
    """
    with pytest.raises(FormulaDomainError):
        spectrum_reseminant(-1)


# ============================================================================
# Oracle Spectrum and Descriptor Tests (300-399)
# ============================================================================


def test_oracle_spectrum_00300():
    """
    # Summary

    Oracle spectrum of K4 is exact

    ### Pass/Fail Criteria

    - PASS: 3 once and -1 three times, both RATIONAL
    - FAIL: Otherwise
    """
    report = oracle_spectrum(complete_graph(4), name="K4")
    assert [(entry.value, entry.multiplicity, entry.kind) for entry in report.entries] == [
        (Fraction(3), 1, DescriptorKindEnum.RATIONAL),
        (Fraction(-1), 3, DescriptorKindEnum.RATIONAL),
    ]
    assert report.rows() == [("lambda1", "rational", "3", 1), ("lambda2", "rational", "-1", 3)]


def test_oracle_spectrum_00310():
    """
    # Summary

    Oracle spectrum of C5 reports irrational eigenvalues as ALGEBRAIC

    ### Pass/Fail Criteria

    - PASS: Kinds RATIONAL, ALGEBRAIC, ALGEBRAIC with multiplicities 1, 2, 2
    - FAIL: Otherwise
    """
    report = oracle_spectrum(cycle5(), name="C5")
    assert [entry.kind for entry in report.entries] == [DescriptorKindEnum.RATIONAL, DescriptorKindEnum.ALGEBRAIC, DescriptorKindEnum.ALGEBRAIC]
    assert [entry.multiplicity for entry in report.entries] == [1, 2, 2]
    assert report.entries[1].display(3) == "~0.618 (approx)"


def test_spectrum_report_00320():
    """
    # Summary

    Multiplicities must add up to the order

    ### Pass/Fail Criteria

    - PASS: ValueError naming the mismatch
    - FAIL: No exception
    """
    with pytest.raises(ValueError, match="multiplicities add up to 1, expected 2"):
        SpectrumReport(graph_name="G", order=2, entries=(rational_descriptor(0, "0"),), width=Fraction(1))


def test_descriptors_00330():
    """
    # Summary

    Rational and golden descriptors render exactly

    ### Pass/Fail Criteria

    - PASS: Exact strings; golden intervals bracket the float values
    - FAIL: Otherwise
    """
    assert rational_descriptor(-1, "-1", 3).display() == "-1"
    assert rational_descriptor(-1, "-1", 3).root.polynomial == IntPolynomial.from_coefficients([1, 1]) ** 3
    conjugate = golden_descriptor(SurdBranchEnum.CONJUGATE, Fraction(1, 1000))
    assert conjugate.display() == "-1/2 + 1/2*sqrt(5)"
    assert conjugate.root.lo < (5**0.5 - 1) / 2 < conjugate.root.hi
    negative = golden_descriptor(SurdBranchEnum.NEGATIVE, Fraction(1, 1000), multiplicity=2)
    assert negative.label == "-phi"
    assert negative.root.lo < -(1 + 5**0.5) / 2 < negative.root.hi


def test_snap_integer_root_00340():
    """
    # Summary

    Integer roots found by isolation are snapped to exact intervals

    ### Pass/Fail Criteria

    - PASS: Roots of (x - 2)(x^2 - 2) give 2 exactly and sqrt 2 unchanged
    - FAIL: Otherwise
    """
    polynomial = IntPolynomial.from_coefficients([4, -2, -2, 1])
    snapped = [snap_integer_root(root) for root in isolate_real_roots(polynomial, Fraction(1, 4))]
    assert [root.is_exact for root in snapped] == [True, False, False]
    assert snapped[0].lo == 2


def test_verify_descending_00350():
    """
    # Summary

    A non-descending chain raises with the offending pair

    ### Pass/Fail Criteria

    - PASS: OrderingViolationError with left "a" and right "b"
    - FAIL: No exception or wrong pair
    """
    verify_descending([("x", exact_root(3)), ("y", exact_root(2))], "G")
    with pytest.raises(OrderingViolationError, match="expected a > b") as info:
        verify_descending([("x", exact_root(3)), ("a", exact_root(1)), ("b", exact_root(1))], "G")
    assert (info.value.left, info.value.right) == ("a", "b")


# ============================================================================
# Bound and Membership Tests (400-499)
# ============================================================================


def test_eigenvalue_bound_checks_00400():
    """
    # Summary

    Bridge B(m,m-1) instantiates four bounds that all hold

    ### Pass/Fail Criteria

    - PASS: Names in order; all_hold True; same result via the bridge-mm1 family
    - FAIL: Otherwise
    """
    report = eigenvalue_bound_checks(FamilyEnum.BRIDGE, m=4, n=3)
    assert [check.name for check in report.checks] == ["lambda1", "lambda2", "lambda3*+lambda4*", "lambda3*lambda4*"]
    assert report.all_hold
    assert eigenvalue_bound_checks("bridge-mm1", m=4) == report


@pytest.mark.parametrize("m, n", [(3, 1), (5, 2), (4, 4), (7, 3)])
def test_eigenvalue_bound_checks_00410(m, n):
    """
    # Summary

    Other bridges only bound lambda1

    ### Pass/Fail Criteria

    - PASS: One check, which holds
    - FAIL: Otherwise
    """
    report = eigenvalue_bound_checks(FamilyEnum.BRIDGE, m=m, n=n)
    assert [check.name for check in report.checks] == ["lambda1"]
    assert report.all_hold


@pytest.mark.parametrize("n", range(0, 9))
def test_eigenvalue_bound_checks_00420(n):
    """
    # Summary

    Reseminant bounds hold for every R~n

    ### Pass/Fail Criteria

    - PASS: Three checks, all hold, certified interval inside the stated bounds
    - FAIL: Otherwise
    """
    report = eigenvalue_bound_checks(FamilyEnum.RESEMINANT, n=n)
    assert len(report.checks) == 3
    assert report.all_hold
    first = report.checks[0]
    assert first.lower <= first.certified_hi and first.certified_lo <= first.upper


def test_eigenvalue_bound_checks_00430():
    """
    # Summary

    Missing parameters and unbounded families raise ValueError

    ### Pass/Fail Criteria

    - PASS: ValueError in each case
    - FAIL: No exception
    """
    with pytest.raises(ValueError, match="m and n must be set"):
        eigenvalue_bound_checks(FamilyEnum.BRIDGE, m=4)
    with pytest.raises(ValueError, match="n must be set"):
        eigenvalue_bound_checks(FamilyEnum.RESEMINANT)
    with pytest.raises(ValueError, match="no eigenvalue bounds"):
        eigenvalue_bound_checks(FamilyEnum.C5)


def test_golden_ratio_membership_00440():
    """
    # Summary

    phi^-1 and -phi are eigenvalues of every R~n and not of B(4,3)

    ### Pass/Fail Criteria

    - PASS: True for R~0..R~8, False for B(4,3) and K5
    - FAIL: Otherwise
    """
    assert all(golden_ratio_membership(n) for n in range(9))
    assert not has_golden_ratio_eigenvalues(bridge_graph(BridgeParams(m=4, n=3)))
    assert not has_golden_ratio_eigenvalues(complete_graph(5))


def test_minus_one_factor_00450():
    """
    # Summary

    (x + 1)^3 expands to binomial coefficients

    ### Pass/Fail Criteria

    - PASS: Coefficients (1, 3, 3, 1)
    - FAIL: Otherwise
    """
    assert minus_one_factor(3).coefficients == (1, 3, 3, 1)
