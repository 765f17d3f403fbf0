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
Exact spectra of the bridge and reseminant families, and of arbitrary graphs.

Every eigenvalue is an exact descriptor: a rational, a root of x^2 + x - 1
or a certified isolating interval into an explicit integer polynomial.
Orderings and bounds are decided by exact interval comparisons and are
never reordered silently: a contradiction raises OrderingViolationError.
"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type  # pylint: disable=invalid-name

import logging
import math
from fractions import Fraction
from typing import Optional, Sequence, Union

from closed_forms import (
    GOLDEN_QUADRATIC,
    PLUS_ONE,
    QuadraticSurd,
    bridge_cubic,
    bridge_lambda1_bounds,
    reseminant_cubic,
    reseminant_lambda1_bounds,
)
from enums import DescriptorKindEnum, FamilyEnum, OrderingEnum, SurdBranchEnum
from errors import FormulaDomainError, OrderingViolationError
from exact_linalg import char_poly
from graph_core import BridgeParams, Graph, adjacency_matrix, bridge_graph, reseminant_tilde
from limits import Limits
from polynomials import IntPolynomial, poly_divides
from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator
from root_isolation import RootInterval, compare_root_to_rational, compare_roots, decimal_string, exact_root, isolate_real_roots

log = logging.getLogger(__name__)

SPECTRUM_CONFIG = ConfigDict(frozen=True, arbitrary_types_allowed=True)

Rational = Union[int, Fraction]


class EigenvalueDescriptor(BaseModel):
    """
    # Summary

    One distinct eigenvalue with its multiplicity.

    ## Description

    ``root`` always certifies the eigenvalue as an interval (exact for
    rationals), so descriptors of every kind compare uniformly. ``value`` is
    set when the eigenvalue is rational and ``surd`` when it is a root of
    x^2 + x - 1.
    """

    model_config = SPECTRUM_CONFIG

    kind: DescriptorKindEnum = Field(description="Descriptor kind")
    label: str = Field(description="Human-readable name, e.g. theta1, m-2, phi^-1")
    multiplicity: int = Field(ge=1, description="Multiplicity in the spectrum")
    root: RootInterval = Field(description="Certified interval for the eigenvalue")
    value: Optional[Fraction] = Field(default=None, description="Exact value when rational")
    surd: Optional[QuadraticSurd] = Field(default=None, description="Exact value when a root of x^2 + x - 1")

    @field_serializer("value")
    def serialize_value(self, value: Optional[Fraction]) -> Optional[str]:
        return None if value is None else str(value)

    def display(self, decimals: Optional[int] = None) -> str:
        """Exact rendering, or a marked decimal approximation when ``decimals`` is given."""
        if decimals is not None:
            return self.root.display(decimals)
        if self.value is not None:
            return str(self.value)
        if self.surd is not None:
            return self.surd.to_string()
        return self.root.display()


class SpectrumReport(BaseModel):
    """
    # Summary

    The adjacency spectrum as descending exact descriptors.

    ## Raises

    - ValidationError: if the multiplicities do not add up to the order
    """

    model_config = SPECTRUM_CONFIG

    graph_name: str = Field(description="Name of the graph, e.g. B(4,3)")
    order: int = Field(ge=0, description="Vertex count")
    entries: tuple[EigenvalueDescriptor, ...] = Field(description="Distinct eigenvalues, strictly descending")
    width: Fraction = Field(description="Requested interval width")

    @field_serializer("width")
    def serialize_width(self, value: Fraction) -> str:
        return str(value)

    @model_validator(mode="after")
    def validate_total(self) -> "SpectrumReport":
        """Multiplicities sum to the order."""
        if self.total != self.order:
            raise ValueError(f"multiplicities add up to {self.total}, expected {self.order}")
        return self

    @property
    def total(self) -> int:
        return sum(entry.multiplicity for entry in self.entries)

    def multiplicity_of(self, value: Rational) -> int:
        """Multiplicity of a rational eigenvalue, 0 when absent."""
        return sum(entry.multiplicity for entry in self.entries if entry.value == value)

    def trace_bounds(self) -> tuple[Fraction, Fraction]:
        """Interval containing the sum of all eigenvalues."""
        lo = sum((entry.multiplicity * entry.root.lo for entry in self.entries), Fraction(0))
        hi = sum((entry.multiplicity * entry.root.hi for entry in self.entries), Fraction(0))
        return lo, hi

    def trace_is_zero_within_width(self) -> bool:
        """True if 0 lies in the certified trace interval."""
        lo, hi = self.trace_bounds()
        return lo <= 0 <= hi

    def rows(self, decimals: Optional[int] = None) -> list[tuple[str, str, str, int]]:
        """(label, kind, value, multiplicity) per entry, for tables."""
        return [(entry.label, entry.kind.value, entry.display(decimals), entry.multiplicity) for entry in self.entries]


def _width(width: Optional[Rational]) -> Fraction:
    return Limits.default_width() if width is None else Fraction(width)


def rational_descriptor(value: Rational, label: str, multiplicity: int = 1) -> EigenvalueDescriptor:
    """Descriptor for a rational eigenvalue."""
    polynomial = IntPolynomial.linear(value) ** multiplicity
    return EigenvalueDescriptor(
        kind=DescriptorKindEnum.RATIONAL,
        label=label,
        multiplicity=multiplicity,
        root=exact_root(value, polynomial=polynomial, multiplicity=multiplicity),
        value=Fraction(value),
    )


def golden_descriptor(branch: SurdBranchEnum, width: Optional[Rational] = None, multiplicity: int = 1) -> EigenvalueDescriptor:
    """Descriptor for phi^-1 (CONJUGATE) or -phi (NEGATIVE)."""
    larger, smaller = isolate_real_roots(GOLDEN_QUADRATIC, _width(width))
    root = larger if branch == SurdBranchEnum.CONJUGATE else smaller
    root = root.model_copy(update={"polynomial": GOLDEN_QUADRATIC**multiplicity, "multiplicity": multiplicity})
    return EigenvalueDescriptor(
        kind=DescriptorKindEnum.SURD,
        label="phi^-1" if branch == SurdBranchEnum.CONJUGATE else "-phi",
        multiplicity=multiplicity,
        root=root,
        surd=QuadraticSurd.golden(branch),
    )


def snap_integer_root(root: RootInterval) -> RootInterval:
    """Exact interval when the isolated root is an integer, the input otherwise."""
    if root.is_exact:
        return root
    first, last = math.ceil(root.lo), math.floor(root.hi)
    if last - first > 64:
        return root
    for candidate in range(first, last + 1):
        if root.factor.evaluate(candidate) == 0:
            return exact_root(candidate, polynomial=root.polynomial, multiplicity=root.multiplicity)
    return root


def _cubic_descriptors(cubic: IntPolynomial, width: Fraction, graph_name: str) -> list[EigenvalueDescriptor]:
    roots = [snap_integer_root(root) for root in isolate_real_roots(cubic, width)]
    if len(roots) != 3 or any(root.multiplicity != 1 for root in roots):
        raise OrderingViolationError(
            f"{graph_name}: the cubic {cubic} does not have three distinct real roots",
            detail={"cubic": list(cubic.coefficients), "roots": [root.display() for root in roots]},
        )
    return [
        EigenvalueDescriptor(
            kind=DescriptorKindEnum.CUBIC_ROOT,
            label=f"theta{index}",
            multiplicity=1,
            root=root,
            value=root.lo if root.is_exact else None,
        )
        for index, root in enumerate(roots, start=1)
    ]


def verify_descending(chain: Sequence[tuple[str, RootInterval]], graph_name: str) -> None:
    """
    # Summary

    Certify that the roots in ``chain`` are strictly descending.

    ## Raises

    - OrderingViolationError: naming the first adjacent pair that is not strictly descending
    """
    for (left_label, left), (right_label, right) in zip(chain, chain[1:]):
        ordering = compare_roots(left, right)
        if ordering != OrderingEnum.GREATER:
            raise OrderingViolationError(
                f"{graph_name}: expected {left_label} > {right_label}, found {ordering.value}",
                left=left_label,
                right=right_label,
                detail={"left": left.display(), "right": right.display()},
            )


def spectrum_bridge(m: int, width: Optional[Rational] = None) -> SpectrumReport:
    """
    # Summary

    Spectrum of B(m,m-1) from its closed-form characteristic polynomial.

    ## Description

    Entries are theta1, m-2, theta2, -1 (multiplicity 2m-5) and theta3,
    where the thetas are the roots of x^3 + (3-m)x^2 + (2-2m)x - 2. The
    chain theta1 > m-2 > 0 > theta2 > -1 > theta3 is certified by exact
    comparisons.

    ## Raises

    - FormulaDomainError: if m <= 2
    - OrderingViolationError: if the certified order contradicts the chain
    """
    if m <= 2:
        raise FormulaDomainError(f"bridge spectrum needs m > 2, got {m}")
    target = _width(width)
    name = f"B({m},{m - 1})"
    theta1, theta2, theta3 = _cubic_descriptors(bridge_cubic(m), target, name)
    middle = rational_descriptor(m - 2, "m-2")
    minus_one = rational_descriptor(-1, "-1", 2 * m - 5)
    verify_descending(
        [
            ("theta1", theta1.root),
            ("m-2", middle.root),
            ("0", exact_root(0)),
            ("theta2", theta2.root),
            ("-1", minus_one.root),
            ("theta3", theta3.root),
        ],
        name,
    )
    return SpectrumReport(graph_name=name, order=2 * m - 1, entries=(theta1, middle, theta2, minus_one, theta3), width=target)


def spectrum_reseminant(n: int, width: Optional[Rational] = None) -> SpectrumReport:
    """
    # Summary

    Spectrum of R~n from its closed-form characteristic polynomial.

    ## Description

    For n > 0 the entries are theta1, theta2, phi^-1, -1 (multiplicity n),
    -phi and theta3, with the thetas the roots of
    x^3 - (n+1)x^2 - (n+3)x + (3n+2); the chain
    theta1 > theta2 > phi^-1 > -1 > -phi > theta3 is certified. For n = 0
    (the 5-cycle) the spectrum is 2, phi^-1 twice and -phi twice.

    A theta may be rational (theta2 = 1 for n = 1, theta3 = -2 for n = 4);
    its descriptor then carries the exact value.

    ## Raises

    - FormulaDomainError: if n < 0
    - OrderingViolationError: if the certified order contradicts the chain
    """
    if n < 0:
        raise FormulaDomainError(f"n must be >= 0, got {n}")
    target = _width(width)
    if n == 0:
        top = rational_descriptor(2, "theta1")
        conjugate = golden_descriptor(SurdBranchEnum.CONJUGATE, target, 2)
        negative = golden_descriptor(SurdBranchEnum.NEGATIVE, target, 2)
        verify_descending([("theta1", top.root), ("phi^-1", conjugate.root), ("-phi", negative.root)], "C5")
        return SpectrumReport(graph_name="R~0", order=5, entries=(top, conjugate, negative), width=target)
    name = f"R~{n}"
    theta1, theta2, theta3 = _cubic_descriptors(reseminant_cubic(n), target, name)
    conjugate = golden_descriptor(SurdBranchEnum.CONJUGATE, target)
    negative = golden_descriptor(SurdBranchEnum.NEGATIVE, target)
    minus_one = rational_descriptor(-1, "-1", n)
    entries = (theta1, theta2, conjugate, minus_one, negative, theta3)
    verify_descending([(entry.label, entry.root) for entry in entries], name)
    return SpectrumReport(graph_name=name, order=n + 5, entries=entries, width=target)


def oracle_spectrum(graph: Graph, width: Optional[Rational] = None, name: str = "G") -> SpectrumReport:
    """
    # Summary

    Exact spectrum of any graph from its characteristic polynomial.

    ## Description

    The characteristic polynomial is computed exactly, split square-free and
    isolated with Sturm sequences. Rational roots become RATIONAL
    descriptors and all others ALGEBRAIC, labelled lambda1, lambda2, ... in
    descending order.
    """
    Limits.require_order(graph.n, Limits.MAX_MATRIX_ORDER, "matrix")
    target = _width(width)
    if graph.n == 0:
        return SpectrumReport(graph_name=name, order=0, entries=(), width=target)
    polynomial = char_poly(adjacency_matrix(graph))
    entries = []
    for index, root in enumerate(isolate_real_roots(polynomial, target), start=1):
        root = snap_integer_root(root)
        entries.append(
            EigenvalueDescriptor(
                kind=DescriptorKindEnum.RATIONAL if root.is_exact else DescriptorKindEnum.ALGEBRAIC,
                label=f"lambda{index}",
                multiplicity=root.multiplicity,
                root=root,
                value=root.lo if root.is_exact else None,
            )
        )
    return SpectrumReport(graph_name=name, order=graph.n, entries=tuple(entries), width=target)


class BoundCheck(BaseModel):
    """
    # Summary

    One inequality lower <= quantity <= upper, decided exactly.

    ## Description

    ``certified_lo``/``certified_hi`` enclose the quantity itself. Either
    bound may be None when the inequality is one-sided; an equality check
    sets both bounds to the same value.
    """

    model_config = SPECTRUM_CONFIG

    name: str = Field(description="Quantity being bounded, e.g. lambda1 or theta2+theta3")
    lower: Optional[Fraction] = Field(default=None, description="Stated lower bound")
    upper: Optional[Fraction] = Field(default=None, description="Stated upper bound")
    certified_lo: Fraction = Field(description="Certified lower end of the quantity")
    certified_hi: Fraction = Field(description="Certified upper end of the quantity")
    holds: bool = Field(description="True if the inequality holds exactly")

    @field_serializer("lower", "upper", "certified_lo", "certified_hi")
    def serialize_bound(self, value: Optional[Fraction]) -> Optional[str]:
        return None if value is None else str(value)


class BoundReport(BaseModel):
    """Every bound instantiated for one family member."""

    model_config = SPECTRUM_CONFIG

    family: FamilyEnum = Field(description="Graph family")
    graph_name: str = Field(description="Family member, e.g. B(5,4)")
    checks: tuple[BoundCheck, ...] = Field(description="Instantiated inequalities")

    @property
    def all_hold(self) -> bool:
        return all(check.holds for check in self.checks)


def _at_least(root: RootInterval, bound: Fraction) -> bool:
    return compare_root_to_rational(root, bound) != OrderingEnum.LESS


def _at_most(root: RootInterval, bound: Fraction) -> bool:
    return compare_root_to_rational(root, bound) != OrderingEnum.GREATER


def _root_bounds(name: str, root: RootInterval, lower: Optional[Fraction], upper: Optional[Fraction]) -> BoundCheck:
    holds = (lower is None or _at_least(root, lower)) and (upper is None or _at_most(root, upper))
    return BoundCheck(name=name, lower=lower, upper=upper, certified_lo=root.lo, certified_hi=root.hi, holds=holds)


def _shifted_bounds(name: str, total: Fraction, root: RootInterval, lower: Fraction, upper: Fraction) -> BoundCheck:
    """Bounds on total - root, decided as bounds on root."""
    holds = _at_most(root, total - lower) and _at_least(root, total - upper)
    return BoundCheck(name=name, lower=lower, upper=upper, certified_lo=total - root.hi, certified_hi=total - root.lo, holds=holds)


def _quotient_bounds(name: str, numerator: Fraction, root: RootInterval, lower: Fraction, upper: Fraction) -> BoundCheck:
    """Bounds on numerator / root for a positive root, decided as bounds on root."""

    def at_least(bound: Fraction) -> bool:
        if bound == 0:
            return numerator >= 0
        if bound > 0:
            return _at_most(root, numerator / bound)
        return _at_least(root, numerator / bound)

    def at_most(bound: Fraction) -> bool:
        if bound == 0:
            return numerator <= 0
        if bound > 0:
            return _at_least(root, numerator / bound)
        return _at_most(root, numerator / bound)

    if compare_root_to_rational(root, 0) != OrderingEnum.GREATER:
        raise ValueError(f"{name}: the divisor root must be positive")
    while root.lo <= 0:
        root = root.refine(root.width / 2)
    ends = sorted([numerator / root.lo, numerator / root.hi])
    return BoundCheck(name=name, lower=lower, upper=upper, certified_lo=ends[0], certified_hi=ends[1], holds=at_least(lower) and at_most(upper))


def eigenvalue_bound_checks(
    family: Union[FamilyEnum, str],
    m: Optional[int] = None,
    n: Optional[int] = None,
    width: Optional[Rational] = None,
) -> BoundReport:
    """
    # Summary

    Instantiate and decide the eigenvalue bounds for one family member.

    ## Description

    Bridge B(m,n): m-1 <= lambda1 <= m from the oracle spectrum, tightened
    to m-1+1/m when m = n. When n = m-1 and m > 2 also lambda2 = m-2, and
    the two remaining roots satisfy -3 <= sum <= -2 and
    2/m <= product <= 2/(m-1).

    Reseminant R~n: (n+1)(n+4)/(n+3) <= theta1 <= n+2,
    -1 <= theta2+theta3 <= -(n+1)/(n+3) and
    -(3n+2)(n+3)/((n+1)(n+4)) <= theta2*theta3 <= -(3n+2)/(n+2).

    Sums and products of the two smaller cubic roots are taken from the
    cubic's coefficients and theta1, so every check reduces to an exact
    comparison of theta1 with a rational. Failures are report entries, not
    exceptions.

    ## Raises

    - ValueError: for unknown families or missing parameters
    """
    family = FamilyEnum(family)
    target = _width(width)
    if family == FamilyEnum.BRIDGE_MM1:
        if m is None:
            raise ValueError("m must be set for the bridge-mm1 family")
        family, n = FamilyEnum.BRIDGE, m - 1
    if family == FamilyEnum.BRIDGE:
        if m is None or n is None:
            raise ValueError("m and n must be set for the bridge family")
        return _bridge_bounds(BridgeParams(m=m, n=n), target)
    if family == FamilyEnum.RESEMINANT:
        if n is None:
            raise ValueError("n must be set for the reseminant family")
        return _reseminant_bounds(n, target)
    raise ValueError(f"no eigenvalue bounds for family '{family.value}'")


def _bridge_bounds(params: BridgeParams, width: Fraction) -> BoundReport:
    m, n = params.m, params.n
    name = f"B({m},{n})"
    spectrum = oracle_spectrum(bridge_graph(params), width, name)
    lower, upper = bridge_lambda1_bounds(m, n)
    checks = [_root_bounds("lambda1", spectrum.entries[0].root, lower, upper)]
    if n == m - 1 and m > 2:
        second = spectrum.entries[1].root
        checks.append(_root_bounds("lambda2", second, Fraction(m - 2), Fraction(m - 2)))
        theta1 = isolate_real_roots(bridge_cubic(m), width)[0]
        checks.append(_shifted_bounds("lambda3*+lambda4*", Fraction(m - 3), theta1, Fraction(-3), Fraction(-2)))
        checks.append(_quotient_bounds("lambda3*lambda4*", Fraction(2), theta1, Fraction(2, m), Fraction(2, m - 1)))
    return BoundReport(family=FamilyEnum.BRIDGE, graph_name=name, checks=tuple(checks))


def _reseminant_bounds(n: int, width: Fraction) -> BoundReport:
    lower, upper = reseminant_lambda1_bounds(n)
    theta1 = isolate_real_roots(reseminant_cubic(n), width)[0]
    product = Fraction(-(3 * n + 2))
    checks = (
        _root_bounds("theta1", theta1, lower, upper),
        _shifted_bounds("theta2+theta3", Fraction(n + 1), theta1, Fraction(-1), Fraction(-(n + 1), n + 3)),
        _quotient_bounds(
            "theta2*theta3",
            product,
            theta1,
            Fraction(-(3 * n + 2) * (n + 3), (n + 1) * (n + 4)),
            Fraction(-(3 * n + 2), n + 2),
        ),
    )
    return BoundReport(family=FamilyEnum.RESEMINANT, graph_name=f"R~{n}", checks=checks)


def has_golden_ratio_eigenvalues(graph: Graph) -> bool:
    """True iff x^2 + x - 1 divides the characteristic polynomial, i.e. phi^-1 and -phi are both eigenvalues."""
    return poly_divides(GOLDEN_QUADRATIC, char_poly(adjacency_matrix(graph)))


def golden_ratio_membership(n: int) -> bool:
    """
    # Summary

    True iff phi^-1 and -phi are eigenvalues of R~n.

    ## Raises

    - ValueError: if n < 0
    """
    return has_golden_ratio_eigenvalues(reseminant_tilde(n))


def minus_one_factor(exponent: int) -> IntPolynomial:
    """(x + 1)^exponent."""
    return PLUS_ONE**exponent
