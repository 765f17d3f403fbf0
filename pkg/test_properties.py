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
Property-based tests across modules.

Random small graphs and polynomials are checked against independent
oracles: sympy for exact algebra, networkx for isomorphism and numpy for
float spectra.
"""

from fractions import Fraction
from itertools import product

import networkx as nx
import numpy as np
import sympy
from exact_linalg import char_poly, det_bareiss
from graph_core import Graph, adjacency_matrix, complement
from hypothesis import given, settings
from hypothesis import strategies as st
from isomorphism import is_isomorphic, verify_mapping
from polynomials import IntPolynomial
from recognition import is_prime_graph
from root_isolation import isolate_real_roots
from spectra import oracle_spectrum

X = sympy.Symbol("x")


@st.composite
def graphs(draw, max_order: int = 7) -> Graph:
    n = draw(st.integers(min_value=1, max_value=max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def polynomials(draw) -> IntPolynomial:
    coefficients = draw(st.lists(st.integers(min_value=-6, max_value=6), min_size=2, max_size=6))
    leading = draw(st.integers(min_value=1, max_value=3))
    return IntPolynomial.from_coefficients(coefficients + [leading])


def _to_networkx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges())
    return result


# ============================================================================
# Exact Algebra Properties (100-199)
# ============================================================================


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_property_det_00100(graph):
    """
    # Summary

    Bareiss determinant equals sympy's on random graphs

    ### Pass/Fail Criteria

    - PASS: Equal
    - FAIL: Otherwise
    """
    rows = adjacency_matrix(graph).to_lists()
    assert det_bareiss(adjacency_matrix(graph)) == int(sympy.Matrix(rows).det())


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_property_charpoly_00110(graph):
    """
    # Summary

    Faddeev-LeVerrier equals sympy's characteristic polynomial

    ### Pass/Fail Criteria

    - PASS: Coefficient lists equal; x^(n-1) coefficient is 0 and x^(n-2) is -e(G)
    - FAIL: Otherwise
    """
    rows = adjacency_matrix(graph).to_lists()
    polynomial = char_poly(adjacency_matrix(graph))
    expected = [int(c) for c in reversed(sympy.Matrix(rows).charpoly(X).all_coeffs())]
    assert list(polynomial.coefficients) == expected
    if graph.n >= 2:
        assert polynomial.coefficient(graph.n - 1) == 0
        assert polynomial.coefficient(graph.n - 2) == -graph.edge_count


@given(polynomials())
@settings(max_examples=80, deadline=None)
def test_property_root_isolation_00120(polynomial):
    """
    # Summary

    Sturm isolation finds every real root with its multiplicity

    ### Pass/Fail Criteria

    - PASS: Multiplicities add up to sympy's real root count; each sympy root lies in one interval
    - FAIL: Otherwise
    """
    width = Fraction(1, 2**20)
    roots = isolate_real_roots(polynomial, width)
    expected = sympy.Poly(list(reversed(polynomial.coefficients)), X).real_roots()
    assert sum(root.multiplicity for root in roots) == len(expected)
    for value in {float(sympy.N(r, 30)) for r in expected}:
        assert sum(1 for root in roots if float(root.lo) - 1e-9 <= value <= float(root.hi) + 1e-9) == 1
    assert all(root.width <= width for root in roots)


# ============================================================================
# Graph Properties (200-299)
# ============================================================================


@given(graphs(max_order=7), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_property_isomorphism_00200(graph, rng):
    """
    # Summary

    A random relabelling is always found isomorphic with a valid witness

    ### Pass/Fail Criteria

    - PASS: isomorphic True and verify_mapping True
    - FAIL: Otherwise
    """
    permutation = list(range(graph.n))
    rng.shuffle(permutation)
    relabelled = Graph.from_edges(graph.n, [(permutation[u], permutation[v]) for u, v in graph.edges()])
    result = is_isomorphic(graph, relabelled)
    assert result.isomorphic
    assert verify_mapping(graph, relabelled, result.mapping)


@given(graphs(max_order=6), graphs(max_order=6))
@settings(max_examples=80, deadline=None)
def test_property_isomorphism_00210(left, right):
    """
    # Summary

    Isomorphism verdicts agree with networkx

    ### Pass/Fail Criteria

    - PASS: Same verdict
    - FAIL: Otherwise
    """
    assert is_isomorphic(left, right).isomorphic == nx.is_isomorphic(_to_networkx(left), _to_networkx(right))


@given(graphs(max_order=7))
@settings(max_examples=60, deadline=None)
def test_property_prime_graph_00220(graph):
    """
    # Summary

    Prime graph verdict agrees with brute force on the complement

    ### Pass/Fail Criteria

    - PASS: Same verdict as triangle counting plus exhaustive 3-coloring
    - FAIL: Otherwise
    """
    other = _to_networkx(complement(graph))
    triangle_free = sum(nx.triangles(other).values()) == 0
    colorable = any(all(colors[u] != colors[v] for u, v in other.edges) for colors in product(range(3), repeat=graph.n))
    assert is_prime_graph(graph).is_prime_graph == (triangle_free and colorable)


@given(graphs(max_order=7))
@settings(max_examples=40, deadline=None)
def test_property_spectrum_00230(graph):
    """
    # Summary

    The exact oracle spectrum agrees with numpy

    ### Pass/Fail Criteria

    - PASS: Multiplicities add to n; the trace interval holds 0; each interval holds its float eigenvalues
    - FAIL: Otherwise
    """
    report = oracle_spectrum(graph, Fraction(1, 2**24))
    assert report.total == graph.n
    assert report.trace_is_zero_within_width()
    values = np.linalg.eigvalsh(np.array(adjacency_matrix(graph).to_lists(), dtype=float))[::-1]
    position = 0
    for entry in report.entries:
        chunk = values[position : position + entry.multiplicity]
        position += entry.multiplicity
        assert np.all((chunk >= float(entry.root.lo) - 1e-8) & (chunk <= float(entry.root.hi) + 1e-8))
