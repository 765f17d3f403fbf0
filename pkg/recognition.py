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
Recognition of prime graphs of solvable groups and their minimal classes.

A graph is the prime graph of a solvable group iff its complement is
triangle-free and 3-colorable. The minimal and minimally connected
predicates test every single-edge deletion.
"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type  # pylint: disable=invalid-name

import logging
from collections import deque
from typing import Optional

from graph_core import Graph, bits, complement
from limits import Limits
from pydantic import BaseModel, ConfigDict, Field, model_validator

log = logging.getLogger(__name__)

REPORT_CONFIG = ConfigDict(frozen=True)


class TriangleScan(BaseModel):
    """Result of a triangle scan; ``witness`` is the lexicographically first triangle."""

    model_config = REPORT_CONFIG

    triangle_free: bool = Field(description="True if the graph has no 3-clique")
    witness: Optional[tuple[int, int, int]] = Field(default=None, description="A triangle, ascending, when one exists")


class ColoringResult(BaseModel):
    """Result of a 3-colorability search; ``coloring[v]`` is in {0, 1, 2}."""

    model_config = REPORT_CONFIG

    colorable: bool = Field(description="True if a proper 3-coloring exists")
    coloring: Optional[tuple[int, ...]] = Field(default=None, description="Proper coloring, when one exists")
    backtracks: int = Field(default=0, ge=0, description="Dead ends visited by the search")


class MinimalityVerdict(BaseModel):
    """
    # Summary

    Outcome of a minimality predicate.

    ## Description

    When ``holds`` is false because an edge deletion preserved the tested
    property, ``witness_edge`` names that edge. When the precondition
    failed (disconnected, order 1, not a prime graph) ``reason`` says so and
    there is no witness.
    """

    model_config = REPORT_CONFIG

    holds: bool = Field(description="True if the predicate holds")
    witness_edge: Optional[tuple[int, int]] = Field(default=None, description="Edge whose removal keeps the graph prime")
    reason: str = Field(default="", description="Why the predicate fails, if it does")


class KMinusWitness(BaseModel):
    """
    # Summary

    A maximal induced K-minus subgraph: a clique with exactly one edge missing.

    ## Raises

    - ValidationError: if the missing edge is not inside the vertex set
    """

    model_config = REPORT_CONFIG

    vertex_set: tuple[int, ...] = Field(description="Vertices of the subgraph, ascending")
    missing_edge: tuple[int, int] = Field(description="The unique non-edge inside vertex_set")

    @model_validator(mode="after")
    def validate_missing_edge(self) -> "KMinusWitness":
        """The missing edge must lie inside the vertex set."""
        if not set(self.missing_edge) <= set(self.vertex_set):
            raise ValueError(f"missing edge {self.missing_edge} is not inside {self.vertex_set}")
        return self

    @property
    def size(self) -> int:
        return len(self.vertex_set)


class ClassificationReport(BaseModel):
    """
    # Summary

    Flags and witnesses for the prime-graph predicates.

    ## Description

    ``is_prime_graph`` reports the raw complement properties; connectivity
    is a separate flag and is required only by the two minimal predicates.
    The minimal fields are None in a partial report from
    ``is_prime_graph``.
    """

    model_config = REPORT_CONFIG

    order: int = Field(ge=0, description="Vertex count")
    connected: bool = Field(description="True if the graph is connected")
    complement_triangle_free: bool = Field(description="True if the complement has no triangle")
    complement_triangle: Optional[tuple[int, int, int]] = Field(default=None, description="Triangle in the complement")
    complement_three_colorable: bool = Field(description="True if the complement is 3-colorable")
    complement_coloring: Optional[tuple[int, ...]] = Field(default=None, description="3-coloring of the complement")
    is_prime_graph: bool = Field(description="Complement is triangle-free and 3-colorable")
    is_minimal_prime: Optional[bool] = Field(default=None, description="Every edge deletion destroys primality")
    minimal_witness: Optional[tuple[int, int]] = Field(default=None, description="Edge whose deletion keeps primality")
    is_minimally_connected_prime: Optional[bool] = Field(default=None, description="Every edge deletion destroys connected primality")
    minimally_connected_witness: Optional[tuple[int, int]] = Field(default=None, description="Edge whose deletion keeps connected primality")


def is_triangle_free(graph: Graph) -> TriangleScan:
    """
    # Summary

    Scan for a triangle.

    ## Usage

    ```python
    is_triangle_free(complete_graph(3)).witness
    # Returns: (0, 1, 2)
    ```
    """
    for u, v in graph.edges():
        common = graph.adj[u] & graph.adj[v] & ~((1 << (v + 1)) - 1)
        if common:
            w = (common & -common).bit_length() - 1
            return TriangleScan(triangle_free=False, witness=(u, v, w))
    return TriangleScan(triangle_free=True)


def is_bipartite(graph: Graph) -> bool:
    """True if the vertices split into two independent sets."""
    side = [-1] * graph.n
    for start in range(graph.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in bits(graph.adj[u]):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def is_three_colorable(graph: Graph) -> ColoringResult:
    """
    # Summary

    Exact 3-colorability by DSatur backtracking.

    ## Description

    The next vertex is the uncolored one with the most distinct neighbour
    colors, ties broken by degree and then index. A vertex may only open a
    color one above the highest color used so far. Intended for graphs up
    to 30 vertices.
    """
    Limits.warn_if_above(graph.n, Limits.MAX_COLORING_ORDER, "3-coloring search")
    coloring = [-1] * graph.n
    degrees = graph.degrees()
    backtracks = 0

    def pick() -> int:
        best, best_key = -1, None
        for v in range(graph.n):
            if coloring[v] >= 0:
                continue
            saturation = len({coloring[w] for w in bits(graph.adj[v]) if coloring[w] >= 0})
            key = (saturation, degrees[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def solve(colored: int, highest: int) -> bool:
        nonlocal backtracks
        if colored == graph.n:
            return True
        v = pick()
        taken = {coloring[w] for w in bits(graph.adj[v])}
        for color in range(min(3, highest + 2)):
            if color in taken:
                continue
            coloring[v] = color
            if solve(colored + 1, max(highest, color)):
                return True
            coloring[v] = -1
        backtracks += 1
        return False

    found = solve(0, -1)
    log.debug("3-coloring search on %d vertices: colorable=%s, %d backtracks", graph.n, found, backtracks)
    if not found:
        return ColoringResult(colorable=False, backtracks=backtracks)
    return ColoringResult(colorable=True, coloring=tuple(coloring), backtracks=backtracks)


def _complement_is_prime(graph: Graph) -> bool:
    other = complement(graph)
    return is_triangle_free(other).triangle_free and is_three_colorable(other).colorable


def is_prime_graph(graph: Graph) -> ClassificationReport:
    """
    # Summary

    Partial classification: connectivity and the complement properties.

    ## Usage

    ```python
    is_prime_graph(complete_graph(3)).is_prime_graph
    # Returns: True
    ```
    """
    other = complement(graph)
    triangles = is_triangle_free(other)
    coloring = is_three_colorable(other)
    return ClassificationReport(
        order=graph.n,
        connected=graph.is_connected(),
        complement_triangle_free=triangles.triangle_free,
        complement_triangle=triangles.witness,
        complement_three_colorable=coloring.colorable,
        complement_coloring=coloring.coloring,
        is_prime_graph=triangles.triangle_free and coloring.colorable,
    )


def _precondition(graph: Graph) -> Optional[str]:
    if graph.n <= 1:
        return "order must be greater than 1"
    if not graph.is_connected():
        return "graph is not connected"
    if not _complement_is_prime(graph):
        return "graph is not a prime graph"
    return None


def is_minimal_prime(graph: Graph) -> MinimalityVerdict:
    """
    # Summary

    Minimal prime graph test.

    ## Description

    Holds iff the graph is a connected prime graph of order > 1 and every
    edge deletion yields a graph whose complement has a triangle or is not
    3-colorable. The witness is the first edge whose deletion keeps both
    complement properties.
    """
    reason = _precondition(graph)
    if reason is not None:
        return MinimalityVerdict(holds=False, reason=reason)
    for u, v in graph.edges():
        if _complement_is_prime(graph.without_edge(u, v)):
            return MinimalityVerdict(holds=False, witness_edge=(u, v), reason=f"deleting {u}-{v} keeps the complement triangle-free and 3-colorable")
    return MinimalityVerdict(holds=True)


def is_minimally_connected_prime(graph: Graph) -> MinimalityVerdict:
    """
    # Summary

    Minimally connected prime graph test.

    ## Description

    Holds iff the graph is a connected prime graph of order > 1 and every
    edge deletion either disconnects it or breaks a complement property.
    The witness is an edge whose deletion leaves a connected prime graph.
    """
    reason = _precondition(graph)
    if reason is not None:
        return MinimalityVerdict(holds=False, reason=reason)
    for u, v in graph.edges():
        reduced = graph.without_edge(u, v)
        if reduced.is_connected() and _complement_is_prime(reduced):
            return MinimalityVerdict(holds=False, witness_edge=(u, v), reason=f"deleting {u}-{v} leaves a connected prime graph")
    return MinimalityVerdict(holds=True)


def classify(graph: Graph) -> ClassificationReport:
    """Full classification report, including both minimality verdicts."""
    report = is_prime_graph(graph)
    minimal = is_minimal_prime(graph)
    connected = is_minimally_connected_prime(graph)
    return report.model_copy(
        update={
            "is_minimal_prime": minimal.holds,
            "minimal_witness": minimal.witness_edge,
            "is_minimally_connected_prime": connected.holds,
            "minimally_connected_witness": connected.witness_edge,
        }
    )


def _maximal_cliques(graph: Graph, candidates: int) -> list[int]:
    """Bron-Kerbosch with pivoting, restricted to the ``candidates`` bitset."""
    found: list[int] = []

    def expand(clique: int, pool: int, excluded: int) -> None:
        if not pool and not excluded:
            found.append(clique)
            return
        pivot = max(bits(pool | excluded), key=lambda u: (graph.adj[u] & pool).bit_count())
        for v in bits(pool & ~graph.adj[pivot]):
            expand(clique | (1 << v), pool & graph.adj[v], excluded & graph.adj[v])
            pool &= ~(1 << v)
            excluded |= 1 << v

    expand(0, candidates, 0)
    return found


def maximal_kminus_subgraphs(graph: Graph, min_size: int = 4) -> list[KMinusWitness]:
    """
    # Summary

    All maximal induced K-minus subgraphs with at least ``min_size`` vertices.

    ## Description

    Every K-minus has a unique non-edge uv, and its other vertices form a
    clique in the common neighbourhood of u and v. It is maximal exactly when
    that clique is maximal there, so each non-adjacent pair contributes one
    witness per maximal clique of its common neighbourhood.

    Sorted by decreasing size, then vertex set. Intended for graphs up to
    20 vertices.

    ## Usage

    ```python
    [w.size for w in maximal_kminus_subgraphs(reseminant_tilde(2))]
    # Returns: [5]
    ```
    """
    Limits.warn_if_above(graph.n, Limits.MAX_KMINUS_ORDER, "K-minus search")
    witnesses = []
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            if graph.has_edge(u, v):
                continue
            for clique in _maximal_cliques(graph, graph.adj[u] & graph.adj[v]):
                members = tuple(sorted(bits(clique) + [u, v]))
                if len(members) >= min_size:
                    witnesses.append(KMinusWitness(vertex_set=members, missing_edge=(u, v)))
    witnesses.sort(key=lambda w: (-w.size, w.vertex_set))
    return witnesses


def degree_two_pairs(graph: Graph) -> list[tuple[int, int]]:
    """Adjacent pairs (u, v), u < v, with both endpoints of degree 2."""
    return [(u, v) for u, v in graph.edges() if graph.degree(u) == 2 and graph.degree(v) == 2]


def is_in_r_tilde(graph: Graph) -> bool:
    """
    # Summary

    Structural test for the R~n subfamily of reseminant graphs.

    ## Description

    True iff the graph is C5, or it has two adjacent degree-2 vertices and
    at most one maximal K-minus subgraph on four or more vertices. The
    criteria characterise R~n only among reseminant graphs; the caller is
    responsible for passing a reseminant graph.
    """
    if graph.n < 5:
        return False
    if graph.n == 5 and all(d == 2 for d in graph.degrees()) and graph.is_connected():
        return True
    if not degree_two_pairs(graph):
        return False
    return len(maximal_kminus_subgraphs(graph, 4)) <= 1
