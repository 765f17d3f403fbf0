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
Exact graph isomorphism for desk-scale graphs.

Color refinement on the disjoint union prunes candidates; a backtracking
search over the refined classes then finds a witness mapping or proves
none exists.
"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type  # pylint: disable=invalid-name

import logging
from typing import Optional

from graph_core import Graph, bits
from limits import Limits
from pydantic import BaseModel, ConfigDict, Field

log = logging.getLogger(__name__)


class IsomorphismResult(BaseModel):
    """
    # Summary

    Outcome of an isomorphism test.

    ## Description

    When ``isomorphic`` is true, ``mapping[v]`` is the vertex of the second
    graph that vertex v of the first graph maps to.
    """

    model_config = ConfigDict(frozen=True)

    isomorphic: bool = Field(description="True if the graphs are isomorphic")
    mapping: Optional[tuple[int, ...]] = Field(default=None, description="Witness bijection, first graph to second")
    search_nodes: int = Field(default=0, ge=0, description="Backtracking nodes visited")


def _refine(left: Graph, right: Graph) -> tuple[list[int], list[int]]:
    """Stable colorings of both graphs computed on their disjoint union."""
    left_colors = left.degrees()
    right_colors = right.degrees()
    classes = len(set(left_colors) | set(right_colors))
    rounds = 0
    while True:
        rounds += 1
        left_sig = [(left_colors[v], tuple(sorted(left_colors[w] for w in bits(left.adj[v])))) for v in range(left.n)]
        right_sig = [(right_colors[v], tuple(sorted(right_colors[w] for w in bits(right.adj[v])))) for v in range(right.n)]
        palette = {sig: index for index, sig in enumerate(sorted(set(left_sig) | set(right_sig)))}
        left_colors = [palette[sig] for sig in left_sig]
        right_colors = [palette[sig] for sig in right_sig]
        if len(palette) == classes:
            break
        classes = len(palette)
    log.debug("color refinement stable after %d rounds with %d classes", rounds, classes)
    return left_colors, right_colors


def _search_order(graph: Graph, colors: list[int]) -> list[int]:
    """Vertex order for backtracking: most constrained by earlier choices first."""
    class_size = {c: colors.count(c) for c in set(colors)}
    order: list[int] = []
    placed = 0
    remaining = set(range(graph.n))
    while remaining:
        v = min(remaining, key=lambda u: (-(graph.adj[u] & placed).bit_count(), class_size[colors[u]], u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def verify_mapping(left: Graph, right: Graph, mapping: tuple[int, ...]) -> bool:
    """True if mapping is a bijection that preserves adjacency and non-adjacency."""
    if left.n != right.n or sorted(mapping) != list(range(right.n)):
        return False
    return all(left.has_edge(u, v) == right.has_edge(mapping[u], mapping[v]) for u in range(left.n) for v in range(u + 1, left.n))


def is_isomorphic(left: Graph, right: Graph) -> IsomorphismResult:
    """
    # Summary

    Decide whether two graphs are isomorphic.

    ## Description

    Cheap invariants (order, size, degree sequence, refined color
    histogram) are compared first. The backtracking search only maps a
    vertex to a candidate of the same refined color whose adjacency to the
    already-mapped vertices agrees. Intended for graphs up to 25 vertices;
    larger inputs log a warning and may be slow.

    ## Usage

    ```python
    result = is_isomorphic(cycle5(), suspension_graph(BridgeParams(m=2, n=2)))
    result.isomorphic
    # Returns: True
    ```
    """
    Limits.warn_if_above(left.n, Limits.MAX_ISOMORPHISM_ORDER, "isomorphism test")
    if left.n != right.n or left.edge_count != right.edge_count or sorted(left.degrees()) != sorted(right.degrees()):
        return IsomorphismResult(isomorphic=False)
    left_colors, right_colors = _refine(left, right)
    if sorted(left_colors) != sorted(right_colors):
        return IsomorphismResult(isomorphic=False)

    order = _search_order(left, left_colors)
    mapping = [-1] * left.n
    used = [False] * right.n
    nodes = 0

    def extend(depth: int) -> bool:
        nonlocal nodes
        if depth == len(order):
            return True
        v = order[depth]
        for candidate in range(right.n):
            if used[candidate] or right_colors[candidate] != left_colors[v]:
                continue
            nodes += 1
            if any(left.has_edge(v, u) != right.has_edge(candidate, mapping[u]) for u in order[:depth]):
                continue
            mapping[v] = candidate
            used[candidate] = True
            if extend(depth + 1):
                return True
            mapping[v] = -1
            used[candidate] = False
        return False

    found = extend(0)
    log.debug("isomorphism search visited %d nodes on %d vertices", nodes, left.n)
    if not found:
        return IsomorphismResult(isomorphic=False, search_nodes=nodes)
    return IsomorphismResult(isomorphic=True, mapping=tuple(mapping), search_nodes=nodes)
