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
Simple undirected graphs and the bridge, suspension and reseminant families.

Graphs are immutable pydantic models whose adjacency rows are integer
bitsets: bit j of ``adj[i]`` is set iff ij is an edge. Every operation
returns a new graph.
"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type  # pylint: disable=invalid-name

import logging
from collections import deque
from typing import Iterable, Optional, Sequence

from enums import VertexTagEnum
from exact_linalg import IntMatrix
from limits import Limits
from pydantic import BaseModel, ConfigDict, Field, model_validator

log = logging.getLogger(__name__)

GRAPH_CONFIG = ConfigDict(frozen=True)


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    found = []
    while mask:
        low = mask & -mask
        found.append(low.bit_length() - 1)
        mask ^= low
    return found


class VertexLabel(BaseModel):
    """
    # Summary

    Role annotation for one vertex.

    ## Description

    ``source`` is the vertex that was duplicated and is only meaningful for
    the DUPLICATE tag.
    """

    model_config = GRAPH_CONFIG

    index: int = Field(ge=0, description="0-based vertex index")
    tag: VertexTagEnum = Field(description="Role of the vertex")
    source: Optional[int] = Field(default=None, ge=0, description="Duplicated vertex, for DUPLICATE tags")

    @model_validator(mode="after")
    def validate_source(self) -> "VertexLabel":
        """Only DUPLICATE labels carry a source and they must carry one."""
        if self.tag == VertexTagEnum.DUPLICATE and self.source is None:
            raise ValueError("a duplicate label must name its source vertex")
        if self.tag != VertexTagEnum.DUPLICATE and self.source is not None:
            raise ValueError(f"a {self.tag.value} label cannot carry a source vertex")
        return self

    def describe(self) -> str:
        """``duplicate-of(k)`` for duplicates, the tag value otherwise."""
        if self.tag == VertexTagEnum.DUPLICATE:
            return f"duplicate-of({self.source})"
        return self.tag.value


class Graph(BaseModel):
    """
    # Summary

    Simple undirected graph on vertices 0..n-1.

    ## Description

    ``adj[i]`` is an integer bitset of the neighbours of i. The validator
    enforces symmetry, the absence of loops and that every neighbour index is
    below n. ``labels`` optionally tags vertices with their role in a family
    construction; at most one label per vertex.

    ## Usage

    ```python
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    g.edge_count
    # Returns: 2
    g.neighbors(1)
    # Returns: [0, 2]
    ```

    ## Raises

    - ValidationError: if the adjacency rows do not describe a simple graph
    """

    model_config = GRAPH_CONFIG

    n: int = Field(default=0, ge=0, le=Limits.MAX_GRAPH_ORDER, description="Vertex count")
    adj: tuple[int, ...] = Field(default=(), description="Adjacency bitsets, one per vertex")
    labels: tuple[VertexLabel, ...] = Field(default=(), description="Optional vertex role annotations")

    @model_validator(mode="after")
    def validate_simple(self) -> "Graph":
        """Check row count, range, loops, symmetry and label uniqueness."""
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        for i, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {i} references a vertex outside 0..{self.n - 1}")
            if row >> i & 1:
                raise ValueError(f"vertex {i} has a loop")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"edge {i}-{j} is not symmetric")
        seen = set()
        for label in self.labels:
            if label.index >= self.n:
                raise ValueError(f"label index {label.index} is outside 0..{self.n - 1}")
            if label.index in seen:
                raise ValueError(f"vertex {label.index} has more than one label")
            seen.add(label.index)
        return self

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels: Iterable[VertexLabel] = ()) -> "Graph":
        """
        # Summary

        Build a graph from an edge list.

        ## Raises

        - ValueError: on loops, out-of-range endpoints or n above Limits.MAX_GRAPH_ORDER
        """
        Limits.require_order(n, Limits.MAX_GRAPH_ORDER, "graph")
        rows = [0] * n
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) is outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n=n, adj=tuple(rows), labels=tuple(labels))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """Edgeless graph on n vertices."""
        Limits.require_order(n, Limits.MAX_GRAPH_ORDER, "graph")
        return cls(n=n, adj=(0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        """Neighbours of v, ascending."""
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        """Degree of every vertex, by index."""
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v, lexicographic."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        """e(G)."""
        return sum(self.degrees()) // 2

    def label_of(self, v: int) -> Optional[VertexLabel]:
        """The label of v, if any."""
        return next((label for label in self.labels if label.index == v), None)

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        """Number of edges with both ends in ``vertices``."""
        members = list(vertices)
        mask = 0
        for v in members:
            mask |= 1 << v
        return sum((self.adj[v] & mask).bit_count() for v in members) // 2

    def distance(self, source: int, target: int) -> Optional[int]:
        """Length of a shortest path, None when unreachable."""
        if source == target:
            return 0
        depth = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in bits(self.adj[u]):
                if w not in depth:
                    depth[w] = depth[u] + 1
                    if w == target:
                        return depth[w]
                    queue.append(w)
        return None

    def component_mask(self, start: int) -> int:
        """Bitset of the connected component containing ``start``."""
        seen = 1 << start
        frontier = seen
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= self.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        """True for connected graphs; the empty graph on 0 vertices counts as connected."""
        if self.n == 0:
            return True
        return self.component_mask(0) == (1 << self.n) - 1

    def without_edge(self, u: int, v: int) -> "Graph":
        """
        # Summary

        Copy of the graph with edge uv removed.

        ## Raises

        - ValueError: if uv is not an edge
        """
        if not self.has_edge(u, v):
            raise ValueError(f"{u}-{v} is not an edge")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(n=self.n, adj=tuple(rows), labels=self.labels)

    def with_edge(self, u: int, v: int) -> "Graph":
        """Copy of the graph with edge uv added."""
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(n=self.n, adj=tuple(rows), labels=self.labels)


class BridgeParams(BaseModel):
    """
    # Summary

    Clique sizes of a complete bridge graph B(m,n).

    ## Description

    Normalised so that m >= n >= 1. ``admissible`` reports whether the
    bridge graph belongs to the minimally connected prime graph class:
    m >= n > 1, or (m, n) in {(2, 1), (1, 1)}.

    ## Raises

    - ValidationError: if n < 1 or m < n
    """

    model_config = GRAPH_CONFIG

    m: int = Field(ge=1, description="Size of the first clique")
    n: int = Field(ge=1, description="Size of the second clique")

    @model_validator(mode="after")
    def validate_order(self) -> "BridgeParams":
        """Enforce m >= n."""
        if self.m < self.n:
            raise ValueError(f"m must be >= n, got m={self.m}, n={self.n}")
        return self

    @property
    def admissible(self) -> bool:
        """Membership condition for the minimally connected class."""
        return self.n > 1 or (self.m, self.n) in {(2, 1), (1, 1)}

    @property
    def order(self) -> int:
        """m + n."""
        return self.m + self.n


def _clique_rows(rows: list[int], members: Sequence[int]) -> None:
    mask = 0
    for v in members:
        mask |= 1 << v
    for v in members:
        rows[v] |= mask & ~(1 << v)


def empty_graph(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    return Graph.empty(n)


def complete_graph(k: int) -> Graph:
    """
    # Summary

    The complete graph K_k.

    ## Raises

    - ValueError: if k < 1
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    Limits.require_order(k, Limits.MAX_GRAPH_ORDER, "complete graph")
    rows = [0] * k
    _clique_rows(rows, range(k))
    labels = tuple(VertexLabel(index=v, tag=VertexTagEnum.CLIQUE_MEMBER) for v in range(k))
    return Graph(n=k, adj=tuple(rows), labels=labels)


def cycle_graph(k: int) -> Graph:
    """
    # Summary

    The cycle C_k with vertices in cyclic order 0-1-...-(k-1)-0.

    ## Raises

    - ValueError: if k < 3
    """
    if k < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {k}")
    return Graph.from_edges(k, [(v, (v + 1) % k) for v in range(k)])


def bridge_graph(params: BridgeParams) -> Graph:
    """
    # Summary

    The complete bridge graph B(m,n).

    ## Description

    Vertices 0..m-1 form K_m, vertices m..m+n-1 form K_n and the bridge is
    the edge (m-1, m), which puts the lone off-block 1 of the adjacency
    matrix in the bottom-left corner of the upper-right block.
    """
    m, n = params.m, params.n
    Limits.require_order(m + n, Limits.MAX_GRAPH_ORDER, "bridge graph")
    rows = [0] * (m + n)
    _clique_rows(rows, range(m))
    _clique_rows(rows, range(m, m + n))
    rows[m - 1] |= 1 << m
    rows[m] |= 1 << (m - 1)
    labels = tuple(
        VertexLabel(index=v, tag=VertexTagEnum.BRIDGE_VERTEX if v in (m - 1, m) else VertexTagEnum.CLIQUE_MEMBER) for v in range(m + n)
    )
    return Graph(n=m + n, adj=tuple(rows), labels=labels)


def suspension_graph(params: BridgeParams) -> Graph:
    """
    # Summary

    The suspension graph S(m,n).

    ## Description

    B(m,n) plus an apex at index m+n adjacent to every vertex except the two
    bridge vertices m-1 and m.

    ## Raises

    - ValueError: if m + n < 3 (the apex would be isolated)
    """
    if params.order < 3:
        raise ValueError(f"suspension graph needs m + n >= 3, got m={params.m}, n={params.n}")
    Limits.require_order(params.order + 1, Limits.MAX_GRAPH_ORDER, "suspension graph")
    base = bridge_graph(params)
    apex = base.n
    rows = list(base.adj) + [0]
    for v in range(base.n):
        if v not in (params.m - 1, params.m):
            rows[v] |= 1 << apex
            rows[apex] |= 1 << v
    labels = base.labels + (VertexLabel(index=apex, tag=VertexTagEnum.APEX),)
    return Graph(n=apex + 1, adj=tuple(rows), labels=labels)


def cycle5() -> Graph:
    """The 5-cycle 0-1-2-3-4-0 with every vertex tagged as a cycle vertex."""
    labels = [VertexLabel(index=v, tag=VertexTagEnum.CYCLE_VERTEX) for v in range(5)]
    return Graph.from_edges(5, [(v, (v + 1) % 5) for v in range(5)], labels)


def duplicate_vertex(graph: Graph, v: int) -> Graph:
    """
    # Summary

    Duplicate vertex v.

    ## Description

    Adds u = n adjacent to v and to every neighbour of v, so that
    N(u) = N(v) + {v}.

    ## Raises

    - ValueError: if v is not a vertex of graph
    """
    if not 0 <= v < graph.n:
        raise ValueError(f"vertex {v} is outside 0..{graph.n - 1}")
    u = graph.n
    neighbourhood = graph.adj[v] | (1 << v)
    rows = list(graph.adj) + [neighbourhood]
    for w in bits(neighbourhood):
        rows[w] |= 1 << u
    labels = graph.labels + (VertexLabel(index=u, tag=VertexTagEnum.DUPLICATE, source=v),)
    return Graph(n=u + 1, adj=tuple(rows), labels=labels)


def duplicate_sequence(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Apply duplicate_vertex for each vertex in turn."""
    for v in vertices:
        graph = duplicate_vertex(graph, v)
    return graph


def reseminant_tilde(n: int) -> Graph:
    """
    # Summary

    R~n: C5 with original vertex 0 duplicated n times.

    ## Raises

    - ValueError: if n < 0
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    Limits.require_order(n + 5, Limits.MAX_GRAPH_ORDER, "reseminant graph")
    return duplicate_sequence(cycle5(), [0] * n)


def complement(graph: Graph) -> Graph:
    """Same vertices and labels, edge iff not an edge of graph."""
    full = (1 << graph.n) - 1
    rows = tuple(full & ~row & ~(1 << i) for i, row in enumerate(graph.adj))
    return Graph(n=graph.n, adj=rows, labels=graph.labels)


def adjacency_matrix(graph: Graph) -> IntMatrix:
    """Symmetric 0/1 adjacency matrix in vertex index order."""
    entries = tuple(tuple(row >> j & 1 for j in range(graph.n)) for row in graph.adj)
    return IntMatrix(nrows=graph.n, ncols=graph.n, entries=entries, symmetric=True)
