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
Graph JSON reader/writer and DOT emitter.

The JSON format is ``{"n": int, "edges": [[i, j], ...]}`` with 0-based
indices and i < j. The reader accepts either orientation of a pair but
rejects loops, duplicate edges and indices outside 0..n-1.
"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type  # pylint: disable=invalid-name

import json
import logging
from pathlib import Path
from typing import Any, Union

from errors import GraphFormatError
from graph_core import Graph
from limits import Limits

log = logging.getLogger(__name__)


def graph_to_dict(graph: Graph) -> dict[str, Any]:
    """JSON-ready dict; edges sorted with i < j."""
    return {"n": graph.n, "edges": [[u, v] for u, v in graph.edges()]}


def dumps_graph(graph: Graph) -> str:
    """
    # Summary

    Serialize a graph to its single-line JSON form.

    ## Usage

    ```python
    dumps_graph(Graph.from_edges(3, [(0, 1), (1, 2)]))
    # Returns: '{"n": 3, "edges": [[0, 1], [1, 2]]}'
    ```
    """
    return json.dumps(graph_to_dict(graph))


def _require_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphFormatError(f"{what} must be an integer, got {value!r}")
    return value


def graph_from_dict(data: Any) -> Graph:
    """
    # Summary

    Build a graph from parsed JSON.

    ## Raises

    - GraphFormatError: if the data is not a valid simple graph description
    """
    if not isinstance(data, dict):
        raise GraphFormatError("graph JSON must be an object with keys 'n' and 'edges'")
    unknown = set(data) - {"n", "edges"}
    if unknown:
        raise GraphFormatError(f"unexpected keys in graph JSON: {sorted(unknown)}")
    if "n" not in data:
        raise GraphFormatError("graph JSON is missing 'n'")
    n = _require_int(data["n"], "n")
    if n < 0:
        raise GraphFormatError(f"n must be >= 0, got {n}")
    if n > Limits.MAX_GRAPH_ORDER:
        raise GraphFormatError(f"n = {n} exceeds the graph order limit of {Limits.MAX_GRAPH_ORDER}")
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise GraphFormatError("'edges' must be a list of pairs")
    seen: set[tuple[int, int]] = set()
    for edge in edges:
        if not isinstance(edge, list) or len(edge) != 2:
            raise GraphFormatError(f"edge {edge!r} is not a pair")
        u = _require_int(edge[0], "edge endpoint")
        v = _require_int(edge[1], "edge endpoint")
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) is outside 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}")
        seen.add(key)
    return Graph.from_edges(n, sorted(seen))


def loads_graph(text: str) -> Graph:
    """Parse a graph from JSON text."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise GraphFormatError(f"invalid graph JSON: {error}") from error
    return graph_from_dict(data)


def read_graph(path: Union[str, Path]) -> Graph:
    """
    # Summary

    Read a graph JSON file.

    ## Raises

    - GraphFormatError: if the file cannot be read or is malformed
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as error:
        raise GraphFormatError(f"cannot read graph file {path}: {error}") from error
    graph = loads_graph(text)
    log.debug("read graph with %d vertices and %d edges from %s", graph.n, graph.edge_count, path)
    return graph


def write_graph(graph: Graph, path: Union[str, Path]) -> None:
    """Write a graph JSON file, newline-terminated."""
    Path(path).write_text(dumps_graph(graph) + "\n", encoding="utf-8")


def to_dot(graph: Graph, name: str = "G") -> str:
    """
    # Summary

    Graphviz DOT for the graph, with vertex tags as node labels.

    ## Usage

    ```python
    print(to_dot(complete_graph(2)))
    # graph G {
    #   0 [label="0 clique-member"];
    #   1 [label="1 clique-member"];
    #   0 -- 1;
    # }
    ```
    """
    lines = [f"graph {name} {{"]
    for v in range(graph.n):
        label = graph.label_of(v)
        text = f"{v} {label.describe()}" if label is not None else str(v)
        lines.append(f'  {v} [label="{text}"];')
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)
