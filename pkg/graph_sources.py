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
Graph source models.

A graph source names a family and its parameters (``bridge m=4 n=3``,
``reseminant n=2``, ``c5``, ``complete k=5``) or a JSON graph file, and
builds the graph on demand. Sources are what the command line resolves
its arguments into.
"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type  # pylint: disable=invalid-name

from typing import Literal, Optional, Union

from enums import FamilyEnum
from graph_core import BridgeParams, Graph, bridge_graph, complete_graph, cycle5, reseminant_tilde, suspension_graph
from graph_io import read_graph
from param_mixins import CliqueOrderMixin, DuplicationCountMixin, FirstCliqueMixin, GraphPathMixin, SecondCliqueMixin
from pydantic import BaseModel, ConfigDict, Field

# Common config for basic validation
COMMON_CONFIG = ConfigDict(validate_assignment=True)


class GraphSource(BaseModel):
    """
    # Summary

    Base class for graph sources.

    ## Description

    Subclasses set ``class_name`` and implement the ``family``, ``graph``
    and ``label`` properties. ``to_spec_string`` renders the source back
    into the ``family:key=value,...`` form accepted by
    ``parse_source_spec``.
    """

    model_config = COMMON_CONFIG

    @property
    def family(self) -> FamilyEnum:
        raise NotImplementedError

    @property
    def graph(self) -> Graph:
        raise NotImplementedError

    @property
    def label(self) -> str:
        raise NotImplementedError

    def to_spec_string(self) -> str:
        """
        # Summary

        Render the source as ``family:key=value,...``.

        ## Usage

        ```python
        BridgeSource(m=4, n=3).to_spec_string()
        # Returns: "bridge:m=4,n=3"
        ```
        """
        params = [f"{key}={value}" for key, value in sorted(self.model_dump(exclude_none=True, exclude={"class_name"}).items())]
        if not params:
            return self.family.value
        return f"{self.family.value}:{','.join(params)}"


def _require(value: Optional[object], name: str) -> object:
    if value is None:
        raise ValueError(f"{name} must be set before accessing graph")
    return value


class BridgeSource(FirstCliqueMixin, SecondCliqueMixin, GraphSource):
    """
    # Summary

    Complete bridge graph B(m,n).

    ## Usage

    ```python
    source = BridgeSource()
    source.m = 4
    source.n = 3
    source.graph.n
    # Returns: 7
    ```

    ## Raises

    - ValueError: if m or n is unset when graph is accessed, or m < n
    """

    class_name: Literal["BridgeSource"] = Field(default="BridgeSource", description="Class name")

    @property
    def family(self) -> FamilyEnum:
        return FamilyEnum.BRIDGE

    @property
    def params(self) -> BridgeParams:
        """Validated clique sizes."""
        return BridgeParams(m=_require(self.m, "m"), n=_require(self.n, "n"))

    @property
    def graph(self) -> Graph:
        return bridge_graph(self.params)

    @property
    def label(self) -> str:
        return f"B({self.m},{self.n})"


class BridgeMm1Source(FirstCliqueMixin, GraphSource):
    """
    # Summary

    Complete bridge graph B(m,m-1).

    ## Raises

    - ValueError: if m is unset when graph is accessed, or m < 2
    """

    class_name: Literal["BridgeMm1Source"] = Field(default="BridgeMm1Source", description="Class name")

    @property
    def family(self) -> FamilyEnum:
        return FamilyEnum.BRIDGE_MM1

    @property
    def params(self) -> BridgeParams:
        """Validated clique sizes (m, m-1)."""
        m = _require(self.m, "m")
        if m < 2:
            raise ValueError(f"bridge-mm1 needs m >= 2, got m={m}")
        return BridgeParams(m=m, n=m - 1)

    @property
    def graph(self) -> Graph:
        return bridge_graph(self.params)

    @property
    def label(self) -> str:
        return f"B({self.m},{None if self.m is None else self.m - 1})"


class SuspensionSource(FirstCliqueMixin, SecondCliqueMixin, GraphSource):
    """
    # Summary

    Suspension graph S(m,n).

    ## Raises

    - ValueError: if m or n is unset when graph is accessed, m < n, or m + n < 3
    """

    class_name: Literal["SuspensionSource"] = Field(default="SuspensionSource", description="Class name")

    @property
    def family(self) -> FamilyEnum:
        return FamilyEnum.SUSPENSION

    @property
    def params(self) -> BridgeParams:
        """Validated clique sizes."""
        return BridgeParams(m=_require(self.m, "m"), n=_require(self.n, "n"))

    @property
    def graph(self) -> Graph:
        return suspension_graph(self.params)

    @property
    def label(self) -> str:
        return f"S({self.m},{self.n})"


class ReseminantSource(DuplicationCountMixin, GraphSource):
    """
    # Summary

    Reseminant graph R~n.

    ## Raises

    - ValueError: if n is unset when graph is accessed
    """

    class_name: Literal["ReseminantSource"] = Field(default="ReseminantSource", description="Class name")

    @property
    def family(self) -> FamilyEnum:
        return FamilyEnum.RESEMINANT

    @property
    def graph(self) -> Graph:
        return reseminant_tilde(_require(self.n, "n"))

    @property
    def label(self) -> str:
        return f"R~{self.n}"


class C5Source(GraphSource):
    """The 5-cycle."""

    class_name: Literal["C5Source"] = Field(default="C5Source", description="Class name")

    @property
    def family(self) -> FamilyEnum:
        return FamilyEnum.C5

    @property
    def graph(self) -> Graph:
        return cycle5()

    @property
    def label(self) -> str:
        return "C5"


class CompleteSource(CliqueOrderMixin, GraphSource):
    """
    # Summary

    Complete graph K_k.

    ## Raises

    - ValueError: if k is unset when graph is accessed
    """

    class_name: Literal["CompleteSource"] = Field(default="CompleteSource", description="Class name")

    @property
    def family(self) -> FamilyEnum:
        return FamilyEnum.COMPLETE

    @property
    def graph(self) -> Graph:
        return complete_graph(_require(self.k, "k"))

    @property
    def label(self) -> str:
        return f"K{self.k}"


class FileSource(GraphPathMixin, GraphSource):
    """
    # Summary

    Graph read from a JSON file.

    ## Raises

    - ValueError: if path is unset when graph is accessed
    - GraphFormatError: if the file is unreadable or malformed
    """

    class_name: Literal["FileSource"] = Field(default="FileSource", description="Class name")

    @property
    def family(self) -> FamilyEnum:
        return FamilyEnum.FILE

    @property
    def graph(self) -> Graph:
        return read_graph(_require(self.path, "path"))

    @property
    def label(self) -> str:
        return str(self.path)


AnySource = Union[BridgeSource, BridgeMm1Source, SuspensionSource, ReseminantSource, C5Source, CompleteSource, FileSource]

SOURCE_CLASSES: dict[FamilyEnum, type[GraphSource]] = {
    FamilyEnum.BRIDGE: BridgeSource,
    FamilyEnum.BRIDGE_MM1: BridgeMm1Source,
    FamilyEnum.SUSPENSION: SuspensionSource,
    FamilyEnum.RESEMINANT: ReseminantSource,
    FamilyEnum.C5: C5Source,
    FamilyEnum.COMPLETE: CompleteSource,
    FamilyEnum.FILE: FileSource,
}


def source_from_args(
    family: Optional[Union[FamilyEnum, str]] = None,
    m: Optional[int] = None,
    n: Optional[int] = None,
    k: Optional[int] = None,
    path: Optional[str] = None,
) -> GraphSource:
    """
    # Summary

    Build a source from loose arguments, as the command line supplies them.

    ## Description

    A ``path`` without a family selects a file source. Arguments the
    family does not use are ignored.

    ## Raises

    - ValueError: if neither a family nor a path is given, or the family is unknown
    """
    if family is None:
        if path is None:
            raise ValueError("either a family or a graph file must be given")
        return FileSource(path=path)
    family = FamilyEnum(family)
    values = {"m": m, "n": n, "k": k, "path": path}
    source_class = SOURCE_CLASSES[family]
    accepted = {key: value for key, value in values.items() if key in source_class.model_fields and value is not None}
    return source_class(**accepted)


def parse_source_spec(spec: str) -> GraphSource:
    """
    # Summary

    Parse ``family:key=value,...`` (or ``family key=value ...``) into a source.

    ## Usage

    ```python
    parse_source_spec("suspension:m=4,n=3").label
    # Returns: "S(4,3)"
    parse_source_spec("file:path=g.json").family
    # Returns: FamilyEnum.FILE
    ```

    ## Raises

    - ValueError: on unknown families, unknown keys or malformed pairs
    """
    text = spec.strip()
    if not text:
        raise ValueError("empty graph source")
    head, _, rest = text.replace(" ", ":", 1).partition(":")
    try:
        family = FamilyEnum(head)
    except ValueError as error:
        raise ValueError(f"unknown family '{head}', expected one of {[f.value for f in FamilyEnum]}") from error
    source_class = SOURCE_CLASSES[family]
    values: dict[str, object] = {}
    for pair in rest.replace(" ", ",").split(","):
        if not pair:
            continue
        key, sep, value = pair.partition("=")
        if not sep or not value:
            raise ValueError(f"malformed parameter '{pair}', expected key=value")
        if key not in source_class.model_fields or key == "class_name":
            raise ValueError(f"family '{family.value}' does not take parameter '{key}'")
        values[key] = value
    return source_class(**values)
