"""
Enums used in the primegraph-spectra package.
"""
from enum import Enum


class FamilyEnum(str, Enum):
    """
    # Summary

    Enum for the graph families a graph source can produce.

    ## Members

    - BRIDGE: Complete bridge graph B(m,n).
    - BRIDGE_MM1: Complete bridge graph B(m,m-1).
    - SUSPENSION: Suspension graph S(m,n).
    - RESEMINANT: Reseminant graph R~n (C5 with one vertex duplicated n times).
    - C5: The 5-cycle.
    - COMPLETE: Complete graph K_k.
    - FILE: A graph read from a JSON file.
    """

    BRIDGE = "bridge"
    BRIDGE_MM1 = "bridge-mm1"
    SUSPENSION = "suspension"
    RESEMINANT = "reseminant"
    C5 = "c5"
    COMPLETE = "complete"
    FILE = "file"


class VertexTagEnum(str, Enum):
    """
    # Summary

    Enum for the role annotation carried by a vertex label.

    ## Members

    - BRIDGE_VERTEX: Endpoint of the bridge edge of a complete bridge graph.
    - CLIQUE_MEMBER: Non-bridge vertex of a clique.
    - APEX: The added vertex of a suspension graph.
    - CYCLE_VERTEX: Vertex of the seed 5-cycle.
    - DUPLICATE: Vertex added by duplication; the label's source names the original.
    """

    BRIDGE_VERTEX = "bridge-vertex"
    CLIQUE_MEMBER = "clique-member"
    APEX = "apex"
    CYCLE_VERTEX = "cycle-vertex"
    DUPLICATE = "duplicate"


class OutputFormatEnum(str, Enum):
    """
    # Summary

    Enum for CLI output formats.

    ## Members

    - JSON: Machine-readable JSON.
    - TABLE: Plain-text table.
    - DOT: Graphviz DOT (graphs only).
    - FACTORED: Factored polynomial string (characteristic polynomials only).
    """

    JSON = "json"
    TABLE = "table"
    DOT = "dot"
    FACTORED = "factored"


class DescriptorKindEnum(str, Enum):
    """
    # Summary

    Enum for the kinds of exact eigenvalue descriptor in a spectrum report.

    ## Members

    - RATIONAL: An exact rational eigenvalue.
    - SURD: A root of x^2 + x - 1, stored exactly as a + b*sqrt(5).
    - CUBIC_ROOT: A certified isolating interval into an explicit integer cubic.
    - ALGEBRAIC: A certified isolating interval into any other integer polynomial.
    """

    RATIONAL = "rational"
    SURD = "surd"
    CUBIC_ROOT = "cubic_root"
    ALGEBRAIC = "algebraic"


class CheckStatusEnum(str, Enum):
    """
    # Summary

    Enum for the outcome of a verification check.

    ## Members

    - PASS: Every case in the sweep agreed.
    - FAIL: At least one case disagreed; a counterexample is attached.
    - NOT_APPLICABLE: The sweep produced no applicable case.
    """

    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


class OrderingEnum(str, Enum):
    """
    # Summary

    Enum for the result of an exact comparison between two real numbers.

    ## Members

    - LESS: Left operand is strictly smaller.
    - EQUAL: Operands are equal.
    - GREATER: Left operand is strictly larger.
    """

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class InverseCaseEnum(str, Enum):
    """
    # Summary

    Enum for the entry classes of the closed-form bridge graph inverse.

    ## Members

    - DIAGONAL: Diagonal entry of a non-bridge vertex.
    - SAME_CLIQUE: Off-diagonal entry between non-bridge vertices of the same clique.
    - CROSS_CLIQUE: Entry between non-bridge vertices of different cliques.
    """

    DIAGONAL = "diagonal"
    SAME_CLIQUE = "same-clique"
    CROSS_CLIQUE = "cross-clique"


class SurdBranchEnum(str, Enum):
    """
    # Summary

    Enum for the two roots of x^2 + x - 1.

    ## Members

    - CONJUGATE: The golden ratio conjugate phi^-1 = (sqrt(5) - 1) / 2.
    - NEGATIVE: The negated golden ratio -phi = -(1 + sqrt(5)) / 2.
    """

    CONJUGATE = "conjugate"
    NEGATIVE = "negative"
