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
Command-line front end.

```bash
primegraph det --family suspension --m 4 --n 3
primegraph charpoly --family bridge-mm1 --m 3 --format factored
primegraph classify --family bridge --m 4 --n 3
primegraph verify --config sweep.toml --format table
```

Exit status is 0 on success, 1 on domain errors (bad parameters, singular
matrices, unreadable graph files) and 2 when a verification check fails.
"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type  # pylint: disable=invalid-name

import argparse
import json
import logging
import os
import sys
from typing import Callable, Optional, TextIO

from closed_forms import charpoly_bridge_formula, charpoly_reseminant_formula
from enums import FamilyEnum, OutputFormatEnum
from exact_linalg import char_poly, det_bareiss, inverse
from graph_core import Graph, adjacency_matrix
from graph_io import dumps_graph, to_dot
from graph_sources import GraphSource, parse_source_spec, source_from_args
from isomorphism import is_isomorphic
from limits import Limits
from polynomials import FactoredPolynomial, factor_over_integers
from recognition import classify
from spectra import SpectrumReport, oracle_spectrum, spectrum_bridge, spectrum_reseminant
from verify import FormulaSet, SweepConfig, run_suite, scorecard_json, scorecard_table, suite_exit_status

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_CHECK_FAILED = 2


def _source_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", choices=[f.value for f in FamilyEnum if f != FamilyEnum.FILE], help="graph family")
    parser.add_argument("--m", type=int, help="first clique size")
    parser.add_argument("--n", type=int, help="second clique size, or duplication count for reseminant")
    parser.add_argument("--k", type=int, help="clique order for complete")
    parser.add_argument("--graph", metavar="PATH", help="graph JSON file instead of a family")


def _format_argument(parser: argparse.ArgumentParser, choices: list[OutputFormatEnum], default: OutputFormatEnum) -> None:
    parser.add_argument("--format", choices=[c.value for c in choices], default=default.value, help=f"output format (default {default.value})")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for every subcommand."""
    parser = argparse.ArgumentParser(prog="primegraph", description="Exact spectra of minimally connected prime graph families")
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="log level for stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen = subparsers.add_parser("gen", help="emit a graph as JSON, DOT or an adjacency table")
    _source_arguments(gen)
    _format_argument(gen, [OutputFormatEnum.JSON, OutputFormatEnum.DOT, OutputFormatEnum.TABLE], OutputFormatEnum.JSON)

    classify_parser = subparsers.add_parser("classify", help="prime graph, minimal and minimally connected verdicts")
    _source_arguments(classify_parser)
    _format_argument(classify_parser, [OutputFormatEnum.JSON, OutputFormatEnum.TABLE], OutputFormatEnum.JSON)

    det = subparsers.add_parser("det", help="exact adjacency determinant")
    _source_arguments(det)
    _format_argument(det, [OutputFormatEnum.TABLE, OutputFormatEnum.JSON], OutputFormatEnum.TABLE)

    inverse_parser = subparsers.add_parser("inverse", help="exact adjacency inverse")
    _source_arguments(inverse_parser)
    _format_argument(inverse_parser, [OutputFormatEnum.TABLE, OutputFormatEnum.JSON], OutputFormatEnum.TABLE)

    charpoly = subparsers.add_parser("charpoly", help="exact characteristic polynomial")
    _source_arguments(charpoly)
    _format_argument(charpoly, [OutputFormatEnum.TABLE, OutputFormatEnum.JSON, OutputFormatEnum.FACTORED], OutputFormatEnum.TABLE)

    spectrum = subparsers.add_parser("spectrum", help="certified spectrum")
    _source_arguments(spectrum)
    _format_argument(spectrum, [OutputFormatEnum.TABLE, OutputFormatEnum.JSON], OutputFormatEnum.TABLE)
    spectrum.add_argument("--width", type=int, default=Limits.DEFAULT_WIDTH_EXPONENT, help="interval width exponent e, width 2^-e")
    spectrum.add_argument("--decimals", type=int, help="show approximate decimals instead of exact intervals")

    verify = subparsers.add_parser("verify", help="run the verification suite")
    _format_argument(verify, [OutputFormatEnum.TABLE, OutputFormatEnum.JSON], OutputFormatEnum.TABLE)
    verify.add_argument("--config", metavar="PATH", help="sweep configuration TOML")
    verify.add_argument("--workers", type=int, help="threads used to run checks")
    verify.add_argument("--check", action="append", dest="checks", metavar="ID", help="run only this check (repeatable)")
    verify.add_argument("--no-timing", action="store_true", help="omit wall times from JSON output")
    verify.add_argument("--plain", action="store_true", help="no ANSI colors (also set by NO_COLOR)")

    isomorphic = subparsers.add_parser("isomorphic", help="compare two graphs up to isomorphism")
    _source_arguments(isomorphic)
    isomorphic.add_argument("--other", required=True, metavar="SPEC", help="second graph, e.g. suspension:m=4,n=2 or file:path=g.json")
    _format_argument(isomorphic, [OutputFormatEnum.TABLE, OutputFormatEnum.JSON], OutputFormatEnum.TABLE)
    return parser


def _source(args: argparse.Namespace) -> GraphSource:
    return source_from_args(args.family, args.m, args.n, args.k, args.graph)


def _adjacency_table(graph: Graph) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in adjacency_matrix(graph).to_lists())


def run_gen(args: argparse.Namespace, out: TextIO) -> int:
    source = _source(args)
    graph = source.graph
    if args.format == OutputFormatEnum.DOT.value:
        print(to_dot(graph), file=out)
    elif args.format == OutputFormatEnum.TABLE.value:
        print(_adjacency_table(graph), file=out)
    else:
        print(dumps_graph(graph), file=out)
    return EXIT_OK


def run_classify(args: argparse.Namespace, out: TextIO) -> int:
    report = classify(_source(args).graph)
    if args.format == OutputFormatEnum.TABLE.value:
        for key, value in report.model_dump(mode="json").items():
            print(f"{key}: {json.dumps(value)}", file=out)
    else:
        print(report.model_dump_json(indent=2), file=out)
    return EXIT_OK


def run_det(args: argparse.Namespace, out: TextIO) -> int:
    source = _source(args)
    graph = source.graph
    Limits.require_order(graph.n, Limits.MAX_MATRIX_ORDER, "matrix")
    determinant = det_bareiss(adjacency_matrix(graph))
    if args.format == OutputFormatEnum.JSON.value:
        print(json.dumps({"graph": source.label, "determinant": determinant}), file=out)
    else:
        print(determinant, file=out)
    return EXIT_OK


def run_inverse(args: argparse.Namespace, out: TextIO) -> int:
    source = _source(args)
    graph = source.graph
    Limits.require_order(graph.n, Limits.MAX_MATRIX_ORDER, "matrix")
    rows = inverse(adjacency_matrix(graph)).to_strings()
    if args.format == OutputFormatEnum.JSON.value:
        print(json.dumps({"graph": source.label, "inverse": rows}), file=out)
    else:
        width = max((len(cell) for row in rows for cell in row), default=0)
        for row in rows:
            print(" ".join(cell.rjust(width) for cell in row), file=out)
    return EXIT_OK


def closed_form_charpoly(source: GraphSource) -> Optional[FactoredPolynomial]:
    """Closed-form factorization for the bridge-mm1 (m > 2) and reseminant families, None otherwise."""
    family = source.family
    if family == FamilyEnum.BRIDGE_MM1 and source.m is not None and source.m > 2:
        return charpoly_bridge_formula(source.m)
    if family == FamilyEnum.RESEMINANT and source.n is not None:
        return charpoly_reseminant_formula(source.n)
    return None


def run_charpoly(args: argparse.Namespace, out: TextIO) -> int:
    source = _source(args)
    graph = source.graph
    Limits.require_order(graph.n, Limits.MAX_MATRIX_ORDER, "matrix")
    polynomial = char_poly(adjacency_matrix(graph))
    if args.format == OutputFormatEnum.FACTORED.value:
        factored = closed_form_charpoly(source)
        if factored is None or factored.expand() != polynomial:
            factored = factor_over_integers(polynomial)
        print(factored.to_string(), file=out)
    elif args.format == OutputFormatEnum.JSON.value:
        document = {"graph": source.label, "coefficients": list(polynomial.coefficients), "polynomial": polynomial.to_string()}
        print(json.dumps(document), file=out)
    else:
        print(polynomial.to_string(), file=out)
    return EXIT_OK


def spectrum_for(source: GraphSource, width_exponent: int) -> SpectrumReport:
    """Closed-form spectrum for bridge-mm1 (m > 2) and reseminant sources, the exact oracle spectrum otherwise."""
    width = Limits.width_from_exponent(width_exponent)
    if source.family == FamilyEnum.BRIDGE_MM1 and source.m is not None and source.m > 2:
        return spectrum_bridge(source.m, width)
    if source.family == FamilyEnum.RESEMINANT and source.n is not None:
        return spectrum_reseminant(source.n, width)
    return oracle_spectrum(source.graph, width, source.label)


def run_spectrum(args: argparse.Namespace, out: TextIO) -> int:
    report = spectrum_for(_source(args), args.width)
    if args.format == OutputFormatEnum.JSON.value:
        print(report.model_dump_json(indent=2), file=out)
        return EXIT_OK
    print(f"Spec({report.graph_name}), order {report.order}", file=out)
    for label, kind, value, multiplicity in report.rows(args.decimals):
        print(f"  {label:<10} {kind:<11} x{multiplicity:<3} {value}", file=out)
    return EXIT_OK


def run_verify(args: argparse.Namespace, out: TextIO, formulas: Optional[FormulaSet] = None) -> int:
    config = SweepConfig.from_file(args.config) if args.config else SweepConfig()
    if args.workers is not None:
        config = SweepConfig(**{**config.model_dump(), "workers": args.workers})
    checks = run_suite(config, formulas=formulas, check_ids=args.checks)
    if args.format == OutputFormatEnum.JSON.value:
        print(scorecard_json(checks, include_timing=not args.no_timing), file=out)
    else:
        print(scorecard_table(checks, plain=args.plain or "NO_COLOR" in os.environ), file=out)
    return suite_exit_status(checks)


def run_isomorphic(args: argparse.Namespace, out: TextIO) -> int:
    left_source, right_source = _source(args), parse_source_spec(args.other)
    result = is_isomorphic(left_source.graph, right_source.graph)
    if args.format == OutputFormatEnum.JSON.value:
        document = {"left": left_source.label, "right": right_source.label, **result.model_dump(mode="json")}
        print(json.dumps(document), file=out)
    elif result.isomorphic:
        print(f"{left_source.label} is isomorphic to {right_source.label}: {list(result.mapping or ())}", file=out)
    else:
        print(f"{left_source.label} is not isomorphic to {right_source.label}", file=out)
    return EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace, TextIO], int]] = {
    "gen": run_gen,
    "classify": run_classify,
    "det": run_det,
    "inverse": run_inverse,
    "charpoly": run_charpoly,
    "spectrum": run_spectrum,
    "isomorphic": run_isomorphic,
}


def main(argv: Optional[list[str]] = None, formulas: Optional[FormulaSet] = None, out: Optional[TextIO] = None) -> int:
    """
    # Summary

    Parse ``argv``, run one subcommand and return the exit status.

    ## Description

    Domain errors (any ValueError, including pydantic validation errors,
    and OSError) are written to stderr as one line and give status 1.
    ``formulas`` replaces the closed forms used by ``verify``.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    out = out or sys.stdout
    try:
        if args.command == "verify":
            return run_verify(args, out, formulas)
        return COMMANDS[args.command](args, out)
    except (ValueError, OSError) as error:
        log.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {error}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
