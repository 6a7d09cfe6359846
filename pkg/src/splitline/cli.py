# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Command line interface.

.. code-block:: console

    $ splitline pn --n 3 --e 3
    (5,5)
    $ splitline interp --n 4 --d 3 --emax 40 --format csv
    $ splitline tree comb.json --cohomology --seed 3
    $ splitline verify --seeds 20

Every subcommand accepts ``--seed``, ``--field``, ``--format`` and ``--output``. Reports
go to standard output or the ``--output`` file, diagnostics to standard error. The exit
status is 0 on success, 1 on a domain error or a failed check, and 2 on a usage error.
"""

import argparse
import dataclasses
import logging
import sys
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any

from ._version import __version__
from .exceptions import AccessibilityError, InvalidInputError, SplitlineError
from .geometry import PipelineRecord, fan_assembly_d_eq_n, fang_assembly, pn_pipeline
from .interp import InterpTable, interp_table, is_accessible
from .io import comb_to_dict, read_comb, report_json, table_csv, table_to_dict
from .oracle import ExactField, end_tree, tree_cohomology, tree_data_from_comb
from .splitcalc import (
    Direction,
    SplitType,
    balance_info,
    balanced_extension,
    end_bundle,
    general_kernel,
    general_modification,
    h_split,
    is_rigid,
    make_split,
    partition_of,
    split_of,
)
from .treebundle import smoothing_reduce
from .verify import CHECKS, CheckResult, run_suite

logger = logging.getLogger(__name__)

__all__ = ["OutputFormat", "RunConfig", "build_parser", "config_from_args", "main", "run"]

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


# subcommands whose reports have a tabular form
CSV_COMMANDS = frozenset({"interp", "verify"})

COMMANDS = ("split", "tree", "pn", "fan", "fang", "interp", "verify")


@dataclass(frozen=True)
class RunConfig:
    """One invocation of the command line interface.

    Args:
        command: The subcommand

        params: Parameters of the subcommand, keyed by option name

        seed: Seed of every random choice

        field: Coefficient field of the oracle

        output_format: Format of the report

        output: File to write the report to, standard output if ``None``

    Raises:
        InvalidInputError: if the command is unknown or the format does not apply to it

    Examples:
    >>> config = RunConfig("pn", {"n": 3, "e": 3})
    >>> dataclasses.replace(config, seed=5).seed
    5
    """

    command: str
    params: Mapping[str, Any] = dataclasses.field(default_factory=dict)
    seed: int = 0
    field: ExactField = dataclasses.field(default_factory=ExactField)
    output_format: OutputFormat = OutputFormat.TEXT
    output: Path | None = None

    def __post_init__(self):
        object.__setattr__(self, "output_format", OutputFormat(self.output_format))
        if self.command not in COMMANDS:
            raise InvalidInputError(f"Unknown command {self.command!r}, expected one of {COMMANDS}")
        if self.output_format is OutputFormat.CSV and self.command not in CSV_COMMANDS:
            raise InvalidInputError(f"CSV output is only available for {sorted(CSV_COMMANDS)}")


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--seed", type=int, default=0, help="Seed of every random choice")
    parser.add_argument(
        "--field",
        default=str(ExactField().modulus),
        help="Oracle coefficient field: a prime modulus or 'rationals'",
    )
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TEXT.value,
    )
    parser.add_argument("--output", type=Path, default=None, help="Write the report here")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )


def _degrees(text: str) -> SplitType:
    try:
        return make_split(int(a) for a in text.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Expected comma separated degrees, got {text!r}") from e


def build_parser() -> argparse.ArgumentParser:
    """The argument parser of the ``splitline`` console script"""
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common)

    parser = argparse.ArgumentParser(
        prog="splitline", description="Balanced vector bundles on rational curves"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    split = sub.add_parser("split", parents=[common], help="Arithmetic of a splitting type")
    split.add_argument(
        "degrees", type=_degrees, help="Comma separated degrees, e.g. 1,1,0 or 0,-1"
    )
    split.add_argument("--twist", type=int, default=0, help="Twist for the cohomology")
    split.add_argument("--modify", type=int, help="Colength of a general modification")
    split.add_argument("--direction", choices=[d.value for d in Direction], default="down")
    split.add_argument("--kernel", type=int, help="Degree m of a general surjection onto O(m)")
    split.add_argument("--extend", type=_degrees, help="Quotient of a general extension")

    tree = sub.add_parser("tree", parents=[common], help="Smoothing reduction of a comb file")
    tree.add_argument("comb", type=Path, help="Comb file in JSON")
    tree.add_argument(
        "--cohomology", action="store_true", help="Also compute cohomology with the oracle"
    )
    tree.add_argument("--twist", type=int, default=0, help="Twist of the base for --cohomology")

    pn = sub.add_parser("pn", parents=[common], help="Normal bundle of a curve in P^n")
    pn.add_argument("--n", type=int, required=True)
    pn.add_argument("--e", type=int, required=True)

    fan = sub.add_parser("fan", parents=[common], help="Curves on hypersurfaces of degree n")
    fan.add_argument("--n", type=int, required=True)
    fan.add_argument("--e", type=int, required=True)

    fang = sub.add_parser("fang", parents=[common], help="Curves on hypersurfaces of degree d < n")
    fang.add_argument("--n", type=int, required=True)
    fang.add_argument("--d", type=int, required=True)
    fang.add_argument("--e", type=int, required=True)
    fang.add_argument("--e0", type=int, help="Base degree, the accessibility witness by default")

    interp = sub.add_parser("interp", parents=[common], help="Interpolation numerology table")
    interp.add_argument("--n", type=int, required=True)
    interp.add_argument("--d", type=int, required=True)
    interp.add_argument("--emin", type=int, default=1)
    interp.add_argument("--emax", type=int, required=True)

    verify = sub.add_parser("verify", parents=[common], help="Cross-check rules and oracle")
    verify.add_argument("--seeds", type=int, default=5, help="Number of seeds from --seed on")
    verify.add_argument("--checks", nargs="+", choices=list(CHECKS), default=None)
    verify.add_argument("--quick", action="store_true", help="Reduced desk-scale case counts")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Builds a validated configuration from parsed arguments"""
    common = {"command", "seed", "field", "output_format", "output", "verbose"}
    params = {k: v for k, v in vars(args).items() if k not in common}
    return RunConfig(
        command=args.command,
        params=params,
        seed=args.seed,
        field=ExactField.parse(args.field),
        output_format=OutputFormat(args.output_format),
        output=args.output,
    )


def _split_report(config: RunConfig) -> tuple[dict[str, Any], list[str]]:
    p = config.params
    split: SplitType = p["degrees"]
    info = balance_info(split)
    h0, h1 = h_split(split, p.get("twist", 0))
    payload: dict[str, Any] = {
        "degrees": list(split.degrees),
        "rank": split.rank,
        "c1": split.c1,
        "balance": info._asdict(),
        "twist": p.get("twist", 0),
        "h0": h0,
        "h1": h1,
        "end": list(end_bundle(split).degrees),
        "rigid": is_rigid(split),
        "partition": [list(block) for block in partition_of(split).blocks],
    }
    lines = [
        f"type {split}",
        f"balanced {info.balanced}, upper {info.upper_rank}O({info.upper_degree}), "
        f"slope floor {info.slope_floor}",
        f"h({split}({payload['twist']})) = ({h0}, {h1})",
        f"rigid {payload['rigid']}",
    ]

    if p.get("modify") is not None:
        modified = general_modification(split, p["modify"], p.get("direction", "down"))
        payload["modification"] = list(modified.degrees)
        lines.append(f"{p.get('direction', 'down')} modification {p['modify']}: {modified}")
    if p.get("kernel") is not None:
        kernel = general_kernel(split, p["kernel"])
        payload["kernel"] = list(kernel.degrees)
        lines.append(f"kernel onto O({p['kernel']}): {kernel}")
    if p.get("extend") is not None:
        extension = balanced_extension(split, p["extend"])
        payload["extension"] = list(extension.degrees)
        lines.append(f"extension by {p['extend']}: {extension}")
    return payload, lines


def _tree_report(config: RunConfig) -> tuple[dict[str, Any], list[str]]:
    comb = read_comb(config.params["comb"])
    result = smoothing_reduce(comb)
    bound = split_of(result.bound)

    document = comb_to_dict(comb)
    document.pop("schema_version")
    payload: dict[str, Any] = {
        **document,
        "k": comb.k,
        "predicted": list(result.predicted.degrees),
        "bound": list(bound.degrees),
        "strict_bound": result.strict_bound,
        "exceeds_bound": result.exceeds_bound,
        "roots": [
            {"root": r.root, "degree": r.degree, "twist": r.twist, "coranks": list(r.coranks)}
            for r in result.roots
        ],
    }
    lines = [
        f"predicted {result.predicted}",
        f"bound {bound}",
        f"strict bound {result.strict_bound}",
        f"exceeds bound {result.exceeds_bound}",
    ]

    if config.params.get("cohomology"):
        data = tree_data_from_comb(
            comb, config.seed, field=config.field, base_twist=config.params.get("twist", 0)
        )
        bundle = tree_cohomology(data)
        endo = tree_cohomology(end_tree(data))
        payload["cohomology"] = {"h0": bundle.h0, "h1": bundle.h1, "chi": bundle.chi}
        payload["end_cohomology"] = {"h0": endo.h0, "h1": endo.h1, "chi": endo.chi}
        lines += [
            f"h(E) = ({bundle.h0}, {bundle.h1})",
            f"h(End E) = ({endo.h0}, {endo.h1}), chi {endo.chi}",
        ]
    return payload, lines


def _pipeline(record: PipelineRecord) -> tuple[dict[str, Any], list[str]]:
    payload = record.to_dict()
    payload.pop("kind")
    return payload, [str(record.predicted)]


def _fang_record(config: RunConfig) -> PipelineRecord:
    p = config.params
    e0 = p.get("e0")
    if e0 is None:
        accessible, e0 = is_accessible(p["n"], p["d"], p["e"])
        if not accessible:
            raise AccessibilityError(
                f"Degree {p['e']} is not accessible for n={p['n']}, d={p['d']}"
            )
    return fang_assembly(p["n"], p["d"], p["e"], e0)


def _interp_table(config: RunConfig) -> InterpTable:
    p = config.params
    return interp_table(p["n"], p["d"], range(p["emin"], p["emax"] + 1))


def _interp_lines(table: InterpTable) -> list[str]:
    lines = [
        f"n={table.n}, d={table.d}: accessible residues mod {table.modulus}: "
        + " ".join(str(r) for r in table.accessible_residues),
        f"interpolating residues mod {table.modulus}: "
        + " ".join(str(r) for r in table.interpolating_residues),
        f"interpolating q residues mod {table.q_modulus}: "
        + " ".join(str(r) for r in table.interpolating_q_residues),
        f"period {table.period}, classes {table.class_count} "
        f"(expected {table.expected_class_count})",
        "e q_max point_minimal accessible e0 interpolating",
    ]
    for row in table.rows:
        lines.append(
            f"{row.e} {row.q_max} {int(row.point_minimal)} {int(row.accessible)} "
            f"{'-' if row.e0 is None else row.e0} {int(row.interpolating)}"
        )
    return lines


def _verify_csv(results: Sequence[CheckResult]) -> str:
    lines = ["check,cases,mismatches,passed"]
    lines += [f"{r.name},{r.cases},{r.mismatches},{int(r.passed)}" for r in results]
    return "\n".join(lines) + "\n"


def _emit(config: RunConfig, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if config.output is None:
        sys.stdout.write(text)
    else:
        config.output.write_text(text)


def _render(config: RunConfig, kind: str, payload: dict[str, Any], lines: list[str]) -> str:
    if config.output_format is OutputFormat.JSON:
        return report_json(kind, payload)
    return "\n".join(lines)


PIPELINES: dict[str, Callable[[RunConfig], PipelineRecord]] = {
    "pn": lambda c: pn_pipeline(c.params["n"], c.params["e"]),
    "fan": lambda c: fan_assembly_d_eq_n(c.params["n"], c.params["e"]),
    "fang": _fang_record,
}


def run(config: RunConfig) -> int:
    """Executes one configured command and emits its report.

    Returns:
        The exit status: 0 on success, 1 if a check failed

    Raises:
        SplitlineError: on a domain error, which :func:`main` maps to exit status 1
    """
    logger.info(
        "Running %s with %s, seed %d over %s",
        config.command,
        dict(config.params),
        config.seed,
        config.field,
    )
    status = EXIT_OK

    if config.command == "split":
        text = _render(config, "split", *_split_report(config))
    elif config.command == "tree":
        text = _render(config, "tree", *_tree_report(config))
    elif config.command in PIPELINES:
        record = PIPELINES[config.command](config)
        text = _render(config, record.kind, *_pipeline(record))
    elif config.command == "interp":
        table = _interp_table(config)
        if config.output_format is OutputFormat.CSV:
            text = table_csv(table)
        else:
            text = _render(config, "interp", table_to_dict(table), _interp_lines(table))
    else:
        count = config.params.get("seeds", 5)
        seeds = range(config.seed, config.seed + count)
        results = run_suite(
            seeds, config.field, config.params.get("checks"), config.params.get("quick", False)
        )
        if not all(r.passed for r in results):
            status = EXIT_DOMAIN
        if config.output_format is OutputFormat.CSV:
            text = _verify_csv(results)
        else:
            payload = {
                "seeds": list(seeds),
                "field": str(config.field),
                "passed": status == EXIT_OK,
                "checks": [r.to_dict() for r in results],
            }
            lines = [
                f"{r.name}: {r.cases} cases, {r.mismatches} mismatches"
                + "".join(f"\n  {f}" for f in r.failures)
                for r in results
            ]
            text = _render(config, "verify", payload, lines)

    _emit(config, text)
    return status


def _configure_logging(verbosity: int):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``splitline`` console script"""
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    try:
        config = config_from_args(args)
    except InvalidInputError as e:
        parser.error(str(e))

    try:
        return run(config)
    except SplitlineError as e:
        logger.debug("%s raised", config.command, exc_info=True)
        print(f"splitline: error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
