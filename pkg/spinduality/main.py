"""
spinduality - command-line entry point

Sub-commands generate the projective character tables, check the Sergeev
algebra presentation, verify the tensor space duality and run the whole
acceptance sweep. Exit codes: 0 all checks passed, 1 a check failed,
2 usage or resource error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from spinduality.commands import (
    run_chartable,
    run_duality,
    run_presentation,
    run_verify_all,
)
from spinduality.config import Settings, get_settings
from spinduality.exceptions import InvalidRunConfigError, ResourceLimitError
from spinduality.schemas.report_schemas import (
    CommandName,
    OutputFormat,
    RunConfig,
    TableKind,
    VerificationReport,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, default=None, help="algebra size k")
    common.add_argument("--n", type=int, default=None, help="rank n of q(n)")
    common.add_argument(
        "--kind",
        choices=[kind.value for kind in TableKind],
        default=TableKind.PHI.value,
        help="character table kind",
    )
    common.add_argument(
        "--points",
        type=int,
        default=settings.point_count,
        help="number of prime-coordinate evaluation points",
    )
    common.add_argument("--seed", type=int, default=settings.seed)
    common.add_argument("--cache-dir", default=settings.cache_dir)
    common.add_argument(
        "--format",
        dest="output_format",
        choices=[fmt.value for fmt in OutputFormat],
        default=settings.output_format,
    )
    common.add_argument(
        "--force", action="store_true", help="ignore the tensor dimension guard"
    )
    common.add_argument(
        "--fail-fast",
        action="store_true",
        default=settings.fail_fast,
        help="stop after the first failing stage",
    )

    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Exact verification of the q(n) / Sergeev algebra duality",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {settings.app_version}"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    subparsers.add_parser(
        CommandName.CHARTABLE.value, parents=[common], help="print a character table"
    )
    subparsers.add_parser(
        CommandName.PRESENTATION.value,
        parents=[common],
        help="check the B_k relations and the isomorphism onto C_k x A_k",
    )
    subparsers.add_parser(
        CommandName.DUALITY.value,
        parents=[common],
        help="verify the duality on the k-th tensor power of C^(n|n)",
    )
    subparsers.add_parser(
        CommandName.VERIFY_ALL.value,
        parents=[common],
        help="run the acceptance sweep up to --k and --n",
    )
    return parser


def build_config(args: argparse.Namespace, settings: Settings) -> RunConfig:
    """Validate parsed arguments; verify-all falls back to the settings limits."""
    command = CommandName(args.command)
    k, n = args.k, args.n
    if command is CommandName.VERIFY_ALL:
        if k is None:
            k = max(
                settings.table_kmax,
                settings.bridge_kmax,
                settings.presentation_kmax,
                settings.isomorphism_kmax,
                settings.clifford_kmax,
                settings.xi_kmax,
                settings.partition_kmax,
            )
        if n is None:
            n = max((pair[0] for pair in settings.duality_pairs), default=0)
    elif n is None:
        n = 1
    try:
        return RunConfig(
            command=command,
            k=k,
            n=n,
            kind=args.kind,
            points=args.points,
            seed=args.seed,
            cache_dir=args.cache_dir,
            output_format=args.output_format,
            force=args.force,
            fail_fast=args.fail_fast,
        )
    except ValidationError as e:
        raise InvalidRunConfigError(str(e)) from e


def render(report: VerificationReport, output_format: OutputFormat) -> str:
    if output_format is OutputFormat.RECORDS:
        return report.to_records()
    return report.to_text()


def main(argv: Optional[List[str]] = None) -> int:
    settings = get_settings()
    logging.basicConfig(level=settings.log_level, format=settings.log_format)
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        config = build_config(args, settings)
    except InvalidRunConfigError as e:
        print(f"error: invalid options\n{e}", file=sys.stderr)
        return EXIT_USAGE

    logger.info(f"running {config.command.value} k={config.k} n={config.n}")
    try:
        if config.command is CommandName.CHARTABLE:
            print(run_chartable(config))
            return EXIT_OK
        if config.command is CommandName.PRESENTATION:
            report = run_presentation(config)
        elif config.command is CommandName.DUALITY:
            report = run_duality(config, settings)
        else:
            report = run_verify_all(config, settings)
    except ResourceLimitError as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    print(render(report, config.output_format))
    logger.info(report.summary_line())
    return EXIT_OK if report.ok else EXIT_FAILED


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
