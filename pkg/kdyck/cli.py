# (C) 2026 kdyck contributors
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional

from kdyck.config import KDyckConfig
from kdyck.errors import (
    InvalidCompositionError,
    InvalidPartitionError,
    KDyckError,
)
from kdyck.paths import (
    Composition,
    Partition,
    count_paths,
    enumerate_paths,
    parse_path,
    path_to_json,
    render_path,
)
from kdyck.qtpoly import StatisticPair, c_lambda, swap_variables, subtract
from kdyck.stats import bounce, stats_to_json
from kdyck.sweep import filling_tableau, inverse_sweep, ranking_tableau, sweep_map
from kdyck.verify import SUITES, Verifier

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2
DEFAULT_VERIFY_SIZE = 12

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(message)s"

logger = logging.getLogger("kdyck")
handler = logging.StreamHandler()
handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT))
logger.addHandler(handler)
logger.setLevel(logging.INFO)


def composition_arg(text: str) -> Composition:
    """argparse type for --k; malformed literals become usage errors."""
    try:
        return Composition.from_text(text)
    except InvalidCompositionError as e:
        raise argparse.ArgumentTypeError(e.cause)


def partition_arg(text: str) -> tuple[int, ...]:
    """argparse type for --lambda; keeps the order given for the reorder note."""
    try:
        Partition.from_text(text)
    except InvalidPartitionError as e:
        raise argparse.ArgumentTypeError(e.cause)
    return tuple(int(item.strip()) for item in text.split(","))


def create_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v", "--verbose", action="store_true", help="Turns on the debug log output."
    )
    common.add_argument(
        "--conf",
        type=Path,
        default=None,
        help="Optional path to a YAML file with size caps "
        "(max_steps, max_poly_paths, verify_hard_cap).",
    )
    common.add_argument(
        "--json", action="store_true", help="Emit machine readable JSON output."
    )

    parser = argparse.ArgumentParser(
        prog="kdyck",
        description="k-vector Dyck paths, the sweep map and q,t-Catalan polynomials.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    paths = commands.add_parser(
        "paths", parents=[common], help="Enumerate the paths of D_k."
    )
    paths.add_argument(
        "--k",
        type=composition_arg,
        required=True,
        help='Composition as comma separated integers, e.g. "3,1,4".',
    )
    paths.add_argument(
        "--count", action="store_true", help="Print only the number of paths."
    )

    for name, description in (
        ("stats", "Print area, dinv and bounce of a path as JSON."),
        ("sweep", "Print the sweep map image of a path."),
        ("unsweep", "Print the sweep map preimage of a path."),
        ("tableau", "Print the Filling, Ranking and bounce tableaux as JSON."),
    ):
        command = commands.add_parser(name, parents=[common], help=description)
        command.add_argument(
            "--path",
            type=str,
            required=True,
            help='Path as "S<d>" and "W" tokens, e.g. "S3 W S1 W W W".',
        )

    poly = commands.add_parser(
        "poly", parents=[common], help="Print C_lambda(q,t) or its symmetry defect."
    )
    poly.add_argument(
        "--lambda",
        dest="lam",
        type=partition_arg,
        required=True,
        help='Partition as comma separated integers, e.g. "3,1,1,1".',
    )
    poly.add_argument(
        "--pair",
        choices=[pair.value for pair in StatisticPair],
        default=StatisticPair.DINV_AREA.value,
        help='Statistic pair to sum over. Default is "dinv-area".',
    )
    poly.add_argument(
        "--defect",
        action="store_true",
        help="Print C_lambda(q,t) - C_lambda(t,q) instead.",
    )

    verify = commands.add_parser(
        "verify", parents=[common], help="Run the exhaustive verification suites."
    )
    verify.add_argument(
        "--max-size",
        type=int,
        default=DEFAULT_VERIFY_SIZE,
        help="Check every composition with n+|k| up to this size. "
        f"Default is {DEFAULT_VERIFY_SIZE}.",
    )
    verify.add_argument(
        "--suite",
        choices=[*SUITES, "all"],
        default="all",
        help='Suite to run. Default is "all".',
    )
    return parser


def emit(payload: Any, as_json: bool) -> None:
    print(json.dumps(payload) if as_json else payload)


def cmd_paths(args: argparse.Namespace, config: KDyckConfig) -> int:
    if args.count:
        count = count_paths(args.k, config.max_steps)
        payload = {"composition": list(args.k.parts), "count": count}
        emit(payload if args.json else count, args.json)
        return EXIT_OK
    for path in enumerate_paths(args.k, config.max_steps):
        emit(path_to_json(path) if args.json else render_path(path), args.json)
    return EXIT_OK


def cmd_stats(args: argparse.Namespace, config: KDyckConfig) -> int:
    print(json.dumps(stats_to_json(parse_path(args.path))))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, config: KDyckConfig) -> int:
    path = parse_path(args.path)
    result = sweep_map(path) if args.command == "sweep" else inverse_sweep(path)
    emit(path_to_json(result) if args.json else render_path(result), args.json)
    return EXIT_OK


def cmd_tableau(args: argparse.Namespace, config: KDyckConfig) -> int:
    path = parse_path(args.path)
    filling = filling_tableau(path)
    document = {
        "filling": filling.to_json(),
        "ranking": ranking_tableau(filling).to_json(),
        "bounce": bounce(path).tableau.to_json(),
    }
    print(json.dumps(document))
    return EXIT_OK


def cmd_poly(args: argparse.Namespace, config: KDyckConfig) -> int:
    lam = Partition.from_parts(args.lam)
    if lam.parts != args.lam:
        given = ",".join(str(part) for part in args.lam)
        logger.warning(f'Partition "{given}" reordered to "{lam}".')
    polynomial = c_lambda(
        lam, StatisticPair(args.pair), config.max_steps, config.max_poly_paths
    )
    if args.defect:
        polynomial = subtract(polynomial, swap_variables(polynomial))
    emit(polynomial.to_json() if args.json else polynomial.render(), args.json)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: KDyckConfig) -> int:
    verifier = Verifier(config, args.max_size)
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    reports = verifier.run(suites)
    passed = all(report.passed for report in reports)
    if args.json:
        emit({"suites": [r.to_json() for r in reports], "passed": passed}, True)
    else:
        for report in reports:
            print(report.summary())
            for finding in report.findings:
                print(f"  finding: C_lambda is not q,t-symmetric for ({finding})")
    return EXIT_OK if passed else EXIT_DOMAIN_ERROR


def main(argv: Optional[list[str]] = None) -> int:
    """Main entry point of the kdyck command line tool."""
    parser = create_parser()
    args = parser.parse_args(argv)

    if args.verbose:
        logger.setLevel(logging.DEBUG)

    try:
        config = KDyckConfig.load(args.conf)
        logger.debug(f"Using {config}.")
        match args.command:
            case "paths":
                return cmd_paths(args, config)
            case "stats":
                return cmd_stats(args, config)
            case "sweep" | "unsweep":
                return cmd_sweep(args, config)
            case "tableau":
                return cmd_tableau(args, config)
            case "poly":
                return cmd_poly(args, config)
            case "verify":
                return cmd_verify(args, config)
            case _:
                parser.error(f'Unsupported command "{args.command}".')
    except KDyckError as e:
        logger.error(e.cause)
        return EXIT_DOMAIN_ERROR
    except RuntimeError as e:
        logger.error(str(e))
        return EXIT_USAGE_ERROR
    return EXIT_USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
