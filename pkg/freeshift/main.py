import argparse
import sys
from typing import List, Optional

from freeshift import keys
from freeshift.run import (
    run_admissible,
    run_ball,
    run_counterexample,
    run_entropy,
    run_fseq,
    run_gap,
    run_markovize,
    run_oracle,
    run_validate,
    run_verify,
)
from freeshift.utils import BudgetExceededError, InvalidInputError, RunLogger

TASKS = {
    "ball": run_ball,
    "validate-ts": run_validate,
    "markovize": run_markovize,
    "admissible": run_admissible,
    "verify-lemma": run_verify,
    "oracle-compare": run_oracle,
    "support-gap": run_gap,
    "entropy": run_entropy,
    "f-seq": run_fseq,
    "counterexample": run_counterexample,
}


class ArgumentParser(argparse.ArgumentParser):
    """argparse without SystemExit, usage errors become exit code 2 through `main`."""

    def error(self, message: str) -> None:
        raise InvalidInputError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(prog="fsh", description="FreeShift Entry Point")
    # task selection
    parser.add_argument(
        "task",
        type=str,
        choices=list(TASKS),
        help="Task selection.",
    )
    # common arguments
    parser.add_argument(
        "--config",
        "-C",
        type=str,
        default=None,
        help="Configuration file of json or yaml format.",
    )
    parser.add_argument(
        "--json",
        action="store_true",
        help="Write results as json instead of tsv.",
    )
    parser.add_argument(
        "--verbose",
        "-v",
        action="store_true",
        help="Print debug information.",
    )
    parser.add_argument(
        "--log-file",
        type=str,
        default=None,
        help="Also write the log to this file.",
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=None,
        help=f"Maximum visited nodes / table cells (default: {keys.DEFAULT_BUDGET}).",
    )
    parser.add_argument(
        "--unit",
        type=str,
        choices=sorted(keys.UNITS),
        default=None,
        help="Entropy unit (default: bits).",
    )
    # ball
    parser.add_argument(
        "--rank",
        type=int,
        default=1,
        help="Number of free generators for `ball`.",
    )
    parser.add_argument(
        "--mode",
        type=str,
        choices=sorted(keys.GROUP_MODES),
        default=keys.GROUP,
        help="Free group or free semigroup for `ball`.",
    )
    # coding
    parser.add_argument(
        "--n",
        type=int,
        default=None,
        help="Ball radius n (level of the coding, or radius for `ball`).",
    )
    parser.add_argument(
        "--m",
        type=int,
        default=None,
        help="Radius m of the compared / enumerated patterns (default: n).",
    )
    parser.add_argument(
        "--strategy",
        type=str,
        choices=sorted(keys.STRATEGIES),
        default=None,
        help="Enumeration strategy of `verify-lemma`.",
    )
    parser.add_argument(
        "--code",
        type=str,
        default=None,
        help="Sliding block code file for `support-gap`.",
    )
    parser.add_argument(
        "--m-max",
        type=int,
        default=None,
        help="Largest radius searched by `support-gap` (default: 4).",
    )
    # entropy
    parser.add_argument(
        "--partition",
        type=str,
        default=None,
        help="Partition file for `entropy`.",
    )
    parser.add_argument(
        "--conditional",
        type=str,
        default=None,
        help="Partition file of the condition Q in H(P|Q).",
    )
    parser.add_argument(
        "--n-max",
        type=int,
        default=None,
        help="Largest n for `f-seq` and `counterexample`.",
    )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except InvalidInputError as err:
        parser.print_usage(sys.stderr)
        RunLogger().error(str(err))
        return keys.EXIT_INVALID

    logger = RunLogger(verbose=args.verbose, log_file=args.log_file)
    try:
        return TASKS[args.task](args, logger)
    except InvalidInputError as err:
        logger.error(str(err))
        return keys.EXIT_INVALID
    except BudgetExceededError as err:
        logger.error(str(err))
        if isinstance(err.partial, int):
            logger.error(f"Largest completed sub-radius: {err.partial}")
        return keys.EXIT_BUDGET


if __name__ == "__main__":
    raise SystemExit(main())
