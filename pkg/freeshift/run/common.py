import argparse
import json
from dataclasses import dataclass
from typing import Any, Sequence

from tabulate import tabulate

from freeshift.coding import check_measure
from freeshift.data import Alphabet
from freeshift.group import GroupSpec
from freeshift.measure import MeasureSpec, resolve_measure
from freeshift.utils import RunConfig, check_run_config, load_config


@dataclass
class RunContext:
    config: RunConfig
    spec: GroupSpec
    alphabet: Alphabet
    mu: MeasureSpec


def load_run_context(args: argparse.Namespace, check_invariance: bool = True) -> RunContext:
    """
    Load the run config, apply command line overrides, validate, build the measure.
    Unless `check_invariance` is off, a measure that is not shift invariant is an
    input error.
    """
    config = load_config(RunConfig, args.config)
    if args.budget is not None:
        config.budget = args.budget
    if args.unit is not None:
        config.unit = args.unit
    if args.n is not None:
        config.n = args.n
    if args.m is not None:
        config.m = args.m
    if args.strategy is not None:
        config.strategy = args.strategy
    check_run_config(config)
    spec = GroupSpec(rank=config.group.rank, mode=config.group.mode)
    alphabet = Alphabet(config.alphabet)
    mu = resolve_measure(config.measure, spec, alphabet)
    if check_invariance:
        check_measure(mu, spec, alphabet)
    return RunContext(config=config, spec=spec, alphabet=alphabet, mu=mu)


def write_table(rows: Sequence[Sequence[Any]], headers: Sequence[str]) -> None:
    # no alignment padding, cells stay byte-exact
    print(
        tabulate(
            rows,
            headers=headers,
            tablefmt="tsv",
            disable_numparse=True,
            stralign=None,
            numalign=None,
        )
    )


def write_json(data: Any) -> None:
    print(json.dumps(data, sort_keys=True, indent=2))
