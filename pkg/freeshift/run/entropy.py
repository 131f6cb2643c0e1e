import argparse

from freeshift import keys
from freeshift.data import alpha_partition, partition_from_config
from freeshift.entropy import (
    EntropyValue,
    cond_entropy,
    counterexample_report,
    f_sequence,
    is_stabilized,
    partition_entropy,
)
from freeshift.utils import (
    BudgetExceededError,
    InvalidInputError,
    PartitionConfig,
    RunLogger,
    load_config,
)

from .common import load_run_context, write_json, write_table


def _entropy_fields(name: str, value: EntropyValue) -> dict:
    return {
        "quantity": name,
        "exact": "" if value.exact is None else str(value.exact),
        "value": f"{value.value:.12f}",
        "unit": value.unit,
    }


def run_entropy(args: argparse.Namespace, logger: RunLogger) -> int:
    ctx = load_run_context(args)
    if args.partition is None:
        raise InvalidInputError("entropy needs a partition file (--partition)")
    budget, unit = ctx.config.budget, ctx.config.unit
    P = partition_from_config(load_config(PartitionConfig, args.partition), ctx.spec, ctx.alphabet, budget)
    logger.info(f"P: {P}")
    results = [_entropy_fields("H(P)", partition_entropy(ctx.mu, P, unit, budget))]
    if args.conditional is not None:
        Q = partition_from_config(
            load_config(PartitionConfig, args.conditional), ctx.spec, ctx.alphabet, budget
        )
        logger.info(f"Q: {Q}")
        results.append(_entropy_fields("H(Q)", partition_entropy(ctx.mu, Q, unit, budget)))
        results.append(_entropy_fields("H(P|Q)", cond_entropy(ctx.mu, P, Q, unit, budget)))

    if args.json:
        write_json(results)
    else:
        headers = ["quantity", "exact", "value", "unit"]
        write_table([[r[h] for h in headers] for r in results], headers)
    return keys.EXIT_OK


def run_fseq(args: argparse.Namespace, logger: RunLogger) -> int:
    ctx = load_run_context(args)
    n_max = ctx.config.n if args.n_max is None else args.n_max
    logger.info(f"F(alpha^m) for m = 0..{n_max} on the rank {ctx.spec.rank} free {ctx.spec.mode}")
    try:
        values = f_sequence(
            ctx.mu, alpha_partition(ctx.alphabet), ctx.spec, n_max, ctx.config.unit, ctx.config.budget
        )
    except BudgetExceededError as err:
        if err.partial:
            logger.warning("Completed prefix: " + ", ".join(v.render() for v in err.partial))
        raise
    stabilized = is_stabilized(values)

    if args.json:
        write_json(
            {
                "unit": ctx.config.unit,
                "values": [v.render() for v in values],
                "stabilized": stabilized,
            }
        )
    else:
        write_table(
            [[m, "" if v.exact is None else str(v.exact), f"{v.value:.12f}"] for m, v in enumerate(values)],
            ["m", "exact", "value"],
        )
        print(f"stabilized\t{str(stabilized).lower()}")
    return keys.EXIT_OK


def run_counterexample(args: argparse.Namespace, logger: RunLogger) -> int:
    n_max = 3 if args.n_max is None else args.n_max
    unit = keys.BITS if args.unit is None else args.unit
    budget = keys.DEFAULT_BUDGET if args.budget is None else args.budget
    logger.info(f"P_n under the fair Bernoulli shift of Z, n = 1..{n_max}")
    report = counterexample_report(n_max, unit, budget)
    logger.info("f(alpha) sequence: " + ", ".join(v.render() for v in report.f_values))

    columns = keys.COUNTEREXAMPLE_COLUMNS
    rows = [row.as_dict() for row in report.rows]
    if args.json:
        write_json(
            {
                "unit": unit,
                "rows": [{columns[k]: v for k, v in row.items()} for row in rows],
                "f_sequence": [v.render() for v in report.f_values],
                "stabilized": report.stabilized,
                "h": report.h.render(),
                "verdict": report.verdict,
            }
        )
    else:
        write_table([[row[k] for k in columns] for row in rows], list(columns.values()))
        print(report.verdict)
    return keys.EXIT_OK
