import argparse

from freeshift import keys
from freeshift.coding import CodingLevel, count_admissible, enumerate_admissible, markovize
from freeshift.data import format_values
from freeshift.group import Word, ball, format_word
from freeshift.measure import TreeMarkov, validate
from freeshift.utils import RunLogger

from .common import load_run_context, write_json, write_table


def run_validate(args: argparse.Namespace, logger: RunLogger) -> int:
    """Validate a tree-Markov system, or the Markovization of any other measure."""
    ctx = load_run_context(args, check_invariance=False)
    if isinstance(ctx.mu, TreeMarkov):
        ts = ctx.mu.ts
        logger.info("Validating the configured transition system")
    else:
        level = CodingLevel(ctx.spec, ctx.alphabet, ctx.config.n)
        logger.info(f"Validating the Markovization at level n={level.n}, |L| = {level.size}")
        ts = markovize(ctx.mu, level, ctx.config.budget)
    report = validate(ts, ctx.spec)
    reversible = "n/a" if report.reversible is None else str(report.reversible).lower()
    fields = {
        "stochastic": str(report.stochastic).lower(),
        "stationary": str(report.stationary).lower(),
        "reversible": reversible,
        "passed": str(report.passed).lower(),
        "first_violation": report.first_violation or "",
    }
    if args.json:
        write_json(fields)
    else:
        write_table(list(fields.items()), ["check", "result"])
    return keys.EXIT_OK if report.passed else keys.EXIT_FOUND


def run_markovize(args: argparse.Namespace, logger: RunLogger) -> int:
    ctx = load_run_context(args)
    level = CodingLevel(ctx.spec, ctx.alphabet, ctx.config.n)
    logger.info(f"Markovizing at level n={level.n}: |B(e,n)| = {len(level.ball)}, |L| = {level.size}")
    ts = markovize(ctx.mu, level, ctx.config.budget)
    logger.debug(f"Ball sites in symbol order: {level.ball}")

    states = [format_values(level.decode(i).values) for i in range(level.size)]
    transitions = [
        [format_word(Word((s,))), i, j, str(p)]
        for s in ctx.spec.generators
        for i, row in enumerate(ts.matrices[s].rows)
        for j, p in row.items()
    ]
    if args.json:
        write_json(
            {
                "n": level.n,
                "ball": [str(w) for w in level.ball],
                "pi": {states[i]: str(p) for i, p in enumerate(ts.pi)},
                "matrices": {
                    format_word(Word((s,))): [
                        [i, j, str(p)] for i, row in enumerate(ts.matrices[s].rows) for j, p in row.items()
                    ]
                    for s in ctx.spec.generators
                },
            }
        )
    else:
        write_table([[i, states[i], str(p)] for i, p in enumerate(ts.pi)], ["state", "pattern", "pi"])
        print()
        write_table(transitions, ["generator", "i", "j", "P"])
    return keys.EXIT_OK


def run_admissible(args: argparse.Namespace, logger: RunLogger) -> int:
    ctx = load_run_context(args)
    level = CodingLevel(ctx.spec, ctx.alphabet, ctx.config.n)
    m = level.n if ctx.config.m is None else ctx.config.m
    ts = markovize(ctx.mu, level, ctx.config.budget)
    expected = count_admissible(ts, ctx.spec, m)
    logger.info(f"{expected} admissible patterns on B(e,{m}) at level n={level.n}")

    sites = ball(ctx.spec, m)
    rows = []
    for k, z in enumerate(enumerate_admissible(ts, ctx.spec, m, ctx.config.budget)):
        rows.append([k] + [format_values(level.decode(v).values) for v in z.values])
    assert len(rows) == expected, f"Enumerated {len(rows)} patterns, counted {expected}"
    if args.json:
        write_json({"m": m, "sites": [str(w) for w in sites], "patterns": [row[1:] for row in rows]})
    else:
        print(f"count\t{len(rows)}")
        write_table(rows, ["#"] + [str(w) for w in sites])
    return keys.EXIT_OK
