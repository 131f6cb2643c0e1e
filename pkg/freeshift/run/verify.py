import argparse

from freeshift import keys
from freeshift.coding import (
    CodingLevel,
    check_reconstruction,
    code_from_config,
    compare_oracle,
    support_gap_search,
)
from freeshift.data import format_values
from freeshift.utils import CodeConfig, InvalidInputError, RunLogger, load_config

from .common import load_run_context, write_json, write_table


def run_verify(args: argparse.Namespace, logger: RunLogger) -> int:
    ctx = load_run_context(args)
    level = CodingLevel(ctx.spec, ctx.alphabet, ctx.config.n)
    logger.info(
        f"Checking z(f)(e) = z(e)(f) on B(e,{level.n}) of the rank {ctx.spec.rank} "
        f"free {ctx.spec.mode}, |K| = {ctx.alphabet.size}, |L| = {level.size}"
    )
    report = check_reconstruction(ctx.mu, level, ctx.config.strategy, ctx.config.budget)
    logger.info(f"Strategy: {report.strategy}")
    for k, checked in enumerate(report.checked_by_radius):
        logger.debug(f"Sub-radius {k}: {checked} patterns checked")

    violations = []
    for v in report.violations:
        symbols = [format_values(level.decode(s).values) for s in v.pattern.values]
        violations.append(
            [
                str(v.site),
                symbols[v.pattern.domain.index(v.site)],
                v.found,
                v.expected,
                str(v.chain.consistent).lower(),
                " ".join(symbols),
            ]
        )
    if args.json:
        write_json(
            {
                "n": level.n,
                "strategy": report.strategy,
                "patterns_checked": report.patterns_checked,
                "checked_by_radius": report.checked_by_radius,
                "violations": report.violation_count,
                "samples": violations,
            }
        )
    else:
        if violations:
            write_table(
                violations,
                ["site", "symbol", "found", "expected", "overlaps_consistent", "pattern"],
            )
        print(f"{report.patterns_checked} patterns checked, {report.violation_count} violations")
    return keys.EXIT_OK if report.passed else keys.EXIT_FOUND


def run_oracle(args: argparse.Namespace, logger: RunLogger) -> int:
    ctx = load_run_context(args)
    level = CodingLevel(ctx.spec, ctx.alphabet, ctx.config.n)
    m = level.n if ctx.config.m is None else ctx.config.m
    logger.info(f"Comparing admissible patterns with the image of phi on B(e,{m}), level n={level.n}")
    result = compare_oracle(ctx.mu, level, m, ctx.config.budget)

    def render(patterns):
        return [" ".join(format_values(level.decode(v).values) for v in p.values) for p in patterns]

    fields = {
        "m": result.m,
        "admissible": result.admissible_count,
        "image": result.image_count,
        "equal": str(result.equal).lower(),
    }
    if args.json:
        fields["not_in_image"] = render(result.not_in_image)
        fields["not_admissible"] = render(result.not_admissible)
        write_json(fields)
    else:
        write_table([[k, v] for k, v in fields.items()], ["quantity", "value"])
        for name, patterns in (("not_in_image", result.not_in_image), ("not_admissible", result.not_admissible)):
            for p in render(patterns):
                print(f"{name}\t{p}")
    return keys.EXIT_OK if result.equal else keys.EXIT_FOUND


def run_gap(args: argparse.Namespace, logger: RunLogger) -> int:
    ctx = load_run_context(args)
    if args.code is None:
        raise InvalidInputError("support-gap needs a code file (--code)")
    code = code_from_config(load_config(CodeConfig, args.code), ctx.spec, ctx.alphabet)
    m_max = 4 if args.m_max is None else args.m_max
    logger.info(f"Searching for a support gap of {code} up to m={m_max}")
    report = support_gap_search(ctx.mu, code, ctx.spec, m_max, ctx.config.budget)

    if report.found:
        witness = report.witness
        logger.info(f"No preimage of the witness on {code.dependence_domain(witness.domain)}")
        along_axis = None
        if ctx.spec.rank == 1:
            # a^j at position j
            placed = sorted(zip(witness.domain, witness.values), key=lambda wv: sum(wv[0].letters))
            along_axis = ([str(w) for w, _ in placed], [v for _, v in placed])
        if args.json:
            write_json(
                {
                    "gap": True,
                    "m": report.witness_radius,
                    "sites": [str(w) for w in witness.domain],
                    "witness": list(witness.values),
                    "along_axis": None if along_axis is None else dict(zip(("sites", "witness"), along_axis)),
                }
            )
        else:
            print(f"gap at m={report.witness_radius}")
            write_table([[str(w), v] for w, v in zip(witness.domain, witness.values)], ["site", "symbol"])
            if along_axis is not None:
                sites, values = along_axis
                print(f"along_axis\t{' '.join(sites)}\t{format_values(values)}")
        return keys.EXIT_FOUND

    if args.json:
        write_json({"gap": False, "m_max": m_max})
    else:
        print(f"no gap up to m_max={m_max}")
    return keys.EXIT_OK
