import argparse

from freeshift import keys
from freeshift.group import GroupSpec, ball, ball_size, ball_tree, is_spanning_tree
from freeshift.utils import RunLogger

from .common import write_json, write_table


def run_ball(args: argparse.Namespace, logger: RunLogger) -> int:
    spec = GroupSpec(rank=args.rank, mode=args.mode)
    n = 1 if args.n is None else args.n
    sites = ball(spec, n)
    assert len(sites) == ball_size(spec, n), f"|B(e,{n})| = {len(sites)} != closed form"
    assert is_spanning_tree(ball_tree(sites, spec), sites), "Parent structure is not a spanning tree"
    logger.info(f"B(e,{n}) of the rank {spec.rank} free {spec.mode}: {len(sites)} elements")

    if args.json:
        write_json({"size": len(sites), "elements": [str(w) for w in sites]})
    else:
        print(f"size\t{len(sites)}")
        write_table([[i, str(w), len(w)] for i, w in enumerate(sites)], ["index", "element", "length"])
    return keys.EXIT_OK
