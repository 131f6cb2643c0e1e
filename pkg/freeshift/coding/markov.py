from collections import defaultdict
from fractions import Fraction
from typing import DefaultDict, Dict, Iterator, List, Optional, Tuple

import numpy as np

from freeshift import keys
from freeshift.data import Alphabet, Pattern, lift_array
from freeshift.group import (
    GroupSpec,
    SiteSet,
    Word,
    ball,
    generator_pairs,
    parent_structure,
)
from freeshift.measure import (
    MeasureSpec,
    StochasticMatrix,
    TransitionSystem,
    TreeMarkov,
    marginal_table,
    validate,
)
from freeshift.utils.errors import (
    BudgetExceededError,
    InvalidMeasureError,
    MalformedInputError,
)

from .level import CodingLevel, GeneralCode, ball_code


def check_measure(mu: MeasureSpec, spec: GroupSpec, alphabet: Alphabet) -> None:
    """mu must live on K^G for this G and be shift invariant."""
    if mu.alphabet != alphabet:
        raise MalformedInputError(
            f"Measure over {mu.alphabet.size} symbols, expected {alphabet.size}"
        )
    if isinstance(mu, TreeMarkov):
        if mu.spec != spec:
            raise MalformedInputError(f"Measure is defined on {mu.spec}, expected {spec}")
        report = validate(mu.ts, mu.spec)
        if not report.passed:
            raise InvalidMeasureError(
                f"Transition system is not invariant: {report.first_violation}"
            )


def pushforward_system(
    mu: MeasureSpec,
    code: GeneralCode,
    spec: GroupSpec,
    budget: int = keys.DEFAULT_BUDGET,
) -> TransitionSystem:
    """
    One-step statistics of the pushforward of mu under a sliding block code:
    pi(i) = mu(code at e is i), P^s_ij = mu(code at s is j | code at e is i).
    Rows of states with pi(i) = 0 are identity rows.
    """
    check_measure(mu, spec, code.alphabet)
    k = code.alphabet.size
    size = code.target.size

    pi_table = marginal_table(mu, code.window, budget)
    pi_weights: List[int] = [0] * size
    for label, w in zip(code.table, pi_table.flat()):
        pi_weights[int(label)] += int(w)
    pi = tuple(Fraction(w, pi_table.denominator) for w in pi_weights)

    matrices: Dict[int, StochasticMatrix] = {}
    for s in spec.generators:
        moved = code.translated(Word((s,)))
        union = code.window.union(moved.window)
        table = marginal_table(mu, union, budget)
        at_e = lift_array(code.table, code.window, union, k)
        at_s = lift_array(moved.table, moved.window, union, k)
        counts: List[DefaultDict[int, int]] = [defaultdict(int) for _ in range(size)]
        weights = table.flat()
        for u in np.flatnonzero(weights != 0):
            counts[at_e[u]][int(at_s[u])] += int(weights[u])
        rows = []
        for i, row in enumerate(counts):
            total = sum(row.values())
            if total == 0:
                rows.append({i: Fraction(1)})
            else:
                rows.append({j: Fraction(c, total) for j, c in row.items()})
        matrices[s] = StochasticMatrix(rows, size)

    return TransitionSystem(alphabet=code.target, pi=pi, matrices=matrices)


def markovize(
    mu: MeasureSpec,
    level: CodingLevel,
    budget: int = keys.DEFAULT_BUDGET,
) -> TransitionSystem:
    """
    The invariant transition system over L induced by phi_* mu:
    pi(i) = mu(i on B(e,n)), P^s_ij = mu(i on B(e,n), j on B(e,n) s) / pi(i).
    """
    code = ball_code(level.spec, level.alphabet, level.n)
    ts = pushforward_system(mu, code, level.spec, budget)
    report = validate(ts, level.spec)
    assert report.passed, f"Markovization is not invariant: {report.first_violation}"
    return ts


def _require_ball(z: Pattern, spec: GroupSpec) -> int:
    m = z.domain.max_length()
    if z.domain != ball(spec, m):
        raise MalformedInputError(f"{z.domain} is not a ball")
    return m


def admissible(
    z: Pattern,
    ts: TransitionSystem,
    spec: GroupSpec,
    check_all_edges: bool = False,
) -> bool:
    """
    pi(z(e)) > 0 and P^t[z(g'), z(t g')] > 0 on every tree edge of the ball.
    With `check_all_edges` every oriented pair (g, s g) inside the ball is checked
    as well and both answers must agree.
    """
    _require_ball(z, spec)
    if z.alphabet != ts.alphabet:
        raise MalformedInputError(
            f"Pattern over {z.alphabet.size} symbols, system over {ts.alphabet.size}"
        )
    ok = ts.pi[z.values[0]] > 0 and all(
        ts.matrices[t][z[g_parent], z[g]] > 0
        for g, (t, g_parent) in parent_structure(z.domain, spec).items()
    )
    if check_all_edges:
        full = ts.pi[z.values[0]] > 0 and all(
            ts.matrices[s][z[g], z[h]] > 0 for g, s, h in generator_pairs(z.domain, spec)
        )
        assert full == ok, f"Tree edges and all edges disagree on {z}"
    return ok


def _parent_steps(sites: SiteSet, spec: GroupSpec) -> List[Tuple[int, int]]:
    """(parent axis, generator) of every site after e, in canonical order."""
    parents = parent_structure(sites, spec)
    return [(sites.index(parents[g][1]), parents[g][0]) for g in sites[1:]]


def enumerate_admissible_on(
    ts: TransitionSystem,
    spec: GroupSpec,
    sites: SiteSet,
    budget: int = keys.DEFAULT_BUDGET,
) -> Iterator[Pattern]:
    """
    Admissible patterns on a set closed under g = t g' -> g', by depth-first
    extension with pruning on zero transitions. Symbols are tried in increasing
    order, so patterns come out in canonical order.
    """
    steps = _parent_steps(sites, spec)
    values = [0] * len(sites)
    # choices still to try at each depth, reversed so pop() takes the smallest
    stack = [list(reversed(ts.support()))]
    visited = 0
    while stack:
        depth = len(stack) - 1
        if not stack[-1]:
            stack.pop()
            continue
        values[depth] = stack[-1].pop()
        visited += 1
        if visited > budget:
            raise BudgetExceededError(f"admissible patterns on {len(sites)} sites", None, budget)
        if depth + 1 == len(sites):
            yield Pattern(sites, tuple(values), ts.alphabet)
        else:
            parent, t = steps[depth]
            stack.append(list(reversed(ts.matrices[t].successors(values[parent]))))


def enumerate_admissible(
    ts: TransitionSystem,
    spec: GroupSpec,
    m: int,
    budget: int = keys.DEFAULT_BUDGET,
) -> Iterator[Pattern]:
    """Every admissible pattern on B(e,m), canonical order, at most `budget` visited nodes."""
    return enumerate_admissible_on(ts, spec, ball(spec, m), budget)


def count_admissible_on(ts: TransitionSystem, spec: GroupSpec, sites: SiteSet) -> int:
    """Number of admissible patterns on a parent-closed set by dynamic programming over the tree."""
    steps = _parent_steps(sites, spec)
    size = ts.alphabet.size
    # ways[g][v]: admissible fillings of the subtree under g with v at g
    ways: Dict[int, List[int]] = {}
    children: DefaultDict[int, List[Tuple[int, int]]] = defaultdict(list)
    for axis, (parent, t) in enumerate(steps, start=1):
        children[parent].append((axis, t))
    for axis in reversed(range(len(sites))):
        counts = [1] * size
        for child, t in children[axis]:
            below = ways.pop(child)
            P = ts.matrices[t]
            for v in range(size):
                if counts[v]:
                    counts[v] *= sum(below[w] for w in P.successors(v))
        ways[axis] = counts
    return sum(ways[0][v] for v in ts.support())


def count_admissible(ts: TransitionSystem, spec: GroupSpec, m: int) -> int:
    """Number of admissible patterns on B(e,m)."""
    return count_admissible_on(ts, spec, ball(spec, m))


def count_search_nodes(
    ts: TransitionSystem,
    spec: GroupSpec,
    sites: SiteSet,
    limit: Optional[int] = None,
) -> int:
    """
    Nodes `enumerate_admissible_on` visits on `sites`: the admissible patterns on
    every initial segment of the canonical order. Counting stops once past `limit`.
    """
    total = 0
    for j in range(1, len(sites) + 1):
        total += count_admissible_on(ts, spec, SiteSet(sites[:j]))
        if limit is not None and total > limit:
            break
    return total
