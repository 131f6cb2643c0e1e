import math
from collections import Counter
from fractions import Fraction
from functools import reduce
from typing import Dict, List, Sequence

from freeshift import keys
from freeshift.data import WindowPartition, alpha_join_over_ball, join, translate_partition
from freeshift.group import GroupSpec, Word
from freeshift.measure import MeasureSpec, TreeMarkov, label_weights
from freeshift.utils.errors import (
    BudgetExceededError,
    InvalidDistributionError,
    MalformedInputError,
)
from freeshift.utils.functional import parse_rational_vector, prime_factors

from .value import EntropyValue


def shannon_weights(
    weights: Sequence[int],
    denominator: int,
    unit: str = keys.BITS,
) -> EntropyValue:
    """
    -sum p log p for p = w / d, as log d - (1/d) sum w log w.
    Weights are reduced by their common gcd first so equal distributions give
    equal expansions.
    """
    if denominator < 1 or any(w < 0 for w in weights) or sum(weights) != denominator:
        raise InvalidDistributionError(
            f"Weights sum to {sum(weights)} over denominator {denominator}"
        )
    g = reduce(math.gcd, weights, denominator)
    d = denominator // g
    terms: Dict[int, Fraction] = {q: Fraction(e) for q, e in prime_factors(d).items()}
    # 0 log 0 = 0 and 1 log 1 = 0
    for w, count in Counter(w // g for w in weights).items():
        if w <= 1:
            continue
        for q, e in prime_factors(w).items():
            terms[q] = terms.get(q, Fraction(0)) - Fraction(count * w * e, d)
    return EntropyValue.from_terms(terms, unit)


def shannon(dist: Sequence, unit: str = keys.BITS) -> EntropyValue:
    """Shannon entropy of an exact probability vector; zero atoms contribute 0."""
    probabilities = parse_rational_vector(dist)
    if sum(probabilities, Fraction(0)) != 1:
        raise InvalidDistributionError(
            f"Distribution sums to {sum(probabilities, Fraction(0))}, not 1"
        )
    d = reduce(math.lcm, (p.denominator for p in probabilities), 1)
    return shannon_weights([int(p * d) for p in probabilities], d, unit)


def partition_entropy(
    mu: MeasureSpec,
    P: WindowPartition,
    unit: str = keys.BITS,
    budget: int = keys.DEFAULT_BUDGET,
) -> EntropyValue:
    weights, denominator = label_weights(mu, P, budget)
    return shannon_weights(weights, denominator, unit)


def cond_entropy(
    mu: MeasureSpec,
    P: WindowPartition,
    Q: WindowPartition,
    unit: str = keys.BITS,
    budget: int = keys.DEFAULT_BUDGET,
) -> EntropyValue:
    """H(P | Q) = H(P v Q) - H(Q)."""
    return partition_entropy(mu, join(P, Q, budget), unit, budget) - partition_entropy(
        mu, Q, unit, budget
    )


def mutual_information(
    mu: MeasureSpec,
    P: WindowPartition,
    Q: WindowPartition,
    unit: str = keys.BITS,
    budget: int = keys.DEFAULT_BUDGET,
) -> EntropyValue:
    """I(P; Q) = H(P) + H(Q) - H(P v Q)."""
    joint = partition_entropy(mu, join(P, Q, budget), unit, budget)
    return partition_entropy(mu, P, unit, budget) + partition_entropy(mu, Q, unit, budget) - joint


def F_quantity(
    mu: MeasureSpec,
    P: WindowPartition,
    spec: GroupSpec,
    unit: str = keys.BITS,
    budget: int = keys.DEFAULT_BUDGET,
    check_identity: bool = False,
) -> EntropyValue:
    """
    F(P) = (1 - 2r) H(P) + sum_i H(P v P s_i).

    With `check_identity` on a rank one group, asserts F(P) = H(P | P a^-1).
    """
    spec.require_group("F")
    if isinstance(mu, TreeMarkov) and mu.spec != spec:
        raise MalformedInputError(f"Measure is defined on {mu.spec}, expected {spec}")
    h = partition_entropy(mu, P, unit, budget)
    F = (1 - 2 * spec.rank) * h
    for i in range(1, spec.rank + 1):
        moved = translate_partition(P, Word((i,)))
        F = F + partition_entropy(mu, join(P, moved, budget), unit, budget)
    if check_identity and spec.rank == 1:
        cond = cond_entropy(mu, P, translate_partition(P, Word((-1,))), unit, budget)
        assert F == cond, f"F(P) = {F} but H(P | P a^-1) = {cond}"
    return F


def f_sequence(
    mu: MeasureSpec,
    alpha: WindowPartition,
    spec: GroupSpec,
    n_max: int,
    unit: str = keys.BITS,
    budget: int = keys.DEFAULT_BUDGET,
) -> List[EntropyValue]:
    """F(alpha^m) for m = 0..n_max; a budget failure carries the completed prefix."""
    values: List[EntropyValue] = []
    for m in range(n_max + 1):
        try:
            joined = alpha_join_over_ball(alpha, m, spec, budget)
            values.append(F_quantity(mu, joined, spec, unit, budget))
        except BudgetExceededError as err:
            raise BudgetExceededError(
                f"f-sequence at m={m}", err.required, err.limit, partial=values
            ) from err
    return values


def is_stabilized(values: Sequence[EntropyValue], tail: int = 2) -> bool:
    """Whether the last `tail` entries coincide exactly."""
    if len(values) < tail:
        return False
    return all(v == values[-1] for v in values[-tail:])
