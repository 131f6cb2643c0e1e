import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from freeshift.data import Alphabet
from freeshift.group import GroupSpec
from freeshift.measure import (
    Bernoulli,
    StochasticMatrix,
    TransitionSystem,
    TreeMarkov,
    reversed_matrix,
)

# reversible two-state chains sharing the stationary vector (1/3, 2/3)
GENERIC_MATRICES = [
    [["1/2", "1/2"], ["1/4", "3/4"]],
    [["2/3", "1/3"], ["1/6", "5/6"]],
    [["3/4", "1/4"], ["1/8", "7/8"]],
]
GENERIC_PI = ["1/3", "2/3"]

# from symmetric weights with equal row sums 4, 6, 9, so reversible for pi = (4, 6, 9) / 19
GENERIC_MATRICES_3 = [
    [["1/4", "1/4", "1/2"], ["1/6", "1/3", "1/2"], ["2/9", "1/3", "4/9"]],
    [["1/2", "1/4", "1/4"], ["1/6", "1/2", "1/3"], ["1/9", "2/9", "2/3"]],
]
GENERIC_PI_3 = ["4/19", "6/19", "9/19"]


def bernoulli(*p: Any) -> Bernoulli:
    return Bernoulli(tuple(Fraction(q) for q in p))


def uniform(k: int) -> Bernoulli:
    return Bernoulli((Fraction(1, k),) * k)


def matrix(rows: Sequence[Sequence[Any]]) -> StochasticMatrix:
    return StochasticMatrix.from_dense([[Fraction(p) for p in row] for row in rows])


def deterministic_chain(spec: GroupSpec, k: int = 2) -> TreeMarkov:
    """Every generator copies the symbol, pi uniform."""
    ts = TransitionSystem(
        alphabet=Alphabet(k),
        pi=(Fraction(1, k),) * k,
        matrices={s: StochasticMatrix.identity(k) for s in spec.generators},
    )
    return TreeMarkov(ts, spec)


def generic_chain(spec: GroupSpec, k: int = 2) -> TreeMarkov:
    """Full-support tree-Markov measure on 2 or 3 symbols, a different matrix per generator."""
    pis, rows = (GENERIC_PI, GENERIC_MATRICES) if k == 2 else (GENERIC_PI_3, GENERIC_MATRICES_3)
    pi = tuple(Fraction(p) for p in pis)
    matrices = {}
    for i in range(1, spec.rank + 1):
        P = matrix(rows[i - 1])
        matrices[i] = P
        if spec.is_group:
            matrices[-i] = reversed_matrix(pi, P)
    return TreeMarkov(TransitionSystem(Alphabet(k), pi, matrices), spec)


def two_state_chain(spec: GroupSpec, p: Fraction, q: Fraction) -> TreeMarkov:
    """P = [[1-p, p], [q, 1-q]] on every generator, pi = (q, p) / (p + q)."""
    pi = (q / (p + q), p / (p + q))
    P = StochasticMatrix.from_dense([[1 - p, p], [q, 1 - q]])
    matrices = {s: P for s in spec.generators}
    return TreeMarkov(TransitionSystem(Alphabet(2), pi, matrices), spec)


def write_config(path: Path, data: Any) -> str:
    path.write_text(json.dumps(data))
    return str(path)
