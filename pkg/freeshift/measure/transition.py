from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from freeshift.data import Alphabet
from freeshift.group import GroupSpec, Word, format_word
from freeshift.utils.errors import MalformedInputError
from freeshift.utils.functional import common_denominator

ZERO = Fraction(0)
ONE = Fraction(1)


class StochasticMatrix:
    """
    Square matrix of exact rationals stored by rows, zero entries omitted.
    Markovizations have |L| = |K|^|B(e,n)| states with few successors each.
    """

    def __init__(self, rows: Sequence[Mapping[int, Fraction]], size: int) -> None:
        if len(rows) != size:
            raise MalformedInputError(f"Matrix has {len(rows)} rows, expected {size}")
        cleaned = []
        for i, row in enumerate(rows):
            clean = {}
            for j, p in row.items():
                if not 0 <= j < size:
                    raise MalformedInputError(f"Column {j} out of range in row {i}")
                if p != 0:
                    clean[j] = Fraction(p)
            cleaned.append(dict(sorted(clean.items())))
        self.rows: Tuple[Dict[int, Fraction], ...] = tuple(cleaned)
        self.size = size

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[Fraction]]) -> "StochasticMatrix":
        size = len(dense)
        for i, row in enumerate(dense):
            if len(row) != size:
                raise MalformedInputError(
                    f"Row {i} has {len(row)} entries, matrix must be {size}x{size}"
                )
        return cls([{j: p for j, p in enumerate(row)} for row in dense], size)

    @classmethod
    def identity(cls, size: int) -> "StochasticMatrix":
        return cls([{i: ONE} for i in range(size)], size)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.rows[i].get(j, ZERO)

    def successors(self, i: int) -> List[int]:
        """States j with a positive entry, increasing."""
        return [j for j, p in self.rows[i].items() if p > 0]

    def row_sum(self, i: int) -> Fraction:
        return sum(self.rows[i].values(), ZERO)

    def left_multiply(self, vector: Sequence[Fraction]) -> List[Fraction]:
        """vector . P"""
        out = [ZERO] * self.size
        for i, row in enumerate(self.rows):
            if vector[i] == 0:
                continue
            for j, p in row.items():
                out[j] += vector[i] * p
        return out

    def scaled_integers(self) -> Tuple[np.ndarray, int]:
        """Integer matrix A and denominator d with P = A / d."""
        d = common_denominator(p for row in self.rows for p in row.values())
        dense = np.zeros((self.size, self.size), dtype=object)
        for i, row in enumerate(self.rows):
            for j, p in row.items():
                dense[i, j] = int(p * d)
        return dense, d

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StochasticMatrix):
            return NotImplemented
        return self.size == other.size and self.rows == other.rows

    def __repr__(self) -> str:
        return f"StochasticMatrix(size={self.size}, nonzeros={sum(map(len, self.rows))})"


@dataclass(frozen=True)
class TransitionSystem:
    """Vertex distribution pi and one stochastic matrix per generator letter."""

    alphabet: Alphabet
    pi: Tuple[Fraction, ...]
    matrices: Mapping[int, StochasticMatrix]

    def __post_init__(self) -> None:
        k = self.alphabet.size
        if len(self.pi) != k:
            raise MalformedInputError(f"pi has {len(self.pi)} entries for {k} states")
        for s, mat in self.matrices.items():
            if mat.size != k:
                raise MalformedInputError(
                    f"P^{format_word(Word((s,)))} is {mat.size}x{mat.size}, expected {k}x{k}"
                )

    def support(self) -> List[int]:
        return [i for i, p in enumerate(self.pi) if p > 0]


def reversed_matrix(pi: Sequence[Fraction], P: StochasticMatrix) -> StochasticMatrix:
    """Time reversal: Q_ji = pi_i P_ij / pi_j, identity rows where pi_j = 0."""
    rows: List[Dict[int, Fraction]] = [dict() for _ in range(P.size)]
    for i, row in enumerate(P.rows):
        for j, p in row.items():
            if pi[j] > 0 and pi[i] > 0:
                rows[j][i] = pi[i] * p / pi[j]
    for j in range(P.size):
        if pi[j] == 0:
            rows[j] = {j: ONE}
    return StochasticMatrix(rows, P.size)


@dataclass(frozen=True)
class ValidationReport:
    stochastic: bool
    stationary: bool
    reversible: Optional[bool]  # None in semigroup mode
    first_violation: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.stochastic and self.stationary and self.reversible is not False


def validate(ts: TransitionSystem, spec: GroupSpec) -> ValidationReport:
    """Stochasticity, stationarity and (group mode) reversibility, exactly."""
    expected = set(spec.generators)
    if set(ts.matrices) != expected:
        given = sorted(format_word(Word((s,))) for s in ts.matrices)
        wanted = sorted(format_word(Word((s,))) for s in expected)
        raise MalformedInputError(f"Matrices given for {given}, expected {wanted}")
    violations: List[str] = []

    # stochasticity
    stochastic = True
    if any(p < 0 for p in ts.pi) or sum(ts.pi, ZERO) != 1:
        stochastic = False
        violations.append(f"pi is not a probability vector (sum {sum(ts.pi, ZERO)})")
    for s in spec.generators:
        P = ts.matrices[s]
        for i in range(P.size):
            if any(p < 0 for p in P.rows[i].values()) or P.row_sum(i) != 1:
                stochastic = False
                violations.append(
                    f"P^{format_word(Word((s,)))} row {i} sums to {P.row_sum(i)}"
                )
                break

    # stationarity pi P^s = pi
    stationary = True
    for s in spec.generators:
        image = ts.matrices[s].left_multiply(ts.pi)
        for j, (a, b) in enumerate(zip(image, ts.pi)):
            if a != b:
                stationary = False
                violations.append(
                    f"(pi P^{format_word(Word((s,)))})_{j} = {a} != pi_{j} = {b}"
                )
                break

    # reversibility pi_i P^s_ij = pi_j P^{s^-1}_ji
    reversible: Optional[bool] = None
    if spec.is_group:
        reversible = True
        for s in spec.generators:
            P, Q = ts.matrices[s], ts.matrices[-s]
            pairs = {(i, j) for i, row in enumerate(P.rows) for j in row}
            pairs |= {(i, j) for j, row in enumerate(Q.rows) for i in row}
            for i, j in sorted(pairs):
                if ts.pi[i] * P[i, j] != ts.pi[j] * Q[j, i]:
                    reversible = False
                    violations.append(
                        f"pi_{i} P^{format_word(Word((s,)))}_{i}{j} != "
                        f"pi_{j} P^{format_word(Word((-s,)))}_{j}{i}"
                    )
                    break
            if not reversible:
                break

    return ValidationReport(
        stochastic=stochastic,
        stationary=stationary,
        reversible=reversible,
        first_violation=violations[0] if violations else None,
    )
