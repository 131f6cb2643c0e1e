import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Dict, List, Tuple, Union

import networkx as nx
import numpy as np

from freeshift import keys
from freeshift.data import Alphabet, Pattern, WindowPartition
from freeshift.group import (
    GroupSpec,
    SiteSet,
    Word,
    ball,
    ball_tree,
    format_word,
    geodesic_hull,
    parent_structure,
    parse_word,
)
from freeshift.utils.config import MeasureConfig
from freeshift.utils.errors import InvalidMeasureError, MalformedInputError
from freeshift.utils.functional import (
    check_budget,
    common_denominator,
    parse_rational_vector,
)

from .transition import StochasticMatrix, TransitionSystem, reversed_matrix


@dataclass(frozen=True)
class Bernoulli:
    """Product measure with base distribution p on K."""

    p: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if any(q < 0 for q in self.p) or sum(self.p, Fraction(0)) != 1:
            raise InvalidMeasureError(f"Bernoulli base {list(map(str, self.p))} is not a distribution")

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(len(self.p))


@dataclass(frozen=True)
class TreeMarkov:
    """Markov measure along the Cayley tree of G given by a transition system."""

    ts: TransitionSystem
    spec: GroupSpec

    @property
    def alphabet(self) -> Alphabet:
        return self.ts.alphabet


MeasureSpec = Union[Bernoulli, TreeMarkov]


@dataclass(frozen=True)
class WeightTable:
    """
    Exact marginal of a measure on a domain: probability of the pattern with
    values v is weights[v] / denominator, one axis per site in canonical order.
    """

    domain: SiteSet
    weights: np.ndarray
    denominator: int
    alphabet: Alphabet

    def flat(self) -> np.ndarray:
        return self.weights.reshape(-1)

    def probability(self, p: Pattern) -> Fraction:
        if p.domain != self.domain:
            raise MalformedInputError(f"Pattern on {p.domain}, table on {self.domain}")
        return Fraction(int(self.weights[p.values]), self.denominator)

    def marginalize(self, sub: SiteSet) -> "WeightTable":
        if not sub.issubset(self.domain):
            raise MalformedInputError(f"{sub} is not inside {self.domain}")
        axes = tuple(i for i, w in enumerate(self.domain) if w not in sub)
        weights = self.weights.sum(axis=axes) if axes else self.weights
        return WeightTable(sub, np.asarray(weights, dtype=object), self.denominator, self.alphabet)

    def total(self) -> Fraction:
        return Fraction(int(self.flat().sum()), self.denominator)


def bernoulli_table(mu: Bernoulli, domain: SiteSet) -> WeightTable:
    d = common_denominator(mu.p)
    base = np.array([int(q * d) for q in mu.p], dtype=object)
    weights = reduce(np.multiply.outer, [base] * len(domain), np.array(1, dtype=object))
    return WeightTable(domain, np.asarray(weights, dtype=object), d ** len(domain), mu.alphabet)


def tree_table(ts: TransitionSystem, spec: GroupSpec, sites: SiteSet) -> WeightTable:
    """
    pi(x_e) prod P^t[x_g', x_tg'] on a set closed under taking parents.
    Sites are in shortlex order, so every parent has a smaller axis.
    """
    parents = parent_structure(sites, spec)
    k = ts.alphabet.size
    pi_d = common_denominator(ts.pi)
    weights = np.array([int(q * pi_d) for q in ts.pi], dtype=object)
    denominator = pi_d
    scaled: Dict[int, Tuple[np.ndarray, int]] = {}
    for axis, g in enumerate(sites):
        if axis == 0:
            continue  # e
        t, g_parent = parents[g]
        if t not in scaled:
            scaled[t] = ts.matrices[t].scaled_integers()
        mat, d = scaled[t]
        shape = [1] * (axis + 1)
        shape[sites.index(g_parent)] = k
        shape[axis] = k
        weights = weights[..., np.newaxis] * mat.reshape(shape)
        denominator *= d
    return WeightTable(sites, np.asarray(weights, dtype=object), denominator, ts.alphabet)


def marginal_table(
    mu: MeasureSpec,
    domain: SiteSet,
    budget: int = keys.DEFAULT_BUDGET,
) -> WeightTable:
    """Exact marginals of every pattern on `domain`."""
    k = mu.alphabet.size
    if isinstance(mu, Bernoulli):
        check_budget(f"marginal table on {len(domain)} sites", k ** len(domain), budget)
        return bernoulli_table(mu, domain)
    # sum out the interior sites of the geodesic hull
    hull = geodesic_hull(domain)
    check_budget(f"tree marginal on {len(hull)} sites", k ** len(hull), budget)
    return tree_table(mu.ts, mu.spec, hull).marginalize(domain)


def ball_product(ts: TransitionSystem, spec: GroupSpec, p: Pattern) -> Fraction:
    """pi(p(e)) prod over tree edges of P^t[p(g'), p(t g')] for p on a ball."""
    prob = ts.pi[p.values[0]]
    for g, (t, g_parent) in parent_structure(p.domain, spec).items():
        if prob == 0:
            break
        prob *= ts.matrices[t][p[g_parent], p[g]]
    return prob


def marginal(
    mu: MeasureSpec,
    p: Pattern,
    budget: int = keys.DEFAULT_BUDGET,
) -> Fraction:
    """mu of the cylinder set given by p."""
    if p.alphabet != mu.alphabet:
        raise MalformedInputError(
            f"Pattern over {p.alphabet.size} symbols, measure over {mu.alphabet.size}"
        )
    if isinstance(mu, Bernoulli):
        return reduce(lambda acc, v: acc * mu.p[v], p.values, Fraction(1))
    if p.domain == ball(mu.spec, p.domain.max_length()):
        return ball_product(mu.ts, mu.spec, p)
    return marginal_table(mu, p.domain, budget).probability(p)


def ball_extension_marginal(
    mu: TreeMarkov,
    p: Pattern,
    budget: int = keys.DEFAULT_BUDGET,
) -> Fraction:
    """Sum of full-ball marginals over every extension of p to the smallest ball."""
    big = ball(mu.spec, p.domain.max_length())
    free = [w for w in big if w not in p.domain]
    check_budget(f"extensions over {len(free)} sites", mu.alphabet.size ** len(free), budget)
    fixed = p.as_dict()
    total = Fraction(0)
    for values in itertools.product(mu.alphabet.symbols, repeat=len(free)):
        mapping = dict(fixed)
        mapping.update(zip(free, values))
        total += ball_product(mu.ts, mu.spec, Pattern.from_mapping(mapping, mu.alphabet))
    return total


def rooted_marginal(ts: TransitionSystem, spec: GroupSpec, p: Pattern, root: Word) -> Fraction:
    """
    Full-ball marginal computed from another root: edges walked against their
    orientation use the matrix of the inverse generator.
    """
    tree = ball_tree(p.domain, spec)
    prob = ts.pi[p[root]]
    for u, v in nx.bfs_edges(tree.to_undirected(as_view=True), root):
        if tree.has_edge(u, v):
            t = tree.edges[u, v]["generator"]
        else:
            spec.require_group("Re-rooting against an edge")
            t = -tree.edges[v, u]["generator"]
        prob *= ts.matrices[t][p[u], p[v]]
    return prob


def label_weights(
    mu: MeasureSpec,
    P: WindowPartition,
    budget: int = keys.DEFAULT_BUDGET,
) -> Tuple[List[int], int]:
    """Integer weights of every label of P over one common denominator."""
    if P.alphabet != mu.alphabet:
        raise MalformedInputError(
            f"Partition over {P.alphabet.size} symbols, measure over {mu.alphabet.size}"
        )
    table = marginal_table(mu, P.window, budget)
    order = np.argsort(P.labeling, kind="stable")
    labels = P.labeling[order]
    starts = np.flatnonzero(np.r_[True, labels[1:] != labels[:-1]])
    sums = np.add.reduceat(table.flat()[order], starts)
    return [int(w) for w in sums], table.denominator


def partition_distribution(
    mu: MeasureSpec,
    P: WindowPartition,
    budget: int = keys.DEFAULT_BUDGET,
) -> List[Fraction]:
    """mu of every atom of P, indexed by label."""
    weights, denominator = label_weights(mu, P, budget)
    return [Fraction(w, denominator) for w in weights]


def resolve_measure(
    config: MeasureConfig,
    spec: GroupSpec,
    alphabet: Alphabet,
) -> MeasureSpec:
    """Build a measure from its config; rationals are `"a/b"` strings."""
    measure_type = config.type.lower()
    if measure_type == keys.BERNOULLI:
        p = parse_rational_vector(config.p)
        if len(p) != alphabet.size:
            raise MalformedInputError(
                f"Bernoulli base has {len(p)} entries for alphabet of size {alphabet.size}"
            )
        return Bernoulli(tuple(p))
    elif measure_type == keys.TREE_MARKOV:
        if config.pi is None:
            raise MalformedInputError("tree_markov measure needs `pi`")
        pi = tuple(parse_rational_vector(config.pi))
        matrices: Dict[int, StochasticMatrix] = {}
        for name, rows in config.matrices.items():
            g = parse_word(str(name), spec)
            if len(g) != 1:
                raise MalformedInputError(f"Matrix key {name!r} is not a generator")
            if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
                raise MalformedInputError(f"Matrix {name!r} must be a list of rows")
            matrices[g.letters[0]] = StochasticMatrix.from_dense(
                [parse_rational_vector(row) for row in rows]
            )
        if spec.is_group:
            # a missing inverse generator gets the time reversal
            for s in list(matrices):
                if -s not in matrices:
                    matrices[-s] = reversed_matrix(pi, matrices[s])
        missing = [t for t in spec.generators if t not in matrices]
        if missing:
            names = ", ".join(format_word(Word((t,))) for t in missing)
            raise MalformedInputError(f"tree_markov measure has no matrix for {names}")
        ts = TransitionSystem(alphabet=alphabet, pi=pi, matrices=matrices)
        return TreeMarkov(ts=ts, spec=spec)
    else:
        raise MalformedInputError(f"Unsupported measure type {config.type}")

