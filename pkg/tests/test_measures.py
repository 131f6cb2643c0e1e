from fractions import Fraction

import pytest
from helpers import bernoulli, deterministic_chain, generic_chain, matrix

from freeshift.data import Alphabet, Pattern, enumerate_patterns, pn_partition, translate_pattern
from freeshift.group import IDENTITY, GroupSpec, SiteSet, Word, ball, parse_word
from freeshift.measure import (
    Bernoulli,
    StochasticMatrix,
    TransitionSystem,
    TreeMarkov,
    ball_extension_marginal,
    marginal,
    marginal_table,
    partition_distribution,
    resolve_measure,
    reversed_matrix,
    rooted_marginal,
    validate,
)
from freeshift.utils import InvalidInputError, MeasureConfig
from freeshift.utils.errors import InvalidMeasureError, MalformedInputError

F1 = GroupSpec(1)
F2 = GroupSpec(2)
N2 = GroupSpec(2, "semigroup")
K2 = Alphabet(2)


def sites(*names, spec=F2):
    return SiteSet.of(parse_word(w, spec) for w in names)


def test_validate_generic_chain():
    for spec in (F1, F2, N2):
        report = validate(generic_chain(spec).ts, spec)
        assert report.passed
        assert report.first_violation is None
    assert validate(generic_chain(N2).ts, N2).reversible is None


def test_validate_failures():
    pi = (Fraction(1, 2), Fraction(1, 2))
    bad_row = TransitionSystem(K2, pi, {1: matrix([["1/2", "1/4"], ["1/2", "1/2"]])})
    report = validate(bad_row, GroupSpec(1, "semigroup"))
    assert not report.stochastic and not report.passed

    skewed = TransitionSystem(K2, pi, {1: matrix([["1", "0"], ["1/2", "1/2"]])})
    report = validate(skewed, GroupSpec(1, "semigroup"))
    assert report.stochastic and not report.stationary

    # the cyclic shift on three states is stationary but not its own reversal
    cycle = matrix([["0", "1", "0"], ["0", "0", "1"], ["1", "0", "0"]])
    third = (Fraction(1, 3),) * 3
    report = validate(TransitionSystem(Alphabet(3), third, {1: cycle, -1: cycle}), F1)
    assert report.stationary and report.reversible is False
    fixed = TransitionSystem(Alphabet(3), third, {1: cycle, -1: reversed_matrix(third, cycle)})
    assert validate(fixed, F1).passed


def test_validate_requires_every_generator():
    ts = generic_chain(F1).ts
    with pytest.raises(MalformedInputError):
        validate(ts, F2)


def test_matrix_validation():
    with pytest.raises(MalformedInputError):
        StochasticMatrix.from_dense([[Fraction(1)], [Fraction(1), Fraction(0)]])
    with pytest.raises(MalformedInputError):
        TransitionSystem(K2, (Fraction(1),), {})


def test_reversed_matrix_of_reversible_chain():
    mu = generic_chain(F1)
    P = mu.ts.matrices[1]
    assert reversed_matrix(mu.ts.pi, P) == P


def test_bernoulli_marginal():
    mu = bernoulli("1/4", "3/4")
    p = Pattern.from_mapping({IDENTITY: 0, Word((1,)): 1}, K2)
    assert marginal(mu, p) == Fraction(3, 16)
    with pytest.raises(InvalidMeasureError):
        bernoulli("1/2", "1/3")


def test_tree_marginal_on_ball():
    mu = generic_chain(F1)
    domain = ball(F1, 1)  # e, a, A
    pi, P, Q = mu.ts.pi, mu.ts.matrices[1], mu.ts.matrices[-1]
    for p in enumerate_patterns(domain, K2):
        e, a, a_inv = p.values
        assert marginal(mu, p) == pi[e] * P[e, a] * Q[e, a_inv]
    assert sum(marginal(mu, p) for p in enumerate_patterns(ball(F1, 2), K2)) == 1


@pytest.mark.parametrize(
    "spec, names",
    [(F2, ("a",)), (F2, ("A", "b")), (F2, ("B",)), (F1, ("e", "aa")), (F1, ("A", "aa")), (F1, ("AA", "a"))],
)
def test_tree_marginal_off_ball(spec, names):
    mu = generic_chain(spec)
    domain = sites(*names, spec=spec)
    for p in enumerate_patterns(domain, K2):
        assert marginal(mu, p) == ball_extension_marginal(mu, p)
    assert marginal_table(mu, domain).total() == 1


def test_rooted_marginal_is_root_independent():
    mu = generic_chain(F2)
    domain = ball(F2, 1)
    for p in enumerate_patterns(domain, K2):
        reference = marginal(mu, p)
        for root in domain:
            assert rooted_marginal(mu.ts, F2, p, root) == reference


def test_shift_invariance():
    for mu in (generic_chain(F2), bernoulli("1/3", "2/3")):
        domain = sites("e", "a", "ab")
        for p in enumerate_patterns(domain, K2):
            for g in (Word((1,)), Word((-2,)), Word((2, -1))):
                assert marginal(mu, translate_pattern(p, g)) == marginal(mu, p)


def test_deterministic_chain_support():
    mu = deterministic_chain(F2)
    for p in enumerate_patterns(ball(F2, 1), K2):
        constant = len(set(p.values)) == 1
        assert (marginal(mu, p) > 0) == constant


def test_partition_distribution():
    dist = partition_distribution(bernoulli("1/4", "3/4"), pn_partition(1))
    assert sum(dist) == 1
    assert sorted(dist) == sorted(
        [Fraction(1, 16), Fraction(3, 16), Fraction(3, 16), Fraction(9, 16)]
    )
    with pytest.raises(MalformedInputError):
        partition_distribution(bernoulli("1/3", "1/3", "1/3"), pn_partition(1))


def test_resolve_bernoulli():
    config = MeasureConfig(type="bernoulli", p=["1/4", "3/4"])
    mu = resolve_measure(config, F1, K2)
    assert isinstance(mu, Bernoulli)
    assert mu.p == (Fraction(1, 4), Fraction(3, 4))
    with pytest.raises(MalformedInputError):
        resolve_measure(config, F1, Alphabet(3))
    with pytest.raises(InvalidInputError):
        resolve_measure(MeasureConfig(p=["1/0", "1"]), F1, K2)
    with pytest.raises(InvalidInputError):
        resolve_measure(MeasureConfig(p=[0.5, 0.5]), F1, K2)


def test_resolve_tree_markov_fills_inverses():
    config = MeasureConfig(
        type="tree_markov",
        pi=["1/3", "2/3"],
        matrices={"a": [["1/2", "1/2"], ["1/4", "3/4"]]},
    )
    mu = resolve_measure(config, F1, K2)
    assert isinstance(mu, TreeMarkov)
    assert set(mu.ts.matrices) == {1, -1}
    assert validate(mu.ts, F1).passed

    with pytest.raises(InvalidInputError):
        resolve_measure(
            MeasureConfig(type="tree_markov", pi=["1/2", "1/2"], matrices={"A": [["1", "0"], ["0", "1"]]}),
            GroupSpec(1, "semigroup"),
            K2,
        )
    with pytest.raises(MalformedInputError):
        resolve_measure(MeasureConfig(type="tree_markov"), F1, K2)
    with pytest.raises(MalformedInputError, match="no matrix for b, B"):
        resolve_measure(config, F2, K2)
    with pytest.raises(MalformedInputError):
        resolve_measure(
            MeasureConfig(type="tree_markov", pi=["1/2", "1/2"], matrices={"ab": [["1", "0"], ["0", "1"]]}),
            F2,
            K2,
        )
