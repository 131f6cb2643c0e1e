import random
from fractions import Fraction

import numpy as np
import pytest
from helpers import bernoulli, deterministic_chain, generic_chain, matrix, uniform

from freeshift.coding import (
    CodingLevel,
    GeneralCode,
    admissible,
    ball_code,
    count_admissible,
    enumerate_admissible,
    markovize,
    phi,
    psi,
    pushforward_system,
)
from freeshift.data import Alphabet, Pattern, enumerate_patterns, translate_pattern
from freeshift.group import IDENTITY, GroupSpec, SiteSet, Word, ball, parse_word
from freeshift.measure import TransitionSystem, TreeMarkov, validate
from freeshift.utils import BudgetExceededError
from freeshift.utils.errors import InvalidMeasureError, InvalidParameterError, MalformedInputError

F1 = GroupSpec(1)
F2 = GroupSpec(2)
N1 = GroupSpec(1, "semigroup")
N2 = GroupSpec(2, "semigroup")
K2 = Alphabet(2)
HALF = Fraction(1, 2)


def random_pattern(domain, alphabet, rng):
    return Pattern(domain, tuple(rng.randrange(alphabet.size) for _ in domain), alphabet)


def test_level_sizes():
    assert CodingLevel(F1, K2, 0).size == 2
    assert CodingLevel(F1, K2, 1).size == 8
    assert CodingLevel(F2, K2, 1).size == 32
    assert CodingLevel(N2, Alphabet(3), 2).size == 3**7
    with pytest.raises(InvalidParameterError):
        CodingLevel(F1, K2, -1)


def test_level_symbols():
    level = CodingLevel(F1, K2, 1)  # ball e, a, A
    assert level.decode(3).values == (0, 1, 1)
    assert level.encode(level.decode(5)) == 5
    assert [level.coordinate(3, w) for w in level.ball] == [0, 1, 1]
    assert level.root_value(5) == 1 and level.root_value(3) == 0
    with pytest.raises(MalformedInputError):
        level.encode(Pattern(SiteSet.of([IDENTITY]), (0,), K2))


def test_phi_example():
    level = CodingLevel(F1, K2, 1)
    # values on e, a, A, aa, AA
    x = Pattern(ball(F1, 2), (0, 1, 1, 0, 1), K2)
    z = phi(x, level)
    assert z.domain == ball(F1, 1)
    # phi(x)(e) = (x(e), x(a), x(A)), phi(x)(a) = (x(a), x(aa), x(e)), phi(x)(A) = (x(A), x(e), x(AA))
    assert [level.decode(v).values for v in z.values] == [(0, 1, 1), (1, 0, 0), (1, 0, 1)]
    assert z.values == (3, 4, 5)
    assert psi(z, level) == x.restrict(ball(F1, 1))


def test_phi_level_zero_is_relabeling():
    level = CodingLevel(F2, K2, 0)
    x = Pattern(ball(F2, 1), (1, 0, 1, 1, 0), K2)
    assert phi(x, level).values == x.values
    assert phi(x, level).alphabet == level.symbols


def test_phi_small_domain():
    level = CodingLevel(F1, K2, 1)
    x = Pattern(SiteSet.of([IDENTITY, Word((1,))]), (0, 1), K2)
    assert len(phi(x, level).domain) == 0


@pytest.mark.parametrize("spec", [F1, F2, N2])
def test_psi_inverts_phi(spec):
    rng = random.Random(7)
    for n in range(3 if spec.rank == 1 else 2):
        level = CodingLevel(spec, K2, n)
        for _ in range(10):
            x = random_pattern(ball(spec, n + 1), K2, rng)
            z = phi(x, level)
            assert z.domain == ball(spec, 1)
            assert psi(z, level) == x.restrict(z.domain)


@pytest.mark.parametrize("spec, h", [(F1, "a"), (F1, "A"), (F2, "b"), (F2, "aB"), (N2, "ab")])
def test_phi_is_equivariant(spec, h):
    rng = random.Random(11)
    g = parse_word(h, spec)
    level = CodingLevel(spec, K2, 1)
    for _ in range(10):
        x = random_pattern(ball(spec, 3 if spec.rank == 1 else 2), K2, rng)
        assert phi(translate_pattern(x, g), level) == translate_pattern(phi(x, level), g)


def test_general_code_validation():
    window = SiteSet.of([IDENTITY, Word((1,))])
    with pytest.raises(MalformedInputError):
        GeneralCode(window, np.array([0, 1, 1]), K2, K2)
    with pytest.raises(MalformedInputError):
        GeneralCode(window, np.array([0, 1, 2, 0]), K2, K2)
    code = GeneralCode(window, np.array([0, 1, 1, 0]), K2, K2)
    moved = code.translated(Word((1,)))
    assert moved.window == window.right_translate(Word((1,)))
    assert code.dependence_domain(SiteSet.of([IDENTITY])) == window
    with pytest.raises(ValueError):
        code.table[0] = 1


def test_ball_code_matches_phi():
    rng = random.Random(3)
    level = CodingLevel(F2, K2, 1)
    code = ball_code(F2, 2, 1)
    for _ in range(5):
        x = random_pattern(ball(F2, 2), K2, rng)
        assert code(x) == phi(x, level)


def test_markovize_level_zero():
    ts = markovize(uniform(2), CodingLevel(F1, K2, 0))
    assert ts.pi == (HALF, HALF)
    for s in (1, -1):
        assert ts.matrices[s] == matrix([["1/2", "1/2"], ["1/2", "1/2"]])

    ts = markovize(bernoulli("1/4", "3/4"), CodingLevel(F2, K2, 0))
    assert ts.pi == (Fraction(1, 4), Fraction(3, 4))
    for s in F2.generators:
        assert ts.matrices[s] == matrix([["1/4", "3/4"], ["1/4", "3/4"]])


def test_markovize_level_one():
    level = CodingLevel(F1, K2, 1)
    ts = markovize(uniform(2), level)
    assert ts.pi == (Fraction(1, 8),) * 8
    a, A = Word((1,)), Word((-1,))
    for i in range(8):
        u = level.decode(i)
        for j in range(8):
            v = level.decode(j)
            forward = u[IDENTITY] == v[A] and u[a] == v[IDENTITY]
            backward = u[IDENTITY] == v[a] and u[A] == v[IDENTITY]
            assert ts.matrices[1][i, j] == (HALF if forward else 0)
            assert ts.matrices[-1][i, j] == (HALF if backward else 0)


def test_markovize_of_tree_markov_at_level_zero():
    # the level zero Markovization of a tree-Markov measure is its own system
    for spec in (F1, F2, N2):
        mu = generic_chain(spec)
        ts = markovize(mu, CodingLevel(spec, K2, 0))
        assert ts.pi == mu.ts.pi
        for s in spec.generators:
            assert ts.matrices[s] == mu.ts.matrices[s]


@pytest.mark.parametrize(
    "spec, n",
    [(F1, 1), (F1, 2), (F1, 3), (F2, 1), (N2, 1), (N2, 2), (N1, 2)],
)
def test_markovize_is_invariant(spec, n):
    for mu in (uniform(2), bernoulli("1/4", "3/4"), deterministic_chain(spec), generic_chain(spec)):
        level = CodingLevel(spec, K2, n)
        ts = markovize(mu, level)
        assert ts.alphabet == level.symbols
        assert validate(ts, spec).passed


def test_markovize_rejects_non_invariant_measure():
    cycle = matrix([["0", "1", "0"], ["0", "0", "1"], ["1", "0", "0"]])
    ts = TransitionSystem(Alphabet(3), (Fraction(1, 3),) * 3, {1: cycle, -1: cycle})
    with pytest.raises(InvalidMeasureError):
        markovize(TreeMarkov(ts, F1), CodingLevel(F1, Alphabet(3), 1))
    with pytest.raises(MalformedInputError):
        markovize(uniform(3), CodingLevel(F1, K2, 1))
    with pytest.raises(MalformedInputError):
        markovize(generic_chain(F1), CodingLevel(F2, K2, 0))


def test_pushforward_of_xor_code():
    window = SiteSet.of([IDENTITY, Word((1,))])
    xor = GeneralCode(window, np.array([0, 1, 1, 0]), K2, K2)
    ts = pushforward_system(uniform(2), xor, F1)
    # XOR of a fair coin sequence is again a fair coin sequence
    assert ts.pi == (HALF, HALF)
    assert ts.matrices[1] == matrix([["1/2", "1/2"], ["1/2", "1/2"]])


def test_admissible_examples():
    level = CodingLevel(F1, K2, 1)
    ts = markovize(uniform(2), level)
    z = Pattern(ball(F1, 0), (5,), level.symbols)
    assert admissible(z, ts, F1)
    # z(e) = 000 but z(a) starts with 1
    z = Pattern(ball(F1, 1), (0, 4, 0), level.symbols)
    assert not admissible(z, ts, F1)
    x = Pattern(ball(F1, 2), (0, 1, 1, 0, 1), K2)
    assert admissible(phi(x, level), ts, F1, check_all_edges=True)
    with pytest.raises(MalformedInputError):
        admissible(Pattern(SiteSet.of([Word((1,))]), (0,), level.symbols), ts, F1)


@pytest.mark.parametrize("spec", [F1, F2, N2])
def test_tree_edges_agree_with_all_edges(spec):
    level = CodingLevel(spec, K2, 1 if spec.rank == 1 else 0)
    for mu in (uniform(2), generic_chain(spec), deterministic_chain(spec)):
        ts = markovize(mu, level)
        for z in enumerate_patterns(ball(spec, 1), level.symbols):
            admissible(z, ts, spec, check_all_edges=True)


def test_enumerate_admissible_level_one():
    level = CodingLevel(F1, K2, 1)
    ts = markovize(uniform(2), level)
    patterns = list(enumerate_admissible(ts, F1, 1))
    assert len(patterns) == 32
    assert count_admissible(ts, F1, 1) == 32
    assert [z.values for z in patterns] == sorted(z.values for z in patterns)
    brute = [z for z in enumerate_patterns(ball(F1, 1), level.symbols) if admissible(z, ts, F1)]
    assert brute == patterns


@pytest.mark.parametrize(
    "spec, n, m",
    [(F1, 0, 3), (F1, 1, 2), (F1, 2, 1), (N2, 1, 1), (N1, 2, 2), (F2, 0, 1)],
)
def test_count_matches_enumeration(spec, n, m):
    level = CodingLevel(spec, K2, n)
    for mu in (uniform(2), generic_chain(spec), deterministic_chain(spec)):
        ts = markovize(mu, level)
        count = count_admissible(ts, spec, m)
        assert count == sum(1 for _ in enumerate_admissible(ts, spec, m))
    # full support: phi is a bijection from the patterns on B(e, m + n)
    ts = markovize(uniform(2), level)
    assert count_admissible(ts, spec, m) == 2 ** len(ball(spec, m + n))


def test_count_admissible_closed_forms():
    ts = markovize(uniform(2), CodingLevel(F2, K2, 1))
    assert count_admissible(ts, F2, 1) == 2**17
    for spec in (F1, F2, N2):
        ts = markovize(deterministic_chain(spec), CodingLevel(spec, K2, 1))
        assert count_admissible(ts, spec, 2) == 2


def test_enumeration_budget():
    ts = markovize(uniform(2), CodingLevel(F1, K2, 1))
    with pytest.raises(BudgetExceededError):
        list(enumerate_admissible(ts, F1, 2, budget=50))
