from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Union

import numpy as np

from freeshift.data import (
    Alphabet,
    Pattern,
    sites_from_list,
    table_from_pairs,
    translate_array,
)
from freeshift.group import GroupSpec, SiteSet, Word, ball
from freeshift.utils.config import CodeConfig
from freeshift.utils.errors import InvalidParameterError, MalformedInputError


@dataclass(frozen=True)
class CodingLevel:
    """
    The ball coding at radius n: L = K^B(e,n), symbol i of L is the
    i-th pattern on B(e,n) in canonical order.
    """

    spec: GroupSpec
    alphabet: Alphabet
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidParameterError(f"Level n must be nonnegative, got {self.n}")

    @cached_property
    def ball(self) -> SiteSet:
        return ball(self.spec, self.n)

    @cached_property
    def size(self) -> int:
        """|L| = |K|^|B(e,n)|, exact."""
        return self.alphabet.size ** len(self.ball)

    @cached_property
    def symbols(self) -> Alphabet:
        return Alphabet(self.size)

    def encode(self, p: Pattern) -> int:
        if p.domain != self.ball:
            raise MalformedInputError(f"L-symbols are patterns on {self.ball}, got {p.domain}")
        return p.index()

    def decode(self, symbol: int) -> Pattern:
        return Pattern.from_index(self.ball, self.alphabet, symbol)

    def coordinate(self, symbol: int, f: Word) -> int:
        """The K-symbol at f of the L-symbol."""
        k = self.alphabet.size
        return symbol // k ** (len(self.ball) - 1 - self.ball.index(f)) % k

    def root_value(self, symbol: int) -> int:
        # e is the first site of every ball
        return symbol // self.alphabet.size ** (len(self.ball) - 1)


@dataclass(frozen=True, eq=False)
class GeneralCode:
    """Sliding block code with window W: the symbol at g is table[x restricted to W g]."""

    window: SiteSet
    table: np.ndarray
    alphabet: Alphabet
    target: Alphabet

    def __post_init__(self) -> None:
        table = np.asarray(self.table, dtype=np.int64).reshape(-1)
        if table.size != self.alphabet.size ** len(self.window):
            raise MalformedInputError(
                f"Code table has {table.size} entries, expected "
                f"{self.alphabet.size}^{len(self.window)}"
            )
        if table.size and (table.min() < 0 or table.max() >= self.target.size):
            raise MalformedInputError(f"Code values outside [0, {self.target.size})")
        table.flags.writeable = False
        object.__setattr__(self, "table", table)

    def dependence_domain(self, sites: SiteSet) -> SiteSet:
        """W D, every site the code reads on D."""
        return SiteSet(tuple(w * g for g in sites for w in self.window))

    def translated(self, g: Word) -> "GeneralCode":
        """The code read at g: window W g, same values."""
        window, table = translate_array(self.table, self.window, g, self.alphabet.size)
        return GeneralCode(window, table, self.alphabet, self.target)

    def __call__(self, x: Pattern) -> Pattern:
        return slide(x, self)

    def __repr__(self) -> str:
        return f"GeneralCode(window={self.window}, target={self.target.size})"


def slide(x: Pattern, code: GeneralCode) -> Pattern:
    """Apply the code wherever its window fits: domain {g : W g inside D}."""
    if x.alphabet != code.alphabet:
        raise MalformedInputError(
            f"Pattern over {x.alphabet.size} symbols, code reads {code.alphabet.size}"
        )
    k = code.alphabet.size
    values: Dict[Word, int] = {}
    for g in x.domain:
        sites = [w * g for w in code.window]
        if not all(u in x.domain for u in sites):
            continue
        index = 0
        for u in sites:
            index = index * k + x[u]
        values[g] = int(code.table[index])
    return Pattern.from_mapping(values, code.target)


def ball_code(spec: GroupSpec, alphabet: Union[Alphabet, int], n: int) -> GeneralCode:
    """phi at level n written as a sliding block code, window B(e,n) and identity table."""
    level = CodingLevel(spec, Alphabet.of(alphabet), n)
    return GeneralCode(level.ball, np.arange(level.size), level.alphabet, level.symbols)


def phi(x: Pattern, level: CodingLevel) -> Pattern:
    """phi(x)(g)(f) = x(f g), on every g whose ball B(e,n) g lies in the domain of x."""
    return slide(x, ball_code(level.spec, level.alphabet, level.n))


def psi(z: Pattern, level: CodingLevel) -> Pattern:
    """psi(z)(g) = z(g)(e)."""
    if z.alphabet != level.symbols:
        raise MalformedInputError(
            f"Pattern over {z.alphabet.size} symbols, level {level.n} has |L| = {level.size}"
        )
    return Pattern(z.domain, tuple(level.root_value(v) for v in z.values), level.alphabet)


def code_from_config(config: CodeConfig, spec: GroupSpec, alphabet: Alphabet) -> GeneralCode:
    """
    Build a code from `{"window": [...], "target_size": M, "map": [[key, value], ...]}`.
    Keys list one symbol per window site in the order the sites are listed.
    """
    listed = sites_from_list(config.window, spec)
    table = table_from_pairs(config.map, listed, alphabet)
    return GeneralCode(SiteSet.of(listed), table, alphabet, Alphabet(config.target_size))
