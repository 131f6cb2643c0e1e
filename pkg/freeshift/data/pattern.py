import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from freeshift import keys
from freeshift.group import SiteSet, Word, format_word
from freeshift.utils.errors import MalformedInputError, InvalidParameterError
from freeshift.utils.functional import check_budget


@dataclass(frozen=True)
class Alphabet:
    """Symbols 0, ..., size - 1."""

    size: int

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InvalidParameterError(f"Alphabet size must be positive, got {self.size}")

    def __len__(self) -> int:
        return self.size

    @property
    def symbols(self) -> range:
        return range(self.size)

    @classmethod
    def of(cls, value: Union["Alphabet", int]) -> "Alphabet":
        return value if isinstance(value, Alphabet) else cls(value)


@dataclass(frozen=True)
class Pattern:
    """A configuration on a finite site set, values listed in the domain's order."""

    domain: SiteSet
    values: Tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self) -> None:
        if len(self.values) != len(self.domain):
            raise MalformedInputError(
                f"Pattern has {len(self.values)} values for {len(self.domain)} sites"
            )
        for v in self.values:
            if not 0 <= v < self.alphabet.size:
                raise MalformedInputError(
                    f"Symbol {v} outside alphabet of size {self.alphabet.size}"
                )

    @classmethod
    def from_mapping(cls, mapping: Mapping[Word, int], alphabet: Alphabet) -> "Pattern":
        domain = SiteSet.of(mapping.keys())
        return cls(domain, tuple(mapping[w] for w in domain), alphabet)

    @classmethod
    def from_index(cls, domain: SiteSet, alphabet: Alphabet, index: int) -> "Pattern":
        k = alphabet.size
        values = []
        for _ in range(len(domain)):
            index, v = divmod(index, k)
            values.append(v)
        return cls(domain, tuple(reversed(values)), alphabet)

    def __getitem__(self, site: Word) -> int:
        return self.values[self.domain.index(site)]

    def as_dict(self) -> Dict[Word, int]:
        return dict(zip(self.domain, self.values))

    def index(self) -> int:
        """Rank of the pattern in the canonical enumeration of its domain."""
        idx = 0
        for v in self.values:
            idx = idx * self.alphabet.size + v
        return idx

    def restrict(self, sub: SiteSet) -> "Pattern":
        if not sub.issubset(self.domain):
            raise MalformedInputError(f"{sub} is not inside the domain {self.domain}")
        return Pattern(sub, tuple(self[w] for w in sub), self.alphabet)

    def __str__(self) -> str:
        if not self.values:
            return "{}"
        return " ".join(f"{format_word(w)}:{v}" for w, v in zip(self.domain, self.values))


def enumerate_patterns(
    domain: SiteSet,
    alphabet: Union[Alphabet, int],
    budget: int = keys.DEFAULT_BUDGET,
) -> Iterator[Pattern]:
    """All |K|^|D| patterns, sites in shortlex order, symbols lexicographic."""
    alphabet = Alphabet.of(alphabet)
    check_budget(f"patterns on {len(domain)} sites", alphabet.size ** len(domain), budget)
    for values in itertools.product(alphabet.symbols, repeat=len(domain)):
        yield Pattern(domain, values, alphabet)


def translate_pattern(p: Pattern, g: Word) -> Pattern:
    """The pattern on D g with value p(h) at h g."""
    return Pattern.from_mapping({h * g: v for h, v in zip(p.domain, p.values)}, p.alphabet)


def format_values(values: Iterable[int]) -> str:
    """Compact rendering of symbols: `0110`, comma separated once a symbol needs two digits."""
    values = list(values)
    if all(v < 10 for v in values):
        return "".join(map(str, values))
    return ",".join(map(str, values))
