from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Tuple

import networkx as nx

from freeshift import keys
from freeshift.utils.errors import (
    InvalidGeneratorError,
    InvalidParameterError,
    MalformedBallError,
    UnsupportedModeError,
)


@dataclass(frozen=True)
class GroupSpec:
    """
    Free group (letters +i and -i) or free semigroup (letters +i only)
    on generators s_1, ..., s_r.
    """

    rank: int
    mode: str = keys.GROUP

    def __post_init__(self) -> None:
        if not 1 <= self.rank <= keys.MAX_RANK:
            raise InvalidParameterError(f"Rank must be in [1, {keys.MAX_RANK}], got {self.rank}")
        if self.mode not in keys.GROUP_MODES:
            raise InvalidParameterError(f"Unknown group mode {self.mode}")

    @property
    def is_group(self) -> bool:
        return self.mode == keys.GROUP

    @property
    def generators(self) -> Tuple[int, ...]:
        """The letters of S in canonical order s1 < s1^-1 < s2 < ..."""
        if self.is_group:
            return tuple(x for i in range(1, self.rank + 1) for x in (i, -i))
        return tuple(range(1, self.rank + 1))

    def require_group(self, what: str) -> None:
        if not self.is_group:
            raise UnsupportedModeError(f"{what} is only defined in group mode")


def letter_rank(letter: int) -> int:
    # s1 < s1^-1 < s2 < s2^-1 < ...
    return 2 * (abs(letter) - 1) + (0 if letter > 0 else 1)


@dataclass(frozen=True)
class Word:
    """
    A reduced word, letters +i for s_i and -i for s_i^-1.
    Products are always freely reduced, in semigroup mode this never cancels.
    """

    letters: Tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        left = list(self.letters)
        right = list(other.letters)
        while left and right and left[-1] == -right[0]:
            left.pop()
            right.pop(0)
        return Word(tuple(left + right))

    def inverse(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Shortlex key."""
        return len(self.letters), tuple(letter_rank(x) for x in self.letters)

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)})"


IDENTITY = Word()


def format_word(w: Word) -> str:
    if w.is_identity():
        return keys.IDENTITY
    chars = []
    for x in w.letters:
        c = keys.GENERATOR_LETTERS[abs(x) - 1]
        chars.append(c if x > 0 else c.upper())
    return "".join(chars)


def parse_word(text: str, spec: GroupSpec) -> Word:
    """Parse `e`, `a`, `aB`, ... (upper case is the inverse), then reduce."""
    text = text.strip()
    if text == keys.IDENTITY:
        return IDENTITY
    letters = []
    for c in text:
        idx = keys.GENERATOR_LETTERS.find(c.lower())
        if idx < 0:
            raise InvalidGeneratorError(f"Unknown generator letter {c!r} in {text!r}")
        letters.append(idx + 1 if c.islower() else -(idx + 1))
    return reduce(letters, spec)


def reduce(letters: Iterable[int], spec: GroupSpec) -> Word:
    """Free reduction of a raw letter sequence over the generators of `spec`."""
    letters = tuple(letters)
    for x in letters:
        if x == 0 or abs(x) > spec.rank:
            raise InvalidGeneratorError(
                f"Letter {x} out of range [1, {spec.rank}] (rank {spec.rank})"
            )
        if x < 0 and not spec.is_group:
            raise InvalidGeneratorError(f"Inverse letter {x} in semigroup mode")
    if not spec.is_group:
        return Word(letters)
    stack: List[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return Word(tuple(stack))


def word_length(g: Word) -> int:
    return len(g.letters)


def distance(g: Word, h: Word) -> int:
    """Right-invariant word metric d(g, h) = |g h^-1|, group mode."""
    return word_length(g * h.inverse())


@dataclass(frozen=True)
class SiteSet:
    """A finite set of group elements kept in shortlex order."""

    elements: Tuple[Word, ...] = ()
    _index: Dict[Word, int] = field(
        init=False, repr=False, compare=False, hash=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        canonical = tuple(sorted(set(self.elements), key=Word.sort_key))
        object.__setattr__(self, "elements", canonical)
        object.__setattr__(self, "_index", {w: i for i, w in enumerate(canonical)})

    @classmethod
    def of(cls, words: Iterable[Word]) -> "SiteSet":
        return cls(tuple(words))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.elements)

    def __contains__(self, w: object) -> bool:
        return w in self._index

    def __getitem__(self, i: int) -> Word:
        return self.elements[i]

    def index(self, w: Word) -> int:
        return self._index[w]

    def union(self, other: "SiteSet") -> "SiteSet":
        return SiteSet(self.elements + other.elements)

    def issubset(self, other: "SiteSet") -> bool:
        return all(w in other for w in self.elements)

    def right_translate(self, g: Word) -> "SiteSet":
        """The set {h g : h in self}."""
        return SiteSet(tuple(h * g for h in self.elements))

    def max_length(self) -> int:
        return max((len(w) for w in self.elements), default=0)

    def __str__(self) -> str:
        return "{" + ", ".join(format_word(w) for w in self.elements) + "}"


@lru_cache(maxsize=256)
def ball(spec: GroupSpec, n: int) -> SiteSet:
    """B(e, n) = {g : |g| <= n}, grown by left multiplication g = t g'."""
    if n < 0:
        raise InvalidParameterError(f"Radius must be nonnegative, got {n}")
    layer = [IDENTITY]
    sites = [IDENTITY]
    for _ in range(n):
        next_layer = []
        for w in layer:
            for t in spec.generators:
                # t w is reduced iff w does not start with t^-1
                if w.letters and w.letters[0] == -t:
                    continue
                next_layer.append(Word((t,) + w.letters))
        sites.extend(next_layer)
        layer = next_layer
    return SiteSet(tuple(sites))


def ball_size(spec: GroupSpec, n: int) -> int:
    """Closed-form |B(e, n)|."""
    r = spec.rank
    if spec.is_group:
        if r == 1:
            return 2 * n + 1
        return 1 + 2 * r * ((2 * r - 1) ** n - 1) // (2 * r - 2)
    if r == 1:
        return n + 1
    return (r ** (n + 1) - 1) // (r - 1)


def geodesic_suffixes(f: Word) -> Tuple[Word, ...]:
    """(f_1, ..., f_{m+1}) with f_i = t_i ... t_m, f_1 = f and f_{m+1} = e."""
    m = len(f.letters)
    return tuple(Word(f.letters[i:]) for i in range(m + 1))


def left_ball(f: Word, n: int, spec: GroupSpec) -> SiteSet:
    """B(f, n) = B(e, n) f."""
    return ball(spec, n).right_translate(f)


def parent_structure(sites: SiteSet, spec: GroupSpec) -> Dict[Word, Tuple[int, Word]]:
    """
    For every g != e of a ball, the unique (t, g') with g = t g' and |g'| = |g| - 1.
    """
    if IDENTITY not in sites:
        raise MalformedBallError("Ball does not contain the identity")
    parents: Dict[Word, Tuple[int, Word]] = {}
    for g in sites:
        if g.is_identity():
            continue
        t = g.letters[0]
        if abs(t) > spec.rank or (t < 0 and not spec.is_group):
            raise MalformedBallError(f"Site {g} is not a word over the generators")
        g_parent = Word(g.letters[1:])
        if g_parent not in sites:
            raise MalformedBallError(
                f"Site {g} present but its geodesic predecessor {g_parent} is not"
            )
        parents[g] = (t, g_parent)
    return parents


def geodesic_hull(sites: Iterable[Word]) -> SiteSet:
    """Smallest set containing e and `sites` closed under g = t g' -> g'."""
    hull = {IDENTITY}
    for g in sites:
        for suffix in geodesic_suffixes(g):
            hull.add(suffix)
    return SiteSet(tuple(hull))


def ball_tree(sites: SiteSet, spec: GroupSpec) -> nx.DiGraph:
    """The parent structure as an arborescence rooted at e, edges g' -> t g'."""
    tree = nx.DiGraph()
    tree.add_nodes_from(sites)
    for g, (t, g_parent) in parent_structure(sites, spec).items():
        tree.add_edge(g_parent, g, generator=t)
    return tree


def is_spanning_tree(tree: nx.DiGraph, sites: SiteSet) -> bool:
    return (
        tree.number_of_nodes() == len(sites)
        and tree.number_of_edges() == len(sites) - 1
        and nx.is_arborescence(tree)
    )


def generator_pairs(sites: SiteSet, spec: GroupSpec) -> List[Tuple[Word, int, Word]]:
    """Every oriented pair (g, s, s g) with both ends in `sites`, s in S."""
    pairs = []
    for g in sites:
        for s in spec.generators:
            h = Word((s,)) * g
            if h in sites:
                pairs.append((g, s, h))
    return pairs
