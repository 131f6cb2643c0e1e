from functools import reduce
from typing import Optional, Tuple

import numpy as np

from freeshift import keys
from freeshift.group import IDENTITY, GroupSpec, SiteSet, Word, ball
from freeshift.utils.errors import InvalidParameterError, MalformedInputError
from freeshift.utils.functional import check_budget

from .pattern import Alphabet, Pattern


class WindowPartition:
    """
    A finite partition of K^G: labeling of every pattern on a finite window.
    `labeling[i]` is the label of the i-th pattern of the canonical enumeration.
    """

    def __init__(
        self,
        window: SiteSet,
        labeling: np.ndarray,
        label_count: int,
        alphabet: Alphabet,
    ) -> None:
        """
        Args:
            `window`: The window W.
            `labeling`: Integer labels, one per pattern on W (length |K|^|W|).
            `label_count`: Number of labels, every label must be used.
            `alphabet`: The alphabet K.
        """
        labeling = np.asarray(labeling, dtype=np.int64).reshape(-1)
        if labeling.size != alphabet.size ** len(window):
            raise MalformedInputError(
                f"Labeling has {labeling.size} entries, expected {alphabet.size}^{len(window)}"
            )
        if labeling.min() < 0 or labeling.max() >= label_count:
            raise MalformedInputError(f"Labels outside [0, {label_count})")
        if np.unique(labeling).size != label_count:
            raise MalformedInputError("Labeling is not onto its label set")
        labeling.flags.writeable = False
        self.window = window
        self.labeling = labeling
        self.label_count = label_count
        self.alphabet = alphabet

    def tensor(self) -> np.ndarray:
        """Labels with one axis per window site."""
        return self.labeling.reshape((self.alphabet.size,) * len(self.window))

    def label_of(self, p: Pattern) -> int:
        if p.domain != self.window:
            p = p.restrict(self.window)
        return int(self.labeling[p.index()])

    def same_as(self, other: "WindowPartition") -> bool:
        return (
            self.window == other.window
            and self.alphabet == other.alphabet
            and self.label_count == other.label_count
            and np.array_equal(self.labeling, other.labeling)
        )

    def equivalent(self, other: "WindowPartition") -> bool:
        """Same partition up to renaming of labels."""
        if self.window != other.window or self.label_count != other.label_count:
            return False
        pairs = np.unique(self.labeling * other.label_count + other.labeling)
        return pairs.size == self.label_count

    def __repr__(self) -> str:
        return f"WindowPartition(window={self.window}, label_count={self.label_count})"


def lift_array(labeling: np.ndarray, window: SiteSet, target: SiteSet, k: int) -> np.ndarray:
    """A function of the patterns on `window` evaluated on every pattern of `target`."""
    if not window.issubset(target):
        raise MalformedInputError(f"{window} is not inside {target}")
    # canonical order is inherited by subsets, so no axis permutation is needed
    shape = [1] * len(target)
    for w in window:
        shape[target.index(w)] = k
    lifted = np.broadcast_to(np.asarray(labeling).reshape(shape), (k,) * len(target))
    return lifted.reshape(-1)


def lift_labels(P: WindowPartition, target: SiteSet) -> np.ndarray:
    """Labels of P evaluated on every pattern of a larger window `target`."""
    return lift_array(P.labeling, P.window, target, P.alphabet.size)


def join(
    P: WindowPartition,
    Q: WindowPartition,
    budget: int = keys.DEFAULT_BUDGET,
) -> WindowPartition:
    """P v Q on the union window, one label per realized pair of labels."""
    if P.alphabet != Q.alphabet:
        raise MalformedInputError(
            f"Cannot join partitions over alphabets {P.alphabet.size} and {Q.alphabet.size}"
        )
    window = P.window.union(Q.window)
    check_budget(f"join on {len(window)} sites", P.alphabet.size ** len(window), budget)
    codes = lift_labels(P, window) * Q.label_count + lift_labels(Q, window)
    pairs, labeling = np.unique(codes, return_inverse=True)
    return WindowPartition(window, labeling.reshape(-1), int(pairs.size), P.alphabet)


def translate_array(
    labeling: np.ndarray, window: SiteSet, g: Word, k: int
) -> Tuple[SiteSet, np.ndarray]:
    """Move a function of the patterns on W to W g: value at p g is the value at p."""
    moved = [h * g for h in window]
    target = SiteSet.of(moved)
    if len(target) != len(window):
        raise MalformedInputError(f"Translate of {window} by {g} is not injective")
    position = {w: i for i, w in enumerate(moved)}
    perm = [position[w] for w in target]
    tensor = np.asarray(labeling).reshape((k,) * len(window))
    if perm:
        tensor = tensor.transpose(perm)
    return target, tensor.reshape(-1)


def translate_partition(P: WindowPartition, g: Word) -> WindowPartition:
    """The partition on W g whose label at the translate of p equals P's label at p."""
    window, labeling = translate_array(P.labeling, P.window, g, P.alphabet.size)
    return WindowPartition(window, labeling, P.label_count, P.alphabet)


def alpha_partition(alphabet: Alphabet) -> WindowPartition:
    """The time-zero partition: label = symbol at e."""
    return WindowPartition(
        SiteSet.of([IDENTITY]), np.arange(alphabet.size), alphabet.size, alphabet
    )


def trivial_partition(alphabet: Alphabet) -> WindowPartition:
    return WindowPartition(SiteSet(), np.zeros(1, dtype=np.int64), 1, alphabet)


def product_partition(
    window: SiteSet,
    alphabet: Alphabet,
    budget: int = keys.DEFAULT_BUDGET,
) -> WindowPartition:
    """Every pattern on the window is its own atom."""
    size = alphabet.size ** len(window)
    check_budget(f"partition on {len(window)} sites", size, budget)
    return WindowPartition(window, np.arange(size), size, alphabet)


def labeled_partition(
    window: SiteSet,
    alphabet: Alphabet,
    labels: np.ndarray,
) -> WindowPartition:
    """Partition from arbitrary integer labels, renamed to 0..count-1 in sorted order."""
    values, labeling = np.unique(np.asarray(labels).reshape(-1), return_inverse=True)
    return WindowPartition(window, labeling.reshape(-1), int(values.size), alphabet)


def alpha_join_over_ball(
    alpha: WindowPartition,
    n: int,
    spec: GroupSpec,
    budget: int = keys.DEFAULT_BUDGET,
) -> WindowPartition:
    """alpha^n = join of alpha g over g in B(e, n)."""
    if alpha.window != SiteSet.of([IDENTITY]):
        raise InvalidParameterError(f"alpha must live on {{e}}, got window {alpha.window}")
    return reduce(
        lambda acc, g: join(acc, translate_partition(alpha, g), budget=budget),
        ball(spec, n),
        trivial_partition(alpha.alphabet),
    )


def power_of_a(j: int) -> Word:
    """a^j in the rank one free group."""
    return Word((1,) * j if j >= 0 else (-1,) * (-j))


def pn_partition(n: int, alphabet: Optional[Alphabet] = None) -> WindowPartition:
    """Join of T^j alpha over |j| <= n, j != n - 1, for the binary Z-shift."""
    if n < 1:
        raise InvalidParameterError(f"P_n needs n >= 1, got {n}")
    alphabet = alphabet if alphabet is not None else Alphabet(2)
    alpha = alpha_partition(alphabet)
    return reduce(
        join,
        (translate_partition(alpha, power_of_a(j)) for j in range(-n, n + 1) if j != n - 1),
    )
