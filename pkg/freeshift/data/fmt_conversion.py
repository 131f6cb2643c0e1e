from typing import List, Sequence, Union

import numpy as np

from freeshift import keys
from freeshift.group import GroupSpec, SiteSet, Word, parse_word
from freeshift.utils.config import PartitionConfig
from freeshift.utils.errors import InvalidParameterError, MalformedInputError
from freeshift.utils.functional import check_budget

from .partition import (
    WindowPartition,
    alpha_join_over_ball,
    alpha_partition,
    labeled_partition,
    pn_partition,
    product_partition,
)
from .pattern import Alphabet, Pattern
from .transform import TranslateTransform


def sites_from_list(names: Sequence[str], spec: GroupSpec) -> List[Word]:
    """Parse a listed window, keeping the listed order."""
    listed = [parse_word(str(w), spec) for w in names]
    if len(set(listed)) != len(listed):
        raise MalformedInputError(f"Repeated site in window {list(names)}")
    return listed


def pattern_from_key(
    key: Union[str, Sequence[int]],
    sites: Sequence[Word],
    alphabet: Alphabet,
) -> Pattern:
    """Read a pattern given as one symbol per site, sites in the listed order."""
    if isinstance(key, str):
        if not key.isdigit():
            raise MalformedInputError(f"Pattern key {key!r} is not a digit string")
        digits = [int(c) for c in key]
    elif isinstance(key, (list, tuple)):
        try:
            digits = [int(str(v)) for v in key]
        except ValueError:
            raise MalformedInputError(f"Pattern key {key!r} is not a list of symbols") from None
    else:
        # unquoted YAML keys such as 01 arrive as integers
        raise MalformedInputError(f"Pattern key {key!r} must be a quoted string or a list")
    if len(digits) != len(sites):
        raise MalformedInputError(
            f"Pattern key {key!r} has {len(digits)} symbols for {len(sites)} sites"
        )
    return Pattern.from_mapping(dict(zip(sites, digits)), alphabet)


def table_from_pairs(
    pairs: Sequence,
    sites: Sequence[Word],
    alphabet: Alphabet,
) -> np.ndarray:
    """
    A total map on the patterns of a window from `[key, value]` pairs,
    as an integer array in canonical pattern order.
    """
    table = np.full(alphabet.size ** len(sites), -1, dtype=np.int64)
    for entry in pairs:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise MalformedInputError(f"Entry {entry!r} is not a [key, value] pair")
        key, value = entry
        p = pattern_from_key(key, sites, alphabet)
        if table[p.index()] >= 0:
            raise MalformedInputError(f"Key {key!r} given twice")
        try:
            # str first, so 1.5, true and nested lists are refused
            table[p.index()] = int(str(value))
        except (ValueError, OverflowError):
            raise MalformedInputError(f"Value {value!r} is not an integer") from None
        if table[p.index()] < 0:
            raise MalformedInputError(f"Value {value!r} is negative")
    if (table < 0).any():
        window = SiteSet.of(sites)
        missing = Pattern.from_index(window, alphabet, int(np.flatnonzero(table < 0)[0]))
        raise MalformedInputError(f"Map is not total, no value for {missing}")
    return table


def partition_from_config(
    config: PartitionConfig,
    spec: GroupSpec,
    alphabet: Alphabet,
    budget: int = keys.DEFAULT_BUDGET,
) -> WindowPartition:
    """Build a window partition from its config, then apply the configured shift."""
    kind = config.kind.lower()
    if kind == keys.PRODUCT:
        window = SiteSet.of(sites_from_list(config.window, spec))
        P = product_partition(window, alphabet, budget)
    elif kind == keys.ALPHA_BALL:
        P = alpha_join_over_ball(alpha_partition(alphabet), config.n, spec, budget)
    elif kind == keys.PN:
        if spec.rank != 1 or not spec.is_group:
            raise InvalidParameterError("P_n partitions live on the rank one free group")
        P = pn_partition(config.n, alphabet)
    elif kind == keys.LABELED:
        listed = sites_from_list(config.window, spec)
        check_budget(f"partition on {len(listed)} sites", alphabet.size ** len(listed), budget)
        labels = table_from_pairs(config.map, listed, alphabet)
        P = labeled_partition(SiteSet.of(listed), alphabet, labels)
    else:
        raise MalformedInputError(f"Unknown partition kind {config.kind}")
    shift = parse_word(str(config.shift), spec)
    if shift.is_identity():
        return P
    return TranslateTransform(shift)(P)
