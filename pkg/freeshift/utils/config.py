import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Type, TypeVar, cast

import yaml
from omegaconf import OmegaConf
from omegaconf.errors import OmegaConfBaseException

from freeshift import keys

from .errors import InvalidInputError

T = TypeVar("T")


@dataclass
class GroupConfig:
    """Config for the acting group"""

    rank: int = 1
    mode: str = keys.GROUP


@dataclass
class MeasureConfig:
    """Config for the shift-invariant measure"""

    type: str = keys.BERNOULLI
    # Bernoulli base distribution
    p: List[Any] = field(default_factory=lambda: ["1/2", "1/2"])
    # tree-Markov vertex distribution and per-generator matrices, e.g. {a: [[...]], A: [[...]]}
    pi: Optional[List[Any]] = None
    matrices: Dict[str, Any] = field(default_factory=dict)


@dataclass
class RunConfig:
    """Config for one computation"""

    group: GroupConfig = field(default_factory=GroupConfig)
    alphabet: int = 2
    measure: MeasureConfig = field(default_factory=MeasureConfig)
    n: int = 1
    m: Optional[int] = None
    budget: int = keys.DEFAULT_BUDGET
    unit: str = keys.BITS
    strategy: str = keys.AUTO


@dataclass
class CodeConfig:
    """Config for a sliding block code"""

    window: List[str] = field(default_factory=lambda: [keys.IDENTITY])
    target_size: int = 2
    # pairs [pattern on window (one digit per site, in listed order), target symbol]
    map: List[Any] = field(default_factory=list)


@dataclass
class PartitionConfig:
    """Config for a window partition"""

    kind: str = keys.PRODUCT
    window: List[str] = field(default_factory=lambda: [keys.IDENTITY])
    # radius for `alpha_ball` and `pn`
    n: int = 0
    # right translate applied after construction
    shift: str = keys.IDENTITY
    # pairs [pattern on window, label] for `labeled`
    map: List[Any] = field(default_factory=list)


def load_config(schema: Type[T], path: Optional[str]) -> T:
    """Merge a JSON/YAML file onto the structured defaults of `schema`."""
    if path is None:
        raise InvalidInputError(f"A config file is required for {schema.__name__}")
    if not os.path.isfile(path):
        raise InvalidInputError(f"Config file {path} not found")
    try:
        config = OmegaConf.merge(
            OmegaConf.structured(schema),
            OmegaConf.load(path),
        )
        # plain dataclass from here on, so nested lists are ordinary python lists
        config = OmegaConf.to_object(config)
    except (OmegaConfBaseException, yaml.YAMLError) as err:
        raise InvalidInputError(f"Invalid config file {path}: {err}") from None
    # this will do nothing, only for type annotation
    return cast(T, config)


def check_run_config(config: RunConfig) -> None:
    if config.group.mode not in keys.GROUP_MODES:
        raise InvalidInputError(f"Unknown group mode {config.group.mode}")
    if not 1 <= config.group.rank <= keys.MAX_RANK:
        raise InvalidInputError(
            f"Rank must be in [1, {keys.MAX_RANK}], got {config.group.rank}"
        )
    if config.alphabet < 1:
        raise InvalidInputError(f"Alphabet size must be positive, got {config.alphabet}")
    if config.n < 0:
        raise InvalidInputError(f"Level n must be nonnegative, got {config.n}")
    if config.m is not None and config.m < 0:
        raise InvalidInputError(f"Radius m must be nonnegative, got {config.m}")
    if config.budget < 1:
        raise InvalidInputError(f"Budget must be at least 1, got {config.budget}")
    if config.unit not in keys.UNITS:
        raise InvalidInputError(f"Unknown unit {config.unit}")
    if config.strategy not in keys.STRATEGIES:
        raise InvalidInputError(f"Unknown strategy {config.strategy}")
    if config.measure.type not in keys.MEASURE_TYPES:
        raise InvalidInputError(f"Unknown measure type {config.measure.type}")
