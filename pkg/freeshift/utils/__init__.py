from .config import (
    CodeConfig,
    GroupConfig,
    MeasureConfig,
    PartitionConfig,
    RunConfig,
    check_run_config,
    load_config,
)
from .errors import (
    BudgetExceededError,
    FreeShiftError,
    InvalidInputError,
)
from .functional import check_budget, parse_rational, parse_rational_vector
from .logger import RunLogger

__all__ = [
    "CodeConfig",
    "GroupConfig",
    "MeasureConfig",
    "PartitionConfig",
    "RunConfig",
    "check_run_config",
    "load_config",
    "BudgetExceededError",
    "FreeShiftError",
    "InvalidInputError",
    "check_budget",
    "parse_rational",
    "parse_rational_vector",
    "RunLogger",
]
