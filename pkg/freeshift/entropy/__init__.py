from .entropy import (
    F_quantity,
    cond_entropy,
    f_sequence,
    is_stabilized,
    mutual_information,
    partition_entropy,
    shannon,
    shannon_weights,
)
from .report import EntropyReport, EntropyRow, counterexample_report
from .value import EntropyValue

__all__ = [
    "EntropyValue",
    "F_quantity",
    "cond_entropy",
    "f_sequence",
    "is_stabilized",
    "mutual_information",
    "partition_entropy",
    "shannon",
    "shannon_weights",
    "EntropyReport",
    "EntropyRow",
    "counterexample_report",
]
