from .fmt_conversion import (
    partition_from_config,
    pattern_from_key,
    sites_from_list,
    table_from_pairs,
)
from .partition import (
    WindowPartition,
    alpha_join_over_ball,
    alpha_partition,
    join,
    labeled_partition,
    lift_array,
    lift_labels,
    pn_partition,
    power_of_a,
    product_partition,
    translate_array,
    translate_partition,
    trivial_partition,
)
from .pattern import (
    Alphabet,
    Pattern,
    enumerate_patterns,
    format_values,
    translate_pattern,
)
from .transform import SequentialTransform, Transform, TranslateTransform

__all__ = [
    "partition_from_config",
    "pattern_from_key",
    "sites_from_list",
    "table_from_pairs",
    "Alphabet",
    "Pattern",
    "enumerate_patterns",
    "format_values",
    "translate_pattern",
    "WindowPartition",
    "alpha_join_over_ball",
    "alpha_partition",
    "join",
    "labeled_partition",
    "lift_array",
    "lift_labels",
    "pn_partition",
    "power_of_a",
    "product_partition",
    "translate_array",
    "translate_partition",
    "trivial_partition",
    "Transform",
    "TranslateTransform",
    "SequentialTransform",
]
