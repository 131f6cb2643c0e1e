from .measures import (
    Bernoulli,
    MeasureSpec,
    TreeMarkov,
    WeightTable,
    ball_extension_marginal,
    ball_product,
    label_weights,
    marginal,
    marginal_table,
    partition_distribution,
    resolve_measure,
    rooted_marginal,
)
from .transition import (
    StochasticMatrix,
    TransitionSystem,
    ValidationReport,
    reversed_matrix,
    validate,
)

__all__ = [
    "Bernoulli",
    "MeasureSpec",
    "TreeMarkov",
    "WeightTable",
    "ball_extension_marginal",
    "ball_product",
    "label_weights",
    "marginal",
    "marginal_table",
    "partition_distribution",
    "resolve_measure",
    "rooted_marginal",
    "StochasticMatrix",
    "TransitionSystem",
    "ValidationReport",
    "reversed_matrix",
    "validate",
]
