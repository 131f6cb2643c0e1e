from .entropy import run_counterexample, run_entropy, run_fseq
from .group import run_ball
from .markov import run_admissible, run_markovize, run_validate
from .verify import run_gap, run_oracle, run_verify

__all__ = [
    "run_ball",
    "run_validate",
    "run_markovize",
    "run_admissible",
    "run_verify",
    "run_oracle",
    "run_gap",
    "run_entropy",
    "run_fseq",
    "run_counterexample",
]
