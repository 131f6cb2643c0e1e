from .gap import GapReport, preimage_search, support_gap_search
from .level import CodingLevel, GeneralCode, ball_code, code_from_config, phi, psi, slide
from .markov import (
    admissible,
    check_measure,
    count_admissible,
    count_admissible_on,
    count_search_nodes,
    enumerate_admissible,
    enumerate_admissible_on,
    markovize,
    pushforward_system,
)
from .oracle import OracleComparison, code_image, compare_oracle, image_oracle
from .reconstruction import (
    OverlapChain,
    ReconstructionReport,
    ReconstructionViolation,
    check_reconstruction,
    overlap_chain,
)

__all__ = [
    "CodingLevel",
    "GeneralCode",
    "ball_code",
    "code_from_config",
    "phi",
    "psi",
    "slide",
    "admissible",
    "check_measure",
    "count_admissible",
    "count_admissible_on",
    "count_search_nodes",
    "enumerate_admissible",
    "enumerate_admissible_on",
    "markovize",
    "pushforward_system",
    "OracleComparison",
    "code_image",
    "compare_oracle",
    "image_oracle",
    "OverlapChain",
    "ReconstructionReport",
    "ReconstructionViolation",
    "check_reconstruction",
    "overlap_chain",
    "GapReport",
    "preimage_search",
    "support_gap_search",
]
