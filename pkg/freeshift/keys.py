from typing import Dict, Final, Set

# group modes
GROUP: Final[str] = "group"
SEMIGROUP: Final[str] = "semigroup"
GROUP_MODES: Final[Set[str]] = {GROUP, SEMIGROUP}

# word notation, `e` is reserved for the identity
IDENTITY: Final[str] = "e"
GENERATOR_LETTERS: Final[str] = "abcdfghijklmnopqrstuvwxyz"
MAX_RANK: Final[int] = len(GENERATOR_LETTERS)

# measure types
BERNOULLI: Final[str] = "bernoulli"
TREE_MARKOV: Final[str] = "tree_markov"
MEASURE_TYPES: Final[Set[str]] = {BERNOULLI, TREE_MARKOV}

# entropy units
BITS: Final[str] = "bits"
NATS: Final[str] = "nats"
UNITS: Final[Set[str]] = {BITS, NATS}

# partition kinds in partition files
PRODUCT: Final[str] = "product"
ALPHA_BALL: Final[str] = "alpha_ball"
PN: Final[str] = "pn"
LABELED: Final[str] = "labeled"
PARTITION_KINDS: Final[Set[str]] = {PRODUCT, ALPHA_BALL, PN, LABELED}

# reconstruction strategies
AUTO: Final[str] = "auto"
EXHAUSTIVE: Final[str] = "exhaustive"
GEODESIC: Final[str] = "geodesic"
STRATEGIES: Final[Set[str]] = {AUTO, EXHAUSTIVE, GEODESIC}

# enumeration budget (visited nodes / table cells)
DEFAULT_BUDGET: Final[int] = 10_000_000

# float tolerance for inexact entropies, in bits
ENTROPY_TOL: Final[float] = 1e-12

# exit codes
EXIT_OK: Final[int] = 0
EXIT_FOUND: Final[int] = 1
EXIT_INVALID: Final[int] = 2
EXIT_BUDGET: Final[int] = 3

# table headers
COUNTEREXAMPLE_COLUMNS: Final[Dict[str, str]] = {
    "n": "n",
    "h_pn": "H_Pn",
    "h_join": "H_join",
    "h_cond": "H_cond",
    "f_pn": "F_Pn",
}
