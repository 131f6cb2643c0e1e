import math
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Any, Dict, Iterable, List

from sympy import factorint

from .errors import BudgetExceededError, InvalidInputError


def parse_rational(value: Any) -> Fraction:
    """
    Parse a probability written as `"a/b"`, `"a"` or an exact decimal string.
    Integers are accepted, floats are not (they are already rounded).
    """
    if isinstance(value, bool):
        raise InvalidInputError(f"Invalid rational {value!r}")
    if isinstance(value, int):
        q = Fraction(value)
    elif isinstance(value, Fraction):
        q = value
    elif isinstance(value, str):
        try:
            q = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidInputError(f"Invalid rational {value!r}") from None
    else:
        raise InvalidInputError(
            f"Rationals must be strings like \"1/2\", got {type(value).__name__} {value!r}"
        )
    if q < 0:
        raise InvalidInputError(f"Negative probability {value!r}")
    return q


def parse_rational_vector(values: Iterable[Any]) -> List[Fraction]:
    return [parse_rational(v) for v in values]


def check_budget(what: str, required: int, budget: int) -> None:
    if required > budget:
        raise BudgetExceededError(what, required=required, limit=budget)


def common_denominator(values: Iterable[Fraction]) -> int:
    return reduce(math.lcm, (q.denominator for q in values), 1)


# factors above this bound may be left as composite cofactors
FACTOR_LIMIT = 1 << 20


@lru_cache(maxsize=4096)
def prime_factors(n: int) -> Dict[int, int]:
    """
    Factorization of a positive integer, cached. Every base is prime unless a
    cofactor has no factor below `FACTOR_LIMIT`; the result is deterministic.
    """
    if n < 1:
        raise ValueError(f"Cannot factor {n}")
    return dict(factorint(n, limit=FACTOR_LIMIT))
