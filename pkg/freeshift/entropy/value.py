import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple, Union

from freeshift import keys
from freeshift.utils.errors import InvalidParameterError

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class EntropyValue:
    """
    An entropy written exactly as sum_q c_q log q with rational c_q, shown in `unit`.
    Values of the same distribution built from the same reduced weights compare
    equal term by term, so identities between entropies are exact.
    """

    log_terms: Tuple[Tuple[int, Fraction], ...] = ()
    unit: str = keys.BITS

    def __post_init__(self) -> None:
        if self.unit not in keys.UNITS:
            raise InvalidParameterError(f"Unknown entropy unit {self.unit}")

    @classmethod
    def from_terms(cls, terms: Mapping[int, Fraction], unit: str = keys.BITS) -> "EntropyValue":
        normalized = tuple(sorted((q, Fraction(c)) for q, c in terms.items() if c != 0 and q != 1))
        return cls(normalized, unit)

    @classmethod
    def zero(cls, unit: str = keys.BITS) -> "EntropyValue":
        return cls((), unit)

    def terms(self) -> Dict[int, Fraction]:
        return dict(self.log_terms)

    @property
    def value(self) -> float:
        nats = math.fsum(float(c) * math.log(q) for q, c in self.log_terms)
        return nats / math.log(2) if self.unit == keys.BITS else nats

    @property
    def exact(self) -> Optional[Fraction]:
        """The value as a rational, when it is one in this unit."""
        if not self.log_terms:
            return Fraction(0)
        if self.unit == keys.BITS and len(self.log_terms) == 1 and self.log_terms[0][0] == 2:
            return self.log_terms[0][1]
        return None

    def to(self, unit: str) -> "EntropyValue":
        return EntropyValue(self.log_terms, unit)

    def _combine(self, other: "EntropyValue", sign: int) -> "EntropyValue":
        if not isinstance(other, EntropyValue):
            return NotImplemented
        terms = self.terms()
        for q, c in other.log_terms:
            terms[q] = terms.get(q, Fraction(0)) + sign * c
        return EntropyValue.from_terms(terms, self.unit)

    def __add__(self, other: "EntropyValue") -> "EntropyValue":
        return self._combine(other, 1)

    def __sub__(self, other: "EntropyValue") -> "EntropyValue":
        return self._combine(other, -1)

    def __mul__(self, scale: Scalar) -> "EntropyValue":
        if not isinstance(scale, (int, Fraction)):
            return NotImplemented
        return EntropyValue.from_terms({q: c * scale for q, c in self.log_terms}, self.unit)

    __rmul__ = __mul__

    def __neg__(self) -> "EntropyValue":
        return self * -1

    def __eq__(self, other: object) -> bool:
        # the unit only changes how the value is shown
        if not isinstance(other, EntropyValue):
            return NotImplemented
        return self.log_terms == other.log_terms

    def __hash__(self) -> int:
        return hash(self.log_terms)

    def le(self, other: "EntropyValue", tol: float = keys.ENTROPY_TOL) -> bool:
        """self <= other, exactly when both are rational, else up to `tol`."""
        a, b = self.to(keys.BITS), other.to(keys.BITS)
        if a.exact is not None and b.exact is not None:
            return a.exact <= b.exact
        return a.value <= b.value + tol

    def isclose(self, other: "EntropyValue", tol: float = keys.ENTROPY_TOL) -> bool:
        return self == other or abs(self.to(keys.BITS).value - other.to(keys.BITS).value) <= tol

    def render(self) -> str:
        """Exact rational when available, otherwise a decimal."""
        exact = self.exact
        return str(exact) if exact is not None else f"{self.value:.12f}"

    def __str__(self) -> str:
        return f"{self.render()} {self.unit}"

    def __repr__(self) -> str:
        return f"EntropyValue({self.render()} {self.unit})"
