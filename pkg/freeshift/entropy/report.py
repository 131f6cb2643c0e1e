from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from freeshift import keys
from freeshift.data import Alphabet, alpha_partition, join, pn_partition, translate_partition
from freeshift.group import GroupSpec, Word
from freeshift.measure import Bernoulli
from freeshift.utils.errors import InvalidParameterError

from .entropy import F_quantity, cond_entropy, f_sequence, is_stabilized, partition_entropy
from .value import EntropyValue


@dataclass(frozen=True)
class EntropyRow:
    n: int
    h_pn: EntropyValue
    h_shifted: EntropyValue  # H(T^-1 P_n)
    h_join: EntropyValue
    h_cond: EntropyValue
    f_pn: EntropyValue

    def as_dict(self) -> Dict[str, str]:
        return {
            "n": str(self.n),
            "h_pn": self.h_pn.render(),
            "h_join": self.h_join.render(),
            "h_cond": self.h_cond.render(),
            "f_pn": self.f_pn.render(),
        }


@dataclass
class EntropyReport:
    unit: str
    rows: List[EntropyRow] = field(default_factory=list)
    # F(alpha^m), m = 0..n_max
    f_values: List[EntropyValue] = field(default_factory=list)

    @property
    def stabilized(self) -> bool:
        return is_stabilized(self.f_values)

    @property
    def h(self) -> EntropyValue:
        """Entropy of the shift, read off the stabilized f-sequence."""
        return self.f_values[-1]

    @property
    def liminf_f(self) -> EntropyValue:
        # every row has the same F(P_n)
        return self.rows[-1].f_pn

    @property
    def verdict(self) -> str:
        relation = "=" if self.liminf_f == self.h else "≠"
        return (
            f"liminf F(P_n) = {self.liminf_f.render()} {relation} "
            f"{self.h.render()} = f(alpha) [{self.unit}]"
        )


def counterexample_report(
    n_max: int,
    unit: str = keys.BITS,
    budget: int = keys.DEFAULT_BUDGET,
) -> EntropyReport:
    """
    Entropies of P_n and T^-1 P_n under the fair binary Bernoulli shift of Z,
    n = 1..n_max, against the f-sequence of the time-zero partition.
    """
    if n_max < 1:
        raise InvalidParameterError(f"n_max must be at least 1, got {n_max}")
    spec = GroupSpec(rank=1, mode=keys.GROUP)
    alphabet = Alphabet(2)
    mu = Bernoulli((Fraction(1, 2), Fraction(1, 2)))
    report = EntropyReport(unit=unit)
    for n in range(1, n_max + 1):
        pn = pn_partition(n, alphabet)
        shifted = translate_partition(pn, Word((-1,)))
        h_shifted = partition_entropy(mu, shifted, unit, budget)
        h_join = partition_entropy(mu, join(shifted, pn, budget), unit, budget)
        h_cond = cond_entropy(mu, pn, shifted, unit, budget)
        assert h_cond == h_join - h_shifted, f"H(P_n | T^-1 P_n) != H(join) - H(T^-1 P_n) at n={n}"
        f_pn = F_quantity(mu, pn, spec, unit, budget)
        assert f_pn == h_cond, f"F(P_n) = {f_pn} but H(P_n | T^-1 P_n) = {h_cond} at n={n}"
        report.rows.append(
            EntropyRow(
                n=n,
                h_pn=partition_entropy(mu, pn, unit, budget),
                h_shifted=h_shifted,
                h_join=h_join,
                h_cond=h_cond,
                f_pn=f_pn,
            )
        )
    report.f_values = f_sequence(mu, alpha_partition(alphabet), spec, n_max, unit, budget)
    return report
