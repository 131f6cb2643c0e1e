from dataclasses import dataclass
from typing import Optional

import numpy as np

from freeshift import keys
from freeshift.data import Pattern
from freeshift.group import GroupSpec, ball
from freeshift.measure import MeasureSpec, TransitionSystem
from freeshift.utils.errors import BudgetExceededError, InvalidParameterError

from .level import GeneralCode
from .markov import enumerate_admissible, pushforward_system
from .oracle import code_image, coded_configurations


def preimage_search(
    mu: MeasureSpec,
    code: GeneralCode,
    p: Pattern,
    budget: int = keys.DEFAULT_BUDGET,
) -> Optional[Pattern]:
    """The first configuration of positive measure on W D coding to p, if any."""
    target = np.asarray(p.values, dtype=np.int64)
    domain = code.dependence_domain(p.domain)
    for index, values in coded_configurations(mu, code, p.domain, budget):
        hits = np.flatnonzero((values == target).all(axis=1))
        if hits.size:
            return Pattern.from_index(domain, code.alphabet, int(index[hits[0]]))
    return None


@dataclass
class GapReport:
    m_max: int
    # largest radius whose comparison finished
    searched_radius: int
    ts: TransitionSystem
    witness: Optional[Pattern] = None

    @property
    def found(self) -> bool:
        return self.witness is not None

    @property
    def witness_radius(self) -> Optional[int]:
        return self.witness.domain.max_length() if self.witness is not None else None


def support_gap_search(
    mu: MeasureSpec,
    code: GeneralCode,
    spec: GroupSpec,
    m_max: int,
    budget: int = keys.DEFAULT_BUDGET,
) -> GapReport:
    """
    Look for a pattern admissible for the level-0 Markovization of the pushforward
    of mu but outside the image of the code, on B(e,m) for m = 1..m_max. The
    witness is the first such pattern in canonical order at the smallest m.
    """
    if m_max < 1:
        raise InvalidParameterError(f"m_max must be at least 1, got {m_max}")
    ts = pushforward_system(mu, code, spec, budget)
    report = GapReport(m_max=m_max, searched_radius=0, ts=ts)
    for m in range(1, m_max + 1):
        try:
            image = code_image(mu, code, ball(spec, m), budget)
            for z in enumerate_admissible(ts, spec, m, budget):
                if z.values not in image:
                    assert preimage_search(mu, code, z, budget) is None, (
                        f"Gap witness {z} has a preimage"
                    )
                    report.witness = z
                    return report
        except BudgetExceededError as err:
            raise BudgetExceededError(
                f"support gap search at m={m}", err.required, err.limit, partial=report
            ) from err
        report.searched_radius = m
    return report
