from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Set, Tuple

import numpy as np

from freeshift import keys
from freeshift.data import Pattern
from freeshift.group import SiteSet, ball
from freeshift.measure import MeasureSpec, marginal_table

from .level import CodingLevel, GeneralCode, ball_code
from .markov import check_measure, enumerate_admissible, markovize

# configurations decoded per numpy batch
CHUNK_SIZE = 1 << 16


def coded_configurations(
    mu: MeasureSpec,
    code: GeneralCode,
    sites: SiteSet,
    budget: int = keys.DEFAULT_BUDGET,
) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
    """
    Every configuration y of positive measure on the dependence domain W D,
    in canonical order, batched: (indices of y, code values of y on `sites`).
    """
    domain = code.dependence_domain(sites)
    k = code.alphabet.size
    table = marginal_table(mu, domain, budget)
    positive = np.asarray(table.flat() != 0, dtype=bool)
    shape = (k,) * len(domain)
    width = len(code.window)
    reads = []
    for g in sites:
        axes = [domain.index(w * g) for w in code.window]
        weights = [k ** (width - 1 - i) for i in range(width)]
        reads.append(list(zip(axes, weights)))
    total = k ** len(domain)
    for start in range(0, total, CHUNK_SIZE):
        index = np.arange(start, min(start + CHUNK_SIZE, total), dtype=np.int64)
        index = index[positive[start : start + CHUNK_SIZE]]
        if index.size == 0:
            continue
        digits = np.unravel_index(index, shape) if shape else ()
        values = np.empty((index.size, len(sites)), dtype=np.int64)
        for column, read in enumerate(reads):
            code_index = np.zeros(index.size, dtype=np.int64)
            for axis, weight in read:
                code_index += digits[axis] * weight
            values[:, column] = code.table[code_index]
        yield index, values


def code_image(
    mu: MeasureSpec,
    code: GeneralCode,
    sites: SiteSet,
    budget: int = keys.DEFAULT_BUDGET,
) -> Set[Tuple[int, ...]]:
    """Values on `sites` of the code applied to every positive-measure configuration."""
    image: Set[Tuple[int, ...]] = set()
    for _, values in coded_configurations(mu, code, sites, budget):
        image.update(map(tuple, np.unique(values, axis=0).tolist()))
    return image


def image_oracle(
    mu: MeasureSpec,
    level: CodingLevel,
    m: int,
    budget: int = keys.DEFAULT_BUDGET,
) -> List[Pattern]:
    """{phi(y) on B(e,m) : y on B(e,m+n), mu(y) > 0}, canonical order."""
    check_measure(mu, level.spec, level.alphabet)
    sites = ball(level.spec, m)
    code = ball_code(level.spec, level.alphabet, level.n)
    image = code_image(mu, code, sites, budget)
    return [Pattern(sites, values, level.symbols) for values in sorted(image)]


@dataclass
class OracleComparison:
    m: int
    admissible_count: int
    image_count: int
    # samples of either difference, canonical order
    not_in_image: List[Pattern] = field(default_factory=list)
    not_admissible: List[Pattern] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return not self.not_in_image and not self.not_admissible


def compare_oracle(
    mu: MeasureSpec,
    level: CodingLevel,
    m: Optional[int] = None,
    budget: int = keys.DEFAULT_BUDGET,
    samples: int = 5,
) -> OracleComparison:
    """Both inclusions between the admissible patterns of the Markovization and the image of phi."""
    m = level.n if m is None else m
    ts = markovize(mu, level, budget)
    admitted = [z.values for z in enumerate_admissible(ts, level.spec, m, budget)]
    image = [p.values for p in image_oracle(mu, level, m, budget)]
    admitted_set, image_set = set(admitted), set(image)
    sites = ball(level.spec, m)
    not_in_image = [v for v in admitted if v not in image_set]
    not_admissible = [v for v in image if v not in admitted_set]
    return OracleComparison(
        m=m,
        admissible_count=len(admitted),
        image_count=len(image),
        not_in_image=[Pattern(sites, v, level.symbols) for v in not_in_image[:samples]],
        not_admissible=[Pattern(sites, v, level.symbols) for v in not_admissible[:samples]],
    )
