from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from freeshift import keys
from freeshift.data import Pattern
from freeshift.group import SiteSet, Word, ball, geodesic_suffixes
from freeshift.measure import MeasureSpec, TransitionSystem
from freeshift.utils.errors import BudgetExceededError, InvalidParameterError

from .level import CodingLevel
from .markov import count_search_nodes, enumerate_admissible, enumerate_admissible_on, markovize

# violations kept in a report, the count is always complete
MAX_VIOLATIONS = 20


@dataclass(frozen=True)
class OverlapChain:
    """
    Along the geodesic e = f_{m+1}, ..., f_1 = f, whether the maps
    z_i(h f_i) = z(f_i)(h) on B(f_i, n) agree on each overlap with the next one.
    """

    f: Word
    links: Tuple[bool, ...]

    @property
    def consistent(self) -> bool:
        return all(self.links)


def _left_ball_map(z: Pattern, site: Word, level: CodingLevel) -> Dict[Word, int]:
    symbol = z[site]
    return {h * site: level.coordinate(symbol, h) for h in level.ball}


def overlap_chain(z: Pattern, f: Word, level: CodingLevel) -> OverlapChain:
    chain = list(reversed(geodesic_suffixes(f)))  # e first
    links = []
    for inner, outer in zip(chain, chain[1:]):
        a = _left_ball_map(z, inner, level)
        b = _left_ball_map(z, outer, level)
        links.append(all(a[u] == b[u] for u in a.keys() & b.keys()))
    return OverlapChain(f, tuple(links))


@dataclass(frozen=True)
class ReconstructionViolation:
    pattern: Pattern
    site: Word
    found: int  # z(f)(e)
    expected: int  # z(e)(f)
    chain: OverlapChain


@dataclass
class ReconstructionReport:
    n: int
    strategy: str
    # patterns checked at each completed sub-radius k = 0, 1, ...
    checked_by_radius: List[int] = field(default_factory=list)
    violation_count: int = 0
    violations: List[ReconstructionViolation] = field(default_factory=list)

    @property
    def completed_radius(self) -> int:
        return len(self.checked_by_radius) - 1

    @property
    def patterns_checked(self) -> int:
        return self.checked_by_radius[-1] if self.checked_by_radius else 0

    @property
    def passed(self) -> bool:
        return self.violation_count == 0


def _check_sites(
    report: ReconstructionReport,
    z: Pattern,
    sites: Iterable[Word],
    level: CodingLevel,
) -> None:
    root = z.values[0]
    for f in sites:
        found = level.root_value(z[f])
        expected = level.coordinate(root, f)
        if found != expected:
            report.violation_count += 1
            if len(report.violations) < MAX_VIOLATIONS:
                report.violations.append(
                    ReconstructionViolation(z, f, found, expected, overlap_chain(z, f, level))
                )


def resolve_strategy(
    strategy: str,
    ts: TransitionSystem,
    level: CodingLevel,
    budget: int,
) -> str:
    if strategy not in keys.STRATEGIES:
        raise InvalidParameterError(f"Unknown strategy {strategy}")
    if strategy != keys.AUTO:
        return strategy
    # the exhaustive walk of the last sub-radius visits the most nodes
    nodes = count_search_nodes(ts, level.spec, ball(level.spec, level.n), limit=budget)
    if nodes <= budget:
        return keys.EXHAUSTIVE
    return keys.GEODESIC


def check_reconstruction(
    mu: MeasureSpec,
    level: CodingLevel,
    strategy: str = keys.AUTO,
    budget: int = keys.DEFAULT_BUDGET,
    ts: Optional[TransitionSystem] = None,
) -> ReconstructionReport:
    """
    Check z(f)(e) = z(e)(f) for every admissible z of the Markovization and every
    f in the ball, for sub-radii k = 0..n.

    `exhaustive` walks every admissible pattern on B(e,k). `geodesic` walks every
    admissible pattern on each geodesic from e to f, which covers the same
    values since admissible patterns on a rooted subtree extend to the ball.
    """
    ts = markovize(mu, level, budget) if ts is None else ts
    strategy = resolve_strategy(strategy, ts, level, budget)
    report = ReconstructionReport(n=level.n, strategy=strategy)
    for k in range(level.n + 1):
        checked = 0
        try:
            if strategy == keys.EXHAUSTIVE:
                sites = ball(level.spec, k)
                for z in enumerate_admissible(ts, level.spec, k, budget):
                    _check_sites(report, z, sites, level)
                    checked += 1
            else:
                for f in ball(level.spec, k):
                    path = SiteSet(geodesic_suffixes(f))
                    for z in enumerate_admissible_on(ts, level.spec, path, budget):
                        _check_sites(report, z, [f], level)
                        checked += 1
        except BudgetExceededError as err:
            raise BudgetExceededError(
                f"reconstruction check at sub-radius {k}",
                err.required,
                err.limit,
                partial=report.completed_radius,
            ) from err
        report.checked_by_radius.append(checked)
    return report
