"""
Configuration-freeness reports and six-rung counting.
"""

import logging
from dataclasses import dataclass, field
from typing import Mapping, Optional

from ..prism.graph import Prism, counting_identity, window_sums
from ..prism.lists import ListAssignment
from ..solver.coloring import Coloring, color_word
from .matching import Placement, find_matches, ranked_candidates
from .moves import apply_move
from .patterns import Configuration

logger = logging.getLogger(__name__)


@dataclass
class Hit:
    placement: Placement
    improved: Coloring


@dataclass
class ConfigReport:
    """Placements where a configuration matches and its move improves the coloring."""
    hits: list[Hit] = field(default_factory=list)
    matches: int = 0
    not_applicable: int = 0

    @property
    def clean(self) -> bool:
        return not self.hits

    def summary(self) -> str:
        lines = [
            f"Matches: {self.matches}",
            f"Not applicable: {self.not_applicable}",
            f"Improving placements: {len(self.hits)}",
        ]
        for hit in self.hits[:5]:
            lines.append(f"  {hit.placement} -> word {color_word(hit.improved)}")
        return "\n".join(lines)


def assert_config_free(
    prism: Prism,
    c: Coloring,
    lists: ListAssignment,
    configs: Mapping[str, Configuration],
    names: Optional[list[str]] = None,
) -> ConfigReport:
    """Report every placement whose move applies to c."""
    report = ConfigReport()
    for name in names or sorted(configs):
        for placement in find_matches(prism, c, configs[name]):
            report.matches += 1
            outcome = apply_move(prism, lists, c, placement, configs)
            if isinstance(outcome, Coloring):
                report.hits.append(Hit(placement, outcome))
            else:
                report.not_applicable += 1
    if report.hits:
        logger.debug("%d improving placements found", len(report.hits))
    return report


@dataclass
class SixRungCounts:
    window_counts: list[int]
    total: int
    identity_holds: bool

    @property
    def maximum(self) -> int:
        return max(self.window_counts)


def six_rung_counts(prism: Prism, c: Coloring, blue: int, red: int) -> SixRungCounts:
    """Red-or-blue vertices in each window of six rungs (the whole prism when n < 6)."""
    width = min(6, prism.n)
    indicator = [
        sum(1 for v in prism.rung(i) if c[v] in (blue, red)) for i in range(prism.n)
    ]
    return SixRungCounts(
        window_counts=window_sums(prism, indicator, width),
        total=sum(indicator),
        identity_holds=counting_identity(prism, indicator, width),
    )


def max_red_blue_in_six(prism: Prism, c: Coloring) -> int:
    """Largest red-or-blue count over six-rung windows, blue and red the two largest classes."""
    blue, red = ranked_candidates(c)[0]
    if red is None:
        red = blue
    return six_rung_counts(prism, c, blue, red).maximum
