"""
Cross-checks of the exact search against brute force.

Usage:
    from src.campaigns.oracle import verify_oracle

    report = verify_oracle([3, 4, 5, 6], samples=1000, seed=0)
    print(report.summary())

Two experiments on seeded random 3-uniform assignments:
- exactness: the branch and bound lex-min coloring equals the minimum over
  every proper coloring, word and tie-break included
- local search: how often improve_to_local_min, started from a random
  proper coloring, ends on the exact lex-min word

The local-search fraction is recorded, not required to be 1.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..config import settings
from ..errors import InvalidParameter, Unsatisfiable
from ..prism.graph import Prism
from ..prism.lists import ListAssignment, random_uniform
from ..prism.textio import PrismDocument, format_document
from ..reductions.improve import improve_to_local_min
from ..solver.coloring import color_word
from ..solver.oracles import lexmin_by_enumeration
from ..solver.search import lexmin, solve_proper
from .equitable import item_seed
from .parallel import run_parallel

logger = logging.getLogger(__name__)

# stream of a trial seed that draws its starting coloring
LOCAL_STREAM = 1


@dataclass(frozen=True)
class Agreement:
    n: int
    index: int
    agrees: bool
    word: str = ""
    detail: str = ""


@dataclass(frozen=True)
class LocalTrial:
    index: int
    exact_word: str
    local_word: str

    @property
    def hit(self) -> bool:
        return self.exact_word == self.local_word


@dataclass
class ExactnessStats:
    n: int
    checked: int = 0
    mismatches: list[Agreement] = field(default_factory=list)


@dataclass
class OracleReport:
    samples: int
    seed: int
    universe: int
    exactness: list[ExactnessStats] = field(default_factory=list)
    local_n: int = 0
    max_width: int = 0
    local_trials: list[LocalTrial] = field(default_factory=list)
    complete: bool = True

    @property
    def local_hits(self) -> int:
        return sum(1 for t in self.local_trials if t.hit)

    @property
    def local_fraction(self) -> float:
        return self.local_hits / len(self.local_trials) if self.local_trials else 0.0

    @property
    def ok(self) -> bool:
        return (
            self.complete
            and bool(self.exactness)
            and all(s.checked > 0 and not s.mismatches for s in self.exactness)
        )

    def summary(self) -> str:
        lines = [
            "=" * 50,
            "LEX-MIN ORACLE CHECKS",
            "=" * 50,
            f"Samples: {self.samples} per prism (seed {self.seed}, universe {self.universe})",
        ]
        for s in self.exactness:
            lines.append(f"\nn={s.n}: {s.checked:,} assignments, {len(s.mismatches)} mismatches")
            for m in s.mismatches[:3]:
                lines.append("  ! " + m.detail.replace("\n", "\n    "))
        if self.local_trials:
            lines.extend([
                f"\nLocal search on n={self.local_n}, windows up to {self.max_width} rungs:",
                f"  {self.local_hits:,} of {len(self.local_trials):,} trials end on the exact word "
                f"({self.local_fraction:.2%})",
            ])
        if not self.complete:
            lines.append("\nCampaign stopped at its time limit; results are partial")
        lines.append(f"\n{'Branch and bound agrees with enumeration' if self.ok else 'Oracle check FAILED'}")
        return "\n".join(lines)

    def records(self) -> list[str]:
        out = []
        for s in self.exactness:
            out.append(f"oracle n={s.n} checked={s.checked} mismatches={len(s.mismatches)}")
            for m in s.mismatches:
                out.append(f"mismatch n={m.n} index={m.index}")
        if self.local_trials:
            out.append(
                f"local-min n={self.local_n} max_width={self.max_width} "
                f"trials={len(self.local_trials)} exact_word={self.local_hits} "
                f"fraction={self.local_fraction:.4f}"
            )
        out.append(f"complete={str(self.complete).lower()} ok={str(self.ok).lower()}")
        return out


def _witness(lists: ListAssignment) -> str:
    return format_document(PrismDocument(n=lists.n, lists=lists))


def agreement_item(args: tuple[int, int, int, int]) -> Agreement:
    """Compare branch and bound with enumeration on one seeded assignment."""
    n, index, universe, seed = args
    prism = Prism(n)
    lists = random_uniform(prism, 3, universe, seed)
    expected = lexmin_by_enumeration(prism, lists)
    try:
        result = lexmin(prism, lists)
    except Unsatisfiable:
        if expected is None:
            return Agreement(n, index, True, "UNSAT")
        return Agreement(n, index, False, detail=f"search found no coloring\n{_witness(lists)}")
    if expected is None:
        return Agreement(n, index, False, detail=f"search found a coloring of an UNSAT assignment\n{_witness(lists)}")
    if not result.exact or result.coloring != expected:
        detail = (
            f"search word {result.word} (exact={result.exact}) against "
            f"enumeration {color_word(expected)}\n{_witness(lists)}"
        )
        return Agreement(n, index, False, str(result.word), detail)
    return Agreement(n, index, True, str(result.word))


def local_trial(args: tuple[int, int, int, int, int]) -> LocalTrial:
    """Improve a random proper coloring and compare with the exact word."""
    n, index, universe, seed, max_width = args
    prism = Prism(n)
    lists = random_uniform(prism, 3, universe, seed)
    start = solve_proper(prism, lists, rng=np.random.default_rng([seed, LOCAL_STREAM]))
    if start is None:
        raise Unsatisfiable(f"no proper coloring to start from\n{_witness(lists)}")
    local = improve_to_local_min(prism, lists, start, max_width=max_width)
    exact = lexmin(prism, lists)
    return LocalTrial(index, str(exact.word), str(local.word))


def verify_oracle(
    n_values: list[int],
    samples: int,
    seed: int,
    universe: Optional[int] = None,
    local_n: int = 6,
    local_trials: Optional[int] = None,
    max_width: Optional[int] = None,
    jobs: int = 1,
    time_limit: Optional[float] = None,
    progress: bool = True,
) -> OracleReport:
    """Run both experiments; `local_trials=0` skips the local-search one."""
    universe = universe or settings.universe
    max_width = max_width or settings.window_width
    local_trials = samples if local_trials is None else local_trials
    too_large = [n for n in n_values if n > settings.enumeration_max_n]
    if too_large:
        raise InvalidParameter(
            f"enumeration is limited to n <= {settings.enumeration_max_n}, got {too_large}"
        )
    report = OracleReport(samples=samples, seed=seed, universe=universe)

    for n in n_values:
        tasks = [(n, i, universe, item_seed(seed, n, i)) for i in range(samples)]
        results, complete = run_parallel(
            agreement_item, tasks, jobs=jobs, time_limit=time_limit,
            desc=f"oracle n={n}", progress=progress,
        )
        stats = ExactnessStats(n=n, checked=len(results))
        stats.mismatches = [r for r in results if not r.agrees]
        report.exactness.append(stats)
        if stats.mismatches:
            logger.error("n=%d: %d lex-min mismatches", n, len(stats.mismatches))
        if not complete:
            report.complete = False
            return report

    if local_trials:
        report.local_n, report.max_width = local_n, max_width
        tasks = [
            (local_n, i, universe, item_seed(seed, local_n, i), max_width)
            for i in range(local_trials)
        ]
        report.local_trials, complete = run_parallel(
            local_trial, tasks, jobs=jobs, time_limit=time_limit,
            desc=f"local-min n={local_n}", progress=progress,
        )
        report.complete = complete
        logger.info(
            "local search: %d of %d trials end on the exact word",
            report.local_hits, len(report.local_trials),
        )
    return report
