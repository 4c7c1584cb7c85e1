"""
Equitable 3-choosability campaigns.

Usage:
    from src.campaigns.equitable import verify_equitable
    from src.campaigns.models import CampaignConfig

    report = verify_equitable(CampaignConfig(n_values=[4], samples=1000, seed=1))
    print(report.summary())

Every assignment is solved with equitable_coloring and the result is
re-checked as a BOUNDED certificate. Sample mode draws each assignment from
its own seed (campaign seed, n, index), so a report is reproducible and
independent of --jobs.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..errors import BudgetExceeded, Falsified, Unsatisfiable
from ..prism.graph import Prism
from ..prism.lists import ListAssignment, random_uniform
from ..prism.symmetry import CanonicalKey, assignment_from_key, canonical_form, canonical_keys
from ..prism.textio import PrismDocument, format_document
from ..solver.coloring import equitable_bound
from ..solver.equitable import equitable_coloring
from .certificates import Certificate, Verdict, check_certificate
from .models import CampaignConfig
from .parallel import run_parallel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WorkItem:
    n: int
    index: int
    k: int
    budget_nodes: int
    universe: int = 0
    seed: Optional[int] = None
    key: Optional[CanonicalKey] = None

    def assignment(self) -> ListAssignment:
        if self.key is not None:
            return assignment_from_key(self.n, self.key)
        return random_uniform(Prism(self.n), self.k, self.universe, self.seed)


@dataclass
class ItemResult:
    n: int
    index: int
    ok: bool
    bound: int
    largest: int = 0
    mode: str = ""
    nodes: int = 0
    orbit: Optional[CanonicalKey] = None
    error: str = ""
    witness: str = ""


def item_seed(seed: int, n: int, index: int) -> int:
    return int(np.random.SeedSequence([seed, n, index]).generate_state(1)[0])


def solve_item(item: WorkItem) -> ItemResult:
    """Solve and re-check one assignment; never raises for solver outcomes."""
    prism = Prism(item.n)
    lists = item.assignment()
    bound = equitable_bound(item.n, item.k)
    orbit = canonical_form(prism, lists) if item.key is None else item.key
    result = ItemResult(n=item.n, index=item.index, ok=False, bound=bound, orbit=orbit)
    try:
        found = equitable_coloring(prism, lists, bound=bound, budget_nodes=item.budget_nodes)
    except Falsified as e:
        result.error = f"Falsified: {e}"
        result.witness = e.assignment_text
        return result
    except (BudgetExceeded, Unsatisfiable) as e:
        result.error = f"{type(e).__name__}: {e}"
        result.witness = format_document(PrismDocument(n=item.n, lists=lists))
        return result

    cert = Certificate(f"EQUITABLE-N{item.n}-{item.index}", Verdict.BOUNDED, lists, found.coloring, bound)
    outcome = check_certificate(cert)
    result.ok = outcome.ok
    result.largest = found.word.largest
    result.mode = found.mode
    result.nodes = found.nodes
    if not outcome.ok:
        result.error = f"certificate check failed: {outcome.reason}"
        result.witness = cert.to_text()
    return result


@dataclass
class PrismStats:
    """Aggregate over every assignment tried on one prism."""
    n: int
    mode: str
    universe: int
    bound: int
    assignments: int = 0
    failures: list[ItemResult] = field(default_factory=list)
    max_class: int = 0
    modes: Counter = field(default_factory=Counter)
    orbits: int = 0
    nodes: int = 0

    @property
    def ok(self) -> bool:
        return self.assignments > 0 and not self.failures

    def add(self, result: ItemResult) -> None:
        self.assignments += 1
        self.nodes += result.nodes
        if result.ok:
            self.max_class = max(self.max_class, result.largest)
            self.modes[result.mode] += 1
        else:
            self.failures.append(result)


@dataclass
class EquitableReport:
    config: CampaignConfig
    stats: list[PrismStats] = field(default_factory=list)
    complete: bool = True

    @property
    def ok(self) -> bool:
        return self.complete and bool(self.stats) and all(s.ok for s in self.stats)

    def failures(self) -> list[ItemResult]:
        return [f for s in self.stats for f in s.failures]

    def summary(self) -> str:
        lines = ["=" * 50, "EQUITABLE 3-CHOOSABILITY", "=" * 50, self.config.describe()]
        for s in self.stats:
            kind = (
                f"exhaustive over canonical assignments, universe cap {s.universe}"
                if s.mode == "exhaustive"
                else f"sampled, universe {s.universe}"
            )
            modes = ", ".join(f"{m}={c}" for m, c in sorted(s.modes.items()))
            lines.extend([
                f"\nn={s.n} ({kind})",
                f"  Assignments: {s.assignments:,} ({s.orbits:,} orbits)",
                f"  Bound: {s.bound}, max class seen: {s.max_class}",
                f"  Modes: {modes or '-'}",
                f"  Failures: {len(s.failures)}",
            ])
            for failure in s.failures[:3]:
                lines.append(f"    #{failure.index}: {failure.error}")
        if not self.complete:
            lines.append("\nCampaign stopped at its time limit; results are partial")
        lines.append(f"\n{'All assignments verified' if self.ok else 'Verification FAILED'}")
        return "\n".join(lines)

    def records(self) -> list[str]:
        out = []
        for s in self.stats:
            out.append(
                f"n={s.n} mode={s.mode} universe={s.universe} assignments={s.assignments} "
                f"orbits={s.orbits} bound={s.bound} max_class={s.max_class} "
                f"failures={len(s.failures)} nodes={s.nodes}"
            )
            for failure in s.failures:
                out.append(f"failure n={s.n} index={failure.index} error={failure.error!r}")
        out.append(f"complete={str(self.complete).lower()} ok={str(self.ok).lower()}")
        return out


def _work_items(config: CampaignConfig, n: int) -> list[WorkItem]:
    if config.mode == "exhaustive":
        keys = canonical_keys(Prism(n), config.k, config.universe)
        return [
            WorkItem(n=n, index=i, k=config.k, budget_nodes=config.budget_nodes,
                     universe=config.universe, key=key)
            for i, key in enumerate(keys)
        ]
    return [
        WorkItem(n=n, index=i, k=config.k, budget_nodes=config.budget_nodes,
                 universe=config.universe, seed=item_seed(config.seed, n, i))
        for i in range(config.samples)
    ]


def verify_equitable(config: CampaignConfig, progress: bool = True) -> EquitableReport:
    report = EquitableReport(config=config)
    for n in config.n_values:
        items = _work_items(config, n)
        logger.info("n=%d: %d %s assignments", n, len(items), config.mode)
        results, complete = run_parallel(
            solve_item, items, jobs=config.jobs, time_limit=config.time_limit,
            desc=f"n={n}", progress=progress,
        )
        stats = PrismStats(
            n=n, mode=config.mode, universe=config.universe,
            bound=equitable_bound(n, config.k),
        )
        for result in results:
            stats.add(result)
        stats.orbits = len({r.orbit for r in results})
        report.stats.append(stats)
        if stats.failures:
            logger.error("n=%d: %d failures", n, len(stats.failures))
        if not complete:
            report.complete = False
            break
    return report
