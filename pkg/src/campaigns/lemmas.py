"""
Lemma suite for one prism size, plus the charge-identity sweep.

Groups:
- fewer-than-four-colors: lex-min colorings are proper, bounded, admit no
  unused-color recoloring, and a coloring with at most three colors is bounded
- move-soundness: every configuration's move on planted fixtures gives a
  proper list coloring with a smaller word; lex-min colorings admit no move
- six-rung-counting: window counts of red-or-blue vertices sum to six times
  the total
- block-decomposition: blocks partition the rungs under both attributions
- discharging: charge totals, rule conservation and the block-charge table
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..config import settings
from ..errors import (
    BlueRunTooLong,
    BudgetExceeded,
    IdentityViolation,
    InvalidParameter,
    MoveError,
    Unsatisfiable,
)
from ..discharging.charge import Charge, total
from ..discharging.ledger import (
    apply_rules,
    audit,
    blue_count,
    expected_total,
    face_charge,
    table_rows,
    total_charge,
    vertex_charge,
)
from ..prism.graph import Prism
from ..prism.lists import ListAssignment, random_uniform
from ..prism.textio import PrismDocument, format_document
from ..reductions.blocks import Attribution, BlockKind, BlockSequence, block_decompose, blue_rungs
from ..reductions.fixtures import plant_fixture
from ..reductions.matching import ranked_candidates
from ..reductions.moves import NotApplicable, apply_move
from ..reductions.patterns import Configuration, load_configurations
from ..reductions.report import assert_config_free, six_rung_counts
from ..solver.coloring import (
    Coloring,
    color_word,
    equitable_bound,
    is_bounded,
    is_list_coloring,
    unused_color_move,
    uses_fewer_than_four_colors,
)
from ..solver.search import lexmin
from .equitable import item_seed
from .parallel import run_parallel

logger = logging.getLogger(__name__)

# configurations whose class-size guards are met by every planted fixture
ALWAYS_APPLICABLE = ("F1", "F2")


@dataclass
class GroupResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures

    def fail(self, message: str, witness: str = "") -> None:
        self.failures.append(f"{message}\n{witness}" if witness else message)


@dataclass
class LemmaReport:
    n: int
    samples: int
    seed: int
    groups: list[GroupResult] = field(default_factory=list)
    exact: int = 0
    inexact: int = 0

    @property
    def ok(self) -> bool:
        return bool(self.groups) and all(g.ok for g in self.groups)

    def summary(self) -> str:
        lines = [
            "=" * 50,
            f"LEMMA SUITE n={self.n}",
            "=" * 50,
            f"Samples: {self.samples} (seed {self.seed}), exact lex-min: {self.exact}, "
            f"inexact: {self.inexact}",
        ]
        for g in self.groups:
            status = "pass" if g.ok else f"FAIL ({len(g.failures)})"
            lines.append(f"\n[{status}] {g.name}: {g.checked} checks")
            lines.extend(f"  {note}" for note in g.notes)
            for failure in g.failures[:3]:
                lines.append("  ! " + failure.replace("\n", "\n    "))
        lines.append(f"\n{'All groups pass' if self.ok else 'Lemma suite FAILED'}")
        return "\n".join(lines)

    def records(self) -> list[str]:
        out = [f"n={self.n} samples={self.samples} seed={self.seed} exact={self.exact} inexact={self.inexact}"]
        for g in self.groups:
            out.append(
                f"group={g.name} checks={g.checked} failures={len(g.failures)} ok={str(g.ok).lower()}"
            )
        out.append(f"ok={str(self.ok).lower()}")
        return out


@dataclass(frozen=True)
class Sample:
    lists: ListAssignment
    coloring: Optional[Coloring]
    exact: bool
    error: str = ""


def _witness(lists: ListAssignment, c: Optional[Coloring] = None) -> str:
    doc = PrismDocument(n=lists.n, lists=lists, colors=c.colors if c is not None else None)
    return format_document(doc)


def lexmin_sample(args: tuple[int, int, int, int]) -> Sample:
    n, universe, seed, budget_nodes = args
    prism = Prism(n)
    lists = random_uniform(prism, 3, universe, seed)
    try:
        result = lexmin(prism, lists, budget_nodes=budget_nodes, refine=False)
    except (BudgetExceeded, Unsatisfiable) as e:
        return Sample(lists, None, False, f"{type(e).__name__}: {e}")
    return Sample(lists, result.coloring, result.exact)


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------

def check_few_colors(prism: Prism, samples: list[Sample]) -> GroupResult:
    group = GroupResult("fewer-than-four-colors")
    bound = equitable_bound(prism.n)
    few = 0
    for sample in samples:
        c, lists = sample.coloring, sample.lists
        group.checked += 1
        if not is_list_coloring(prism, lists, c):
            group.fail("lex-min coloring is not a proper list coloring", _witness(lists, c))
            continue
        if not is_bounded(c, bound):
            group.fail(f"lex-min coloring is not {bound}-bounded", _witness(lists, c))
        if unused_color_move(lists, c) is not None:
            group.fail("an unused list color gives a smaller word", _witness(lists, c))
        if uses_fewer_than_four_colors(c):
            few += 1
    group.notes.append(f"{few} lex-min colorings use at most three colors")
    return group


def _fixture_size(config: Configuration, n: int) -> Optional[int]:
    if config.order is not None or n < config.width + 2:
        return None
    return n


def check_move_soundness(
    prism: Prism,
    samples: list[Sample],
    seed: int,
    fixtures_per_config: int,
    configs: dict[str, Configuration],
) -> GroupResult:
    group = GroupResult("move-soundness")
    for idx, name in enumerate(sorted(configs)):
        config = configs[name]
        rng = np.random.default_rng([seed, prism.n, idx])
        applied = 0
        for _ in range(fixtures_per_config):
            try:
                fx = plant_fixture(config, rng, n=_fixture_size(config, prism.n))
            except BudgetExceeded as e:
                group.fail(f"{name}: {e}")
                break
            group.checked += 1
            try:
                outcome = apply_move(fx.prism, fx.lists, fx.coloring, fx.placement, configs)
            except MoveError as e:
                group.fail(f"{name}: {e}", _witness(fx.lists, fx.coloring))
                continue
            if isinstance(outcome, NotApplicable):
                if name in ALWAYS_APPLICABLE:
                    group.fail(f"{name}: not applicable ({outcome.reason})", _witness(fx.lists, fx.coloring))
                continue
            applied += 1
            if not is_list_coloring(fx.prism, fx.lists, outcome):
                group.fail(f"{name}: move result is not a proper list coloring", _witness(fx.lists, outcome))
            elif not color_word(outcome) < color_word(fx.coloring):
                group.fail(
                    f"{name}: word {color_word(outcome)} is not below {color_word(fx.coloring)}",
                    _witness(fx.lists, fx.coloring),
                )
            elif config.order is not None and not is_bounded(outcome, equitable_bound(config.order)):
                group.fail(f"{name}: result is not {equitable_bound(config.order)}-bounded")
        if applied == 0:
            group.fail(f"{name}: no planted fixture admitted a move")
        group.notes.append(f"{name}: {applied}/{fixtures_per_config} fixtures improved")

    free = 0
    names = sorted(key for key, cfg in configs.items() if cfg.order in (None, prism.n))
    for sample in samples:
        group.checked += 1
        try:
            report = assert_config_free(prism, sample.coloring, sample.lists, configs, names)
        except MoveError as e:
            group.fail(f"move failed on a lex-min coloring: {e}", _witness(sample.lists, sample.coloring))
            continue
        if report.clean:
            free += 1
        else:
            group.fail(
                f"lex-min coloring admits {len(report.hits)} improving moves",
                _witness(sample.lists, sample.coloring),
            )
    group.notes.append(f"{free} lex-min colorings admit no move")
    return group


def check_six_rung_counts(prism: Prism, samples: list[Sample]) -> GroupResult:
    group = GroupResult("six-rung-counting")
    largest = 0
    for sample in samples:
        blue, red = ranked_candidates(sample.coloring)[0]
        counts = six_rung_counts(prism, sample.coloring, blue, blue if red is None else red)
        group.checked += 1
        if not counts.identity_holds:
            group.fail("window counts do not sum to six times the total", _witness(sample.lists, sample.coloring))
        largest = max(largest, counts.maximum)
    group.notes.append(f"largest red-or-blue count in six rungs: {largest}")
    return group


def _partition_errors(prism: Prism, c: Coloring, blue: int, blocks: BlockSequence) -> list[str]:
    errors = []
    rungs = sorted(r for b in blocks.blocks for r in b.rungs)
    if rungs != list(range(prism.n)):
        errors.append(f"{blocks.attribution.value} blocks do not partition the rungs")
    flags = blue_rungs(prism, c, blue)
    for b in blocks.blocks:
        if sum(flags[r] for r in b.rungs) != int(b.kind):
            errors.append(f"{b.kind} block over rungs {b.rungs} has the wrong blue count")
    return errors


def check_block_decomposition(prism: Prism, samples: list[Sample]) -> GroupResult:
    group = GroupResult("block-decomposition")
    decomposed = 0
    for sample in samples:
        c = sample.coloring
        blue = ranked_candidates(c)[0][0]
        group.checked += 1
        try:
            sequences = [block_decompose(prism, c, blue, a) for a in Attribution]
        except BlueRunTooLong:
            continue
        decomposed += 1
        for blocks in sequences:
            for error in _partition_errors(prism, c, blue, blocks):
                group.fail(error, _witness(sample.lists, c))
    group.notes.append(
        f"{decomposed}/{len(samples)} decomposed; the rest have a blue run of four or more"
    )
    return group


def check_discharging(
    prism: Prism, samples: list[Sample], rng: np.random.Generator, sequences: int
) -> GroupResult:
    group = GroupResult("discharging")

    for row in table_rows():
        group.checked += 1
        if not row.matches:
            group.fail(f"block table mismatch: {row}")

    for _ in range(sequences):
        length = int(rng.integers(1, 12))
        kinds = [BlockKind(int(k)) for k in rng.integers(0, 4, size=length)]
        charges = [Charge(int(x)) for x in rng.integers(-30, 30, size=length)]
        group.checked += 1
        if total(apply_rules(kinds, charges).final) != total(charges):
            group.fail(f"rules changed the total on {kinds}")

    excluded = 0
    for sample in samples:
        group.checked += 1
        try:
            ledger = audit(prism, sample.coloring)
        except IdentityViolation as e:
            group.fail(str(e), _witness(sample.lists, sample.coloring))
            continue
        if not ledger.conserved:
            group.fail("discharging changed the total charge", _witness(sample.lists, sample.coloring))
        if not ledger.decomposable:
            continue
        if ledger.b3_before_b2 or ledger.b3_before_b3:
            excluded += 1
        elif ledger.min_final < Charge(0):
            group.fail(
                f"block ends with charge {ledger.min_final} without a B3 before a B2 or B3",
                _witness(sample.lists, sample.coloring),
            )
    group.notes.append(f"{excluded} lex-min colorings have a B3 followed by B2 or B3")
    return group


def _corrupt(prism: Prism, sample: Sample) -> Sample:
    """Give vertex 0 the color of a neighbour."""
    c = sample.coloring
    neighbour = prism.adjacency[0][0]
    return Sample(sample.lists, c.with_changes({0: c.at(neighbour)}), True)


def verify_lemma_suite(
    n: int,
    samples: int,
    seed: int,
    inject_violation: bool = False,
    universe: Optional[int] = None,
    budget_nodes: Optional[int] = None,
    jobs: int = 1,
    progress: bool = True,
    fixtures_per_config: Optional[int] = None,
) -> LemmaReport:
    """Run the five lemma groups on Π_n."""
    if n < 6:
        raise InvalidParameter(f"the lemma suite needs n >= 6, got {n}")
    universe = universe or settings.universe
    budget_nodes = budget_nodes or settings.budget_nodes
    prism = Prism(n)
    report = LemmaReport(n=n, samples=samples, seed=seed)

    tasks = [(n, universe, item_seed(seed, n, i), budget_nodes) for i in range(samples)]
    drawn, _ = run_parallel(lexmin_sample, tasks, jobs=jobs, desc=f"lex-min n={n}", progress=progress)
    exact = [s for s in drawn if s.exact]
    report.exact = len(exact)
    report.inexact = len(drawn) - len(exact)
    if report.inexact:
        logger.warning("n=%d: %d samples without an exact lex-min coloring", n, report.inexact)
    if inject_violation and exact:
        exact[0] = _corrupt(prism, exact[0])

    configs = load_configurations()
    fixtures = fixtures_per_config or settings.fixtures_per_config
    report.groups = [
        check_few_colors(prism, exact),
        check_move_soundness(prism, [s for s in exact if is_list_coloring(prism, s.lists, s.coloring)],
                             seed, fixtures, configs),
        check_six_rung_counts(prism, exact),
        check_block_decomposition(prism, exact),
        check_discharging(prism, exact, np.random.default_rng([seed, n]), samples),
    ]
    for g in report.groups:
        logger.info("%s: %d checks, %d failures", g.name, g.checked, len(g.failures))
    return report


# ---------------------------------------------------------------------------
# Charge identity over random colorings
# ---------------------------------------------------------------------------

def random_proper_coloring(prism: Prism, rng: np.random.Generator, palette: int) -> Coloring:
    """Greedy coloring in random vertex order; each vertex takes a random free color."""
    colors = [-1] * prism.order
    for s in rng.permutation(prism.order):
        taken = {colors[t] for t in prism.adjacency[s]}
        free = [col for col in range(palette) if col not in taken]
        colors[s] = int(rng.choice(free))
    return Coloring(prism.n, tuple(colors))


def verify_charge_identity(n_values: list[int], samples: int, seed: int) -> GroupResult:
    """Total charge equals 10n/3 - 5|Blue| and is negative above the equitable bound."""
    group = GroupResult("charge-identity")
    rng = np.random.default_rng(seed)
    over_bound = 0
    for i in range(samples):
        prism = Prism(n_values[i % len(n_values)])
        c = random_proper_coloring(prism, rng, int(rng.integers(4, 7)))
        blue = ranked_candidates(c)[0][0]
        b = blue_count(c, blue)
        group.checked += 1
        try:
            value = total_charge(prism, c, blue)
        except IdentityViolation as e:
            group.fail(str(e))
            continue
        vertices = total(vertex_charge(prism, c, blue, v) for v in prism.vertices)
        faces = total(face_charge(prism, c, blue, f) for f in range(prism.n + 2))
        if vertices != Charge.of(2 * prism.n - 3 * b) or faces != Charge(4 * prism.n - 6 * b):
            group.fail(f"vertex or face sum off on n={prism.n}, |Blue|={b}")
        if b > equitable_bound(prism.n):
            over_bound += 1
            if not value < Charge(0):
                group.fail(f"total {value} is not negative with |Blue|={b} on n={prism.n}")
        if value != expected_total(prism.n, b):
            group.fail(f"total {value} differs from {expected_total(prism.n, b)}")
    group.notes.append(f"{over_bound} colorings above the equitable bound, all with negative total")
    return group
