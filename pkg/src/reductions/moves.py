"""
Applying a configuration's recoloring moves at a placement.

Usage:
    from src.reductions.moves import apply_move

    outcome = apply_move(prism, lists, coloring, placement, configs)
    if isinstance(outcome, NotApplicable):
        print(outcome.reason)
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Mapping, Optional, Union

from ..errors import MoveError
from ..prism.graph import Prism
from ..prism.lists import ListAssignment
from ..solver.coloring import Coloring, color_word, is_proper
from .matching import Placement, find_matches, hypotheses_hold
from .patterns import ColorOf, Condition, Configuration, Expr, Move

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NotApplicable:
    reason: str


MoveOutcome = Union[Coloring, NotApplicable]


class _MoveContext:
    def __init__(self, lists: ListAssignment, c: Coloring, placement: Placement):
        self.lists = lists
        self.c = c
        self.placement = placement
        self.sizes = c.class_sizes()

    def value(self, expr: Expr) -> int:
        if isinstance(expr, ColorOf):
            return self.c[self.placement.target(expr.cell)]
        return self.placement.roles[expr.role]

    def holds(self, cond: Condition) -> bool:
        right = self.value(cond.right)
        if cond.kind == "has":
            return right in self.lists[self.placement.target(cond.left)]
        left = self.value(cond.left)
        return left == right if cond.kind == "eq" else left != right

    def options(self, move: Move) -> Optional[list[tuple[int, list[int]]]]:
        """Per step (scan index, candidate colors); None when the move is not enabled."""
        if not all(self.holds(cond) for cond in move.conditions):
            return None
        options = []
        for step in move.steps:
            target = self.placement.target(step.cell)
            available = self.lists[target]
            if step.is_avoid:
                banned = {self.value(e) for e in step.avoid}
                colors = sorted(available - banned, key=lambda col: (self.sizes.get(col, 0), col))
            else:
                wanted = self.value(step.value)
                colors = [wanted] if wanted in available else []
            if not colors:
                return None
            options.append((target.scan, colors))
        return options


def _run_moves(
    prism: Prism,
    lists: ListAssignment,
    c: Coloring,
    placement: Placement,
    config: Configuration,
) -> MoveOutcome:
    ctx = _MoveContext(lists, c, placement)
    word = color_word(c)
    for move in config.moves:
        options = ctx.options(move)
        if options is None:
            continue
        targets = [scan for scan, _ in options]
        for choice in product(*(colors for _, colors in options)):
            candidate = c.with_changes(dict(zip(targets, choice)))
            if is_proper(prism, candidate) and color_word(candidate) < word:
                logger.debug("%s move %s: %s -> %s", placement, move.label, word, color_word(candidate))
                return candidate
        raise MoveError(
            f"{placement}: move {move.label} is enabled but yields no proper "
            f"recoloring with a smaller word"
        )
    return NotApplicable("no move of the configuration is enabled by the lists")


def apply_move(
    prism: Prism,
    lists: ListAssignment,
    c: Coloring,
    placement: Placement,
    configs: Mapping[str, Configuration],
) -> MoveOutcome:
    """
    Recolor at a placement.

    Returns the recolored coloring (proper, list-respecting, strictly smaller
    word), or NotApplicable when the class sizes or the lists fall outside
    the configuration's hypotheses. Raises MoveError when an enabled move
    fails, which means the transcription is wrong.
    """
    config = configs[placement.config]
    if not hypotheses_hold(config, c, placement.roles):
        return NotApplicable("class sizes outside the configuration's hypotheses")

    if config.via is None:
        return _run_moves(prism, lists, c, placement, config)

    inner = configs[config.via]
    for match in find_matches(prism, c, inner):
        if not match.vertices <= placement.vertices:
            continue
        outcome = apply_move(prism, lists, c, match, configs)
        if isinstance(outcome, Coloring):
            return outcome
    return NotApplicable(f"no applicable {inner.name} inside the window")
