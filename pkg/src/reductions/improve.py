"""
Local improvement by exact recoloring of rung windows.

window_improve re-solves the lex-min problem inside one window with every
other vertex fixed, keeping only strictly smaller words. improve_to_local_min
iterates it, widening the window only when narrower ones are stuck.
"""

import logging
from typing import Optional

from ..config import settings
from ..prism.graph import Prism
from ..prism.lists import ListAssignment
from ..solver.coloring import Coloring, color_word, compare_sizes
from ..solver.search import LexMinSearch, SearchResult

logger = logging.getLogger(__name__)


def _best_window(
    prism: Prism,
    lists: ListAssignment,
    c: Coloring,
    width: int,
    budget_nodes: Optional[int],
) -> tuple[Optional[Coloring], int]:
    width = min(width, prism.n)
    current = color_word(c)
    best: Optional[Coloring] = None
    best_key = None
    seen_windows = set()
    nodes = 0

    for window in prism.windows(width):
        inside = frozenset(v.scan for v in window.vertices)
        if inside in seen_windows:
            continue
        seen_windows.add(inside)
        fixed = {s: col for s, col in enumerate(c.colors) if s not in inside}
        search = LexMinSearch(prism, lists, fixed=fixed, upper=current, budget_nodes=budget_nodes)
        found = search.run()
        nodes += search.nodes
        if found is None:
            continue
        key = (color_word(found).sizes, found.colors)
        if best is None or compare_sizes(key[0], best_key[0]) < 0 or (
            compare_sizes(key[0], best_key[0]) == 0 and key[1] < best_key[1]
        ):
            best, best_key = found, key
    return best, nodes


def window_improve(
    prism: Prism,
    lists: ListAssignment,
    c: Coloring,
    width: int,
    budget_nodes: Optional[int] = None,
) -> Optional[Coloring]:
    """
    Best recoloring of any `width` consecutive rungs with a strictly smaller word.

    Returns None when no window admits an improvement (c is w-window optimal).
    """
    return _best_window(prism, lists, c, width, budget_nodes)[0]


def improve_to_local_min(
    prism: Prism,
    lists: ListAssignment,
    c: Coloring,
    max_width: Optional[int] = None,
    budget_nodes: Optional[int] = None,
) -> SearchResult:
    """Apply window improvements of width 1..max_width until none applies."""
    if max_width is None:
        max_width = settings.window_width
    max_width = min(max_width, prism.n)
    rounds = 0
    nodes = 0
    width = 1
    while width <= max_width:
        improved, spent = _best_window(prism, lists, c, width, budget_nodes)
        nodes += spent
        if improved is None:
            width += 1
            continue
        rounds += 1
        logger.debug("round %d: width %d improves %s -> %s", rounds, width, color_word(c), color_word(improved))
        c = improved
        width = 1
    logger.debug("local minimum %s after %d improvement rounds", color_word(c), rounds)
    return SearchResult(c, color_word(c), False, nodes, "local-min")
