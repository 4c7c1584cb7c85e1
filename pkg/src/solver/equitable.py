"""
Equitable list-coloring extraction.

Small prisms go through the exact lex-min search: the lex-min coloring of
a 3-uniform assignment is always bounded, so an unbounded exact answer is
a falsification. Larger prisms start from any proper coloring, improve it
by window recoloring and fall back to a capacity-constrained search.
"""

import logging
from typing import Optional

from ..config import settings
from ..errors import BudgetExceeded, Falsified, Unsatisfiable
from ..prism.graph import Prism
from ..prism.lists import ListAssignment
from ..prism.textio import PrismDocument, format_document
from .coloring import Coloring, color_word, equitable_bound, is_bounded
from .search import SearchResult, lexmin, solve_proper

logger = logging.getLogger(__name__)


def bounded_coloring(
    prism: Prism,
    lists: ListAssignment,
    bound: int,
    budget_nodes: Optional[int] = None,
) -> tuple[Optional[Coloring], bool, int]:
    """
    Proper L-coloring with every class of size at most `bound`.

    Returns (coloring or None, exhausted, nodes).
    """
    adjacency = prism.adjacency
    colors = [-1] * prism.order
    counts: dict[int, int] = {}
    nodes = 0

    class _Stop(Exception):
        pass

    def descend(v: int) -> bool:
        nonlocal nodes
        nodes += 1
        if budget_nodes is not None and nodes > budget_nodes:
            raise _Stop
        if v == prism.order:
            return True
        taken = {colors[u] for u in adjacency[v]}
        candidates = [
            c for c in lists.at(v) if c not in taken and counts.get(c, 0) < bound
        ]
        candidates.sort(key=lambda c: (counts.get(c, 0), c))
        for c in candidates:
            colors[v] = c
            counts[c] = counts.get(c, 0) + 1
            if descend(v + 1):
                return True
            counts[c] -= 1
        colors[v] = -1
        return False

    try:
        found = descend(0)
    except _Stop:
        return None, False, nodes
    return (Coloring(prism.n, tuple(colors)) if found else None), True, nodes


def _falsified(prism: Prism, lists: ListAssignment, bound: int) -> Falsified:
    text = format_document(PrismDocument(n=prism.n, lists=lists))
    logger.error("No %d-bounded coloring exists for this assignment:\n%s", bound, text)
    return Falsified(f"no {bound}-bounded L-coloring of the prism n={prism.n}", text)


def equitable_coloring(
    prism: Prism,
    lists: ListAssignment,
    bound: Optional[int] = None,
    budget_nodes: Optional[int] = None,
) -> SearchResult:
    """A proper L-coloring whose classes all have size at most `bound` (default ceil(2n/k))."""
    if bound is None:
        bound = equitable_bound(prism.n, lists.k)
    if budget_nodes is None:
        budget_nodes = settings.budget_nodes

    if prism.n <= settings.exact_max_n:
        result = lexmin(prism, lists, budget_nodes=budget_nodes)
        if is_bounded(result.coloring, bound):
            return result
        if result.exact:
            raise _falsified(prism, lists, bound)
        start = result.coloring
    else:
        start = solve_proper(prism, lists)
        if start is None:
            raise Unsatisfiable(f"no proper list coloring of the prism n={prism.n}")
        from ..reductions.improve import improve_to_local_min

        result = improve_to_local_min(prism, lists, start)
        if is_bounded(result.coloring, bound):
            return result
        start = result.coloring

    logger.info(
        "Local minimum %s exceeds bound %d on n=%d; running capacity search",
        color_word(start), bound, prism.n,
    )
    found, exhausted, nodes = bounded_coloring(prism, lists, bound, budget_nodes)
    if found is not None:
        return SearchResult(found, color_word(found), False, nodes, "bounded")
    if exhausted:
        raise _falsified(prism, lists, bound)
    raise BudgetExceeded(
        f"no {bound}-bounded coloring found within {budget_nodes:,} nodes", limit=budget_nodes
    )
