"""
Exact search: proper list colorings and lexicographically minimum colorings.

Usage:
    from src.solver.search import lexmin

    result = lexmin(prism, lists)
    print(result.summary())

The lex-min search is a depth-first branch and bound in scan order:
- candidates: list colors not used by an already colored neighbor
- value order: smallest current class first, then color id
- bound: uncolored vertices fill the classes of colors still open to them,
  at most one vertex per rung and class, smallest class first; the
  resulting word is one no completion can beat
- an uncolored vertex with no open color cuts the branch
- ties on the word are broken by the scan-order color sequence, so the
  returned coloring is unique
"""

import logging
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Mapping, Optional

import numpy as np

from ..config import settings
from ..errors import BudgetExceeded, InvalidParameter, Unsatisfiable
from ..prism.graph import Prism
from ..prism.lists import ListAssignment
from .coloring import ColorWord, Coloring, color_word, compare_sizes

logger = logging.getLogger(__name__)


@dataclass
class SearchResult:
    """Outcome of a lex-min style search."""
    coloring: Coloring
    word: ColorWord
    exact: bool
    nodes: int
    mode: str  # "exact", "local-min", "bounded"

    def summary(self) -> str:
        return (
            f"Word: {self.word}\n"
            f"Exact: {self.exact}\n"
            f"Nodes: {self.nodes:,}\n"
            f"Mode: {self.mode}"
        )


class _Stop(Exception):
    pass


def _check(prism: Prism, lists: ListAssignment) -> None:
    if lists.n != prism.n:
        raise InvalidParameter(f"assignment is for n={lists.n}, prism has n={prism.n}")


def solve_proper(
    prism: Prism,
    lists: ListAssignment,
    rng: Optional[np.random.Generator] = None,
) -> Optional[Coloring]:
    """
    Any proper L-coloring, or None when the assignment is unsatisfiable.

    Colors are tried in increasing order, or shuffled per vertex by `rng`.
    """
    _check(prism, lists)
    adjacency = prism.adjacency
    order = range(prism.order)
    colors = [-1] * prism.order
    options = [sorted(lst) for lst in lists.lists]
    if rng is not None:
        options = [[int(c) for c in rng.permutation(opts)] for opts in options]

    def descend(pos: int) -> bool:
        if pos == prism.order:
            return True
        v = order[pos]
        taken = {colors[u] for u in adjacency[v]}
        for c in options[v]:
            if c in taken:
                continue
            colors[v] = c
            if descend(pos + 1):
                return True
        colors[v] = -1
        return False

    if descend(0):
        return Coloring(prism.n, tuple(colors))
    return None


class LexMinSearch:
    """
    Branch and bound over the vertices not in `fixed`.

    With `upper` set, only colorings whose word is strictly below `upper`
    are accepted; `run()` returns None if there is none.
    """

    def __init__(
        self,
        prism: Prism,
        lists: ListAssignment,
        fixed: Optional[Mapping[int, int]] = None,
        upper: Optional[ColorWord] = None,
        budget_nodes: Optional[int] = None,
    ):
        _check(prism, lists)
        self.prism = prism
        self.lists = lists
        self.fixed = dict(fixed or {})
        self.upper = upper.sizes if upper is not None else None
        self.budget = budget_nodes
        self.nodes = 0
        self.exhausted = True

        self.free = [s for s in range(prism.order) if s not in self.fixed]
        self.colors = [-1] * prism.order
        self.counts: dict[int, int] = {}
        for s, c in self.fixed.items():
            self.colors[s] = c
            self.counts[c] = self.counts.get(c, 0) + 1

        self.best_word: Optional[tuple[int, ...]] = None
        self.best_free: Optional[tuple[int, ...]] = None
        self.best_colors: Optional[tuple[int, ...]] = None

    def _word(self) -> tuple[int, ...]:
        return tuple(sorted((c for c in self.counts.values() if c > 0), reverse=True))

    def _bound(self, assigned: int) -> Optional[tuple[int, ...]]:
        """Least word over completions of the partial coloring, or None if one is stuck."""
        adjacency = self.prism.adjacency
        rungs: dict[int, set[int]] = {}
        for s in self.free[assigned:]:
            open_colors = self.lists.at(s).difference(self.colors[u] for u in adjacency[s])
            if not open_colors:
                return None
            for c in open_colors:
                rungs.setdefault(c, set()).add(s >> 1)

        level = {c: self.counts.get(c, 0) for c in rungs}
        room = {c: len(r) for c, r in rungs.items()}
        heap = [(size, c) for c, size in level.items()]
        heapify(heap)
        for _ in range(len(self.free) - assigned):
            if not heap:
                return None
            size, c = heappop(heap)
            level[c] = size + 1
            room[c] -= 1
            if room[c]:
                heappush(heap, (size + 1, c))

        sizes = [size for c, size in self.counts.items() if size > 0 and c not in level]
        sizes.extend(size for size in level.values() if size > 0)
        return tuple(sorted(sizes, reverse=True))

    def _pruned(self, assigned: int) -> bool:
        bound = self._bound(assigned)
        if bound is None:
            return True
        if self.upper is not None and compare_sizes(bound, self.upper) >= 0:
            return True
        if self.best_word is None:
            return False
        order = compare_sizes(bound, self.best_word)
        if order != 0:
            return order > 0
        prefix = tuple(self.colors[s] for s in self.free[:assigned])
        return prefix > self.best_free[:assigned]

    def _record(self) -> None:
        word = self._word()
        free = tuple(self.colors[s] for s in self.free)
        if self.best_word is not None:
            order = compare_sizes(word, self.best_word)
            if order > 0 or (order == 0 and free >= self.best_free):
                return
        self.best_word = word
        self.best_free = free
        self.best_colors = tuple(self.colors)

    def _descend(self, pos: int) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _Stop
        if pos == len(self.free):
            self._record()
            return

        v = self.free[pos]
        taken = {self.colors[u] for u in self.prism.adjacency[v]}
        candidates = [c for c in self.lists.at(v) if c not in taken]
        candidates.sort(key=lambda c: (self.counts.get(c, 0), c))
        for c in candidates:
            self.colors[v] = c
            self.counts[c] = self.counts.get(c, 0) + 1
            if not self._pruned(pos + 1):
                self._descend(pos + 1)
            self.counts[c] -= 1
        self.colors[v] = -1

    def run(self) -> Optional[Coloring]:
        for s, c in self.fixed.items():
            if any(self.fixed.get(t) == c for t in self.prism.adjacency[s]):
                raise InvalidParameter(f"fixed colors clash at scan index {s}")
        try:
            self._descend(0)
        except _Stop:
            self.exhausted = False
            logger.debug("lex-min search stopped after %d nodes", self.nodes)
        if self.best_colors is None:
            return None
        return Coloring(self.prism.n, self.best_colors)


def lexmin(
    prism: Prism,
    lists: ListAssignment,
    budget_nodes: Optional[int] = None,
    fixed: Optional[Mapping[int, int]] = None,
    refine: bool = True,
) -> SearchResult:
    """
    The lexicographically minimum proper L-coloring.

    When the node budget runs out the best coloring found so far is driven
    to a local minimum by window recoloring and returned with exact=False.
    Raises Unsatisfiable if no proper coloring exists and BudgetExceeded if
    the budget ran out before any coloring was found.
    """
    if budget_nodes is None:
        budget_nodes = settings.budget_nodes
    search = LexMinSearch(prism, lists, fixed=fixed, budget_nodes=budget_nodes)
    found = search.run()

    if found is None:
        if search.exhausted:
            raise Unsatisfiable(f"no proper list coloring of the prism n={prism.n}")
        raise BudgetExceeded(
            f"no coloring found within {budget_nodes:,} nodes", limit=budget_nodes
        )

    if search.exhausted:
        return SearchResult(found, color_word(found), True, search.nodes, "exact")

    logger.warning(
        "Lex-min budget of %s nodes exhausted for n=%d; falling back to local improvement",
        f"{budget_nodes:,}", prism.n,
    )
    if refine and not fixed:
        from ..reductions.improve import improve_to_local_min

        local = improve_to_local_min(prism, lists, found)
        local.nodes += search.nodes
        return local
    return SearchResult(found, color_word(found), False, search.nodes, "budget")
