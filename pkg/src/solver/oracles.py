"""
Brute-force oracles for small instances.

Both oracles are graph-generic where that costs nothing: the independence
number works on any networkx graph, the coloring enumerators on prisms.
"""

from collections import Counter
from typing import Iterator, Optional, Union

import networkx as nx

from ..config import settings
from ..errors import BudgetExceeded
from ..prism.graph import Prism
from ..prism.lists import ListAssignment
from .coloring import Coloring


def _bitmask_graph(graph: nx.Graph) -> tuple[list, list[int]]:
    nodes = list(graph.nodes())
    position = {v: i for i, v in enumerate(nodes)}
    masks = [0] * len(nodes)
    for u, v in graph.edges():
        if u == v:
            continue
        masks[position[u]] |= 1 << position[v]
        masks[position[v]] |= 1 << position[u]
    return nodes, masks


def max_independent_set(graph: Union[nx.Graph, Prism]) -> frozenset:
    """A maximum independent set, found by include/exclude branching on bitmasks."""
    if isinstance(graph, Prism):
        graph = graph.graph
    if graph.number_of_nodes() > settings.independence_max_vertices:
        raise BudgetExceeded(
            f"independence oracle limited to {settings.independence_max_vertices} vertices, "
            f"got {graph.number_of_nodes()}",
            limit=settings.independence_max_vertices,
        )
    nodes, masks = _bitmask_graph(graph)

    def best(mask: int) -> int:
        if mask == 0:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        without = best(mask & ~low)
        if masks[v] & mask == 0:
            # isolated in the remaining graph: always take it
            return without | low
        with_v = best(mask & ~low & ~masks[v]) | low
        return with_v if bin(with_v).count("1") > bin(without).count("1") else without

    chosen = best((1 << len(nodes)) - 1)
    return frozenset(nodes[i] for i in range(len(nodes)) if chosen >> i & 1)


def independence_number(graph: Union[nx.Graph, Prism]) -> int:
    return len(max_independent_set(graph))


def _proper_color_tuples(prism: Prism, lists: ListAssignment) -> Iterator[tuple[int, ...]]:
    if prism.n > settings.enumeration_max_n:
        raise BudgetExceeded(
            f"coloring enumeration limited to n <= {settings.enumeration_max_n}, got n={prism.n}",
            limit=settings.enumeration_max_n,
        )
    adjacency = prism.adjacency
    options = [sorted(lst) for lst in lists.lists]
    colors = [-1] * prism.order

    def descend(v: int) -> Iterator[tuple[int, ...]]:
        if v == prism.order:
            yield tuple(colors)
            return
        taken = {colors[u] for u in adjacency[v]}
        for c in options[v]:
            if c not in taken:
                colors[v] = c
                yield from descend(v + 1)
        colors[v] = -1

    yield from descend(0)


def all_proper_colorings(prism: Prism, lists: ListAssignment) -> Iterator[Coloring]:
    """Every proper L-coloring, each exactly once, in scan-lexicographic order."""
    for colors in _proper_color_tuples(prism, lists):
        yield Coloring(prism.n, colors)


def count_proper_colorings(prism: Prism, lists: ListAssignment) -> int:
    return sum(1 for _ in _proper_color_tuples(prism, lists))


def lexmin_by_enumeration(prism: Prism, lists: ListAssignment) -> Optional[Coloring]:
    """
    The lex-min coloring found by visiting every proper coloring.

    Colorings arrive in scan-lexicographic order, so the first one with the
    least word also wins the tie-break. None when there is no proper coloring.
    """
    best: Optional[tuple[int, ...]] = None
    best_word: Optional[tuple[int, ...]] = None
    for colors in _proper_color_tuples(prism, lists):
        word = tuple(sorted(Counter(colors).values(), reverse=True))
        if best_word is None or word < best_word:
            best, best_word = colors, word
    return None if best is None else Coloring(prism.n, best)
