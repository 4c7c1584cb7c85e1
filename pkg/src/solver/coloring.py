"""
Colorings and color words.

A Coloring is a total map from vertices to colors stored in scan order. It
may be improper; properness and list-respect are checked, not enforced, so
that recoloring moves can build candidates and reject them.

The color word of a coloring is its class sizes in non-increasing order.
Words compare lexicographically with the shorter word padded by zeros.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from math import ceil
from typing import Mapping, Optional, Sequence

from ..errors import InvalidParameter
from ..prism.graph import Prism, Vertex, vertex_at
from ..prism.lists import ListAssignment
from ..prism.textio import PrismDocument


class Comparison(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def compare_sizes(a: Sequence[int], b: Sequence[int]) -> int:
    """-1/0/1 comparison of two non-increasing size sequences, zero-padded."""
    width = max(len(a), len(b))
    for i in range(width):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        if x != y:
            return -1 if x < y else 1
    return 0


@total_ordering
@dataclass(frozen=True)
class ColorWord:
    sizes: tuple[int, ...]

    def __post_init__(self):
        if any(s <= 0 for s in self.sizes):
            raise InvalidParameter(f"word entries must be positive: {self.sizes}")
        if any(a < b for a, b in zip(self.sizes, self.sizes[1:])):
            raise InvalidParameter(f"word must be non-increasing: {self.sizes}")

    @classmethod
    def of_counts(cls, counts) -> "ColorWord":
        return cls(tuple(sorted((c for c in counts if c > 0), reverse=True)))

    @property
    def largest(self) -> int:
        return self.sizes[0] if self.sizes else 0

    def __len__(self) -> int:
        return len(self.sizes)

    def __iter__(self):
        return iter(self.sizes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColorWord):
            return NotImplemented
        return compare_sizes(self.sizes, other.sizes) == 0

    def __hash__(self) -> int:
        return hash(self.sizes)

    def __lt__(self, other: "ColorWord") -> bool:
        return compare_sizes(self.sizes, other.sizes) < 0

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.sizes)


@dataclass(frozen=True)
class Coloring:
    n: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != 2 * self.n:
            raise InvalidParameter(f"expected {2 * self.n} colors, got {len(self.colors)}")
        if any(c < 0 for c in self.colors):
            raise InvalidParameter("colors must be non-negative")

    @classmethod
    def from_mapping(cls, prism: Prism, mapping: Mapping[Vertex, int]) -> "Coloring":
        return cls(prism.n, tuple(int(mapping[v]) for v in prism.vertices))

    @classmethod
    def from_document(cls, doc: PrismDocument) -> "Coloring":
        if doc.colors is None:
            raise InvalidParameter("document carries no coloring")
        return cls(doc.n, doc.colors)

    def __getitem__(self, v: Vertex) -> int:
        return self.colors[v.scan]

    def at(self, scan: int) -> int:
        return self.colors[scan]

    def class_sizes(self) -> Counter:
        return Counter(self.colors)

    def classes(self) -> dict[int, tuple[Vertex, ...]]:
        result: dict[int, list[Vertex]] = {}
        for s, c in enumerate(self.colors):
            result.setdefault(c, []).append(vertex_at(s))
        return {c: tuple(vs) for c, vs in result.items()}

    @property
    def palette(self) -> frozenset[int]:
        return frozenset(self.colors)

    def with_changes(self, changes: Mapping[int, int]) -> "Coloring":
        """Copy with the given scan indices recolored."""
        colors = list(self.colors)
        for s, c in changes.items():
            colors[s] = c
        return Coloring(self.n, tuple(colors))

    def apply_map(self, vmap) -> "Coloring":
        """c'(vmap(v)) = c(v)."""
        moved = [0] * len(self.colors)
        for s, t in enumerate(vmap.permutation):
            moved[t] = self.colors[s]
        return Coloring(self.n, tuple(moved))

    def to_document(self, lists: Optional[ListAssignment] = None, with_word: bool = True) -> PrismDocument:
        return PrismDocument(
            n=self.n,
            lists=lists,
            colors=self.colors,
            word=color_word(self).sizes if with_word else None,
        )


def is_proper(prism: Prism, c: Coloring) -> bool:
    colors = c.colors
    return all(
        colors[s] != colors[t]
        for s, nbrs in enumerate(prism.adjacency)
        for t in nbrs
    )


def respects_lists(lists: ListAssignment, c: Coloring) -> bool:
    return all(col in lst for col, lst in zip(c.colors, lists.lists))


def is_list_coloring(prism: Prism, lists: ListAssignment, c: Coloring) -> bool:
    return is_proper(prism, c) and respects_lists(lists, c)


def color_word(c: Coloring) -> ColorWord:
    return ColorWord.of_counts(c.class_sizes().values())


def compare(w1: ColorWord, w2: ColorWord) -> Comparison:
    return Comparison(compare_sizes(w1.sizes, w2.sizes))


def equitable_bound(n: int, k: int = 3) -> int:
    """Class-size bound ceil(2n / k) for a k-list coloring of the prism on n rungs."""
    if k < 1:
        raise InvalidParameter(f"k must be positive, got {k}")
    return ceil(2 * n / k)


def is_bounded(c: Coloring, bound: int) -> bool:
    return color_word(c).largest <= bound


def uses_fewer_than_four_colors(c: Coloring) -> bool:
    return len(c.palette) < 4


def unused_color_move(lists: ListAssignment, c: Coloring) -> Optional[Coloring]:
    """
    Recolor one vertex to a list color unused by c, when that strictly lowers the word.

    A lex-min coloring never admits this move.
    """
    palette = c.palette
    sizes = c.class_sizes()
    for s, col in enumerate(c.colors):
        if sizes[col] < 2:
            continue
        spare = sorted(lists.at(s) - palette)
        if spare:
            return c.with_changes({s: spare[0]})
    return None
