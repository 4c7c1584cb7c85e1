"""
k-list assignments on prism vertices.

Colors are non-negative integers. A ListAssignment stores one frozenset per
vertex in scan order.
"""

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from ..errors import InvalidParameter
from .graph import Prism, Vertex


@dataclass(frozen=True)
class ListAssignment:
    n: int
    lists: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.lists) != 2 * self.n:
            raise InvalidParameter(
                f"expected {2 * self.n} lists, got {len(self.lists)}"
            )
        sizes = {len(lst) for lst in self.lists}
        if len(sizes) != 1 or 0 in sizes:
            raise InvalidParameter(f"lists must share one positive size, got sizes {sorted(sizes)}")
        for lst in self.lists:
            if any((not isinstance(c, (int, np.integer))) or c < 0 for c in lst):
                raise InvalidParameter(f"colors must be non-negative integers: {sorted(lst)}")

    @classmethod
    def from_mapping(cls, prism: Prism, mapping: Mapping[Vertex, Iterable[int]]) -> "ListAssignment":
        return cls(
            prism.n,
            tuple(frozenset(int(c) for c in mapping[v]) for v in prism.vertices),
        )

    @classmethod
    def from_sequence(cls, n: int, lists: Sequence[Iterable[int]]) -> "ListAssignment":
        return cls(n, tuple(frozenset(int(c) for c in lst) for lst in lists))

    @property
    def k(self) -> int:
        return len(self.lists[0])

    @property
    def universe(self) -> frozenset[int]:
        return frozenset().union(*self.lists)

    def __getitem__(self, v: Vertex) -> frozenset[int]:
        return self.lists[v.scan]

    def at(self, scan: int) -> frozenset[int]:
        return self.lists[scan]

    def relabel(self, permutation: Sequence[int]) -> "ListAssignment":
        """Transport lists along a scan-index permutation: new[perm[s]] = old[s]."""
        moved = [frozenset()] * len(self.lists)
        for s, t in enumerate(permutation):
            moved[t] = self.lists[s]
        return ListAssignment(self.n, tuple(moved))

    def apply_map(self, vmap) -> "ListAssignment":
        """Transport along an automorphism: L'(vmap(v)) = L(v)."""
        return self.relabel(vmap.permutation)

    @property
    def is_identical(self) -> bool:
        return len(set(self.lists)) == 1

    def restrict_universe(self) -> "ListAssignment":
        """Rename the colors in use to 0..u-1, keeping their relative order."""
        renaming = {c: i for i, c in enumerate(sorted(self.universe))}
        return self.rename_colors(renaming)

    def rename_colors(self, renaming: Mapping[int, int]) -> "ListAssignment":
        return ListAssignment(
            self.n, tuple(frozenset(renaming[c] for c in lst) for lst in self.lists)
        )


def uniform_assignment(prism: Prism, colors: Iterable[int]) -> ListAssignment:
    """Every vertex gets the same list."""
    palette = frozenset(int(c) for c in colors)
    if not palette:
        raise InvalidParameter("uniform assignment needs a non-empty color set")
    return ListAssignment(prism.n, (palette,) * prism.order)


def random_uniform(prism: Prism, k: int, universe_size: int, seed: int) -> ListAssignment:
    """
    Independent uniformly random k-subsets of {0, ..., universe_size - 1}.

    Deterministic for a fixed seed.
    """
    if k < 1:
        raise InvalidParameter(f"k must be positive, got {k}")
    if universe_size < k:
        raise InvalidParameter(f"universe of size {universe_size} has no {k}-subsets")
    rng = np.random.default_rng(seed)
    lists = tuple(
        frozenset(int(c) for c in rng.choice(universe_size, size=k, replace=False))
        for _ in range(prism.order)
    )
    return ListAssignment(prism.n, lists)
