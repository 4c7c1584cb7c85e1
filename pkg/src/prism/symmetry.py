"""
Prism automorphisms and canonical forms of list assignments.

Every automorphism used here has the shape
    (L, i) -> (L or its swap, +-i + shift mod n)
which gives 4n maps: n rotations, n reflections, each with or without the
layer swap. For n = 4 the prism is the cube and has more symmetry than
this; only the 4n maps above are used everywhere.

Canonical form: the lexicographically least serialization over all 4n
relabelings, colors renamed by first occurrence in the scan order.
Colors first seen in the same list are ordered by their occurrence
signature, which makes the key independent of the original color names.
Enumeration generates one sequence per renaming class directly and keeps
those no automorphism can lower.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator, Optional, Sequence

from ..errors import BudgetExceeded, InvalidParameter
from .graph import Prism, Vertex, vertex_at
from .lists import ListAssignment

logger = logging.getLogger(__name__)

CanonicalKey = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class VertexMap:
    """(L, i) -> (swap? L, (-i if reflect else i) + shift mod n)."""
    n: int
    shift: int = 0
    reflect: bool = False
    swap: bool = False

    def __post_init__(self):
        if self.n < 3:
            raise InvalidParameter(f"prism needs n >= 3, got {self.n}")
        object.__setattr__(self, "shift", self.shift % self.n)

    @property
    def kind(self) -> str:
        base = "reflection" if self.reflect else "rotation"
        return f"{base}+swap" if self.swap else base

    @property
    def is_identity(self) -> bool:
        return self.shift == 0 and not self.reflect and not self.swap

    def __call__(self, v: Vertex) -> Vertex:
        i = -v.index if self.reflect else v.index
        layer = v.layer.other() if self.swap else v.layer
        return Vertex(layer, (i + self.shift) % self.n)

    def apply(self, v: Vertex) -> Vertex:
        return self(v)

    def compose(self, other: "VertexMap") -> "VertexMap":
        """self after other."""
        if other.n != self.n:
            raise InvalidParameter("cannot compose maps of different prisms")
        sign = -1 if self.reflect else 1
        return VertexMap(
            self.n,
            shift=sign * other.shift + self.shift,
            reflect=self.reflect != other.reflect,
            swap=self.swap != other.swap,
        )

    def inverse(self) -> "VertexMap":
        sign = -1 if self.reflect else 1
        return VertexMap(self.n, shift=-sign * self.shift, reflect=self.reflect, swap=self.swap)

    @cached_property
    def permutation(self) -> tuple[int, ...]:
        """Scan index s goes to permutation[s]."""
        return tuple(self(vertex_at(s)).scan for s in range(2 * self.n))

    def __str__(self) -> str:
        return f"{self.kind}(shift={self.shift})"


def automorphism_group(prism: Prism) -> list[VertexMap]:
    """The 4n maps, identity first."""
    return [
        VertexMap(prism.n, shift, reflect, swap)
        for reflect in (False, True)
        for swap in (False, True)
        for shift in range(prism.n)
    ]


def transport(assignment: ListAssignment, vmap: VertexMap) -> ListAssignment:
    """The assignment L' with L'(vmap(v)) = L(v)."""
    return assignment.relabel(vmap.permutation)


def _normal_key(lists: Sequence[frozenset[int]]) -> CanonicalKey:
    occurrences: dict[int, list[int]] = defaultdict(list)
    for s, lst in enumerate(lists):
        for c in lst:
            occurrences[c].append(s)
    # the color present at the first differing position sorts first
    for positions in occurrences.values():
        positions.append(len(lists))

    names: dict[int, int] = {}
    rows = []
    for lst in lists:
        fresh = sorted((c for c in lst if c not in names), key=lambda c: occurrences[c])
        for c in fresh:
            names[c] = len(names)
        rows.append(tuple(sorted(names[c] for c in lst)))
    return tuple(rows)


def canonical_form(prism: Prism, assignment: ListAssignment) -> CanonicalKey:
    """Orbit key: equal keys iff the assignments are related by an automorphism and a color renaming."""
    if assignment.n != prism.n:
        raise InvalidParameter("assignment does not belong to this prism")
    best: Optional[CanonicalKey] = None
    for vmap in automorphism_group(prism):
        moved = [frozenset()] * prism.order
        for s, t in enumerate(vmap.permutation):
            moved[t] = assignment.lists[s]
        key = _normal_key(moved)
        if best is None or key < best:
            best = key
    return best


def assignment_from_key(n: int, key: CanonicalKey) -> ListAssignment:
    return ListAssignment.from_sequence(n, key)


def _renaming_normal_sequences(order: int, k: int, cap: int) -> Iterator[list[frozenset[int]]]:
    """
    One sequence per color-renaming class, in the form _normal_key produces.

    Every list's new colors are the next unused ids, and colors introduced by
    the same list are numbered in the order of their later occurrences. A
    pair (c, c+1) in `tied` has so far occurred only together, so a list
    holding c+1 without c is out of order.
    """
    rows: list[frozenset[int]] = []

    def extend(used: int, tied: frozenset[int]) -> Iterator[list[frozenset[int]]]:
        if len(rows) == order:
            yield rows
            return
        for reused in range(max(0, k - (cap - used)), min(k, used) + 1):
            fresh = tuple(range(used, used + k - reused))
            for old in combinations(range(used), reused):
                chosen = set(old)
                if any(c + 1 in chosen and c not in chosen for c in tied):
                    continue
                still = {c for c in tied if (c in chosen) == (c + 1 in chosen)}
                still.update(fresh[:-1])
                rows.append(frozenset(old + fresh))
                yield from extend(used + len(fresh), frozenset(still))
                rows.pop()

    yield from extend(0, frozenset())


def _is_canonical(permutations: list[tuple[int, ...]], rows: Sequence[frozenset[int]]) -> bool:
    key = tuple(tuple(sorted(lst)) for lst in rows)
    moved: list[frozenset[int]] = [frozenset()] * len(rows)
    for permutation in permutations:
        for s, t in enumerate(permutation):
            moved[t] = rows[s]
        if _normal_key(moved) < key:
            return False
    return True


def canonical_keys(
    prism: Prism,
    k: int,
    universe_cap: int,
    budget: Optional[int] = None,
) -> Iterator[CanonicalKey]:
    """
    The canonical key of every orbit of k-assignments over at most `universe_cap` colors.

    A renaming-normal sequence is yielded when no automorphism moves it to a
    smaller one; it is then its own canonical form. Raises BudgetExceeded
    once more than `budget` sequences were visited.
    """
    if k < 1 or universe_cap < k:
        raise InvalidParameter(f"need 1 <= k <= universe_cap, got k={k}, cap={universe_cap}")
    permutations = [m.permutation for m in automorphism_group(prism)[1:]]
    visited = orbits = 0
    for rows in _renaming_normal_sequences(prism.order, k, universe_cap):
        visited += 1
        if budget is not None and visited > budget:
            raise BudgetExceeded(
                f"canonical enumeration of n={prism.n}, k={k}, cap={universe_cap} "
                f"exceeded {budget} sequences",
                limit=budget,
            )
        if _is_canonical(permutations, rows):
            orbits += 1
            yield tuple(tuple(sorted(lst)) for lst in rows)
    logger.debug("visited %d sequences, %d orbits", visited, orbits)


def enumerate_canonical_assignments(
    prism: Prism,
    k: int,
    universe_cap: int,
    budget: Optional[int] = None,
) -> Iterator[ListAssignment]:
    """One representative per orbit; see canonical_keys."""
    for key in canonical_keys(prism, k, universe_cap, budget):
        yield assignment_from_key(prism.n, key)
