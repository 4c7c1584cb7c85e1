"""
Locating configurations in a coloring.

A placement is an automorphism of the prism applied to the configuration's
window together with a binding of roles to colors. `blue` ranges over the
largest classes and `red` over the largest remaining ones, so ties produce
one placement per binding.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Optional

from ..prism.graph import Layer, Prism, Vertex
from ..prism.symmetry import VertexMap, automorphism_group
from ..solver.coloring import Coloring
from .patterns import Configuration


@dataclass(frozen=True)
class Placement:
    config: str
    vmap: VertexMap
    width: int
    binding: tuple[tuple[str, int], ...]

    @cached_property
    def roles(self) -> dict[str, int]:
        return dict(self.binding)

    def target(self, cell: Vertex) -> Vertex:
        return self.vmap(cell)

    @cached_property
    def vertices(self) -> frozenset[Vertex]:
        """Image of the whole window, not only the constrained cells."""
        return frozenset(
            self.vmap(Vertex(layer, i))
            for i in range(self.width)
            for layer in (Layer.U, Layer.V)
        )

    def __str__(self) -> str:
        roles = ", ".join(f"{r}={c}" for r, c in self.binding)
        return f"{self.config} at {self.vmap} [{roles}]"


def ranked_candidates(c: Coloring, blue: Optional[int] = None) -> list[tuple[int, Optional[int]]]:
    """
    Every (blue, red) pair: blue a largest class, red a largest class among the rest.

    A designated `blue` replaces the largest classes, whether or not c uses it.
    """
    sizes = c.class_sizes()
    top = max(sizes.values())
    blues = [blue] if blue is not None else sorted(col for col, s in sizes.items() if s == top)
    pairs = []
    for color in blues:
        rest = {col: s for col, s in sizes.items() if col != color}
        if not rest:
            pairs.append((color, None))
            continue
        second = max(rest.values())
        pairs.extend((color, red) for red in sorted(col for col, s in rest.items() if s == second))
    return pairs


def hypotheses_hold(config: Configuration, c: Coloring, roles: Mapping[str, int]) -> bool:
    """Class-size guards of the configuration under the given binding."""
    sizes = c.class_sizes()
    for guard in config.guards:
        if guard.kind == "tie":
            if "red" not in roles or not 0 <= sizes[roles["blue"]] - sizes[roles["red"]] <= 1:
                return False
        elif guard.kind == "gap":
            named = {roles[r] for r in guard.roles if r in roles}
            if len(named) != len(guard.roles):
                return False
            floor = min(sizes[col] for col in named)
            if any(s > floor - guard.amount for col, s in sizes.items() if col not in named):
                return False
    return True


def _bind(
    config: Configuration,
    vmap: VertexMap,
    c: Coloring,
    ranked: dict[str, int],
) -> Optional[dict[str, int]]:
    roles = dict(ranked)
    used = {col: role for role, col in roles.items()}
    for cell, constraints in config.cells:
        color = c[vmap(cell)]
        for con in constraints:
            if con.negated or con.role in roles:
                continue
            if color in used:
                return None
            roles[con.role] = color
            used[color] = con.role
    for cell, constraints in config.cells:
        color = c[vmap(cell)]
        for con in constraints:
            bound = roles.get(con.role)
            if con.negated:
                if bound is not None and color == bound:
                    return None
            elif color != bound:
                return None
    return roles


def find_matches(
    prism: Prism,
    c: Coloring,
    config: Configuration,
    blue: Optional[int] = None,
) -> list[Placement]:
    """All placements of `config` in c under the 4n maps, blue designated or a largest class."""
    if config.order is not None and prism.n != config.order:
        return []
    if config.width > prism.n:
        return []

    bindings = []
    for blue_color, red in ranked_candidates(c, blue):
        if config.uses_red:
            if red is None:
                continue
            bindings.append({"blue": blue_color, "red": red})
        else:
            bindings.append({"blue": blue_color})
    # without red in play, different red choices give the same binding
    unique = []
    for b in bindings:
        if b not in unique:
            unique.append(b)

    matches = []
    for vmap in automorphism_group(prism):
        for ranked in unique:
            roles = _bind(config, vmap, c, ranked)
            if roles is None:
                continue
            matches.append(
                Placement(config.name, vmap, config.width, tuple(sorted(roles.items())))
            )
    return matches
