"""
Random fixtures that contain a configuration at the identity placement.

The window cells get their role colors (blue 0, red 1, free roles 2, 3, ...
in order of appearance); every other vertex is filled greedily so that the
configuration's class-size guards are likely to hold, and the fixture is
redrawn until they do. Lists are the vertex's own color plus two random
others.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import BudgetExceeded
from ..prism.graph import Prism
from ..prism.lists import ListAssignment
from ..solver.coloring import Coloring, is_proper
from .matching import Placement, find_matches, hypotheses_hold
from .patterns import FREE_ROLES, Configuration

BLUE, RED = 0, 1


@dataclass
class Fixture:
    config: Configuration
    prism: Prism
    lists: ListAssignment
    coloring: Coloring
    placement: Placement


def role_colors(config: Configuration) -> dict[str, int]:
    colors = {"blue": BLUE, "red": RED}
    next_color = 2
    for _, constraints in config.cells:
        for con in constraints:
            if con.role in FREE_ROLES and not con.negated and con.role not in colors:
                colors[con.role] = next_color
                next_color += 1
    return colors


def _pick(
    allowed: list[int],
    counts: Counter,
    config: Configuration,
    rng: np.random.Generator,
) -> int:
    def least_used(options: list[int]) -> int:
        low = min(counts[c] for c in options)
        return int(rng.choice([c for c in options if counts[c] == low]))

    others = [c for c in allowed if c not in (BLUE, RED)] or allowed
    if config.order is not None:
        return int(rng.choice(allowed))
    if config.uses_red:
        pair = [c for c in allowed if c in (BLUE, RED)]
        return least_used(pair) if pair else least_used(others)
    if BLUE in allowed and rng.random() < 0.9:
        return BLUE
    return least_used([c for c in allowed if c != BLUE] or allowed)


def _draw(
    config: Configuration,
    rng: np.random.Generator,
    universe: int,
    n: int,
) -> Optional[tuple[Prism, Coloring]]:
    prism = Prism(n)
    roles = role_colors(config)
    colors = [-1] * prism.order
    forbidden: dict[int, set[int]] = {}
    for cell, constraints in config.cells:
        for con in constraints:
            if con.negated:
                if con.role in roles:
                    forbidden.setdefault(cell.scan, set()).add(roles[con.role])
            else:
                colors[cell.scan] = roles[con.role]

    counts = Counter(c for c in colors if c >= 0)
    for s in range(prism.order):
        if colors[s] >= 0:
            continue
        taken = {colors[t] for t in prism.adjacency[s]} | forbidden.get(s, set())
        allowed = [c for c in range(universe) if c not in taken]
        if not allowed:
            return None
        colors[s] = _pick(allowed, counts, config, rng)
        counts[colors[s]] += 1

    coloring = Coloring(n, tuple(colors))
    if not is_proper(prism, coloring):
        return None
    return prism, coloring


def plant_fixture(
    config: Configuration,
    rng: np.random.Generator,
    universe: int = 7,
    n: Optional[int] = None,
    attempts: int = 500,
) -> Fixture:
    """A random (prism, lists, coloring) holding `config` at the identity placement, guards satisfied."""
    roles = role_colors(config)
    wanted = {r: roles[r] for r in config.roles}
    wanted["blue"] = BLUE
    if config.uses_red:
        wanted["red"] = RED

    for _ in range(attempts):
        size = n or config.order or int(rng.integers(max(6, config.width + 2), config.width + 7))
        drawn = _draw(config, rng, universe, size)
        if drawn is None:
            continue
        prism, coloring = drawn
        placement = next(
            (
                m for m in find_matches(prism, coloring, config)
                if m.vmap.is_identity and all(m.roles.get(r) == c for r, c in wanted.items())
            ),
            None,
        )
        if placement is None or not hypotheses_hold(config, coloring, placement.roles):
            continue
        lists = []
        for col in coloring.colors:
            others = [c for c in range(universe) if c != col]
            extra = rng.choice(others, size=2, replace=False)
            lists.append(frozenset({col, *(int(c) for c in extra)}))
        return Fixture(config, prism, ListAssignment(size, tuple(lists)), coloring, placement)

    raise BudgetExceeded(f"could not plant {config.name} in {attempts} attempts", limit=attempts)
