"""
Prism graph construction.

The prism on n rungs is the Cartesian product C_n x K_2: two n-cycles
(layer U and layer V) joined by a perfect matching of rungs.

Usage:
    from src.prism.graph import build_prism

    p = build_prism(6)
    print(p.summary())
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import NamedTuple, Sequence

import networkx as nx

from ..errors import InvalidParameter


class Layer(str, Enum):
    U = "U"
    V = "V"

    def other(self) -> "Layer":
        return Layer.V if self is Layer.U else Layer.U


class Vertex(NamedTuple):
    """A prism vertex (layer, rung index)."""
    layer: Layer
    index: int

    def __str__(self) -> str:
        return f"{self.layer.value}{self.index}"

    @property
    def scan(self) -> int:
        """Position in the fixed scan order U0, V0, U1, V1, ..."""
        return 2 * self.index + (0 if self.layer is Layer.U else 1)


def vertex_at(scan: int) -> Vertex:
    return Vertex(Layer.U if scan % 2 == 0 else Layer.V, scan // 2)


def parse_vertex(token: str) -> Vertex:
    """Parse 'U3' / 'V0' into a Vertex. Raises ValueError on bad input."""
    token = token.strip()
    if len(token) < 2 or token[0] not in "UV" or not token[1:].isdigit():
        raise ValueError(f"not a vertex: {token!r}")
    return Vertex(Layer(token[0]), int(token[1:]))


@dataclass(frozen=True)
class Window:
    """w consecutive rungs start, start+1, ... (indices mod n)."""
    n: int
    start: int
    width: int

    @property
    def rungs(self) -> tuple[int, ...]:
        return tuple((self.start + j) % self.n for j in range(self.width))

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(
            Vertex(layer, i) for i in self.rungs for layer in (Layer.U, Layer.V)
        )


@dataclass(frozen=True)
class Prism:
    """
    The prism graph on n rungs.

    Equality and hashing go by n only; every derived structure is cached.
    """
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise InvalidParameter(f"prism needs n >= 3, got {self.n!r}")

    # ------------------------------------------------------------------
    # Vertices and edges
    # ------------------------------------------------------------------

    @property
    def order(self) -> int:
        return 2 * self.n

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(vertex_at(s) for s in range(2 * self.n))

    def vertex(self, scan: int) -> Vertex:
        if not 0 <= scan < self.order:
            raise InvalidParameter(f"scan index {scan} outside 0..{self.order - 1}")
        return vertex_at(scan)

    def index(self, v: Vertex) -> int:
        if not 0 <= v.index < self.n:
            raise InvalidParameter(f"vertex {v} not in prism of order {self.n}")
        return v.scan

    @cached_property
    def edges(self) -> tuple[tuple[Vertex, Vertex], ...]:
        n = self.n
        result = []
        for i in range(n):
            j = (i + 1) % n
            result.append((Vertex(Layer.U, i), Vertex(Layer.U, j)))
            result.append((Vertex(Layer.V, i), Vertex(Layer.V, j)))
            result.append((Vertex(Layer.U, i), Vertex(Layer.V, i)))
        return tuple(result)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor scan indices for every scan index."""
        n = self.n
        nbrs = []
        for s in range(2 * n):
            v = vertex_at(s)
            left = Vertex(v.layer, (v.index - 1) % n).scan
            right = Vertex(v.layer, (v.index + 1) % n).scan
            rung = Vertex(v.layer.other(), v.index).scan
            nbrs.append((left, right, rung))
        return tuple(nbrs)

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        return tuple(vertex_at(s) for s in self.adjacency[self.index(v)])

    @cached_property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    # ------------------------------------------------------------------
    # Faces and windows
    # ------------------------------------------------------------------

    @cached_property
    def four_faces(self) -> tuple[tuple[Vertex, Vertex, Vertex, Vertex], ...]:
        """Face i is bounded by rungs i and i+1."""
        n = self.n
        return tuple(
            (
                Vertex(Layer.U, i),
                Vertex(Layer.U, (i + 1) % n),
                Vertex(Layer.V, (i + 1) % n),
                Vertex(Layer.V, i),
            )
            for i in range(n)
        )

    @cached_property
    def n_faces(self) -> tuple[tuple[Vertex, ...], tuple[Vertex, ...]]:
        """The two n-faces, bounded by the U-cycle and the V-cycle."""
        return (
            tuple(Vertex(Layer.U, i) for i in range(self.n)),
            tuple(Vertex(Layer.V, i) for i in range(self.n)),
        )

    @property
    def faces(self) -> tuple[tuple[Vertex, ...], ...]:
        return self.four_faces + self.n_faces

    @property
    def rungs(self) -> tuple[tuple[Vertex, Vertex], ...]:
        return tuple(self.rung(i) for i in range(self.n))

    def rung(self, i: int) -> tuple[Vertex, Vertex]:
        i %= self.n
        return Vertex(Layer.U, i), Vertex(Layer.V, i)

    def windows(self, width: int) -> list[Window]:
        """The n cyclic windows of `width` consecutive rungs; each rung lies in `width` of them."""
        if not 1 <= width <= self.n:
            raise InvalidParameter(f"window width {width} outside 1..{self.n}")
        return [Window(self.n, start, width) for start in range(self.n)]

    # ------------------------------------------------------------------
    # Structural facts
    # ------------------------------------------------------------------

    def girth(self) -> int:
        return min(len(c) for c in nx.minimum_cycle_basis(self.graph))

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.graph)

    def summary(self) -> str:
        return (
            f"Prism n={self.n}: {self.order} vertices, {len(self.edges)} edges, "
            f"{len(self.faces)} faces"
        )


def build_prism(n: int) -> Prism:
    """Build the prism on n >= 3 rungs."""
    return Prism(n)


def window_sums(prism: Prism, indicator: Sequence[int], width: int) -> list[int]:
    """Sum of a per-rung indicator over each of the n windows of `width` rungs."""
    if len(indicator) != prism.n:
        raise InvalidParameter(f"indicator has {len(indicator)} entries, prism has {prism.n} rungs")
    return [sum(indicator[i] for i in w.rungs) for w in prism.windows(width)]


def counting_identity(prism: Prism, indicator: Sequence[int], width: int) -> bool:
    """Every rung lies in exactly `width` windows, so the window sums add up to width * total."""
    return sum(window_sums(prism, indicator, width)) == width * sum(indicator)
