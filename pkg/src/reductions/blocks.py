"""
Block decomposition of a prism coloring around the blue class.

A rung is blue when one of its two vertices is blue. Maximal cyclic runs of
blue rungs of length 1, 2 or 3 become blocks B1, B2, B3; runs of length 4
or more raise BlueRunTooLong, and so does a coloring with every rung blue.

Two attributions of rungs and 4-faces to blocks:
- RUN: a blue run is a block, every blank rung is its own B0.
- LEADING: a blue run also takes the blank rung on its left; the remaining
  blank rungs are B0s.
Either way a block owns the 4-face to the right of each of its rungs, so
blocks partition both the rungs and the 4-faces.
"""

from dataclasses import dataclass
from enum import Enum, IntEnum

from ..errors import BlueRunTooLong
from ..prism.graph import Layer, Prism, Vertex
from ..solver.coloring import Coloring


class BlockKind(IntEnum):
    B0 = 0
    B1 = 1
    B2 = 2
    B3 = 3

    def __str__(self) -> str:
        return self.name


class Attribution(str, Enum):
    RUN = "run"
    LEADING = "leading"


@dataclass(frozen=True)
class Block:
    kind: BlockKind
    rungs: tuple[int, ...]

    @property
    def faces(self) -> tuple[int, ...]:
        """4-face i lies between rungs i and i+1."""
        return self.rungs

    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(Vertex(layer, i) for i in self.rungs for layer in (Layer.U, Layer.V))


@dataclass(frozen=True)
class BlockSequence:
    n: int
    blocks: tuple[Block, ...]
    attribution: Attribution

    @property
    def kinds(self) -> list[BlockKind]:
        return [b.kind for b in self.blocks]

    def __len__(self) -> int:
        return len(self.blocks)

    def left_of(self, i: int) -> Block:
        return self.blocks[(i - 1) % len(self.blocks)]

    def right_of(self, i: int) -> Block:
        return self.blocks[(i + 1) % len(self.blocks)]

    def adjacent_pairs(self, left: BlockKind, right: BlockKind) -> list[int]:
        """Indices i where block i has kind `left` and its right neighbour kind `right`."""
        return [
            i for i, b in enumerate(self.blocks)
            if b.kind == left and self.right_of(i).kind == right
        ]

    def __str__(self) -> str:
        return " ".join(str(k) for k in self.kinds)


def blue_rungs(prism: Prism, c: Coloring, blue: int) -> list[bool]:
    return [c[u] == blue or c[v] == blue for u, v in prism.rungs]


def _runs(flags: list[bool]) -> list[tuple[int, int]]:
    """Maximal cyclic runs of True as (start, length), listed from rung 0 onward."""
    n = len(flags)
    if all(flags):
        raise BlueRunTooLong(None, n)
    runs = []
    for i in range(n):
        if flags[i] and not flags[(i - 1) % n]:
            length = 0
            while flags[(i + length) % n]:
                length += 1
            runs.append((i, length))
    return runs


def block_decompose(
    prism: Prism,
    c: Coloring,
    blue: int,
    attribution: Attribution = Attribution.RUN,
) -> BlockSequence:
    """Blocks in cyclic order, starting with the block that holds rung 0."""
    n = prism.n
    flags = blue_rungs(prism, c, blue)
    runs = _runs(flags)
    for start, length in runs:
        if length >= 4:
            raise BlueRunTooLong(start, length)

    owner: dict[int, Block] = {}
    for start, length in runs:
        first = start if attribution is Attribution.RUN else start - 1
        rungs = tuple((first + j) % n for j in range(start + length - first))
        block = Block(BlockKind(length), rungs)
        for r in rungs:
            owner[r] = block
    for r in range(n):
        if r not in owner:
            owner[r] = Block(BlockKind.B0, (r,))

    # rotate so the sequence starts at the block containing rung 0
    first_rung = owner[0].rungs[0]
    blocks = []
    r = first_rung
    while True:
        block = owner[r]
        blocks.append(block)
        r = (block.rungs[-1] + 1) % n
        if r == first_rung:
            break
    return BlockSequence(n, tuple(blocks), attribution)
