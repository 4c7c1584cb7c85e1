"""
Charge ledger for the discharging argument on prisms.

Initial charges, with B(x) the blue vertices around x:
- vertex v: 1 - |B(v)| over its neighbours
- 4-face f: 4/3 - |B(f)| over its corners
- n-face: 0
The total is 10n/3 - 5|Blue|. Rules move charge between blocks:
- every B0 takes 1 from the block on its right
- every B3 takes 5/3 from the block on its right

Usage:
    from src.discharging.ledger import audit

    report = audit(prism, coloring)
    print(report.summary())
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from ..errors import BlueRunTooLong, IdentityViolation
from ..prism.graph import Layer, Prism, Vertex
from ..reductions.blocks import Attribution, BlockKind, BlockSequence, block_decompose
from ..reductions.matching import ranked_candidates
from ..solver.coloring import Coloring
from .charge import ZERO, Charge, total

logger = logging.getLogger(__name__)

RULE_TAKES = {
    BlockKind.B0: Charge.of(1),
    BlockKind.B3: Charge(5),
}


def vertex_charge(prism: Prism, c: Coloring, blue: int, v: Vertex) -> Charge:
    blue_neighbours = sum(1 for u in prism.neighbors(v) if c[u] == blue)
    return Charge.of(1 - blue_neighbours)


def face_charge(prism: Prism, c: Coloring, blue: int, face: int) -> Charge:
    """Faces 0..n-1 are the 4-faces, n and n+1 the two n-faces."""
    if face >= prism.n:
        return ZERO
    corners = prism.four_faces[face]
    return Charge(4 - 3 * sum(1 for v in corners if c[v] == blue))


def blue_count(c: Coloring, blue: int) -> int:
    return sum(1 for col in c.colors if col == blue)


def expected_total(n: int, blue_vertices: int) -> Charge:
    return Charge(10 * n - 15 * blue_vertices)


def total_charge(prism: Prism, c: Coloring, blue: int) -> Charge:
    """Sum over vertices and faces, checked against 10n/3 - 5|Blue|."""
    vertices = total(vertex_charge(prism, c, blue, v) for v in prism.vertices)
    faces = total(face_charge(prism, c, blue, f) for f in range(prism.n + 2))
    result = vertices + faces
    expected = expected_total(prism.n, blue_count(c, blue))
    if result != expected:
        raise IdentityViolation(f"total charge {result} differs from 10n/3 - 5|Blue| = {expected}")
    return result


def block_charges(
    prism: Prism, c: Coloring, blue: int, blocks: BlockSequence
) -> list[Charge]:
    """Each block's vertices plus its 4-faces; n-faces carry nothing."""
    charges = []
    for block in blocks.blocks:
        value = total(vertex_charge(prism, c, blue, v) for v in block.vertices())
        value = value + total(face_charge(prism, c, blue, f) for f in block.faces)
        charges.append(value)
    return charges


@dataclass(frozen=True)
class Transfer:
    rule: str
    giver: int
    taker: int
    amount: Charge


@dataclass
class RuleOutcome:
    final: list[Charge]
    transfers: list[Transfer]


def apply_rules(kinds: list[BlockKind], charges: list[Charge]) -> RuleOutcome:
    """Every B0 takes 1 and every B3 takes 5/3 from the block on its right."""
    final = list(charges)
    transfers = []
    m = len(kinds)
    for i, kind in enumerate(kinds):
        amount = RULE_TAKES.get(kind)
        if amount is None:
            continue
        right = (i + 1) % m
        final[i] = final[i] + amount
        final[right] = final[right] - amount
        rule = "rule-1" if kind is BlockKind.B0 else "rule-2"
        transfers.append(Transfer(rule, right, i, amount))
    return RuleOutcome(final, transfers)


@dataclass
class ChargeLedger:
    """Everything the audit computed for one coloring."""
    n: int
    blue: int
    blue_vertices: int
    vertex_sum: Charge
    face_sum: Charge
    total: Charge
    decomposable: bool
    run_error: Optional[str] = None
    kinds: list[BlockKind] = field(default_factory=list)
    initial: list[Charge] = field(default_factory=list)
    final: list[Charge] = field(default_factory=list)
    transfers: list[Transfer] = field(default_factory=list)
    b3_before_b2: int = 0
    b3_before_b3: int = 0

    @property
    def conserved(self) -> bool:
        if not self.decomposable:
            return True
        return total(self.initial) == self.total and total(self.final) == self.total

    @property
    def min_final(self) -> Optional[Charge]:
        return min(self.final) if self.final else None

    def summary(self) -> str:
        lines = [
            f"Prism n={self.n}, blue color {self.blue}, |Blue|={self.blue_vertices}",
            f"Vertex charge: {self.vertex_sum}",
            f"Face charge: {self.face_sum}",
            f"Total charge: {self.total}",
        ]
        if not self.decomposable:
            lines.append(f"Blocks: not decomposable ({self.run_error})")
            return "\n".join(lines)
        lines.extend([
            f"Blocks: {' '.join(str(k) for k in self.kinds)}",
            f"Initial: {' '.join(str(x) for x in self.initial)}",
            f"Final: {' '.join(str(x) for x in self.final)}",
            f"Min final: {self.min_final}",
            f"Conserved: {self.conserved}",
            f"B3 before B2: {self.b3_before_b2}, B3 before B3: {self.b3_before_b3}",
        ])
        return "\n".join(lines)

    def records(self) -> list[str]:
        out = [
            f"n={self.n}",
            f"blue={self.blue}",
            f"blue_vertices={self.blue_vertices}",
            f"vertex_charge={self.vertex_sum}",
            f"face_charge={self.face_sum}",
            f"total={self.total}",
            f"decomposable={str(self.decomposable).lower()}",
        ]
        if self.decomposable:
            out.extend([
                f"blocks={','.join(str(k) for k in self.kinds)}",
                f"initial={','.join(str(x) for x in self.initial)}",
                f"final={','.join(str(x) for x in self.final)}",
                f"min_final={self.min_final}",
                f"conserved={str(self.conserved).lower()}",
                f"b3_before_b2={self.b3_before_b2}",
                f"b3_before_b3={self.b3_before_b3}",
            ])
        else:
            out.append(f"error={self.run_error}")
        return out


def audit(
    prism: Prism,
    c: Coloring,
    blue: Optional[int] = None,
    attribution: Attribution = Attribution.LEADING,
) -> ChargeLedger:
    """Charges, block decomposition and rule outcome for one coloring."""
    if blue is None:
        blue = ranked_candidates(c)[0][0]
    vertex_sum = total(vertex_charge(prism, c, blue, v) for v in prism.vertices)
    face_sum = total(face_charge(prism, c, blue, f) for f in range(prism.n + 2))
    ledger = ChargeLedger(
        n=prism.n,
        blue=blue,
        blue_vertices=blue_count(c, blue),
        vertex_sum=vertex_sum,
        face_sum=face_sum,
        total=total_charge(prism, c, blue),
        decomposable=True,
    )
    try:
        blocks = block_decompose(prism, c, blue, attribution)
    except BlueRunTooLong as e:
        ledger.decomposable = False
        ledger.run_error = f"BlueRunTooLong: {e}"
        logger.debug("n=%d coloring has no block decomposition: %s", prism.n, e)
        return ledger

    ledger.kinds = blocks.kinds
    ledger.initial = block_charges(prism, c, blue, blocks)
    if total(ledger.initial) != ledger.total:
        raise IdentityViolation(
            f"block charges sum to {total(ledger.initial)}, total is {ledger.total}"
        )
    outcome = apply_rules(ledger.kinds, ledger.initial)
    ledger.final = outcome.final
    ledger.transfers = outcome.transfers
    ledger.b3_before_b2 = len(blocks.adjacent_pairs(BlockKind.B3, BlockKind.B2))
    ledger.b3_before_b3 = len(blocks.adjacent_pairs(BlockKind.B3, BlockKind.B3))
    return ledger


# ---------------------------------------------------------------------------
# Fixtures for the block-charge table
# ---------------------------------------------------------------------------

def _rungs_for(kind: BlockKind) -> list[bool]:
    """Blank leading rung followed by `kind` blue rungs."""
    if kind is BlockKind.B0:
        return [False]
    return [False] + [True] * int(kind)


def table_fixture(
    kind: BlockKind,
    left: BlockKind,
    right: BlockKind = BlockKind.B0,
) -> tuple[Prism, Coloring, int, int]:
    """
    A coloring whose LEADING decomposition has `left`, `kind`, `right`, B0, B0 in a row.

    Returns (prism, coloring, blue color, index of the `kind` block).
    Blue runs alternate layers starting on U; the other vertices are
    colored greedily from {1, 2, 3, 4}.
    """
    layout = [left, kind, right, BlockKind.B0, BlockKind.B0]
    flags: list[bool] = []
    for k in layout:
        flags.extend(_rungs_for(k))
    n = len(flags)
    prism = Prism(n)

    blue = 0
    colors = [-1] * prism.order
    run_position = 0
    for i, is_blue in enumerate(flags):
        if is_blue:
            layer = Layer.U if run_position % 2 == 0 else Layer.V
            colors[Vertex(layer, i).scan] = blue
            run_position += 1
        else:
            run_position = 0
    for s in range(prism.order):
        if colors[s] >= 0:
            continue
        taken = {colors[t] for t in prism.adjacency[s]}
        colors[s] = min(col for col in (1, 2, 3, 4) if col not in taken)
    coloring = Coloring(n, tuple(colors))

    # rung 0 is the blank rung that opens `left`, so `kind` is the second block
    return prism, coloring, blue, 1


# Published block charges before the rules, keyed by (kind, left block is B0)
INITIAL_CHARGES = {
    (BlockKind.B0, True): Charge(10),
    (BlockKind.B0, False): Charge(7),
    (BlockKind.B1, True): Charge(8),
    (BlockKind.B1, False): Charge(5),
    (BlockKind.B2, True): Charge(3),
    (BlockKind.B2, False): ZERO,
    (BlockKind.B3, True): Charge(-2),
    (BlockKind.B3, False): Charge(-5),
}


def expected_final(kind: BlockKind, left: BlockKind) -> Optional[Charge]:
    """Post-rule charge of a `kind` block; None for the excluded B3-B2 and B3-B3 pairs."""
    if left is BlockKind.B3 and kind in (BlockKind.B2, BlockKind.B3):
        return None
    if kind is BlockKind.B0:
        return Charge(5) if left is BlockKind.B3 else Charge(10)
    if kind is BlockKind.B1:
        return ZERO if left is BlockKind.B3 else Charge(5)
    return ZERO


@dataclass(frozen=True)
class TableRow:
    kind: BlockKind
    left: BlockKind
    initial: Charge
    expected_initial: Charge
    final: Charge
    expected_final: Optional[Charge]

    @property
    def matches(self) -> bool:
        if self.initial != self.expected_initial:
            return False
        return self.expected_final is None or self.final == self.expected_final

    def __str__(self) -> str:
        want = "excluded" if self.expected_final is None else str(self.expected_final)
        return (
            f"{self.kind} after {self.left}: initial {self.initial} "
            f"(table {self.expected_initial}), final {self.final} (table {want})"
        )


def table_rows() -> list[TableRow]:
    """Block charges of every (kind, left neighbour) pair, next to the published values."""
    rows = []
    for kind in BlockKind:
        for left in BlockKind:
            prism, coloring, blue, index = table_fixture(kind, left)
            blocks = block_decompose(prism, coloring, blue, Attribution.LEADING)
            initial = block_charges(prism, coloring, blue, blocks)
            final = apply_rules(blocks.kinds, initial).final
            rows.append(TableRow(
                kind=kind,
                left=left,
                initial=initial[index],
                expected_initial=INITIAL_CHARGES[(kind, left is BlockKind.B0)],
                final=final[index],
                expected_final=expected_final(kind, left),
            ))
    return rows
