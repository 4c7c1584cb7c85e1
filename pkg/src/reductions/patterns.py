"""
Configuration patterns and the parser for the shipped pattern file.

A configuration is a window of `width` consecutive rungs with per-cell color
constraints, optional guards on the class sizes and an ordered list of
recoloring moves. Cells are written U<i>/V<i> with i counted from the left
end of the window.

Grammar (one record per configuration, '#' starts a comment):

    config <name> width=<w>
      note <free text>
      guard tie
      guard gap <k> <role> [<role> ...]
      guard order <n>
      cell <cell> = <constraint>[,<constraint>...]
      move [<label>]
        when <cell> has <expr>
        when <expr> = <expr>
        when <expr> != <expr>
        set <cell> <- <expr>
        set <cell> <- avoid <expr>[,<expr>...]
      via <config>
    end

Constraints are a role name, not<role> or free. Expressions are a role
name or `color-of <cell>`; color-of always reads the coloring before the
move.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from ..errors import FormatError
from ..prism.graph import Vertex, parse_vertex

RANKED_ROLES = ("blue", "red")
FREE_ROLES = ("green", "yellow", "orange", "pink", "purple")
ROLES = RANKED_ROLES + FREE_ROLES


@dataclass(frozen=True)
class RoleRef:
    role: str

    def __str__(self) -> str:
        return self.role


@dataclass(frozen=True)
class ColorOf:
    cell: Vertex

    def __str__(self) -> str:
        return f"color-of {self.cell}"


Expr = Union[RoleRef, ColorOf]


@dataclass(frozen=True)
class CellConstraint:
    role: str
    negated: bool = False

    def __str__(self) -> str:
        return f"not{self.role}" if self.negated else self.role


@dataclass(frozen=True)
class Guard:
    kind: str  # "tie", "gap" or "order"
    amount: int = 0
    roles: tuple[str, ...] = ()


@dataclass(frozen=True)
class Condition:
    kind: str  # "has", "eq" or "ne"
    left: Union[Vertex, Expr]
    right: Expr


@dataclass(frozen=True)
class Step:
    cell: Vertex
    value: Optional[Expr] = None
    avoid: tuple[Expr, ...] = ()

    @property
    def is_avoid(self) -> bool:
        return self.value is None


@dataclass(frozen=True)
class Move:
    label: str
    conditions: tuple[Condition, ...]
    steps: tuple[Step, ...]


@dataclass(frozen=True)
class Configuration:
    name: str
    width: int
    cells: tuple[tuple[Vertex, tuple[CellConstraint, ...]], ...]
    guards: tuple[Guard, ...] = ()
    moves: tuple[Move, ...] = ()
    via: Optional[str] = None
    note: str = ""

    @property
    def order(self) -> Optional[int]:
        for g in self.guards:
            if g.kind == "order":
                return g.amount
        return None

    @property
    def roles(self) -> frozenset[str]:
        """Roles that some cell binds positively."""
        return frozenset(
            c.role for _, cs in self.cells for c in cs if not c.negated
        )

    @property
    def uses_red(self) -> bool:
        if "red" in self.roles:
            return True
        return any("red" in g.roles for g in self.guards) or any(g.kind == "tie" for g in self.guards)


@dataclass
class _Draft:
    name: str
    width: int
    line: int
    cells: dict = field(default_factory=dict)
    guards: list = field(default_factory=list)
    moves: list = field(default_factory=list)
    via: Optional[str] = None
    note: list = field(default_factory=list)
    open_move: Optional[dict] = None


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.configs: dict[str, Configuration] = {}
        self.draft: Optional[_Draft] = None
        self.line = 0

    def fail(self, message: str) -> FormatError:
        return FormatError(message, self.line, self.source)

    # -- tokens -------------------------------------------------------------

    def cell(self, token: str) -> Vertex:
        try:
            v = parse_vertex(token)
        except ValueError as e:
            raise self.fail(str(e))
        if v.index >= self.draft.width:
            raise self.fail(f"cell {v} outside window of width {self.draft.width}")
        return v

    def role(self, token: str) -> str:
        if token not in ROLES:
            raise self.fail(f"unknown role {token!r}")
        return token

    def expr(self, text: str) -> Expr:
        text = text.strip()
        if text.startswith("color-of"):
            return ColorOf(self.cell(text[len("color-of"):]))
        return RoleRef(self.role(text))

    def constraint(self, token: str) -> Optional[CellConstraint]:
        token = token.strip()
        if token == "free":
            return None
        if token.startswith("not") and token[3:] in ROLES:
            return CellConstraint(token[3:], negated=True)
        return CellConstraint(self.role(token))

    # -- records ------------------------------------------------------------

    def close_move(self) -> None:
        m = self.draft.open_move
        if m is None:
            return
        if not m["steps"]:
            raise self.fail(f"move {m['label']} has no steps")
        self.draft.moves.append(Move(m["label"], tuple(m["conditions"]), tuple(m["steps"])))
        self.draft.open_move = None

    def require_move(self) -> dict:
        if self.draft.open_move is None:
            raise self.fail("'when'/'set' outside a move block")
        return self.draft.open_move

    def handle(self, keyword: str, rest: str) -> None:
        d = self.draft
        if keyword == "note":
            d.note.append(rest)
        elif keyword == "cell":
            head, sep, tail = rest.partition("=")
            if not sep:
                raise self.fail("expected 'cell <cell> = <constraints>'")
            v = self.cell(head)
            if v in d.cells:
                raise self.fail(f"duplicate cell {v}")
            constraints = [self.constraint(tok) for tok in tail.split(",") if tok.strip()]
            d.cells[v] = tuple(c for c in constraints if c is not None)
        elif keyword == "guard":
            d.guards.append(self.guard(rest.split()))
        elif keyword == "move":
            self.close_move()
            label = rest.strip() or str(len(d.moves) + 1)
            d.open_move = {"label": label, "conditions": [], "steps": []}
        elif keyword == "when":
            self.require_move()["conditions"].append(self.condition(rest))
        elif keyword == "set":
            self.require_move()["steps"].append(self.step(rest))
        elif keyword == "via":
            self.close_move()
            d.via = rest.strip()
        else:
            raise self.fail(f"unknown keyword {keyword!r}")

    def guard(self, tokens: list[str]) -> Guard:
        if tokens == ["tie"]:
            return Guard("tie")
        if len(tokens) >= 3 and tokens[0] == "gap" and tokens[1].isdigit():
            return Guard("gap", int(tokens[1]), tuple(self.role(t) for t in tokens[2:]))
        if len(tokens) == 2 and tokens[0] == "order" and tokens[1].isdigit():
            return Guard("order", int(tokens[1]))
        raise self.fail(f"bad guard {' '.join(tokens)!r}")

    def condition(self, text: str) -> Condition:
        tokens = text.split()
        if len(tokens) >= 3 and tokens[1] == "has":
            return Condition("has", self.cell(tokens[0]), self.expr(" ".join(tokens[2:])))
        for op, kind in (("!=", "ne"), ("=", "eq")):
            if op in text:
                left, _, right = text.partition(op)
                return Condition(kind, self.expr(left), self.expr(right))
        raise self.fail(f"bad condition {text!r}")

    def step(self, text: str) -> Step:
        head, sep, tail = text.partition("<-")
        if not sep:
            raise self.fail("expected '<cell> <- <expr>'")
        target = self.cell(head)
        tail = tail.strip()
        if tail.startswith("avoid "):
            avoid = tuple(self.expr(tok) for tok in tail[len("avoid "):].split(","))
            return Step(target, avoid=avoid)
        return Step(target, value=self.expr(tail))

    def finish(self) -> None:
        self.close_move()
        d = self.draft
        if bool(d.moves) == bool(d.via):
            raise self.fail(f"config {d.name} needs either moves or a via, not both")
        config = Configuration(
            name=d.name,
            width=d.width,
            cells=tuple(sorted(d.cells.items(), key=lambda kv: kv[0].scan)),
            guards=tuple(d.guards),
            moves=tuple(d.moves),
            via=d.via,
            note=" ".join(d.note),
        )
        self.validate(config)
        self.configs[config.name] = config
        self.draft = None

    def validate(self, config: Configuration) -> None:
        bound = config.roles | set(RANKED_ROLES)
        for move in config.moves:
            exprs = []
            for cond in move.conditions:
                exprs.append(cond.right)
                if cond.kind != "has":
                    exprs.append(cond.left)
            for step in move.steps:
                exprs.extend(step.avoid if step.is_avoid else (step.value,))
            for e in exprs:
                if isinstance(e, RoleRef) and e.role not in bound:
                    raise self.fail(
                        f"config {config.name}: role {e.role!r} is never bound by a cell"
                    )

    def parse(self, text: str) -> dict[str, Configuration]:
        for line_no, raw in enumerate(text.splitlines(), start=1):
            self.line = line_no
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            keyword, _, rest = line.partition(" ")
            if keyword == "config":
                if self.draft is not None:
                    raise self.fail("missing 'end' before new config")
                tokens = rest.split()
                if len(tokens) != 2 or not tokens[1].startswith("width="):
                    raise self.fail("expected 'config <name> width=<w>'")
                try:
                    width = int(tokens[1][len("width="):])
                except ValueError:
                    raise self.fail(f"bad width {tokens[1]!r}")
                if tokens[0] in self.configs:
                    raise self.fail(f"duplicate config {tokens[0]}")
                self.draft = _Draft(tokens[0], width, self.line)
            elif self.draft is None:
                raise self.fail(f"{keyword!r} outside a config record")
            elif keyword == "end":
                self.finish()
            else:
                self.handle(keyword, rest)
        if self.draft is not None:
            raise self.fail(f"config {self.draft.name} is not closed with 'end'")
        for config in self.configs.values():
            if config.via and config.via not in self.configs:
                raise FormatError(
                    f"config {config.name} refers to unknown config {config.via}", 0, self.source
                )
        return self.configs


def parse_configurations(text: str, source: str = "<text>") -> dict[str, Configuration]:
    return _Parser(source).parse(text)


def load_configurations(path: Optional[Path] = None) -> dict[str, Configuration]:
    """Load the pattern file (default: the one shipped with the package)."""
    if path is None:
        from ..config import settings

        path = settings.configurations_path
    path = Path(path)
    return parse_configurations(path.read_text(encoding="utf-8"), source=str(path))
