"""
Line-oriented text format for prisms, list assignments and colorings.

    # comment
    prism n=<n>
    list U<i> = c1,c2,...
    color V<i> = c
    word = n1,n2,...
    UNSAT

Records are written in scan order (U0, V0, U1, ...), lists sorted, so the
output for a canonical key is byte-stable. Blank lines and '#' comments are
ignored on input; any other deviation raises FormatError with the line number.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

from ..errors import FormatError, InvalidParameter
from .graph import Vertex, parse_vertex, vertex_at
from .lists import ListAssignment


@dataclass
class PrismDocument:
    """Everything one text block can carry."""
    n: int
    lists: Optional[ListAssignment] = None
    colors: Optional[tuple[int, ...]] = None
    word: Optional[tuple[int, ...]] = None
    unsat: bool = False


def _join(values) -> str:
    return ",".join(str(v) for v in values)


def format_assignment(lists: ListAssignment) -> list[str]:
    return [
        f"list {vertex_at(s)} = {_join(sorted(lst))}" for s, lst in enumerate(lists.lists)
    ]


def format_colors(colors: Sequence[int]) -> list[str]:
    return [f"color {vertex_at(s)} = {c}" for s, c in enumerate(colors)]


def format_document(doc: PrismDocument) -> str:
    lines = [f"prism n={doc.n}"]
    if doc.lists is not None:
        lines.extend(format_assignment(doc.lists))
    if doc.colors is not None:
        lines.extend(format_colors(doc.colors))
    if doc.word is not None:
        lines.append(f"word = {_join(doc.word)}")
    if doc.unsat:
        lines.append("UNSAT")
    return "\n".join(lines) + "\n"


def _ints(raw: str, line_no: int, source: str) -> tuple[int, ...]:
    try:
        values = tuple(int(tok) for tok in raw.split(",") if tok.strip())
    except ValueError:
        raise FormatError(f"expected comma-separated integers, got {raw!r}", line_no, source)
    if any(v < 0 for v in values):
        raise FormatError(f"negative value in {raw!r}", line_no, source)
    return values


def _record(rest: str, n: int, line_no: int, source: str) -> tuple[Vertex, str]:
    if "=" not in rest:
        raise FormatError("expected '<vertex> = <value>'", line_no, source)
    head, _, tail = rest.partition("=")
    try:
        v = parse_vertex(head)
    except ValueError as e:
        raise FormatError(str(e), line_no, source)
    if v.index >= n:
        raise FormatError(f"vertex {v} outside prism n={n}", line_no, source)
    return v, tail


def parse_document(text: str, source: str = "<text>") -> PrismDocument:
    n: Optional[int] = None
    lists: dict[int, frozenset[int]] = {}
    colors: dict[int, int] = {}
    word = None
    unsat = False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")

        if n is None:
            if keyword != "prism" or not rest.strip().startswith("n="):
                raise FormatError("document must start with 'prism n=<n>'", line_no, source)
            try:
                n = int(rest.strip()[2:])
            except ValueError:
                raise FormatError(f"bad prism size {rest!r}", line_no, source)
            if n < 3:
                raise FormatError(f"prism needs n >= 3, got {n}", line_no, source)
            continue

        if keyword == "list":
            v, tail = _record(rest, n, line_no, source)
            if v.scan in lists:
                raise FormatError(f"duplicate list for {v}", line_no, source)
            lists[v.scan] = frozenset(_ints(tail, line_no, source))
        elif keyword == "color":
            v, tail = _record(rest, n, line_no, source)
            if v.scan in colors:
                raise FormatError(f"duplicate color for {v}", line_no, source)
            values = _ints(tail, line_no, source)
            if len(values) != 1:
                raise FormatError("a color record holds exactly one color", line_no, source)
            colors[v.scan] = values[0]
        elif keyword == "word":
            word = _ints(rest.lstrip("= ").strip(), line_no, source)
        elif keyword == "UNSAT" and not rest:
            unsat = True
        else:
            raise FormatError(f"unknown record {keyword!r}", line_no, source)

    if n is None:
        raise FormatError("empty document", 0, source)

    doc = PrismDocument(n=n, word=word, unsat=unsat)
    if lists:
        if len(lists) != 2 * n:
            raise FormatError(f"lists given for {len(lists)} of {2 * n} vertices", 0, source)
        try:
            doc.lists = ListAssignment(n, tuple(lists[s] for s in range(2 * n)))
        except InvalidParameter as e:
            raise FormatError(str(e), 0, source)
    if colors:
        if len(colors) != 2 * n:
            raise FormatError(f"colors given for {len(colors)} of {2 * n} vertices", 0, source)
        doc.colors = tuple(colors[s] for s in range(2 * n))
    return doc
