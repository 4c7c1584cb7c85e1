"""
Propagation refutations of unsatisfiable list assignments.

A refutation is a tree. Every internal node branches one vertex over all
colors still available to it after unit propagation; every leaf is a
propagation conflict (some vertex loses its last color). check_refutation
replays the tree with propagation only, so a certificate can be verified
without running a search.
"""

from dataclasses import dataclass
from typing import Optional, Union

from ..errors import FormatError
from ..prism.graph import Prism, parse_vertex, vertex_at
from ..prism.lists import ListAssignment

Domains = list[set[int]]


@dataclass(frozen=True)
class Conflict:
    pass


@dataclass(frozen=True)
class Branch:
    vertex: int  # scan index
    children: tuple[tuple[int, "Refutation"], ...]


Refutation = Union[Conflict, Branch]


def propagate(prism: Prism, domains: Domains) -> Optional[Domains]:
    """Unit propagation on copies of the domains; None on conflict."""
    domains = [set(d) for d in domains]
    if any(not d for d in domains):
        return None
    queue = [s for s, d in enumerate(domains) if len(d) == 1]
    done: set[int] = set()
    while queue:
        s = queue.pop()
        if s in done:
            continue
        done.add(s)
        (c,) = domains[s]
        for t in prism.adjacency[s]:
            if c in domains[t]:
                domains[t].discard(c)
                if not domains[t]:
                    return None
                if len(domains[t]) == 1:
                    queue.append(t)
    return domains


def _branch_vertex(domains: Domains) -> int:
    return min(
        (s for s, d in enumerate(domains) if len(d) > 1),
        key=lambda s: (len(domains[s]), s),
    )


def refute(prism: Prism, lists: ListAssignment) -> Optional[Refutation]:
    """A refutation tree, or None if the assignment has a proper coloring."""

    def search(domains: Domains) -> Optional[Refutation]:
        state = propagate(prism, domains)
        if state is None:
            return Conflict()
        if all(len(d) == 1 for d in state):
            return None
        v = _branch_vertex(state)
        children = []
        for c in sorted(state[v]):
            trial = [set(d) for d in state]
            trial[v] = {c}
            child = search(trial)
            if child is None:
                return None
            children.append((c, child))
        return Branch(v, tuple(children))

    return search([set(lst) for lst in lists.lists])


def check_refutation(prism: Prism, lists: ListAssignment, tree: Refutation) -> bool:
    def check(domains: Domains, node: Refutation) -> bool:
        state = propagate(prism, domains)
        if isinstance(node, Conflict):
            return state is None
        if state is None:
            return True
        if not 0 <= node.vertex < prism.order:
            return False
        covered = {c for c, _ in node.children}
        if not state[node.vertex] <= covered:
            return False
        for c, child in node.children:
            if c not in state[node.vertex]:
                continue
            trial = [set(d) for d in state]
            trial[node.vertex] = {c}
            if not check(trial, child):
                return False
        return True

    return check([set(lst) for lst in lists.lists], tree)


def refutation_size(tree: Refutation) -> int:
    if isinstance(tree, Conflict):
        return 1
    return 1 + sum(refutation_size(child) for _, child in tree.children)


def format_refutation(tree: Refutation) -> list[str]:
    """Preorder lines: '<depth> conflict' or '<depth> branch <vertex> <colors>'."""
    lines: list[str] = []

    def emit(node: Refutation, depth: int) -> None:
        if isinstance(node, Conflict):
            lines.append(f"{depth} conflict")
            return
        colors = ",".join(str(c) for c, _ in node.children)
        lines.append(f"{depth} branch {vertex_at(node.vertex)} {colors}")
        for _, child in node.children:
            emit(child, depth + 1)

    emit(tree, 0)
    return lines


def parse_refutation(lines: list[tuple[int, str]], source: str = "<text>") -> Refutation:
    """Inverse of format_refutation; takes (line number, text) pairs."""
    pos = 0

    def read(depth: int) -> Refutation:
        nonlocal pos
        if pos >= len(lines):
            raise FormatError("refutation ends early", lines[-1][0] if lines else 0, source)
        line_no, text = lines[pos]
        tokens = text.split()
        try:
            level = int(tokens[0])
        except (ValueError, IndexError):
            raise FormatError(f"bad refutation line {text!r}", line_no, source)
        if level != depth:
            raise FormatError(f"expected depth {depth}, got {level}", line_no, source)
        pos += 1
        if tokens[1:] == ["conflict"]:
            return Conflict()
        if len(tokens) != 4 or tokens[1] != "branch":
            raise FormatError(f"bad refutation line {text!r}", line_no, source)
        try:
            vertex = parse_vertex(tokens[2]).scan
            colors = [int(c) for c in tokens[3].split(",")]
        except ValueError as e:
            raise FormatError(str(e), line_no, source)
        children = tuple((c, read(depth + 1)) for c in colors)
        return Branch(vertex, children)

    tree = read(0)
    if pos != len(lines):
        raise FormatError("trailing refutation lines", lines[pos][0], source)
    return tree
