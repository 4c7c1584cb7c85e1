import pytest

from src.errors import FormatError
from src.prism.graph import Prism
from src.prism.lists import uniform_assignment
from src.solver.refutation import (
    Branch,
    Conflict,
    check_refutation,
    format_refutation,
    parse_refutation,
    propagate,
    refutation_size,
    refute,
)


def _numbered(lines):
    return list(enumerate(lines, start=1))


def test_two_colors_on_triangle(prism3):
    lists = uniform_assignment(prism3, {0, 1})
    tree = refute(prism3, lists)
    assert isinstance(tree, Branch)
    assert check_refutation(prism3, lists, tree)
    assert refutation_size(tree) >= 3


def test_satisfiable_has_no_refutation(prism3, identical3):
    assert refute(prism3, identical3) is None


def test_bare_conflict_is_rejected(prism3):
    lists = uniform_assignment(prism3, {0, 1})
    assert not check_refutation(prism3, lists, Conflict())


def test_missing_branch_is_rejected(prism3):
    lists = uniform_assignment(prism3, {0, 1})
    tree = refute(prism3, lists)
    pruned = Branch(tree.vertex, tree.children[:1])
    assert not check_refutation(prism3, lists, pruned)


def test_refutation_does_not_transfer_to_sat_lists(prism3, identical3):
    tree = refute(prism3, uniform_assignment(prism3, {0, 1}))
    assert not check_refutation(prism3, identical3, tree)


def test_propagation_detects_forced_conflict(prism3):
    domains = [{0}, {0, 1}, {1}, {2}, {2}, {0, 1}]
    assert propagate(prism3, domains) is not None
    assert propagate(prism3, [{0}, {0}, {1}, {1}, {2}, {2}]) is None


def test_text_round_trip():
    p = Prism(5)
    lists = uniform_assignment(p, {0, 1})
    tree = refute(p, lists)
    lines = format_refutation(tree)
    assert lines[0].startswith("0 branch ")
    again = parse_refutation(_numbered(lines))
    assert again == tree
    assert check_refutation(p, lists, again)


@pytest.mark.parametrize(
    "lines, line",
    [
        (["1 conflict"], 1),
        (["0 branch U0 0,1", "1 conflict"], 2),
        (["0 branch W0 0", "1 conflict"], 1),
        (["0 conflict", "0 conflict"], 2),
        (["x conflict"], 1),
    ],
)
def test_parse_errors(lines, line):
    with pytest.raises(FormatError) as info:
        parse_refutation(_numbered(lines), source="tree")
    assert info.value.line == line
