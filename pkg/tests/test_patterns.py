import pytest

from src.errors import FormatError
from src.reductions.patterns import ColorOf, RoleRef, parse_configurations

SHIPPED = {f"F{i}" for i in range(1, 9)} | {f"P4.{i}" for i in range(1, 6)} | {f"R6.{i}" for i in range(1, 6)}

SMALL = """\
# two records
config X width=2
  note blue with a
  note second line
  cell U0 = blue
  cell V1 = notblue, green
  move swap
    when V1 has red
    when color-of V1 != blue
    set U0 <- avoid blue,red
end

config Y width=2
  guard gap 2 blue
  via X
end
"""


def test_shipped_configurations(configs):
    assert set(configs) == SHIPPED
    for name, config in configs.items():
        assert bool(config.moves) != bool(config.via), name
        if config.via:
            assert config.via in configs
        if name.startswith("P4."):
            assert config.order == 4


def test_small_document():
    configs = parse_configurations(SMALL)
    x, y = configs["X"], configs["Y"]
    assert x.width == 2
    assert x.note == "blue with a second line"
    assert x.roles == {"blue", "green"}
    assert not x.uses_red
    (move,) = x.moves
    assert move.label == "swap"
    assert move.conditions[0].right == RoleRef("red")
    assert move.conditions[1].left == ColorOf(x.cells[1][0])
    assert move.steps[0].is_avoid
    assert y.via == "X"
    assert y.guards[0].kind == "gap" and y.guards[0].roles == ("blue",)


@pytest.mark.parametrize(
    "text, line",
    [
        ("cell U0 = blue\n", 1),
        ("config X width=2\n  cell U5 = blue\nend\n", 2),
        ("config X width=2\n  cell U0 = magenta\nend\n", 2),
        ("config X width=2\n  set U0 <- blue\nend\n", 2),
        ("config X width=2\n  cell U0 = blue\n", 2),
        ("config X width=2\n  cell U0 = blue\n  move\n    set U0 <- green\nend\n", 5),
        ("config X width=2\n  cell U0 = blue\nend\n", 3),
        ("config X width=2\n  guard gap x blue\nend\n", 2),
        ("config X width=two\nend\n", 1),
        ("config X width=2\n  via X2\nend\n", 0),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(FormatError) as info:
        parse_configurations(text, source="patterns.txt")
    assert info.value.line == line
