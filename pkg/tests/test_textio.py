import pytest

from src.errors import FormatError
from src.prism.lists import uniform_assignment
from src.prism.textio import PrismDocument, format_document, parse_document


def test_document_round_trip(prism3):
    lists = uniform_assignment(prism3, {1, 2, 3})
    doc = PrismDocument(n=3, lists=lists, colors=(1, 2, 2, 3, 3, 1), word=(2, 2, 2))
    again = parse_document(format_document(doc))
    assert again == doc


def test_comments_and_blank_lines_are_ignored():
    text = "# a prism\n\nprism n=3   # three rungs\nUNSAT\n"
    doc = parse_document(text)
    assert doc.n == 3
    assert doc.unsat
    assert doc.lists is None


@pytest.mark.parametrize(
    "text, line",
    [
        ("list U0 = 1,2\n", 1),
        ("prism n=3\nlist U9 = 1,2\n", 2),
        ("prism n=3\n\ncolor U0 = 1,2\n", 3),
        ("prism n=3\ncolor U0 = a\n", 2),
        ("prism n=3\ncolor U0 = 1\ncolor U0 = 2\n", 3),
        ("prism n=3\nshade U0 = 1\n", 2),
        ("prism n=2\n", 1),
        ("prism n=3\nlist U0 = -1,2\n", 2),
    ],
)
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(FormatError) as info:
        parse_document(text, source="case.txt")
    assert info.value.line == line
    assert str(info.value).startswith(f"case.txt:{line}:")


def test_incomplete_lists_rejected():
    with pytest.raises(FormatError):
        parse_document("prism n=3\nlist U0 = 1,2\n")


def test_empty_document():
    with pytest.raises(FormatError):
        parse_document("\n# nothing\n")
