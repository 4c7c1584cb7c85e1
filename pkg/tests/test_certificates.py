import pytest

from src.campaigns.certificates import (
    Certificate,
    Verdict,
    check_certificate,
    check_certificate_text,
    parse_certificate,
    parse_certificates,
)
from src.campaigns.choice import sat_certificate, unsat_certificate
from src.errors import FormatError
from src.prism.graph import Prism
from src.prism.lists import uniform_assignment
from src.solver.search import solve_proper


@pytest.mark.parametrize("n", [3, 5, 6])
def test_round_trip_and_check(n):
    for cert in (unsat_certificate(n), sat_certificate(n)):
        again = parse_certificate(cert.to_text())
        assert again.claim == cert.claim
        assert again.verdict is cert.verdict
        assert again.lists == cert.lists
        assert again.coloring == cert.coloring
        assert again.refutation == cert.refutation
        assert check_certificate(again).ok


def test_many_certificates_in_one_file():
    text = "# campaign output\n" + unsat_certificate(4).to_text() + "\n" + sat_certificate(4).to_text()
    outcomes = check_certificate_text(text)
    assert [o.claim for o in outcomes] == ["CH3-UNSAT-EVEN-N4", "CH3-SAT-N4"]
    assert all(o.ok for o in outcomes)


def test_bounded_certificate(prism6):
    lists = uniform_assignment(prism6, {0, 1, 2})
    coloring = solve_proper(prism6, lists)
    largest = max(coloring.class_sizes().values())
    assert check_certificate(Certificate("B", Verdict.BOUNDED, lists, coloring, bound=largest)).ok
    too_tight = check_certificate(Certificate("B", Verdict.BOUNDED, lists, coloring, bound=largest - 1))
    assert not too_tight.ok
    assert "exceeds" in too_tight.reason
    assert not check_certificate(Certificate("B", Verdict.BOUNDED, lists, coloring)).ok


class TestTampering:
    def test_improper_coloring(self):
        cert = sat_certificate(4)
        cert.coloring = cert.coloring.with_changes({0: cert.coloring.at(1)})
        outcome = check_certificate(cert)
        assert not outcome.ok
        assert "proper" in outcome.reason

    def test_color_outside_list(self):
        cert = sat_certificate(4)
        cert.coloring = cert.coloring.with_changes({0: 9})
        assert not check_certificate(cert).ok

    def test_verdict_flip(self):
        text = sat_certificate(5).to_text().replace("verdict SAT", "verdict UNSAT")
        (outcome,) = check_certificate_text(text)
        assert not outcome.ok
        assert "refutation" in outcome.reason

    def test_refutation_against_other_lists(self):
        cert = unsat_certificate(5)
        cert.lists = uniform_assignment(Prism(5), {0, 1, 2})
        assert not check_certificate(cert).ok

    def test_dropped_conflict_line(self):
        text = unsat_certificate(3).to_text()
        lines = text.splitlines()
        last = max(i for i, line in enumerate(lines) if line.endswith("conflict"))
        del lines[last]
        with pytest.raises(FormatError):
            parse_certificates("\n".join(lines))


@pytest.mark.parametrize(
    "text, line",
    [
        ("prism n=3\n", 1),
        ("prism-cert v1\nclaim X\nverdict SAT\nprism n=3\n", 1),
        ("prism-cert v1\nclaim X\nverdict MAYBE\nend\n", 3),
        ("prism-cert v1\nclaim X\nverdict SAT\nbound four\nend\n", 4),
        ("prism-cert v1\nclaim X\nverdict SAT\nprism n=3\ncolor U0 = 1\ncolor U0 = 2\nend\n", 6),
        ("prism-cert v1\nclaim X\nverdict SAT\nend\nprism n=3\n", 5),
    ],
)
def test_format_errors(text, line):
    with pytest.raises(FormatError) as info:
        parse_certificates(text)
    assert info.value.line == line
