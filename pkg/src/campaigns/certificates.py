"""
Re-checkable certificates.

Format (one or more per file):

    prism-cert v1
    claim CH3-UNSAT-ODD-N5
    verdict UNSAT            # SAT, BOUNDED or UNSAT
    bound 4                  # BOUNDED only
    prism n=5
    list U0 = 0,1
    ...
    color U0 = 1             # SAT and BOUNDED
    ...
    refutation               # UNSAT only, preorder, depth first on each line
    0 branch U0 0,1
    1 conflict
    ...
    end

check_certificate re-verifies a certificate without searching: properness,
list respect and the bound for colorings, propagation replay for refutations.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..errors import FormatError
from ..prism.graph import Prism
from ..prism.lists import ListAssignment
from ..prism.textio import PrismDocument, format_document, parse_document
from ..solver.coloring import Coloring, is_bounded, is_list_coloring
from ..solver.refutation import (
    Refutation,
    check_refutation,
    format_refutation,
    parse_refutation,
)

HEADER = "prism-cert v1"


class Verdict(str, Enum):
    SAT = "SAT"
    BOUNDED = "BOUNDED"
    UNSAT = "UNSAT"


@dataclass
class Certificate:
    claim: str
    verdict: Verdict
    lists: ListAssignment
    coloring: Optional[Coloring] = None
    bound: Optional[int] = None
    refutation: Optional[Refutation] = None

    @property
    def n(self) -> int:
        return self.lists.n

    def to_text(self) -> str:
        lines = [HEADER, f"claim {self.claim}", f"verdict {self.verdict.value}"]
        if self.bound is not None:
            lines.append(f"bound {self.bound}")
        doc = PrismDocument(
            n=self.n,
            lists=self.lists,
            colors=self.coloring.colors if self.coloring is not None else None,
        )
        lines.extend(format_document(doc).splitlines())
        if self.refutation is not None:
            lines.append("refutation")
            lines.extend(format_refutation(self.refutation))
        lines.append("end")
        return "\n".join(lines) + "\n"


@dataclass
class CheckOutcome:
    claim: str
    verdict: Verdict
    ok: bool
    reason: str = ""

    def __str__(self) -> str:
        status = "ok" if self.ok else f"FAILED ({self.reason})"
        return f"{self.claim} {self.verdict.value}: {status}"


def _parse_one(numbered: list[tuple[int, str]], total_lines: int, source: str) -> Certificate:
    claim = None
    verdict = None
    bound = None
    doc_lines = [""] * total_lines
    tree_lines: list[tuple[int, str]] = []
    in_tree = False
    ended = False

    for line_no, raw in numbered[1:]:
        line = raw.split("#", 1)[0].strip()
        if ended:
            if line:
                raise FormatError("content after 'end'", line_no, source)
            continue
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        if keyword == "end" and not rest:
            ended = True
        elif in_tree:
            tree_lines.append((line_no, line))
        elif keyword == "claim":
            claim = rest.strip()
        elif keyword == "verdict":
            try:
                verdict = Verdict(rest.strip())
            except ValueError:
                raise FormatError(f"unknown verdict {rest.strip()!r}", line_no, source)
        elif keyword == "bound":
            try:
                bound = int(rest)
            except ValueError:
                raise FormatError(f"bad bound {rest!r}", line_no, source)
        elif keyword == "refutation" and not rest:
            in_tree = True
        else:
            doc_lines[line_no - 1] = raw

    first = numbered[0][0]
    if not ended:
        raise FormatError("certificate is missing 'end'", first, source)
    if claim is None or verdict is None:
        raise FormatError("certificate needs 'claim' and 'verdict'", first, source)

    # blank placeholders keep line numbers of the embedded document intact
    doc = parse_document("\n".join(doc_lines), source)
    if doc.lists is None:
        raise FormatError("certificate carries no list assignment", first, source)
    coloring = Coloring.from_document(doc) if doc.colors is not None else None
    tree = parse_refutation(tree_lines, source) if tree_lines else None
    return Certificate(claim, verdict, doc.lists, coloring, bound, tree)


def parse_certificates(text: str, source: str = "<text>") -> list[Certificate]:
    lines = text.splitlines()
    groups: list[list[tuple[int, str]]] = []
    for line_no, raw in enumerate(lines, start=1):
        if raw.strip() == HEADER:
            groups.append([])
        elif not groups:
            if raw.split("#", 1)[0].strip():
                raise FormatError(f"expected {HEADER!r}", line_no, source)
            continue
        groups[-1].append((line_no, raw))
    if not groups:
        raise FormatError("no certificate found", 0, source)
    return [_parse_one(group, len(lines), source) for group in groups]


def parse_certificate(text: str, source: str = "<text>") -> Certificate:
    certs = parse_certificates(text, source)
    if len(certs) != 1:
        raise FormatError(f"expected one certificate, found {len(certs)}", 0, source)
    return certs[0]


def check_certificate(cert: Certificate) -> CheckOutcome:
    """Verify a certificate by direct checks only."""
    prism = Prism(cert.n)

    def fail(reason: str) -> CheckOutcome:
        return CheckOutcome(cert.claim, cert.verdict, False, reason)

    if cert.verdict is Verdict.UNSAT:
        if cert.refutation is None:
            return fail("UNSAT without a refutation")
        if cert.coloring is not None:
            return fail("UNSAT certificate carries a coloring")
        if not check_refutation(prism, cert.lists, cert.refutation):
            return fail("refutation does not replay")
        return CheckOutcome(cert.claim, cert.verdict, True)

    if cert.coloring is None:
        return fail(f"{cert.verdict.value} without a coloring")
    if not is_list_coloring(prism, cert.lists, cert.coloring):
        return fail("coloring is not a proper list coloring")
    if cert.verdict is Verdict.BOUNDED:
        if cert.bound is None:
            return fail("BOUNDED without a bound")
        if not is_bounded(cert.coloring, cert.bound):
            return fail(f"a color class exceeds {cert.bound}")
    return CheckOutcome(cert.claim, cert.verdict, True)


def check_certificate_text(text: str, source: str = "<text>") -> list[CheckOutcome]:
    return [check_certificate(cert) for cert in parse_certificates(text, source)]
