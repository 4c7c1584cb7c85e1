#!/usr/bin/env python3
"""
Command line for prism list coloring and the verification campaigns.

Usage:
    python -m src.campaigns.run_prism solve --n 6 --seed 7
    python -m src.campaigns.run_prism lexmin --input lists.txt
    python -m src.campaigns.run_prism equitize --n 6 --seed 7
    python -m src.campaigns.run_prism independence --n 5
    python -m src.campaigns.run_prism verify choice --n 3..10 --out choice.cert
    python -m src.campaigns.run_prism verify equitable --n 4 --samples 100000 --seed 1 --jobs 4
    python -m src.campaigns.run_prism verify equitable --n 3 --mode exhaustive --universe 6
    python -m src.campaigns.run_prism verify lemmas --n 6 --samples 1000 --seed 0
    python -m src.campaigns.run_prism verify oracle --n 3..6 --samples 1000 --local-n 6 --max-width 7
    python -m src.campaigns.run_prism discharge-audit --input coloring.txt
    python -m src.campaigns.run_prism discharge-audit --n 6..12 --samples 100000 --seed 0
    python -m src.campaigns.run_prism check choice.cert
    python -m src.campaigns.run_prism enumerate --n 3 --k 3 --universe 6

Exit status is 0 exactly when every claim of the command was verified.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional

# Add repo root to path if running directly
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from pydantic import ValidationError

from src.campaigns.certificates import check_certificate_text
from src.campaigns.choice import verify_choice_range
from src.campaigns.equitable import verify_equitable
from src.campaigns.lemmas import verify_charge_identity, verify_lemma_suite
from src.campaigns.models import CampaignConfig, parse_n_range
from src.campaigns.oracle import verify_oracle
from src.config import settings
from src.discharging.ledger import audit, table_rows
from src.errors import PrismError, Unsatisfiable
from src.prism.graph import Prism
from src.prism.lists import ListAssignment, random_uniform, uniform_assignment
from src.prism.symmetry import enumerate_canonical_assignments
from src.prism.textio import PrismDocument, format_document, parse_document
from src.solver.coloring import Coloring, equitable_bound, is_bounded, is_proper
from src.solver.equitable import equitable_coloring
from src.solver.oracles import count_proper_colorings, max_independent_set
from src.solver.search import SearchResult, lexmin, solve_proper

logger = logging.getLogger("src.campaigns.run_prism")


def _single_n(text: str) -> int:
    values = parse_n_range(text)
    if len(values) != 1:
        raise PrismError(f"this command takes a single n, got {text!r}")
    return values[0]


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise PrismError(f"cannot read {path}: {e}")


def _load_lists(args) -> ListAssignment:
    if args.input:
        doc = parse_document(_read(args.input), source=args.input)
        if doc.lists is None:
            raise PrismError(f"{args.input} carries no list assignment")
        return doc.lists
    if args.n is None:
        raise PrismError("give --input or --n")
    n = _single_n(args.n)
    seed = settings.seed if args.seed is None else args.seed
    return random_uniform(Prism(n), args.k, args.universe, seed)


def _print_result(args, lists: ListAssignment, result: SearchResult) -> None:
    doc = result.coloring.to_document(lists if args.with_lists else None)
    if args.format == "text":
        print(result.summary())
        print()
    print(format_document(doc), end="")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_solve(args) -> int:
    lists = _load_lists(args)
    prism = Prism(lists.n)
    coloring = solve_proper(prism, lists)
    if coloring is None:
        print(format_document(PrismDocument(n=lists.n, lists=lists, unsat=True)), end="")
        return 0
    print(format_document(coloring.to_document(lists if args.with_lists else None)), end="")
    return 0


def cmd_lexmin(args) -> int:
    lists = _load_lists(args)
    prism = Prism(lists.n)
    try:
        result = lexmin(prism, lists, budget_nodes=args.budget_nodes)
    except Unsatisfiable:
        print(format_document(PrismDocument(n=lists.n, lists=lists, unsat=True)), end="")
        return 0
    _print_result(args, lists, result)
    return 0


def cmd_equitize(args) -> int:
    lists = _load_lists(args)
    prism = Prism(lists.n)
    bound = equitable_bound(prism.n, lists.k)
    result = equitable_coloring(prism, lists, bound=bound, budget_nodes=args.budget_nodes)
    _print_result(args, lists, result)
    ok = is_proper(prism, result.coloring) and is_bounded(result.coloring, bound)
    return 0 if ok else 1


def cmd_independence(args) -> int:
    n = _single_n(args.n or "3")
    witness = max_independent_set(Prism(n))
    vertices = ",".join(str(v) for v in sorted(witness, key=lambda v: v.scan))
    if args.format == "text":
        print(Prism(n).summary())
        print(f"alpha(prism n={n}) = {len(witness)}")
        print(f"Witness: {vertices}")
    else:
        print(f"n={n} alpha={len(witness)} witness={vertices}")
    return 0


def _emit(args, report) -> int:
    if args.format == "text":
        print(report.summary())
    else:
        print("\n".join(report.records()))
    return 0 if report.ok else 1


def cmd_verify_choice(args) -> int:
    report = verify_choice_range(parse_n_range(args.n or "3..10"))
    if args.out:
        Path(args.out).write_text("".join(c.to_text() for c in report.certificates))
        logger.info("Wrote %d certificates to %s", len(report.certificates), args.out)
    return _emit(args, report)


def cmd_verify_equitable(args) -> int:
    try:
        config = CampaignConfig(
            n_values=parse_n_range(args.n or "4"),
            mode=args.mode,
            samples=args.samples or settings.samples,
            universe=args.universe,
            seed=settings.seed if args.seed is None else args.seed,
            jobs=args.jobs or settings.workers,
            budget_nodes=args.budget_nodes or settings.budget_nodes,
            time_limit=args.time_limit,
        )
    except ValidationError as e:
        raise PrismError(f"invalid campaign: {e}")
    report = verify_equitable(config, progress=args.format == "text")
    code = _emit(args, report)
    for failure in report.failures()[:1]:
        if failure.witness:
            print("\nFirst failing assignment:\n" + failure.witness, end="")
    return code


def cmd_verify_lemmas(args) -> int:
    n_values = parse_n_range(args.n or "6")
    code = 0
    for n in n_values:
        report = verify_lemma_suite(
            n,
            samples=args.samples or settings.samples,
            seed=settings.seed if args.seed is None else args.seed,
            inject_violation=args.inject_violation,
            universe=args.universe,
            budget_nodes=args.budget_nodes,
            jobs=args.jobs or settings.workers,
            progress=args.format == "text",
        )
        code |= _emit(args, report)
    return code


def cmd_verify_oracle(args) -> int:
    report = verify_oracle(
        parse_n_range(args.n or "3..6"),
        samples=args.samples or settings.samples,
        seed=settings.seed if args.seed is None else args.seed,
        universe=args.universe,
        local_n=args.local_n,
        local_trials=args.local_trials,
        max_width=args.max_width,
        jobs=args.jobs or settings.workers,
        time_limit=args.time_limit,
        progress=args.format == "text",
    )
    return _emit(args, report)


def cmd_discharge_audit(args) -> int:
    if args.input:
        doc = parse_document(_read(args.input), source=args.input)
        coloring = Coloring.from_document(doc)
        ledger = audit(Prism(doc.n), coloring, blue=args.blue)
        if args.format == "text":
            print("=" * 50)
            print("DISCHARGING AUDIT")
            print("=" * 50)
            print(ledger.summary())
        else:
            print("\n".join(ledger.records()))
        return 0 if ledger.conserved else 1

    rows = table_rows()
    group = verify_charge_identity(
        parse_n_range(args.n or "6..12"),
        samples=args.samples or settings.samples,
        seed=settings.seed if args.seed is None else args.seed,
    )
    table_ok = all(row.matches for row in rows)
    if args.format == "text":
        print("=" * 50)
        print("BLOCK CHARGE TABLE")
        print("=" * 50)
        for row in rows:
            print(f"  [{'ok' if row.matches else 'MISMATCH'}] {row}")
        print(f"\nCharge identity: {group.checked:,} colorings, {len(group.failures)} failures")
        for note in group.notes:
            print(f"  {note}")
        for failure in group.failures[:3]:
            print(f"  ! {failure}")
    else:
        for row in rows:
            print(
                f"kind={row.kind} left={row.left} initial={row.initial} "
                f"final={row.final} ok={str(row.matches).lower()}"
            )
        print(f"identity_checks={group.checked} failures={len(group.failures)}")
    return 0 if table_ok and group.ok else 1


def cmd_check(args) -> int:
    outcomes = check_certificate_text(_read(args.certificate), source=args.certificate)
    for outcome in outcomes:
        if args.format == "text":
            print(outcome)
        else:
            print(f"claim={outcome.claim} ok={str(outcome.ok).lower()}")
    return 0 if all(o.ok for o in outcomes) else 1


def cmd_enumerate(args) -> int:
    n = _single_n(args.n or "3")
    if n > 4:
        raise PrismError(f"canonical enumeration is limited to n <= 4, got {n}")
    prism = Prism(n)
    orbits = sum(1 for _ in enumerate_canonical_assignments(prism, args.k, args.universe))
    colorings: Optional[int] = None
    if args.count_colorings:
        colorings = count_proper_colorings(prism, uniform_assignment(prism, range(args.k)))
    if args.format == "text":
        print(f"prism n={n}, k={args.k}, universe cap {args.universe}: {orbits:,} canonical assignments")
        if colorings is not None:
            print(f"Proper colorings from identical {args.k}-lists: {colorings:,}")
    else:
        line = f"n={n} k={args.k} universe_cap={args.universe} orbits={orbits}"
        if colorings is not None:
            line += f" colorings={colorings}"
        print(line)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--n', help='Prism size: N, A..B or A,B,C')
    common.add_argument('--k', type=int, default=3, help='List size')
    common.add_argument('--universe', type=int, default=settings.universe, help='Color universe size')
    common.add_argument('--seed', type=int, default=None, help='Random seed')
    common.add_argument('--samples', type=int, default=None, help='Number of sampled assignments')
    common.add_argument(
        '--mode', choices=['exhaustive', 'sample'], default='sample', help='Campaign mode'
    )
    common.add_argument('--budget-nodes', type=int, default=None, help='Search node budget')
    common.add_argument('--jobs', type=int, default=None, help='Worker processes (default: one per CPU)')
    common.add_argument(
        '--format', choices=['text', 'machine'], default=settings.default_format, help='Output format'
    )
    common.add_argument('--input', help='Text file with a prism document')
    common.add_argument('--with-lists', action='store_true', help='Echo the lists with the coloring')

    parser = argparse.ArgumentParser(description='List coloring and verification for prism graphs')
    sub = parser.add_subparsers(dest='command', required=True)

    sub.add_parser('solve', parents=[common], help='Any proper list coloring').set_defaults(func=cmd_solve)
    sub.add_parser('lexmin', parents=[common], help='Lex-min list coloring').set_defaults(func=cmd_lexmin)
    sub.add_parser(
        'equitize', parents=[common], help='Equitable list coloring'
    ).set_defaults(func=cmd_equitize)
    sub.add_parser(
        'independence', parents=[common], help='Independence number'
    ).set_defaults(func=cmd_independence)

    verify = sub.add_parser('verify', help='Verification campaigns')
    claims = verify.add_subparsers(dest='claim', required=True)
    choice = claims.add_parser('choice', parents=[common], help='Choice number 3')
    choice.add_argument('--out', help='Write the certificates to this file')
    choice.set_defaults(func=cmd_verify_choice)
    equitable = claims.add_parser('equitable', parents=[common], help='Equitable 3-choosability')
    equitable.add_argument('--time-limit', type=float, default=None, help='Seconds before stopping')
    equitable.set_defaults(func=cmd_verify_equitable)
    lemmas = claims.add_parser('lemmas', parents=[common], help='Lemma suite')
    lemmas.add_argument(
        '--inject-violation', action='store_true', help='Corrupt one coloring to test the harness'
    )
    lemmas.set_defaults(func=cmd_verify_lemmas)
    oracle = claims.add_parser('oracle', parents=[common], help='Lex-min against brute force')
    oracle.add_argument('--local-n', type=int, default=6, help='Prism size for the local-search trials')
    oracle.add_argument(
        '--local-trials', type=int, default=None, help='Local-search trials (default: --samples, 0 skips)'
    )
    oracle.add_argument('--max-width', type=int, default=None, help='Widest recoloring window in rungs')
    oracle.add_argument('--time-limit', type=float, default=None, help='Seconds before stopping')
    oracle.set_defaults(func=cmd_verify_oracle)

    discharge = sub.add_parser(
        'discharge-audit', parents=[common], help='Charge audit of a coloring or the identity sweep'
    )
    discharge.add_argument('--blue', type=int, default=None, help='Blue color (default: a largest class)')
    discharge.set_defaults(func=cmd_discharge_audit)

    check = sub.add_parser('check', parents=[common], help='Re-check certificates')
    check.add_argument('certificate', help='Certificate file')
    check.set_defaults(func=cmd_check)

    enum = sub.add_parser('enumerate', parents=[common], help='Count canonical list assignments')
    enum.add_argument('--count-colorings', action='store_true', help='Also count proper colorings')
    enum.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    logging.basicConfig(level=settings.log_level, format='[%(levelname)s] %(message)s')
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PrismError as e:
        logger.error("%s", e)
        return 1


if __name__ == '__main__':
    sys.exit(main())
