"""
Verification campaigns, certificates and the command line.

Components:
- models: CampaignConfig and n-range parsing
- certificates: prism-cert v1 writer, parser and checker
- choice: 2-list UNSAT and 3-list SAT certificates
- equitable: sampled and exhaustive equitable-choosability campaigns
- lemmas: lemma suite and charge-identity sweep
- oracle: lex-min against enumeration, local search against lex-min
- parallel: order-preserving process pool map
- run_prism: command-line entry point
"""

from .certificates import (
    Certificate,
    CheckOutcome,
    Verdict,
    check_certificate,
    check_certificate_text,
    parse_certificate,
    parse_certificates,
)
from .choice import ChoiceReport, adversarial_lists, verify_choice_number, verify_choice_range
from .equitable import EquitableReport, verify_equitable
from .lemmas import LemmaReport, verify_charge_identity, verify_lemma_suite
from .models import CampaignConfig, parse_n_range
from .oracle import OracleReport, verify_oracle
from .parallel import run_parallel

__all__ = [
    "Certificate",
    "CheckOutcome",
    "Verdict",
    "check_certificate",
    "check_certificate_text",
    "parse_certificate",
    "parse_certificates",
    "ChoiceReport",
    "adversarial_lists",
    "verify_choice_number",
    "verify_choice_range",
    "EquitableReport",
    "verify_equitable",
    "LemmaReport",
    "verify_charge_identity",
    "verify_lemma_suite",
    "CampaignConfig",
    "parse_n_range",
    "OracleReport",
    "verify_oracle",
    "run_parallel",
]
