"""
Exact charges and the two discharging rules over block sequences.

Components:
- charge: integer-thirds Charge values
- ledger: vertex and face charges, block charges, rules and the audit
"""

from .charge import ZERO, Charge, total
from .ledger import (
    INITIAL_CHARGES,
    ChargeLedger,
    RuleOutcome,
    TableRow,
    Transfer,
    apply_rules,
    audit,
    block_charges,
    expected_final,
    expected_total,
    face_charge,
    table_fixture,
    table_rows,
    total_charge,
    vertex_charge,
)

__all__ = [
    "ZERO",
    "Charge",
    "total",
    "INITIAL_CHARGES",
    "ChargeLedger",
    "RuleOutcome",
    "TableRow",
    "Transfer",
    "apply_rules",
    "audit",
    "block_charges",
    "expected_final",
    "expected_total",
    "face_charge",
    "table_fixture",
    "table_rows",
    "total_charge",
    "vertex_charge",
]
