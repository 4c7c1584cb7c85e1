from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.errors import InvalidParameter
from src.prism.graph import Prism
from src.reductions.blocks import BlockKind
from src.discharging import (
    INITIAL_CHARGES,
    Charge,
    apply_rules,
    audit,
    expected_total,
    face_charge,
    table_rows,
    total,
    total_charge,
    vertex_charge,
)

from conftest import U, V, blue_at

B0, B1, B2, B3 = BlockKind


class TestCharge:
    def test_str(self):
        assert str(Charge(10)) == "10/3"
        assert str(Charge(-5)) == "-5/3"
        assert str(Charge(6)) == "2"
        assert str(Charge.of(-1)) == "-1"

    def test_fractions(self):
        assert Charge.from_fraction(Fraction(5, 3)) == Charge(5)
        assert Charge.from_fraction(2) == Charge.of(2)
        assert Charge(4).to_fraction() == Fraction(4, 3)
        with pytest.raises(InvalidParameter):
            Charge.from_fraction(Fraction(1, 2))

    def test_arithmetic(self):
        assert Charge(5) + Charge(-2) == Charge.of(1)
        assert -Charge(2) == Charge(-2)
        assert 3 * Charge(2) == Charge.of(2)
        assert total([Charge(1)] * 3) == Charge.of(1)
        assert Charge(-1) < Charge(0)


class TestInitialCharges:
    def test_vertex(self, prism6):
        c = blue_at(prism6, [U(1), V(0)])
        assert vertex_charge(prism6, c, 0, U(0)) == Charge.of(-1)
        assert vertex_charge(prism6, c, 0, U(3)) == Charge.of(1)

    def test_faces(self, prism6):
        c = blue_at(prism6, [U(0)])
        assert face_charge(prism6, c, 0, 0) == Charge(1)
        assert face_charge(prism6, c, 0, 2) == Charge(4)
        assert face_charge(prism6, c, 0, 6) == Charge(0)
        assert face_charge(prism6, c, 0, 7) == Charge(0)

    @pytest.mark.parametrize(
        "blue, expected",
        [
            ([U(0), V(1), U(2), V(3), U(4)], Charge(-15)),
            ([U(0), V(1), U(3), V(4)], Charge(0)),
        ],
    )
    def test_total(self, prism6, blue, expected):
        c = blue_at(prism6, blue)
        assert total_charge(prism6, c, 0) == expected
        assert expected_total(6, len(blue)) == expected


class TestRules:
    def test_transfers(self):
        kinds = [B0, B3, B1]
        charges = [Charge(10), Charge(-5), Charge(5)]
        outcome = apply_rules(kinds, charges)
        assert outcome.final == [Charge(13), Charge(-3), Charge(0)]
        assert [(t.rule, t.giver, t.taker) for t in outcome.transfers] == [
            ("rule-1", 1, 0),
            ("rule-2", 2, 1),
        ]

    @given(
        blocks=st.lists(
            st.tuples(st.sampled_from(list(BlockKind)), st.integers(-30, 30)),
            min_size=1,
            max_size=12,
        )
    )
    @settings(max_examples=200)
    def test_rules_conserve_total(self, blocks):
        kinds = [k for k, _ in blocks]
        charges = [Charge(x) for _, x in blocks]
        assert total(apply_rules(kinds, charges).final) == total(charges)


@pytest.mark.parametrize("row", table_rows(), ids=str)
def test_block_table(row):
    assert row.initial == INITIAL_CHARGES[(row.kind, row.left is B0)]
    assert row.matches


class TestAudit:
    def test_bounded_coloring(self, prism6):
        c = blue_at(prism6, [U(0), V(2)])
        ledger = audit(prism6, c, blue=0)
        assert ledger.decomposable
        assert ledger.conserved
        assert ledger.kinds == [B1, B1, B0, B0]
        assert ledger.total == Charge.of(10)
        assert "decomposable=true" in ledger.records()

    def test_three_b3_blocks_go_negative(self):
        p = Prism(12)
        blue = [v for start in (1, 5, 9) for v in (U(start), V(start + 1), U(start + 2))]
        c = blue_at(p, blue)
        ledger = audit(p, c, blue=0)
        assert ledger.blue_vertices == 9
        assert ledger.total == Charge(-15)
        assert ledger.kinds == [B3, B3, B3]
        assert ledger.initial == [Charge(-5)] * 3
        assert ledger.final == [Charge(-5)] * 3
        assert ledger.b3_before_b3 == 3
        assert ledger.min_final == Charge(-5)
        assert ledger.conserved

    def test_odd_prism_above_bound(self):
        p = Prism(7)
        c = blue_at(p, [U(0), V(1), U(2), U(4), V(5)])
        ledger = audit(p, c, blue=0)
        assert ledger.total == Charge(-5)
        assert ledger.conserved

    def test_long_run_is_flagged(self, prism6):
        c = blue_at(prism6, [U(0), V(1), U(2), V(3)])
        ledger = audit(prism6, c, blue=0)
        assert not ledger.decomposable
        assert ledger.conserved
        assert ledger.final == []
        assert "BlueRunTooLong" in ledger.run_error
        assert "decomposable=false" in ledger.records()
        assert "not decomposable" in ledger.summary()

    def test_default_blue_is_a_largest_class(self, prism6):
        c = blue_at(prism6, [U(0), V(2), U(4)])
        assert audit(prism6, c).blue in c.palette
