import pytest
from hypothesis import given, settings, strategies as st

from src.errors import BudgetExceeded, InvalidParameter, Unsatisfiable
from src.prism.graph import Layer, Prism
from src.prism.lists import ListAssignment, random_uniform, uniform_assignment
from src.prism.symmetry import automorphism_group, transport
from src.solver.coloring import (
    ColorWord,
    Coloring,
    Comparison,
    color_word,
    compare,
    equitable_bound,
    is_bounded,
    is_list_coloring,
    is_proper,
    unused_color_move,
)
from src.solver.equitable import bounded_coloring, equitable_coloring
from src.solver.search import LexMinSearch, lexmin, solve_proper

from conftest import color_by

words = st.lists(st.integers(1, 6), max_size=6).map(lambda xs: ColorWord(tuple(sorted(xs, reverse=True))))


class TestColorWords:
    def test_zero_padding(self):
        assert ColorWord((2, 2)) < ColorWord((2, 2, 1))
        assert ColorWord((3,)) > ColorWord((2, 2, 2))
        assert compare(ColorWord((4, 4, 4)), ColorWord((4, 4, 4))) is Comparison.EQUAL

    def test_rejects_unsorted(self):
        with pytest.raises(InvalidParameter):
            ColorWord((1, 2))

    @given(a=words, b=words, c=words)
    @settings(max_examples=200)
    def test_total_order(self, a, b, c):
        assert (a < b) + (a == b) + (a > b) == 1
        if a <= b and b <= c:
            assert a <= c

    def test_word_of_coloring(self, prism6):
        c = color_by(prism6, lambda layer, i: i % 3 if layer is Layer.U else (i + 1) % 3)
        assert is_proper(prism6, c)
        assert color_word(c) == ColorWord((4, 4, 4))
        assert str(color_word(c)) == "4,4,4"


@pytest.mark.parametrize("n, bound", [(3, 2), (4, 3), (5, 4), (6, 4), (10, 7)])
def test_equitable_bound(n, bound):
    assert equitable_bound(n) == bound


class TestSolveProper:
    def test_identical_three_lists(self, prism3, identical3):
        c = solve_proper(prism3, identical3)
        assert is_list_coloring(prism3, identical3, c)

    def test_odd_cycle_with_two_colors(self):
        assert solve_proper(Prism(5), uniform_assignment(Prism(5), {0, 1})) is None

    def test_mismatched_assignment(self, prism6, identical3):
        with pytest.raises(InvalidParameter):
            solve_proper(prism6, identical3)


class TestLexMin:
    def test_prism3(self, prism3, identical3):
        result = lexmin(prism3, identical3)
        assert result.exact
        assert result.word == ColorWord((2, 2, 2))

    def test_prism6(self, prism6):
        result = lexmin(prism6, uniform_assignment(prism6, {0, 1, 2}))
        assert result.word == ColorWord((4, 4, 4))
        assert result.mode == "exact"

    def test_unsatisfiable(self, prism3):
        with pytest.raises(Unsatisfiable):
            lexmin(prism3, uniform_assignment(prism3, {0, 1}))

    def test_budget_without_coloring(self, prism6):
        with pytest.raises(BudgetExceeded):
            lexmin(prism6, uniform_assignment(prism6, {0, 1, 2}), budget_nodes=1, refine=False)

    def test_budget_returns_inexact_result(self, prism6):
        # the first descent reaches a leaf at node 13
        lists = uniform_assignment(prism6, {0, 1, 2})
        result = lexmin(prism6, lists, budget_nodes=13)
        assert not result.exact
        assert is_list_coloring(prism6, lists, result.coloring)

    def test_fixed_vertices(self, prism6):
        lists = uniform_assignment(prism6, {0, 1, 2})
        result = lexmin(prism6, lists, fixed={0: 2})
        assert result.coloring.at(0) == 2
        assert result.word == ColorWord((4, 4, 4))

    def test_deterministic_tie_break(self, prism3, identical3):
        first = lexmin(prism3, identical3).coloring
        second = lexmin(prism3, identical3).coloring
        assert first == second

    def test_upper_bound_excludes_equal_words(self, prism3, identical3):
        search = LexMinSearch(prism3, identical3, upper=ColorWord((2, 2, 2)))
        assert search.run() is None
        assert search.exhausted

    @given(seed=st.integers(0, 5000))
    @settings(max_examples=25, deadline=None)
    def test_lexmin_is_bounded(self, seed):
        p = Prism(5)
        lists = random_uniform(p, 3, 6, seed)
        result = lexmin(p, lists)
        assert is_list_coloring(p, lists, result.coloring)
        assert is_bounded(result.coloring, equitable_bound(5))


class TestEquitable:
    @pytest.mark.parametrize("seed", range(8))
    def test_small_prisms(self, seed, random_lists):
        for n in (4, 5, 7):
            lists = random_lists(n, seed)
            result = equitable_coloring(Prism(n), lists)
            assert is_list_coloring(Prism(n), lists, result.coloring)
            assert result.word.largest <= equitable_bound(n)

    def test_larger_prism_uses_local_search(self, random_lists):
        p = Prism(12)
        lists = random_lists(12, 5)
        result = equitable_coloring(p, lists)
        assert result.mode in ("local-min", "bounded")
        assert result.word.largest <= 8

    def test_bounded_coloring(self, prism6):
        lists = uniform_assignment(prism6, {0, 1, 2})
        found, exhausted, _ = bounded_coloring(prism6, lists, 4)
        assert exhausted
        assert is_bounded(found, 4)
        none, exhausted, _ = bounded_coloring(prism6, lists, 3)
        assert none is None and exhausted


class TestUnusedColorMove:
    def test_spare_color_splits_a_class(self, prism3):
        lists = uniform_assignment(prism3, {0, 1, 2, 3})
        c = Coloring(3, (0, 1, 1, 2, 2, 0))
        moved = unused_color_move(lists, c)
        assert moved is not None
        assert is_list_coloring(prism3, lists, moved)
        assert color_word(moved) < color_word(c)

    def test_lexmin_admits_none(self, prism3):
        lists = ListAssignment.from_sequence(3, [{0, 1, 2, 3}] * 6)
        assert unused_color_move(lists, lexmin(prism3, lists).coloring) is None


class TestLexMinSymmetry:
    @given(seed=st.integers(0, 5000), index=st.integers(0, 23), n=st.sampled_from([5, 6]))
    @settings(max_examples=30, deadline=None)
    def test_word_is_invariant_under_automorphisms(self, seed, index, n):
        p = Prism(n)
        lists = random_uniform(p, 3, 6, seed)
        m = automorphism_group(p)[index % (4 * n)]
        moved = transport(lists, m)
        result = lexmin(p, moved)
        assert result.word == lexmin(p, lists).word
        assert is_list_coloring(p, moved, result.coloring)

    def test_moved_lexmin_is_a_coloring_of_moved_lists(self, prism6):
        lists = random_uniform(prism6, 3, 6, 11)
        c = lexmin(prism6, lists).coloring
        for m in automorphism_group(prism6):
            assert is_list_coloring(prism6, transport(lists, m), c.apply_map(m))


class TestBound:
    def test_empty_partial_coloring_spreads_evenly(self, prism3, identical3):
        assert LexMinSearch(prism3, identical3)._bound(0) == (2, 2, 2)

    def test_fixed_colors_count_toward_their_classes(self, prism6):
        lists = uniform_assignment(prism6, {0, 1, 2})
        search = LexMinSearch(prism6, lists, fixed={0: 0, 2: 1, 4: 2})
        assert search._bound(0) == (4, 4, 4)

    def test_vertex_without_open_color_is_stuck(self, prism3):
        # V0 sees U0 and V1
        search = LexMinSearch(prism3, uniform_assignment(prism3, {0, 1}), fixed={0: 0, 3: 1})
        assert search._bound(0) is None


def test_classes_partition_the_vertices(prism6):
    c = color_by(prism6, lambda layer, i: i % 3 if layer is Layer.U else (i + 1) % 3)
    classes = c.classes()
    assert set(classes) == {0, 1, 2}
    assert {len(vs) for vs in classes.values()} == {4}
    assert sorted(v.scan for vs in classes.values() for v in vs) == list(range(12))
    assert all(c[v] == color for color, vs in classes.items() for v in vs)
