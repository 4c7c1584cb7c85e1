from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.errors import InvalidParameter
from src.prism.graph import (
    Layer,
    Prism,
    Vertex,
    build_prism,
    counting_identity,
    parse_vertex,
    vertex_at,
    window_sums,
)
from src.prism.lists import ListAssignment, random_uniform, uniform_assignment
from src.prism.symmetry import (
    VertexMap,
    assignment_from_key,
    automorphism_group,
    canonical_form,
    canonical_keys,
    enumerate_canonical_assignments,
    transport,
)
from src.solver.coloring import Coloring, color_word, is_proper

from conftest import U, V


class TestPrism:
    def test_rejects_small_n(self):
        with pytest.raises(InvalidParameter):
            Prism(2)
        with pytest.raises(InvalidParameter):
            build_prism(1)
        assert build_prism(4) == Prism(4)

    @pytest.mark.parametrize("n", [3, 4, 7, 10])
    def test_cubic_with_3n_edges(self, n):
        p = Prism(n)
        assert p.order == 2 * n
        assert len(p.edges) == 3 * n
        assert p.graph.number_of_edges() == 3 * n
        assert all(len(set(nbrs)) == 3 for nbrs in p.adjacency)

    def test_scan_order(self):
        assert U(0).scan == 0
        assert V(0).scan == 1
        assert U(3).scan == 6
        assert vertex_at(7) == V(3)

    def test_neighbors(self, prism6):
        assert set(prism6.neighbors(U(0))) == {U(5), U(1), V(0)}

    def test_girth_and_bipartite(self):
        assert Prism(3).girth() == 3
        assert Prism(5).girth() == 4
        assert Prism(6).is_bipartite()
        assert not Prism(5).is_bipartite()

    def test_faces(self, prism6):
        assert len(prism6.four_faces) == 6
        assert prism6.four_faces[5] == (U(5), U(0), V(0), V(5))
        assert len(prism6.n_faces) == 2
        assert len(prism6.faces) == 8
        assert all(len(f) == 6 for f in prism6.n_faces)

    def test_windows(self, prism6):
        windows = prism6.windows(6)
        assert len(windows) == 6
        assert windows[4].rungs == (4, 5, 0, 1, 2, 3)
        assert len(prism6.windows(2)[0].vertices) == 4
        with pytest.raises(InvalidParameter):
            prism6.windows(7)
        with pytest.raises(InvalidParameter):
            prism6.windows(0)

    @given(
        n=st.integers(min_value=3, max_value=14),
        data=st.data(),
    )
    @settings(max_examples=50, deadline=None)
    def test_counting_identity(self, n, data):
        p = Prism(n)
        indicator = data.draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
        width = data.draw(st.integers(1, n))
        assert counting_identity(p, indicator, width)
        assert len(window_sums(p, indicator, width)) == n


class TestVertices:
    def test_parse(self):
        assert parse_vertex("U3") == Vertex(Layer.U, 3)
        assert parse_vertex(" V0 ") == V(0)
        assert str(V(12)) == "V12"

    @pytest.mark.parametrize("token", ["", "W1", "U", "U-1", "3U"])
    def test_parse_rejects(self, token):
        with pytest.raises(ValueError):
            parse_vertex(token)


class TestSymmetry:
    @pytest.mark.parametrize("n, size", [(3, 12), (4, 16), (6, 24)])
    def test_group_size(self, n, size):
        group = automorphism_group(Prism(n))
        assert len(group) == size
        assert group[0].is_identity
        assert len({m.permutation for m in group}) == size

    @given(
        n=st.integers(3, 9),
        shift=st.integers(0, 20),
        reflect=st.booleans(),
        swap=st.booleans(),
    )
    @settings(max_examples=60, deadline=None)
    def test_maps_preserve_edges(self, n, shift, reflect, swap):
        p = Prism(n)
        m = VertexMap(n, shift, reflect, swap)
        edges = {frozenset(e) for e in p.edges}
        assert {frozenset((m(a), m(b))) for a, b in p.edges} == edges
        assert m.compose(m.inverse()).is_identity

    def test_compose_is_self_after_other(self):
        a = VertexMap(6, shift=2)
        b = VertexMap(6, shift=1, reflect=True, swap=True)
        for v in Prism(6).vertices:
            assert a.compose(b)(v) == a(b(v))

    @given(seed=st.integers(0, 10_000), index=st.integers(0, 23))
    @settings(max_examples=40, deadline=None)
    def test_canonical_form_invariant(self, seed, index):
        p = Prism(6)
        lists = random_uniform(p, 3, 6, seed)
        m = automorphism_group(p)[index]
        renaming = {c: (c * 5 + 3) % 7 + 10 for c in range(6)}
        moved = transport(lists, m).rename_colors(renaming)
        assert canonical_form(p, moved) == canonical_form(p, lists)

    def test_enumeration_yields_distinct_orbits(self, prism3):
        keys = [canonical_form(prism3, a) for a in enumerate_canonical_assignments(prism3, 2, 3)]
        assert keys
        assert len(keys) == len(set(keys))

    def test_identical_lists_form_one_orbit(self, prism3):
        assert len(list(enumerate_canonical_assignments(prism3, 2, 2))) == 1

    def test_apply_is_call(self):
        m = VertexMap(5, shift=3, reflect=True, swap=True)
        assert m.apply(U(1)) == m(U(1)) == V(2)
        assert m.apply(V(0)) == U(3)

    @given(
        n=st.integers(3, 8),
        seed=st.integers(0, 10_000),
        shift=st.integers(0, 7),
        reflect=st.booleans(),
        swap=st.booleans(),
    )
    @settings(max_examples=60, deadline=None)
    def test_moved_coloring_keeps_properness_and_word(self, n, seed, shift, reflect, swap):
        p = Prism(n)
        rng = np.random.default_rng(seed)
        c = Coloring(n, tuple(int(x) for x in rng.integers(0, 4, 2 * n)))
        moved = c.apply_map(VertexMap(n, shift, reflect, swap))
        assert is_proper(p, moved) == is_proper(p, c)
        assert color_word(moved) == color_word(c)

    @pytest.mark.parametrize("n", [3, 4])
    def test_enumeration_matches_brute_force(self, n):
        p = Prism(n)
        pairs = list(combinations(range(3), 2))
        expected = {
            canonical_form(p, ListAssignment.from_sequence(n, rows))
            for rows in product(pairs, repeat=2 * n)
        }
        keys = list(canonical_keys(p, 2, 3))
        assert len(keys) == len(set(keys))
        assert set(keys) == expected

    def test_keys_are_their_own_canonical_form(self):
        p = Prism(4)
        for key in canonical_keys(p, 3, 4):
            assert canonical_form(p, assignment_from_key(4, key)) == key

    def test_enumeration_budget(self, prism3):
        from src.errors import BudgetExceeded

        with pytest.raises(BudgetExceeded):
            list(enumerate_canonical_assignments(prism3, 3, 6, budget=10))


class TestLists:
    def test_uniform(self, prism3):
        lists = uniform_assignment(prism3, {0, 1, 2})
        assert lists.k == 3
        assert lists.is_identical
        assert lists[U(2)] == frozenset({0, 1, 2})

    def test_uniform_empty(self, prism3):
        with pytest.raises(InvalidParameter):
            uniform_assignment(prism3, set())

    def test_mixed_sizes_rejected(self):
        with pytest.raises(InvalidParameter):
            ListAssignment.from_sequence(3, [{0, 1}] * 5 + [{0}])

    def test_random_uniform_is_deterministic(self, prism6):
        a = random_uniform(prism6, 3, 6, 42)
        b = random_uniform(prism6, 3, 6, 42)
        assert a == b
        assert all(len(lst) == 3 and lst <= set(range(6)) for lst in a.lists)
        assert random_uniform(prism6, 3, 6, 43) != a

    def test_restrict_universe(self):
        lists = ListAssignment.from_sequence(3, [{4, 9}] * 6)
        assert lists.restrict_universe().universe == frozenset({0, 1})
