import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.campaigns.lemmas import random_proper_coloring
from src.errors import MoveError
from src.prism.graph import Prism
from src.prism.lists import random_uniform
from src.prism.symmetry import VertexMap, automorphism_group
from src.reductions.fixtures import plant_fixture, role_colors
from src.reductions.matching import find_matches, ranked_candidates
from src.reductions.moves import NotApplicable, apply_move
from src.reductions.patterns import load_configurations
from src.reductions.report import assert_config_free
from src.solver.coloring import (
    Coloring,
    color_word,
    equitable_bound,
    is_bounded,
    is_list_coloring,
    is_proper,
)
from src.solver.search import lexmin

from conftest import color_by

NAMES = sorted(load_configurations())


def test_ranked_candidates_with_ties(prism6):
    c = color_by(prism6, lambda layer, i: i % 3 if layer.name == "U" else (i + 1) % 3)
    pairs = ranked_candidates(c)
    assert pairs[0] == (0, 1)
    assert len(pairs) == 6


def test_role_colors(configs):
    roles = role_colors(configs["F3"])
    assert roles["blue"] == 0 and roles["red"] == 1


def test_order_guard_limits_matches(configs, prism6):
    c = color_by(prism6, lambda layer, i: i % 3 if layer.name == "U" else (i + 1) % 3)
    assert find_matches(prism6, c, configs["P4.1"]) == []


@pytest.mark.parametrize("name", NAMES)
def test_planted_fixtures_improve(name, configs):
    config = configs[name]
    rng = np.random.default_rng([7, NAMES.index(name)])
    applied = 0
    for _ in range(100):
        fx = plant_fixture(config, rng)
        assert fx.placement.vmap.is_identity
        outcome = apply_move(fx.prism, fx.lists, fx.coloring, fx.placement, configs)
        if isinstance(outcome, NotApplicable):
            assert name not in ("F1", "F2"), outcome.reason
            continue
        applied += 1
        assert is_list_coloring(fx.prism, fx.lists, outcome)
        assert color_word(outcome) < color_word(fx.coloring)
        if config.order is not None:
            assert is_bounded(outcome, equitable_bound(config.order))
    assert applied > 0


@pytest.mark.parametrize("seed", range(6))
def test_lexmin_colorings_are_configuration_free(seed, configs):
    p = Prism(6)
    lists = random_uniform(p, 3, 6, seed)
    c = lexmin(p, lists).coloring
    names = [n for n in NAMES if configs[n].order is None]
    try:
        report = assert_config_free(p, c, lists, configs, names)
    except MoveError as e:
        pytest.fail(f"move failed on a lex-min coloring: {e}")
    assert report.clean, report.summary()


def test_guard_failure_is_not_applicable(configs):
    fx = plant_fixture(configs["F1"], np.random.default_rng(3))
    flat = Coloring(fx.coloring.n, tuple(range(fx.prism.order)))
    assert isinstance(apply_move(fx.prism, fx.lists, flat, fx.placement, configs), NotApplicable)


def _f1_on_prism6() -> Coloring:
    """Blue U1 with red U0, U2, V1; no other blue vertex has three red neighbours."""
    u = (1, 0, 1, 2, 0, 3)
    v = (0, 1, 0, 3, 2, 4)
    return Coloring(6, tuple(c for pair in zip(u, v) for c in pair))


F1_PLACEMENTS = {VertexMap(6), VertexMap(6, shift=2, reflect=True)}


class TestFindMatches:
    def test_planted_f1_is_matched_exactly_where_planted(self, configs, prism6):
        c = _f1_on_prism6()
        assert is_proper(prism6, c)
        matches = find_matches(prism6, c, configs["F1"])
        assert {m.vmap for m in matches} == F1_PLACEMENTS
        assert all(m.roles == {"blue": 0, "red": 1} for m in matches)

    @pytest.mark.parametrize("index", range(24))
    def test_matches_move_with_the_coloring(self, configs, index):
        vmap = automorphism_group(Prism(6))[index]
        moved = _f1_on_prism6().apply_map(vmap)
        found = {m.vmap for m in find_matches(Prism(6), moved, configs["F1"])}
        assert found == {vmap.compose(p) for p in F1_PLACEMENTS}

    @given(n=st.integers(6, 9), seed=st.integers(0, 10_000))
    @settings(max_examples=30, deadline=None)
    def test_no_blue_vertex_means_no_match(self, configs, n, seed):
        p = Prism(n)
        rng = np.random.default_rng(seed)
        c = random_proper_coloring(p, rng, int(rng.integers(4, 7)))
        absent = max(c.palette) + 1
        for name, config in configs.items():
            assert find_matches(p, c, config, blue=absent) == [], name

    def test_designated_blue_rebinds_roles(self, configs):
        c = _f1_on_prism6()
        assert ranked_candidates(c, blue=2) == [(2, 0)]
        # with blue 1 and red 0, V1 is the center
        matches = find_matches(Prism(6), c, configs["F1"], blue=1)
        assert {m.vmap for m in matches} == {
            VertexMap(6, swap=True),
            VertexMap(6, shift=2, reflect=True, swap=True),
        }
        assert all(m.roles == {"blue": 1, "red": 0} for m in matches)
