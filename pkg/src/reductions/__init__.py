"""
Reducible configurations and local improvement of colorings.

Components:
- patterns: configuration records and the pattern-file parser
- matching: placements of a configuration under the prism automorphisms
- moves: recoloring moves applied at a placement
- improve: window re-solving and the local-minimum loop
- blocks: block decomposition around the blue class
- report: configuration-freeness reports and six-rung counts
- fixtures: random colorings with a planted configuration
"""

from .blocks import Attribution, Block, BlockKind, BlockSequence, block_decompose, blue_rungs
from .fixtures import Fixture, plant_fixture
from .improve import improve_to_local_min, window_improve
from .matching import Placement, find_matches, hypotheses_hold
from .moves import NotApplicable, apply_move
from .patterns import Configuration, load_configurations, parse_configurations
from .report import ConfigReport, assert_config_free, max_red_blue_in_six, six_rung_counts

__all__ = [
    "Attribution",
    "Block",
    "BlockKind",
    "BlockSequence",
    "block_decompose",
    "blue_rungs",
    "Fixture",
    "plant_fixture",
    "improve_to_local_min",
    "window_improve",
    "Placement",
    "find_matches",
    "hypotheses_hold",
    "NotApplicable",
    "apply_move",
    "Configuration",
    "load_configurations",
    "parse_configurations",
    "ConfigReport",
    "assert_config_free",
    "max_red_blue_in_six",
    "six_rung_counts",
]
