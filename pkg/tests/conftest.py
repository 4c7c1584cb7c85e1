"""Shared fixtures for the prism test suite."""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add repo root to path if running without an install
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.prism.graph import Layer, Prism, Vertex
from src.prism.lists import random_uniform, uniform_assignment
from src.reductions.patterns import load_configurations
from src.solver.coloring import Coloring


def color_by(prism: Prism, rule) -> Coloring:
    """Coloring from a function of (layer, index)."""
    return Coloring.from_mapping(prism, {v: rule(v.layer, v.index) for v in prism.vertices})


def blue_at(prism: Prism, blue_vertices, blue: int = 0) -> Coloring:
    """Blue on the given vertices, every other vertex greedily from 1, 2, 3, 4."""
    colors = [-1] * prism.order
    for v in blue_vertices:
        colors[v.scan] = blue
    for s in range(prism.order):
        if colors[s] < 0:
            taken = {colors[t] for t in prism.adjacency[s]}
            colors[s] = min(c for c in (1, 2, 3, 4) if c not in taken)
    return Coloring(prism.n, tuple(colors))


def U(i: int) -> Vertex:
    return Vertex(Layer.U, i)


def V(i: int) -> Vertex:
    return Vertex(Layer.V, i)


@pytest.fixture
def prism3() -> Prism:
    return Prism(3)


@pytest.fixture
def prism6() -> Prism:
    return Prism(6)


@pytest.fixture
def identical3(prism3):
    return uniform_assignment(prism3, {1, 2, 3})


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(2024)


@pytest.fixture(scope="session")
def configs():
    return load_configurations()


@pytest.fixture
def random_lists():
    def make(n: int, seed: int, universe: int = 6, k: int = 3):
        return random_uniform(Prism(n), k, universe, seed)

    return make
