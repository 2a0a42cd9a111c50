"""Pytest configuration and fixtures."""

import tempfile
from pathlib import Path

import pytest

from girthpath.constructions import CounterexampleParams, build_counterexample
from girthpath.graph import Digraph
from girthpath.solvers import SolverLimits
from tests.factories import circulant, directed_cycle


@pytest.fixture
def temp_dir():
    """Create a temporary directory for artifacts."""
    with tempfile.TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)


@pytest.fixture
def triangle():
    """Directed triangle: girth 3, longest path 2, δ⁺ = 1."""
    return directed_cycle(3)


@pytest.fixture
def two_cycle():
    """Two vertices joined both ways."""
    return Digraph.from_arcs(2, [(0, 1), (1, 0)])


@pytest.fixture
def path_digraph():
    """Acyclic path 0 -> 1 -> 2 -> 3."""
    return Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def d22():
    """Counterexample with δ = 2, a = b = 2: girth 4, ℓ = 6 (one above δb + a − 1)."""
    return build_counterexample(CounterexampleParams(delta=2, a=2, b=2))


@pytest.fixture
def d23():
    """Counterexample with δ = 2, a = 2, b = 3: girth 5, ℓ = 9 (two above δb + a − 1)."""
    return build_counterexample(CounterexampleParams(delta=2, a=2, b=3))


@pytest.fixture
def rotational_tournament():
    """Regular tournament on 7 vertices: oriented, δ⁺ = 3, Hamiltonian."""
    return circulant(7, (1, 2, 3))


@pytest.fixture
def small_limits():
    """Limits small enough to trip the scale checks."""
    return SolverLimits(max_dp_vertices=6, max_bb_vertices=8, node_budget=10_000)


@pytest.fixture
def triangle_file(temp_dir):
    """Edge-list file of the directed triangle."""
    path = temp_dir / "triangle.txt"
    path.write_text("# directed triangle\n3 3\n0 1\n1 2\n2 0\n")
    return path
