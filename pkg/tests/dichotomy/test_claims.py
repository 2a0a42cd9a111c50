"""Tests for the structural claim checkers."""

import pytest

from girthpath.core.errors import PreconditionError
from girthpath.dichotomy import (
    check_no_two_long_cycles,
    check_outneighbours_on_path,
    check_predecessors_stay_on_cycle,
)
from girthpath.dichotomy.claims import cycle_predecessors
from girthpath.graph import Digraph, PathWitness

PATH = PathWitness((0, 1, 2, 3))


@pytest.fixture
def lasso():
    """0 -> 1 -> 2 -> 3 -> 1 with the chord 0 -> 3."""
    return Digraph.from_arcs(4, [(0, 1), (0, 3), (1, 2), (2, 3), (3, 1)])


class TestNoTwoLongCycles:
    """Test the disjoint long cycle claim."""

    def test_single_cycle_holds(self, triangle):
        check = check_no_two_long_cycles(triangle, 1)

        assert check.holds
        assert check.counterwitness is None

    def test_two_triangles_give_a_counterwitness(self):
        arcs = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]
        digraph = Digraph.from_arcs(6, arcs)

        check = check_no_two_long_cycles(digraph, 2)

        assert not check.holds
        first, second = check.counterwitness
        assert set(first).isdisjoint(second)
        assert check_no_two_long_cycles(digraph, 3).holds


class TestOutneighboursOnPath:
    """Test that the pivot's out-neighbours lie on the path."""

    def test_holds(self, lasso):
        assert check_outneighbours_on_path(lasso, PATH, 1).holds

    def test_off_path_neighbour(self):
        digraph = Digraph.from_arcs(5, [(0, 1), (0, 4), (1, 2), (2, 3), (3, 1)])

        check = check_outneighbours_on_path(digraph, PATH, 1)

        assert not check.holds
        assert check.counterwitness == ((4,),)

    @pytest.mark.parametrize("a", [0, 4])
    def test_back_index_range(self, lasso, a):
        with pytest.raises(PreconditionError):
            check_outneighbours_on_path(lasso, PATH, a)


class TestPredecessorsStayOnCycle:
    """Test that B⁻ sends every arc into the cycle."""

    def test_cycle_predecessors(self, lasso):
        """Pivot 0 hits cycle vertices 1 and 3, whose predecessors are 3 and 2."""
        b_set, b_minus = cycle_predecessors(lasso, PATH, 1)

        assert b_set == [1, 3]
        assert b_minus == [3, 2]

    def test_holds(self, lasso):
        assert check_predecessors_stay_on_cycle(lasso, PATH, 1).holds

    def test_leaving_arc_is_the_counterwitness(self):
        arcs = [(0, 1), (0, 3), (1, 2), (2, 0), (2, 3), (3, 1)]
        digraph = Digraph.from_arcs(4, arcs)

        check = check_predecessors_stay_on_cycle(digraph, PATH, 1)

        assert not check.holds
        assert check.counterwitness == ((2, 0),)
